#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "koebe/graph.hpp"

namespace koebe {

/// Per-vertex weak or strong d-reachability sets. Every set contains its own
/// vertex and only vertices of rank <= rank of the owner. Sets are sorted by id.
struct ReachSets {
    int d = 0;
    std::vector<std::vector<Vertex>> sets;

    const std::vector<Vertex>& of(Vertex v) const { return sets[static_cast<std::size_t>(v)]; }
    bool contains(Vertex v, Vertex u) const;
    int max_size() const;
};

ReachSets wreach_all(const PlanarGraph& g, const VertexOrdering& ord, int d);
ReachSets sreach_all(const PlanarGraph& g, const VertexOrdering& ord, int d);
/// SReach_d[v] for one vertex, sorted by id.
std::vector<Vertex> sreach_vertex(const PlanarGraph& g, const VertexOrdering& ord, int d, Vertex v);

/// Path predicates following the reachability definitions literally. A path
/// is a vertex sequence starting at the reaching vertex.
bool is_weak_reachability_path(const PlanarGraph& g, const VertexOrdering& ord, std::span<const Vertex> path);
bool is_strong_reachability_path(const PlanarGraph& g, const VertexOrdering& ord, std::span<const Vertex> path);

enum class AdmMode { exact, bounds };

struct AdmOptions {
    AdmMode mode = AdmMode::exact;
    /// Count only paths of length exactly d instead of at most d.
    bool strict_length = false;
    std::int64_t node_budget = 10'000'000;
};

/// A family of strong reachability paths from v, pairwise disjoint apart from v.
/// In bounds mode `paths` is the greedy family and `upper` the flow bound.
struct AdmissibilityCertificate {
    Vertex v = -1;
    int d = 0;
    std::vector<std::vector<Vertex>> paths;
    int value = 0;
    int upper = 0;
    bool exact = false;
    std::int64_t expansions = 0;
};

AdmissibilityCertificate adm_vertex(const PlanarGraph& g, const VertexOrdering& ord, int d, Vertex v,
                                    const AdmOptions& opts = {});

/// Checks every admissibility-family invariant; returns a description of the
/// first violation or nullopt.
std::optional<std::string> check_adm_certificate(const PlanarGraph& g, const VertexOrdering& ord,
                                                 const AdmissibilityCertificate& cert, bool strict_length = false);

enum class MetricKind { wcol, scol, adm };

MetricKind parse_metric_kind(const std::string& s);
std::string to_string(MetricKind k);

struct MetricReport {
    MetricKind kind = MetricKind::wcol;
    int d = 0;
    /// For adm in bounds mode these are the flow upper bounds.
    std::vector<int> per_vertex;
    /// adm in bounds mode only: greedy lower bounds.
    std::vector<int> per_vertex_lower;
    int value = 0;
    Vertex argmax = -1;
};

MetricReport metric_of_ordering(const PlanarGraph& g, const VertexOrdering& ord, int d, MetricKind kind,
                                const AdmOptions& adm = {});

enum class SearchStrategy { exhaustive, anneal };

struct MinMetricResult {
    int value = 0;
    VertexOrdering ordering;
};

/// Minimises the ordering-level metric over vertex orderings. Exhaustive
/// search is limited to n <= 10; annealing is deterministic per seed.
MinMetricResult graph_min_metric(const PlanarGraph& g, int d, MetricKind kind, SearchStrategy strategy,
                                 std::uint64_t seed = 0, int anneal_steps = 20000);

}  // namespace koebe
