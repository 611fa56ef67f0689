#pragma once

#include <climits>
#include <span>
#include <vector>

#include "koebe/graph.hpp"

namespace koebe {

struct DisjointPaths {
    int value = 0;
    /// Each path runs from a source vertex to a sink vertex.
    std::vector<std::vector<Vertex>> paths;
};

/// Maximum family of vertex-disjoint paths from `sources` to `sinks`
/// (Menger). Paths use only vertices with allowed[v] != 0; a sink ends its
/// path, so no path passes through a sink. A vertex that is both a source and
/// a sink yields the single-vertex path. Stops early once `limit` paths exist.
DisjointPaths vertex_disjoint_paths(const PlanarGraph& g, std::span<const Vertex> sources,
                                    std::span<const Vertex> sinks, std::span<const char> allowed,
                                    int limit = INT_MAX);

}  // namespace koebe
