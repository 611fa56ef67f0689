#pragma once

#include <map>
#include <optional>
#include <vector>

#include "koebe/coins.hpp"
#include "koebe/graph.hpp"

namespace koebe {

/// The i with d^(3i) <= r < d^(3i+3). Radii within relative 1e-9 of a
/// boundary d^(3i) are put in bucket i.
int bucket_index(double r, int d);

struct BucketPartition {
    int d = 0;
    std::vector<int> bucket;

    int of(Vertex v) const { return bucket[static_cast<std::size_t>(v)]; }
};

/// Requires m normalised at root (InputError otherwise) and d >= 2.
BucketPartition bucket_partition(const CoinModel& m, int d, Vertex root);

struct DistanceCheck {
    Vertex w = -1;
    double r = 0.0;
    double a = 0.0;
    bool lower_ok = true;  ///< a >= 1 + r
    bool upper_ok = true;  ///< a <= 2 d r
};

struct WReachBucketHistogram {
    Vertex root = -1;
    int d = 0;
    /// bucket index -> |B_i cap WReach_d[root]|
    std::map<int, int> counts;
    std::vector<DistanceCheck> checks;
    int total() const;
    bool checks_pass() const;
};

struct GreedyIndexTrace {
    /// i_0 = 0, i_1, ..., i_p
    std::vector<int> major;
    /// minor[t] = i_{t,0}, ..., i_{t,p_t} for t < p
    std::vector<std::vector<int>> minor;
    /// nonnegative bucket indices meeting WReach_d[root]
    std::vector<int> occupied;
    int p() const { return static_cast<int>(major.size()) - 1; }
};

struct JumpTriple {
    int i = 0, j = 0, j2 = 0;
};

struct JumpViolation {
    int i = 0, j = 0, j2 = 0, t = 0;
};

struct JumpReport {
    /// The geometric argument assumes d > 12.
    bool precondition_met = false;
    std::vector<JumpTriple> triples;
    std::vector<JumpViolation> violations;
    bool passed() const { return violations.empty(); }
};

/// Bucket machinery rooted at u for a model normalised at u and its Koebe
/// ordering. Accessibility is computed on demand and cached per source index.
class BucketAnalysis {
public:
    BucketAnalysis(const PlanarGraph& g, const CoinModel& m, const VertexOrdering& ord, int d, Vertex u);

    const BucketPartition& partition() const { return partition_; }
    const std::vector<Vertex>& wreach() const { return wreach_; }

    WReachBucketHistogram histogram() const;

    /// Witness path for "j accessible from i", or nullopt. Requires j > i >= 0.
    std::optional<std::vector<Vertex>> accessible(int i, int j);
    /// All j > i accessible from i, ascending.
    const std::vector<int>& accessible_from(int i);

    /// Greedy major and minor index sequences. Throws VerificationError if
    /// p > d, some p_t > d - t, or more than (d+1)^2 buckets meet WReach_d.
    GreedyIndexTrace greedy_traces();

    /// Checks B_t cap W empty for i+2 <= t < j over all j < j' accessible
    /// from a common i. Throws VerificationError on a violation when d > 12.
    JumpReport verify_bucket_jumps();

private:
    void compute_from(int i);

    const PlanarGraph& g_;
    const CoinModel& m_;
    const VertexOrdering& ord_;
    int d_;
    Vertex u_;
    BucketPartition partition_;
    std::vector<Vertex> wreach_;
    int max_bucket_ = 0;
    std::map<int, std::vector<int>> access_;
    std::map<std::pair<int, int>, std::vector<Vertex>> witness_;
};

}  // namespace koebe
