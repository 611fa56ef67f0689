#include "koebe/buckets.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>

#include "koebe/errors.hpp"
#include "koebe/reach.hpp"

namespace koebe {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

constexpr double kSnap = 1e-9;
constexpr double kGeomTol = 1e-7;

}  // namespace

int bucket_index(double r, int d) {
    if (!(r > 0.0) || !std::isfinite(r)) throw InputError("bucket index needs a positive radius");
    if (d < 2) throw InputError("buckets need d >= 2");
    const double step = 3.0 * std::log(static_cast<double>(d));
    const double x = std::log(r) / step;
    int i = static_cast<int>(std::floor(x));
    // snap onto the next boundary when just below it
    if (std::abs(std::log(r) - (i + 1) * step) <= kSnap) ++i;
    return i;
}

BucketPartition bucket_partition(const CoinModel& m, int d, Vertex root) {
    if (root < 0 || root >= m.size()) throw InputError("root out of range");
    if (!is_normalized_at(m, root)) throw InputError("model is not normalised at the root");
    BucketPartition p;
    p.d = d;
    for (const Disc& disc : m.discs) p.bucket.push_back(bucket_index(disc.radius, d));
    return p;
}

int WReachBucketHistogram::total() const {
    int sum = 0;
    for (auto [i, c] : counts) sum += c;
    return sum;
}

bool WReachBucketHistogram::checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const DistanceCheck& c) { return c.lower_ok && c.upper_ok; });
}

BucketAnalysis::BucketAnalysis(const PlanarGraph& g, const CoinModel& m, const VertexOrdering& ord, int d, Vertex u)
    : g_(g), m_(m), ord_(ord), d_(d), u_(u), partition_(bucket_partition(m, d, u)) {
    if (m.size() != g.num_vertices() || ord.size() != g.num_vertices())
        throw InputError("graph, model and ordering sizes differ");
    wreach_ = wreach_all(g, ord, d).of(u);
    for (int b : partition_.bucket) max_bucket_ = std::max(max_bucket_, b);
}

WReachBucketHistogram BucketAnalysis::histogram() const {
    WReachBucketHistogram h;
    h.root = u_;
    h.d = d_;
    for (Vertex w : wreach_) {
        ++h.counts[partition_.of(w)];
        if (w == u_) continue;
        DistanceCheck c;
        c.w = w;
        c.r = m_[w].radius;
        c.a = norm(m_[w].center);
        c.lower_ok = c.a >= (1.0 + c.r) * (1.0 - kGeomTol);
        c.upper_ok = c.a <= 2.0 * d_ * c.r * (1.0 + kGeomTol);
        h.checks.push_back(c);
    }
    return h;
}

void BucketAnalysis::compute_from(int i) {
    if (access_.count(i)) return;
    std::vector<int>& found = access_[i];
    const int n = g_.num_vertices();
    std::set<int> hit;
    std::vector<int> dist(idx(n));
    std::vector<Vertex> parent(idx(n));
    for (Vertex w = 0; w < n; ++w) {
        const int j = partition_.of(w);
        if (j <= i || ord_.rank(w) > ord_.rank(u_) || hit.count(j)) continue;
        // weak reachability path from u to w inside B_j and buckets <= i,
        // every vertex at least w in the ordering
        auto allowed = [&](Vertex v) {
            const int b = partition_.of(v);
            return (b <= i || b == j) && ord_.rank(v) >= ord_.rank(w);
        };
        if (!allowed(u_)) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> q;
        dist[idx(u_)] = 0;
        parent[idx(u_)] = -1;
        q.push(u_);
        while (!q.empty() && dist[idx(w)] < 0) {
            const Vertex x = q.front();
            q.pop();
            if (dist[idx(x)] == d_) continue;
            for (Vertex y : g_.neighbors(x))
                if (dist[idx(y)] < 0 && allowed(y)) {
                    dist[idx(y)] = dist[idx(x)] + 1;
                    parent[idx(y)] = x;
                    q.push(y);
                }
        }
        if (dist[idx(w)] < 0) continue;
        std::vector<Vertex> path;
        for (Vertex x = w; x >= 0; x = parent[idx(x)]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        if (!is_weak_reachability_path(g_, ord_, path))
            throw VerificationError("accessibility witness is not a weak reachability path");
        hit.insert(j);
        witness_[{i, j}] = std::move(path);
    }
    found.assign(hit.begin(), hit.end());
}

std::optional<std::vector<Vertex>> BucketAnalysis::accessible(int i, int j) {
    if (!(j > i && i >= 0)) throw InputError("accessibility needs j > i >= 0");
    compute_from(i);
    auto it = witness_.find({i, j});
    if (it == witness_.end()) return std::nullopt;
    return it->second;
}

const std::vector<int>& BucketAnalysis::accessible_from(int i) {
    compute_from(i);
    return access_[i];
}

GreedyIndexTrace BucketAnalysis::greedy_traces() {
    GreedyIndexTrace tr;
    tr.major.push_back(0);
    for (;;) {
        const auto& next = accessible_from(tr.major.back());
        if (next.empty()) break;
        tr.major.push_back(next.back());
    }
    const int p = tr.p();
    if (p > d_) throw VerificationError("major trace has p = " + std::to_string(p) + " > d");
    for (int t = 0; t < p; ++t) {
        std::vector<int> minor{tr.major[idx(t)]};
        const int cap = tr.major[idx(t + 1)];
        for (;;) {
            const auto& next = accessible_from(minor.back());
            auto it = std::lower_bound(next.begin(), next.end(), cap);
            if (it == next.begin()) break;
            minor.push_back(*std::prev(it));
        }
        const int pt = static_cast<int>(minor.size()) - 1;
        if (pt > d_ - t)
            throw VerificationError("minor trace " + std::to_string(t) + " has length " + std::to_string(pt) +
                                    " > d - t");
        tr.minor.push_back(std::move(minor));
    }
    std::set<int> occupied;
    for (Vertex w : wreach_)
        if (partition_.of(w) >= 0) occupied.insert(partition_.of(w));
    tr.occupied.assign(occupied.begin(), occupied.end());
    if (static_cast<long long>(tr.occupied.size()) > static_cast<long long>(d_ + 1) * (d_ + 1))
        throw VerificationError("more than (d+1)^2 buckets meet WReach_d");
    return tr;
}

JumpReport BucketAnalysis::verify_bucket_jumps() {
    JumpReport rep;
    rep.precondition_met = d_ > 12;
    std::set<int> occupied;
    for (Vertex w : wreach_) occupied.insert(partition_.of(w));
    for (int i = 0; i <= max_bucket_; ++i) {
        const std::vector<int> next = accessible_from(i);
        for (std::size_t a = 0; a < next.size(); ++a)
            for (std::size_t b = a + 1; b < next.size(); ++b) {
                const int j = next[a], j2 = next[b];
                rep.triples.push_back({i, j, j2});
                for (int t = i + 2; t < j; ++t)
                    if (occupied.count(t)) rep.violations.push_back({i, j, j2, t});
            }
    }
    if (rep.precondition_met && !rep.violations.empty()) {
        const JumpViolation& v = rep.violations.front();
        throw VerificationError("bucket jump rule violated at (i, j, j', t) = (" + std::to_string(v.i) + ", " +
                                std::to_string(v.j) + ", " + std::to_string(v.j2) + ", " + std::to_string(v.t) + ")");
    }
    return rep;
}

}  // namespace koebe
