#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "koebe/buckets.hpp"
#include "koebe/constructions.hpp"
#include "koebe/errors.hpp"
#include "koebe/reach.hpp"

using namespace koebe;

namespace {

struct Rooted {
    CoinModel model;
    VertexOrdering ord;
};

Rooted rooted(const CoinModel& m, Vertex u) {
    CoinModel n = normalize(m, u);
    VertexOrdering o = koebe_ordering(n);
    return {std::move(n), std::move(o)};
}

}  // namespace

TEST_SUITE("buckets") {

TEST_CASE("bucket index") {
    CHECK(bucket_index(1, 10) == 0);
    CHECK(bucket_index(1000, 10) == 1);
    CHECK(bucket_index(0.5, 10) == -1);
    CHECK(bucket_index(999.9999999999, 10) == 1);
    CHECK(bucket_index(999.0, 10) == 0);
    CHECK(bucket_index(std::pow(28.0, 3), 28) == 1);
    CHECK(bucket_index(std::pow(28.0, -3), 28) == -1);
}

TEST_CASE("unit radii stay in bucket 0") {
    const GridCoinInstance g = gen_grid_coin(14);
    std::vector<Vertex> unit;
    for (Vertex v = 0; v < g.model.size(); ++v)
        if (std::abs(g.model[v].radius - g.model[0].radius) < 1e-12) unit.push_back(v);
    CoinModel m;
    for (Vertex v : unit) m.discs.push_back({{3.0 * v, 0}, 1});
    const BucketPartition p = bucket_partition(m, 14, 0);
    for (Vertex v = 0; v < m.size(); ++v) CHECK(p.of(v) == 0);

    CoinModel scaled = m;
    scaled.discs[0].radius = 2;
    CHECK_THROWS_AS(bucket_partition(scaled, 14, 0), InputError);
}

TEST_CASE("single vertex") {
    const PlanarGraph g = PlanarGraph::from_edges(1, {});
    CoinModel m;
    m.discs = {{{0, 0}, 1}};
    const VertexOrdering o = VertexOrdering::identity(1);
    BucketAnalysis ba(g, m, o, 14, 0);
    const WReachBucketHistogram h = ba.histogram();
    CHECK(h.counts == std::map<int, int>{{0, 1}});
    const GreedyIndexTrace tr = ba.greedy_traces();
    CHECK(tr.p() == 0);
    CHECK(tr.major == std::vector<int>{0});
    const JumpReport jr = ba.verify_bucket_jumps();
    CHECK(jr.triples.empty());
    CHECK(jr.passed());
}

TEST_CASE("multigrid rooted at the first interface") {
    const int d = 28;
    const MultigridInstance inst = gen_multigrid_coin(d);
    const Vertex u = inst.gadgets.front().interface;
    const Rooted r = rooted(inst.model, u);
    BucketAnalysis ba(inst.graph, r.model, r.ord, d, u);

    // interface i has radius d^i relative to the root
    for (std::size_t i = 0; i < inst.gadgets.size(); ++i) {
        const int b = ba.partition().of(inst.gadgets[i].interface);
        CHECK(b == static_cast<int>(i) / 3);
        CHECK(b >= 0);
        CHECK(b <= (d / 2 - 1 + 2) / 3);
    }

    const WReachBucketHistogram h = ba.histogram();
    const int total = std::accumulate(h.counts.begin(), h.counts.end(), 0,
                                      [](int s, const auto& kv) { return s + kv.second; });
    CHECK(total == h.total());
    CHECK(total == static_cast<int>(wreach_all(inst.graph, r.ord, d).of(u).size()));
    CHECK(total >= 57);
    CHECK(h.checks_pass());
    for (const DistanceCheck& c : h.checks) {
        CHECK(c.a >= (1 + c.r) * (1 - 1e-7));
        CHECK(c.a <= 2 * d * c.r * (1 + 1e-7));
    }

    // the first interface outside B_0 is reached along the interface chain
    const int j = ba.partition().of(inst.gadgets[3].interface);
    REQUIRE(j == 1);
    const auto path = ba.accessible(0, j);
    REQUIRE(path.has_value());
    CHECK(path->front() == u);
    CHECK(is_weak_reachability_path(inst.graph, r.ord, *path));
    for (int i : ba.accessible_from(0)) {
        const auto w = ba.accessible(0, i);
        REQUIRE(w.has_value());
        CHECK(is_weak_reachability_path(inst.graph, r.ord, *w));
        CHECK(static_cast<int>(w->size()) - 1 <= d);
        CHECK(ba.partition().of(w->back()) == i);
    }

    const GreedyIndexTrace tr = ba.greedy_traces();
    CHECK(tr.p() >= 1);
    CHECK(tr.p() <= d);
    CHECK(static_cast<int>(tr.occupied.size()) <= (d + 1) * (d + 1));
    for (std::size_t t = 1; t < tr.major.size(); ++t) CHECK(tr.major[t] > tr.major[t - 1]);
    for (std::size_t t = 0; t < tr.minor.size(); ++t) {
        CHECK(static_cast<int>(tr.minor[t].size()) - 1 <= d - static_cast<int>(t));
        for (std::size_t s = 1; s < tr.minor[t].size(); ++s) CHECK(tr.minor[t][s] > tr.minor[t][s - 1]);
    }
    CHECK(ba.verify_bucket_jumps().passed());
    CHECK_THROWS_AS(ba.accessible(2, 1), InputError);
}

TEST_CASE("grid coin model") {
    const GridCoinInstance g = gen_grid_coin(14);
    const Rooted r = rooted(g.model, 0);
    BucketAnalysis ba(g.graph, r.model, r.ord, 14, 0);
    CHECK(ba.verify_bucket_jumps().passed());
    CHECK(ba.histogram().checks_pass());
}

}  // TEST_SUITE
