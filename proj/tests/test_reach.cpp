#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "koebe/errors.hpp"
#include "koebe/reach.hpp"
#include "oracles.hpp"

using namespace koebe;

namespace {

PlanarGraph path3() {
    const std::vector<Edge> e{{0, 1}, {1, 2}};
    return PlanarGraph::from_edges(3, e);
}

std::set<Vertex> as_set(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_SUITE("reach") {

TEST_CASE("small examples") {
    // a=0, b=1, c=2 with a < b < c
    const PlanarGraph p = path3();
    const VertexOrdering o = VertexOrdering::identity(3);
    CHECK(as_set(wreach_all(p, o, 2).of(2)) == std::set<Vertex>{0, 1, 2});
    CHECK(as_set(wreach_all(p, o, 1).of(2)) == std::set<Vertex>{1, 2});
    CHECK(as_set(sreach_all(p, o, 2).of(2)) == std::set<Vertex>{1, 2});
    for (int v = 0; v < 3; ++v) CHECK(as_set(wreach_all(p, o, 0).of(v)) == std::set<Vertex>{v});

    const std::vector<Edge> star{{0, 3}, {1, 3}, {2, 3}};
    const PlanarGraph s = PlanarGraph::from_edges(4, star);
    CHECK(as_set(sreach_all(s, VertexOrdering::identity(4), 1).of(3)) == std::set<Vertex>{0, 1, 2, 3});
    CHECK(adm_vertex(s, VertexOrdering::identity(4), 1, 3).value == 3);
    CHECK(adm_vertex(p, o, 2, 2).value == 1);
}

TEST_CASE("ordering-level metrics") {
    const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
    const PlanarGraph k3 = PlanarGraph::from_edges(3, tri);
    CHECK(metric_of_ordering(k3, VertexOrdering::identity(3), 1, MetricKind::scol).value == 3);
    // b < a < c on the path a-b-c
    CHECK(metric_of_ordering(path3(), VertexOrdering::from_ids({1, 0, 2}), 1, MetricKind::wcol).value == 2);

    const PlanarGraph empty = PlanarGraph::from_edges(5, {});
    const VertexOrdering id = VertexOrdering::identity(5);
    for (int d : {0, 1, 3}) {
        CHECK(metric_of_ordering(empty, id, d, MetricKind::wcol).value == 1);
        CHECK(metric_of_ordering(empty, id, d, MetricKind::scol).value == 1);
        CHECK(metric_of_ordering(empty, id, d, MetricKind::adm).value == 0);
    }
    CHECK(parse_metric_kind("scol") == MetricKind::scol);
    CHECK_THROWS_AS(parse_metric_kind("col"), InputError);
}

TEST_CASE("graph minimum over orderings") {
    const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
    CHECK(graph_min_metric(PlanarGraph::from_edges(3, tri), 1, MetricKind::scol, SearchStrategy::exhaustive).value ==
          3);
    CHECK(graph_min_metric(path3(), 1, MetricKind::wcol, SearchStrategy::exhaustive).value == 2);
    const MinMetricResult r =
        graph_min_metric(gen_square_grid(3), 7, MetricKind::scol, SearchStrategy::exhaustive);
    CHECK(r.value >= 2);
    CHECK(metric_of_ordering(gen_square_grid(3), r.ordering, 7, MetricKind::scol).value == r.value);
}

TEST_CASE("reachability sets match path enumeration") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int n = 5 + static_cast<int>(seed % 3);
        const PlanarGraph g = oracle::random_planar(n, seed, 0.7);
        std::mt19937_64 rng(seed);
        const VertexOrdering o = VertexOrdering::random(n, rng);
        for (int d = 0; d <= 4; ++d) {
            const ReachSets w = wreach_all(g, o, d), s = sreach_all(g, o, d);
            for (Vertex v = 0; v < n; ++v) {
                CHECK(as_set(w.of(v)) == oracle::wreach(g, o, d, v));
                CHECK(as_set(s.of(v)) == oracle::sreach(g, o, d, v));
                CHECK(as_set(sreach_vertex(g, o, d, v)) == oracle::sreach(g, o, d, v));
                for (Vertex u : w.of(v)) CHECK(o.rank(u) <= o.rank(v));
                if (d > 0) {
                    const auto prev = as_set(wreach_all(g, o, d - 1).of(v));
                    const auto cur = as_set(w.of(v));
                    CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
                }
            }
        }
    }
}

TEST_CASE("exact admissibility matches family enumeration") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 6 + static_cast<int>(seed % 3);
        const PlanarGraph g = oracle::random_planar(n, seed + 100, 0.8);
        std::mt19937_64 rng(seed);
        const VertexOrdering o = VertexOrdering::random(n, rng);
        for (int d = 1; d <= 3; ++d)
            for (Vertex v = 0; v < n; ++v) {
                const AdmissibilityCertificate c = adm_vertex(g, o, d, v);
                CHECK(c.exact);
                CHECK(c.value == oracle::adm(g, o, d, v));
                CHECK_FALSE(check_adm_certificate(g, o, c).has_value());
                CHECK(c.value <= static_cast<int>(sreach_vertex(g, o, d, v).size()) - 1);

                AdmOptions strict;
                strict.strict_length = true;
                const AdmissibilityCertificate cs = adm_vertex(g, o, d, v, strict);
                CHECK(cs.value == oracle::adm(g, o, d, v, true));
                CHECK_FALSE(check_adm_certificate(g, o, cs, true).has_value());

                AdmOptions bounds;
                bounds.mode = AdmMode::bounds;
                const AdmissibilityCertificate cb = adm_vertex(g, o, d, v, bounds);
                CHECK(cb.value <= c.value);
                CHECK(c.value <= cb.upper);
            }
    }
}

TEST_CASE("certificate checker rejects broken families") {
    const std::vector<Edge> star{{0, 3}, {1, 3}, {2, 3}, {0, 1}};
    const PlanarGraph g = PlanarGraph::from_edges(4, star);
    const VertexOrdering o = VertexOrdering::identity(4);
    AdmissibilityCertificate c;
    c.v = 3;
    c.d = 2;
    c.paths = {{3, 0}, {3, 1}};
    c.value = 2;
    CHECK_FALSE(check_adm_certificate(g, o, c).has_value());
    c.paths = {{3, 0}, {3, 0}};
    CHECK(check_adm_certificate(g, o, c).has_value());
    c.paths = {{3, 2}, {3, 1, 0}};  // 1 < 3 cannot be internal
    CHECK(check_adm_certificate(g, o, c).has_value());
    c.paths = {{3, 2}, {3, 0, 2}};
    CHECK(check_adm_certificate(g, o, c).has_value());
}

TEST_CASE("exact search respects its budget") {
    const PlanarGraph g = random_triangulation(60, 3).graph;
    AdmOptions opts;
    opts.node_budget = 10;
    bool thrown = false;
    for (Vertex v = 0; v < g.num_vertices() && !thrown; ++v) {
        try {
            adm_vertex(g, VertexOrdering::identity(60), 8, v, opts);
        } catch (const ResourceError&) {
            thrown = true;
        }
    }
    CHECK(thrown);
}

}  // TEST_SUITE
