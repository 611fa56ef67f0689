#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "koebe/adm_lower.hpp"
#include "koebe/errors.hpp"
#include "koebe/reach.hpp"

using namespace koebe;

TEST_SUITE("adm_lower") {

TEST_CASE("instance sizes and sides") {
    for (int k : {2, 3, 4}) {
        const AdmLowerInstance inst = gen_adm_lower(k);
        const int grids = (1 << k) - 1, m = 1 << k;
        CHECK(inst.graph.num_vertices() == grids * m * m + (1 << k));
        CHECK(static_cast<int>(inst.grids.size()) == grids);
        CHECK(static_cast<int>(inst.apex.size()) == (1 << k));
        for (const TreeGrid& g : inst.grids) {
            CHECK(g.side(Side::NW).front() == g.side(Side::NE).front());
            for (Side s : {Side::NW, Side::NE, Side::SE, Side::SW}) CHECK(static_cast<int>(g.side(s).size()) == m);
        }
        for (const auto& [u, v] : inst.apex) {
            CHECK(static_cast<int>(u.size()) == k);
            CHECK(inst.is_apex(v));
            CHECK(inst.graph.degree(v) == m);
        }
    }
    CHECK(gen_adm_lower(2).graph.num_vertices() == 52);
    CHECK(gen_adm_lower(3).graph.num_vertices() == 456);
    CHECK_THROWS_AS(gen_adm_lower(1), InputError);
}

TEST_CASE("P families") {
    for (int k : {2, 3, 4}) {
        const AdmLowerInstance inst = gen_adm_lower(k);
        const auto fam = build_p_families(inst);
        CHECK(static_cast<int>(fam.size()) == 2 * static_cast<int>(inst.grids.size()));
        for (const auto& [ws, f] : fam) {
            const WitnessReport rep = validate_witness(f, inst, inst.radius());
            CHECK_MESSAGE(rep.ok(), ws);
            if (static_cast<int>(f.w.size()) == k - 1) {
                REQUIRE(f.paths.size() == 1);
                const Side side = f.s == "W" ? Side::SW : Side::SE;
                CHECK(f.paths[0] == std::vector<Vertex>{inst.apex.at(ws), inst.grid(f.w).side(side).front()});
            }
        }
    }
}

TEST_CASE("Q families") {
    for (int k : {2, 3, 4}) {
        const AdmLowerInstance inst = gen_adm_lower(k);
        const auto fam = build_witness_families(inst);
        CHECK(fam.size() == inst.apex.size());
        for (const auto& [u, f] : fam) {
            CHECK(static_cast<int>(f.paths.size()) == (1 << k) - 1);
            CHECK(validate_witness(f, inst, inst.radius()).ok());
        }
    }
}

TEST_CASE("injected faults are reported") {
    const AdmLowerInstance inst = gen_adm_lower(2);
    const auto fam = build_witness_families(inst);
    const WitnessFamily good = fam.begin()->second;

    WitnessFamily shared = good;
    REQUIRE(shared.paths[1].size() > 2);
    shared.paths[0].insert(shared.paths[0].end() - 1, shared.paths[1][1]);
    CHECK_FALSE(validate_witness(shared, inst, inst.radius()).ok());

    // a snake through one grid: down column 0 and back up column 1 of H_eps
    const int m = inst.m;
    const TreeGrid& g = inst.grid("");
    std::vector<Vertex> snake;
    for (int r = 0; r < m; ++r) snake.push_back(g.base + r * m);
    for (int r = m - 1; r >= 0; --r) snake.push_back(g.base + r * m + 1);
    REQUIRE(static_cast<int>(snake.size()) - 1 == 2 * m - 1);
    WitnessFamily bent{WitnessFamily::Kind::trimmed, "", "", {snake}};
    const WitnessReport rep = validate_witness(bent, inst, inst.radius());
    REQUIRE_FALSE(rep.ok());
    bool segment = false;
    for (const auto& v : rep.violations) segment = segment || v.find("segment") != std::string::npos;
    CHECK(segment);

    WitnessFamily broken = good;
    std::swap(broken.paths[0][1], broken.paths[0].back());
    CHECK_FALSE(validate_witness(broken, inst, inst.radius()).ok());

    WitnessFamily longer = good;
    CHECK_FALSE(validate_witness(longer, inst, 3).ok());
}

TEST_CASE("trimmed families on random orderings") {
    for (int k : {2, 3}) {
        const AdmLowerInstance inst = gen_adm_lower(k);
        const auto fam = build_witness_families(inst);
        const int n = inst.graph.num_vertices();
        std::mt19937_64 rng(17);
        for (int t = 0; t < 100; ++t) {
            const VertexOrdering o = t == 0 ? VertexOrdering::identity(n) : VertexOrdering::random(n, rng);
            const AdmissibilityCertificate c = trim_witness(fam, inst, o);
            CHECK(c.value >= (1 << k) - 1);
            CHECK(c.d == k << (k + 2));
            CHECK_FALSE(check_adm_certificate(inst.graph, o, c).has_value());
            for (const auto& p : c.paths) CHECK(is_strong_reachability_path(inst.graph, o, p));
            WitnessFamily trimmed{WitnessFamily::Kind::trimmed, "", "", c.paths};
            CHECK(validate_witness(trimmed, inst, c.d).ok());
        }
    }
}

TEST_CASE("exact admissibility at the top apex") {
    const AdmLowerInstance inst = gen_adm_lower(2);
    const VertexOrdering o = VertexOrdering::identity(inst.graph.num_vertices());
    const AdmissibilityCertificate trimmed = trim_witness(build_witness_families(inst), inst, o);
    const AdmissibilityCertificate exact = adm_vertex(inst.graph, o, 32, trimmed.v);
    CHECK(exact.exact);
    CHECK(exact.value >= 3);
    CHECK(exact.value >= trimmed.value);
}

}  // TEST_SUITE
