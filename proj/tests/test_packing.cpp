#include <cmath>
#include <vector>

#include "doctest.h"
#include "koebe/constructions.hpp"
#include "koebe/errors.hpp"
#include "koebe/packing.hpp"

using namespace koebe;

namespace {

// Curvature of the fourth circle tangent to three mutually tangent circles.
double descartes(double k1, double k2, double k3) {
    return k1 + k2 + k3 + 2.0 * std::sqrt(k1 * k2 + k2 * k3 + k1 * k3);
}

PlanarGraph k3_embedded() {
    const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
    return PlanarGraph::from_edges(3, tri, std::vector<std::vector<Vertex>>{{1, 2}, {2, 0}, {0, 1}});
}

}  // namespace

TEST_SUITE("packing") {

TEST_CASE("K4 interior radius agrees with Descartes") {
    const EmbeddedTriangulation t = tetrahedron();
    const PackingProblem p = make_packing_problem(t.graph, t.outer_face);
    const RadiiSolution r = solve_radii(p);
    Vertex interior = -1;
    for (Vertex v = 0; v < 4; ++v)
        if (std::find(p.boundary.begin(), p.boundary.end(), v) == p.boundary.end()) interior = v;
    REQUIRE(interior >= 0);
    CHECK(std::abs(r.radii[static_cast<std::size_t>(interior)] - 1.0 / descartes(1, 1, 1)) <= 1e-6);

    // unequal boundary radii
    const PackingProblem q = make_packing_problem(t.graph, t.outer_face, {1.0, 2.0, 3.0});
    const RadiiSolution s = solve_radii(q);
    const double k = descartes(1.0 / q.boundary_radii[0], 1.0 / q.boundary_radii[1], 1.0 / q.boundary_radii[2]);
    CHECK(std::abs(s.radii[static_cast<std::size_t>(interior)] - 1.0 / k) <= 1e-9);

    PackingSolution sol;
    const CoinModel m = pack(t.graph, t.outer_face, {}, &sol);
    CHECK(m.size() == 4);
    CHECK(sol.max_tangency_defect <= 1e-8);
}

TEST_CASE("wheel hub") {
    const EmbeddedTriangulation w = wheel(6);
    const CoinModel m = pack(w.graph, w.outer_face);
    CHECK(std::abs(m[0].radius - 1.0) <= 1e-10);
    for (Vertex v = 0; v < 7; ++v) CHECK(angle_sum(w.graph, std::vector<double>(7, 1.0), v) > 0.0);
    CHECK(angle_sum(w.graph, std::vector<double>(7, 1.0), 0) == doctest::Approx(2 * std::acos(-1.0)));
}

TEST_CASE("K3 has nothing to solve") {
    const PlanarGraph g = k3_embedded();
    const PackingProblem p = make_packing_problem(g, 0, {1.0, 2.0, 3.0});
    const RadiiSolution r = solve_radii(p);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(r.radii[static_cast<std::size_t>(p.boundary[i])] == p.boundary_radii[i]);

    const PackingProblem unit = make_packing_problem(g, 0);
    const std::vector<Point> c = layout(unit, std::vector<double>(3, 1.0));
    CHECK(distance(c[0], c[1]) == doctest::Approx(2.0));
    CHECK(distance(c[1], c[2]) == doctest::Approx(2.0));
    CHECK(distance(c[0], c[2]) == doctest::Approx(2.0));
    CHECK(c[static_cast<std::size_t>(unit.boundary[0])].x == 0.0);
    CHECK(c[static_cast<std::size_t>(unit.boundary[0])].y == 0.0);
    CHECK(c[static_cast<std::size_t>(unit.boundary[2])].y > 0.0);
}

TEST_CASE("icosahedron") {
    const EmbeddedTriangulation t = icosahedron();
    PackingSolution sol;
    const CoinModel m = pack(t.graph, t.outer_face, {}, &sol);
    CHECK(m.size() == 12);
    CHECK(sol.max_tangency_defect <= 1e-8);
    CHECK(validate_model(t.graph, m).valid());
}

TEST_CASE("random triangulations pack into valid models") {
    for (int n : {10, 100, 400}) {
        const EmbeddedTriangulation t = random_triangulation(n, static_cast<std::uint64_t>(n));
        CHECK(is_triangulation(t.graph, t.outer_face));
        PackingSolution sol;
        const CoinModel m = pack(t.graph, t.outer_face, {}, &sol);
        CHECK(sol.max_angle_defect <= 1e-10);
        CHECK(validate_model(t.graph, m).valid());
    }
}

TEST_CASE("tolerance flag tightens the residual") {
    const EmbeddedTriangulation t = random_triangulation(80, 2);
    SolverConfig loose;
    loose.tolerance = 1e-4;
    loose.newton = false;
    SolverConfig tight;
    tight.tolerance = 1e-12;
    const PackingProblem p = make_packing_problem(t.graph, t.outer_face);
    const RadiiSolution a = solve_radii(p, loose), b = solve_radii(p, tight);
    CHECK(a.max_angle_defect <= 1e-4);
    CHECK(b.max_angle_defect <= 1e-12);
    CHECK(b.max_angle_defect <= a.max_angle_defect);
}

TEST_CASE("errors") {
    const std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    const PlanarGraph g =
        PlanarGraph::from_edges(4, c4, std::vector<std::vector<Vertex>>{{1, 3}, {2, 0}, {3, 1}, {0, 2}});
    CHECK_THROWS_AS(pack(g, 0), InputError);

    const EmbeddedTriangulation t = random_triangulation(200, 1);
    SolverConfig cfg;
    cfg.max_iterations = 2;
    cfg.newton = false;
    CHECK_THROWS_AS(pack(t.graph, t.outer_face, cfg), ConvergenceError);
}

TEST_CASE("planar graphs with longer faces") {
    const PlanarGraph grid = gen_square_grid(5);
    const Augmentation a = augment_to_triangulation(grid);
    CHECK(a.original_vertices == 25);
    // 16 inner squares and the outer 16-cycle each get a hub
    CHECK(a.triangulation.num_vertices() == 25 + 17);
    const CoinModel m = pack_planar(grid);
    CHECK(m.size() == 25);
    CHECK(validate_model(grid, m).valid());
}

}  // TEST_SUITE
