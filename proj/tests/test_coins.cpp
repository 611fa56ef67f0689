#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "koebe/coins.hpp"
#include "koebe/constructions.hpp"
#include "koebe/errors.hpp"

using namespace koebe;

namespace {

CoinModel model(std::vector<Disc> discs) {
    CoinModel m;
    m.discs = std::move(discs);
    return m;
}

}  // namespace

TEST_SUITE("coins") {

TEST_CASE("model validation") {
    const std::vector<Edge> e{{0, 1}};
    const PlanarGraph g = PlanarGraph::from_edges(2, e);
    CHECK(validate_model(g, model({{{0, 0}, 1}, {{2, 0}, 1}})).valid());

    const ValidationReport overlap = validate_model(PlanarGraph::from_edges(2, {}), model({{{0, 0}, 1}, {{1.5, 0}, 1}}));
    REQUIRE(overlap.violations.size() == 1);
    CHECK(overlap.violations[0].kind == ModelViolation::Kind::overlap);

    const ValidationReport loose = validate_model(g, model({{{0, 0}, 1}, {{2.5, 0}, 1}}));
    REQUIRE(loose.violations.size() == 1);
    CHECK(loose.violations[0].kind == ModelViolation::Kind::tangency);
}

TEST_CASE("contact graph") {
    const double h = std::sqrt(3.0);
    const PlanarGraph k3 = contact_graph(model({{{0, 0}, 1}, {{2, 0}, 1}, {{1, h}, 1}}));
    CHECK(k3.num_edges() == 3);
    CHECK(contact_graph(model({{{0, 0}, 1}, {{10, 0}, 1}})).num_edges() == 0);

    const GridCoinInstance grid = gen_grid_coin(14);
    CHECK(contact_graph(grid.model) == grid.graph);
}

TEST_CASE("Koebe ordering") {
    CHECK(koebe_ordering(model({{{0, 0}, 3}, {{10, 0}, 1}, {{20, 0}, 2}})).order() == std::vector<Vertex>{0, 2, 1});
    CHECK(koebe_ordering(model({{{0, 0}, 1}, {{10, 0}, 1}})).order() == std::vector<Vertex>{0, 1});

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> r(0.5, 2.0);
    std::vector<Disc> discs;
    for (int i = 0; i < 200; ++i) discs.push_back({{10.0 * i, 0}, i % 7 == 0 ? 1.0 : r(rng)});
    const CoinModel m = model(discs);
    const VertexOrdering o = koebe_ordering(m);
    for (Vertex u = 0; u < m.size(); ++u)
        for (Vertex v = 0; v < m.size(); ++v)
            if (m[u].radius > m[v].radius * (1 + 1e-9)) CHECK(o.rank(u) < o.rank(v));
}

TEST_CASE("normalisation") {
    const CoinModel m = model({{{4, 2}, 2}, {{8, 2}, 2}});
    const CoinModel n = normalize(m, 0);
    CHECK(n[0].center.x == doctest::Approx(0.0));
    CHECK(n[0].radius == doctest::Approx(1.0));
    CHECK(n[1].center.x == doctest::Approx(2.0));
    CHECK(n[1].center.y == doctest::Approx(0.0));
    CHECK(n[1].radius == doctest::Approx(1.0));
    CHECK(is_normalized_at(n, 0));
    CHECK_FALSE(is_normalized_at(m, 0));
    const CoinModel again = normalize(n, 0);
    for (int v = 0; v < 2; ++v) CHECK(again[v] == n[v]);

    const GridCoinInstance grid = gen_grid_coin(26);
    CHECK(koebe_ordering(normalize(grid.model, 5)).order() == koebe_ordering(grid.model).order());
}

TEST_CASE("inner tangent disc") {
    const Disc d{{0, 0}, 4};
    const Disc t = inner_tangent_disc(d, {4, 0}, 1);
    CHECK(t.center.x == doctest::Approx(3.0));
    CHECK(t.center.y == doctest::Approx(0.0));
    CHECK(t.radius == 1.0);
    CHECK(inner_tangent_disc(d, {0, 4}, 4) == d);

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 100; ++i) {
        const Disc big{{10 * u(rng) - 5, 10 * u(rng) - 5}, 0.1 + 5 * u(rng)};
        const double phi = 6.283185307179586 * u(rng);
        const Point x{big.center.x + big.radius * std::cos(phi), big.center.y + big.radius * std::sin(phi)};
        const double rho = big.radius * (0.001 + 0.999 * u(rng));
        const Disc in = inner_tangent_disc(big, x, rho);
        CHECK(distance(in.center, big.center) + rho <= big.radius + 1e-9);
        CHECK(distance(in.center, x) == doctest::Approx(rho));
    }
    CHECK_THROWS_AS(inner_tangent_disc(d, {1, 0}, 1), InputError);
}

TEST_CASE("SVG output") {
    const std::string empty = render_svg(model({}));
    CHECK(empty.find("<svg") != std::string::npos);
    CHECK(empty.find("<circle") == std::string::npos);

    const GridCoinInstance grid = gen_grid_coin(14);
    const std::string svg = render_svg(grid.model);
    std::size_t circles = 0;
    for (std::size_t at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1)) ++circles;
    CHECK(circles == 37);
    CHECK(svg == render_svg(grid.model));
}

}  // TEST_SUITE
