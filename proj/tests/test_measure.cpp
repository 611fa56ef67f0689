#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "koebe/constructions.hpp"
#include "koebe/errors.hpp"
#include "koebe/measure.hpp"
#include "koebe/packing.hpp"
#include "koebe/reach.hpp"

using namespace koebe;

namespace {

const double kPi = std::acos(-1.0);

struct Estimate {
    double mean, sigma;
};

// Monte Carlo estimate of the integral of 1/|x|^2 over a disc.
Estimate monte_carlo(const Disc& d, int samples, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double s = 0.0, s2 = 0.0;
    int taken = 0;
    while (taken < samples) {
        const double x = u(rng), y = u(rng);
        if (x * x + y * y > 1.0) continue;
        const Point p{d.center.x + d.radius * x, d.center.y + d.radius * y};
        const double f = 1.0 / (p.x * p.x + p.y * p.y);
        s += f;
        s2 += f * f;
        ++taken;
    }
    const double area = kPi * d.radius * d.radius;
    const double mean = s / samples;
    const double var = s2 / samples - mean * mean;
    return {area * mean, area * std::sqrt(var / samples)};
}

// Independent evaluation of sum rho_i^2 / (1 + x_i)^2 for l = 1.
double two_term(double r1) { return r1 * r1 / ((1 + r1) * (1 + r1)) + 1.0 / ((2 + r1) * (2 + r1)); }

}  // namespace

TEST_SUITE("measure") {

TEST_CASE("density") {
    CHECK(density({1, 0}) == 1.0);
    CHECK(density({3, 4}) == doctest::Approx(1.0 / 25.0));
    CHECK_THROWS_AS(density({0, 0}), InputError);
}

TEST_CASE("rings") {
    CHECK(mu_ring(1, 3) == doctest::Approx(2 * kPi * std::log(3.0)).epsilon(1e-14));
    CHECK(mu_ring(2, 2) == 0.0);
    CHECK(mu_ring(1, std::exp(1.0)) == doctest::Approx(2 * kPi).epsilon(1e-14));
    CHECK(std::abs(mu_ring_quadrature(1, 3) - 2 * kPi * std::log(3.0)) <= 1e-9);
    CHECK_THROWS_AS(mu_ring(2, 1), InputError);
}

TEST_CASE("disc measure against Monte Carlo") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const double a = 0.2 + 5 * u(rng);
        const double rho = a * (0.05 + 0.9 * u(rng));
        const double phi = 2 * kPi * u(rng);
        const Disc d{{a * std::cos(phi), a * std::sin(phi)}, rho};
        const Estimate e = monte_carlo(d, 10'000'000, rng);
        const double q = mu_disc(d);
        CHECK(std::abs(q - e.mean) <= 3 * e.sigma);
    }
}

TEST_CASE("disc measure against the logarithmic formula") {
    // mu of the disc of radius rho centred at distance a is -pi ln(1 - rho^2/a^2)
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double a = std::exp(-2 + 4 * u(rng));
        const double rho = a * (0.001 + 0.99 * u(rng));
        const QuadratureResult q = mu_disc_quadrature({{a, 0}, rho});
        const double exact = -kPi * std::log1p(-(rho / a) * (rho / a));
        CHECK(std::abs(q.value - exact) <= 1e-9);
        CHECK(q.error <= 1e-9);
    }
}

TEST_CASE("disc bound") {
    CHECK(mu_disc({{2, 0}, 1}) >= kPi / 16);
    CHECK(disc_measure_bound(1, 2) == doctest::Approx(kPi / 16));
    CHECK(disc_measure_bound(1e-8, 1) < 1e-15);
    const double far = mu_disc({{100, 0}, 0.01});
    CHECK(std::abs(far - kPi * 1e-8) <= 0.01 * kPi * 1e-8);

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double a = std::exp(-3 + 6 * u(rng));
        const double rho = a * (0.001 + 0.998 * u(rng));
        CHECK(mu_disc({{0, a}, rho}) >= disc_measure_bound(rho, a));
    }
    CHECK_THROWS_AS(disc_measure_bound(2, 1), InputError);
}

TEST_CASE("rho-sequence sums") {
    CHECK(rho_chain_sum({{1.0}}) == doctest::Approx(0.25));
    CHECK(rho_chain_sum({{1.0, 1.0}}) == doctest::Approx(13.0 / 36.0));
    CHECK(rho_chain_sum({{0.0, 0.0, 1.0}}) == doctest::Approx(0.25));
    CHECK_THROWS_AS(rho_chain_sum({{0.5, 0.5}}), InputError);
    CHECK_THROWS_AS(rho_chain_sum({{1.5, 1.0}}), InputError);
}

TEST_CASE("rho-sequence minimum") {
    double scan = 1e300;
    for (int i = 0; i <= 1'000'000; ++i) scan = std::min(scan, two_term(i * 1e-6));
    const RhoChainMinimum one = minimize_rho_chain(1);
    CHECK(one.value <= scan + 1e-12);
    CHECK(one.value >= scan - 1e-9);
    CHECK(rho_chain_sum(one.argmin) == doctest::Approx(one.value).epsilon(1e-12));

    double previous = 1.0;
    for (int l : {8, 32, 128, 512, 1024}) {
        const RhoChainMinimum m = minimize_rho_chain(l);
        CHECK(m.argmin.length() == l);
        CHECK(m.value >= rho_chain_floor(l));
        CHECK(m.value < previous);
        previous = m.value;
    }
}

TEST_CASE("region certificates along strong reachability paths") {
    const EmbeddedTriangulation t = random_triangulation(150, 8);
    const CoinModel packed = pack(t.graph, t.outer_face);
    const VertexOrdering ord = koebe_ordering(packed);
    int checked = 0;
    for (int d : {1, 3, 6}) {
        for (Vertex u = 3; u < 150 && checked < 40 * d; u += 7) {
            const CoinModel m = normalize(packed, u);
            AdmOptions greedy;
            greedy.mode = AdmMode::bounds;
            const AdmissibilityCertificate c = adm_vertex(t.graph, ord, d, u, greedy);
            for (const auto& path : c.paths) {
                const AdmRegionCertificate r = adm_certificate(t.graph, m, ord, path, d);
                CHECK(r.mu + r.mu_error >= r.chain_bound);
                CHECK(r.mu + r.mu_error >= r.disc_bound);
                CHECK(r.ring_excess <= 1e-7);
                ++checked;
            }
        }
    }
    CHECK(checked > 0);

    // two tangent unit discs: the region is a unit disc at distance 2
    const std::vector<Edge> e{{0, 1}};
    const PlanarGraph g = PlanarGraph::from_edges(2, e);
    CoinModel m;
    m.discs = {{{0, 0}, 1}, {{2, 0}, 1}};
    const std::vector<Vertex> path{0, 1};
    const AdmRegionCertificate r = adm_certificate(g, m, VertexOrdering::from_ids({1, 0}), path, 1);
    CHECK(r.mu >= kPi / 16);
}

}  // TEST_SUITE
