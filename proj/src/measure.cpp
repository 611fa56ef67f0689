#include "koebe/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "koebe/errors.hpp"
#include "koebe/reach.hpp"

namespace koebe {

namespace {

using boost::math::quadrature::gauss_kronrod;
constexpr double kPi = std::numbers::pi;
constexpr unsigned kMaxDepth = 20;

}  // namespace

double density(Point x) {
    const double r2 = x.x * x.x + x.y * x.y;
    if (r2 == 0.0) throw InputError("density is undefined at the origin");
    return 1.0 / r2;
}

double mu_ring(double a, double b) {
    if (!(a > 0.0) || !(b >= a)) throw InputError("mu_ring needs 0 < a <= b");
    return 2.0 * kPi * std::log(b / a);
}

double mu_ring_quadrature(double a, double b, double tol) {
    if (!(a > 0.0) || !(b >= a)) throw InputError("mu_ring needs 0 < a <= b");
    if (a == b) return 0.0;
    auto radial = [&](double) {
        return gauss_kronrod<double, 31>::integrate([](double t) { return density({t, 0.0}) * t; }, a, b, kMaxDepth,
                                                    tol);
    };
    return gauss_kronrod<double, 31>::integrate(radial, 0.0, 2.0 * kPi, kMaxDepth, tol);
}

QuadratureResult mu_disc_quadrature(const Disc& disc, double tol) {
    const double a = norm(disc.center);
    const double rho = disc.radius;
    if (!(rho > 0.0)) throw InputError("disc radius must be positive");
    if (!(a > rho)) throw InputError("disc contains the origin");
    // The circle |x| = r meets the disc in an arc of half-angle phi(r), so
    // mu(D) = int 2 phi(r) / r dr over [a - rho, a + rho]. With r = e^t the
    // integrand 2 phi is bounded, and t = mid + half sin(s) removes the
    // square-root behaviour at both ends.
    const double lo = std::log(a - rho), hi = std::log(a + rho);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    auto integrand = [&](double s) {
        const double r = std::exp(mid + half * std::sin(s));
        const double c = (r * r + (a - rho) * (a + rho)) / (2.0 * a * r);
        return 2.0 * std::acos(std::clamp(c, -1.0, 1.0)) * half * std::cos(s);
    };
    QuadratureResult res;
    double err = 0.0;
    // relative target matching the absolute one, from a one-panel estimate
    const double rough = std::abs(gauss_kronrod<double, 31>::integrate(integrand, -kPi / 2.0, kPi / 2.0, 0));
    const double rel = std::clamp(0.01 * tol / std::max(rough, 1e-300), 1e-13, 1e-6);
    res.value = gauss_kronrod<double, 31>::integrate(integrand, -kPi / 2.0, kPi / 2.0, kMaxDepth, rel, &err);
    // the reported error sums per-piece estimates of the rescaled integrals;
    // pieces have half-width at most pi/2
    res.error = err * kPi / 2.0;
    if (!(res.error <= tol))
        throw ConvergenceError("disc quadrature missed its error target (" + std::to_string(res.error) + ")");
    return res;
}

double mu_disc(const Disc& disc, double tol) { return mu_disc_quadrature(disc, tol).value; }

double disc_measure_bound(double rho, double a) {
    if (!(rho > 0.0) || !(rho < a)) throw InputError("disc bound needs 0 < rho < a");
    return kPi / 4.0 * rho * rho / (a * a);
}

void RhoSequence::validate() const {
    if (rho.empty()) throw InputError("rho sequence is empty");
    for (double r : rho)
        if (!(r >= 0.0 && r <= 1.0)) throw InputError("rho entries must lie in [0, 1]");
    if (rho.back() != 1.0) throw InputError("last rho entry must be 1");
}

std::vector<double> RhoSequence::prefix_sums() const {
    std::vector<double> x(rho.size() + 1, 0.0);
    for (std::size_t i = 0; i < rho.size(); ++i) x[i + 1] = x[i] + rho[i];
    return x;
}

double rho_chain_sum(const RhoSequence& s) {
    s.validate();
    double sum = 0.0, x = 0.0;
    for (double r : s.rho) {
        x += r;
        sum += r * r / ((1.0 + x) * (1.0 + x));
    }
    return sum;
}

double rho_chain_floor(int l) {
    if (l < 1) throw InputError("rho chain floor needs l >= 1");
    const double L = static_cast<double>(l);
    const double lg = std::log(L);
    return std::min(std::pow(L, -2.0 / 3.0), lg * lg / (36.0 * (L + 1.0)));
}

namespace {

// Objective and gradient over rho_1..rho_l, with rho_{l+1} = 1 appended.
double objective(const std::vector<double>& r, std::vector<double>* grad) {
    const std::size_t l = r.size();
    std::vector<double> denom(l + 1);
    double x = 0.0, f = 0.0;
    for (std::size_t i = 0; i <= l; ++i) {
        const double ri = i < l ? r[i] : 1.0;
        x += ri;
        denom[i] = 1.0 + x;
        f += ri * ri / (denom[i] * denom[i]);
    }
    if (grad) {
        grad->assign(l, 0.0);
        // d/d rho_j = 2 rho_j / (1+x_j)^2 - sum_{i >= j} 2 rho_i^2 / (1+x_i)^3
        double suffix = 0.0;
        for (std::size_t i = l + 1; i-- > 0;) {
            const double ri = i < l ? r[i] : 1.0;
            suffix += 2.0 * ri * ri / (denom[i] * denom[i] * denom[i]);
            if (i < l) (*grad)[i] = 2.0 * ri / (denom[i] * denom[i]) - suffix;
        }
    }
    return f;
}

}  // namespace

RhoChainMinimum minimize_rho_chain(int l, std::uint64_t seed, int restarts) {
    if (l < 1) throw InputError("rho chain minimisation needs l >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    RhoChainMinimum best;
    best.value = std::numeric_limits<double>::infinity();
    std::vector<double> r(static_cast<std::size_t>(l)), grad, trial(r.size());
    for (int run = 0; run < std::max(1, restarts); ++run) {
        for (double& v : r) v = unit(rng);
        double f = objective(r, &grad);
        double step = 1.0;
        for (int it = 0; it < 20000; ++it) {
            bool accepted = false;
            double moved = 0.0;
            while (step > 1e-14) {
                double sq = 0.0;
                moved = 0.0;
                for (std::size_t i = 0; i < r.size(); ++i) {
                    trial[i] = std::clamp(r[i] - step * grad[i], 0.0, 1.0);
                    const double diff = trial[i] - r[i];
                    sq += diff * diff;
                    moved = std::max(moved, std::abs(diff));
                }
                const double ft = objective(trial, nullptr);
                if (ft <= f - 1e-4 / step * sq) {
                    r.swap(trial);
                    f = objective(r, &grad);
                    accepted = true;
                    step *= 2.0;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted || moved < 1e-13) break;
        }
        if (f < best.value) {
            best.value = f;
            best.argmin.rho = r;
            best.argmin.rho.push_back(1.0);
        }
    }
    // report the value of the returned point exactly as rho_chain_sum computes it
    best.value = rho_chain_sum(best.argmin);
    return best;
}

AdmRegionCertificate adm_certificate(const PlanarGraph& g, const CoinModel& m, const VertexOrdering& ord,
                                     std::span<const Vertex> path, int d, double tol) {
    if (path.size() < 2) throw InputError("path needs at least two vertices");
    if (static_cast<int>(path.size()) - 1 > d) throw InputError("path longer than d");
    if (!is_strong_reachability_path(g, ord, path)) throw InputError("not a strong reachability path");
    const Vertex u = path.front();
    if (!is_normalized_at(m, u)) throw InputError("model is not normalised at the path origin");

    AdmRegionCertificate cert;
    cert.path.assign(path.begin(), path.end());
    const std::size_t l = path.size() - 2;
    for (std::size_t i = 1; i <= l; ++i) cert.discs.push_back(m[path[i]]);
    const Disc& end = m[path.back()];
    const Point x = contact_point(m[path[l]], end);
    // the endpoint is not larger than u, so its radius is at least 1 up to ties
    const double unit = std::min(1.0, end.radius);
    cert.discs.push_back(inner_tangent_disc(end, x, unit, m.tolerances.tangent * std::max(1.0, end.radius)));

    RhoSequence seq;
    double prefix = 0.0;
    for (std::size_t i = 0; i < cert.discs.size(); ++i) {
        const Disc& disc = cert.discs[i];
        const double rho = disc.radius;
        const double a = norm(disc.center);
        cert.rho.push_back(rho);
        cert.a.push_back(a);
        const double limit = 1.0 + 2.0 * prefix + rho;
        if (a > limit * (1.0 + tol) + tol)
            throw VerificationError("centre distance " + std::to_string(a) + " exceeds chain limit " +
                                    std::to_string(limit) + " at disc " + std::to_string(i));
        prefix += rho;
        // radii of internal discs may exceed 1 only by the tie tolerance
        seq.rho.push_back(std::clamp(rho, 0.0, 1.0));
        cert.disc_bound += disc_measure_bound(rho, a);
        const QuadratureResult q = mu_disc_quadrature(disc, tol);
        cert.mu += q.value;
        cert.mu_error += q.error;
        for (int k = 0; k < 64; ++k) {
            const double phi = 2.0 * kPi * k / 64.0;
            const double r = norm(disc.center + rho * Point{std::cos(phi), std::sin(phi)});
            cert.ring_excess = std::max({cert.ring_excess, 1.0 - r, r - (2.0 * d + 1.0)});
        }
    }
    seq.rho.back() = 1.0;
    cert.chain_bound = kPi / 16.0 * rho_chain_sum(seq);
    if (cert.ring_excess > 1e-7) throw VerificationError("region leaves the ring 1 <= |x| <= 2d + 1");
    if (cert.mu < cert.chain_bound - cert.mu_error)
        throw VerificationError("numeric mu below the chain bound");
    return cert;
}

}  // namespace koebe
