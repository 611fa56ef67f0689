#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "koebe/coins.hpp"
#include "koebe/graph.hpp"

namespace koebe {

/// g(x) = 1 / |x|^2. InputError at the origin.
double density(Point x);

/// mu of the annulus a <= |x| <= b, closed form 2 pi ln(b / a).
double mu_ring(double a, double b);
/// Same quantity by nested adaptive quadrature in polar coordinates.
double mu_ring_quadrature(double a, double b, double tol = 1e-12);

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
};

/// mu(D) by adaptive polar quadrature around the origin; absolute error
/// target `tol`. InputError if the origin lies in the closed disc,
/// ConvergenceError if the error target is missed.
QuadratureResult mu_disc_quadrature(const Disc& disc, double tol = 1e-9);
double mu_disc(const Disc& disc, double tol = 1e-9);

/// (pi / 4) rho^2 / a^2, valid lower bound on mu of a disc of radius rho at
/// distance a from the origin. InputError unless 0 < rho < a.
double disc_measure_bound(double rho, double a);

/// rho_1..rho_{l+1} in [0, 1] with rho_{l+1} = 1.
struct RhoSequence {
    std::vector<double> rho;

    int length() const { return static_cast<int>(rho.size()) - 1; }
    /// InputError if an entry leaves [0, 1] or the last entry is not 1.
    void validate() const;
    /// x_i = rho_1 + ... + rho_i, i = 0..l+1.
    std::vector<double> prefix_sums() const;
};

/// sum_i rho_i^2 / (1 + x_i)^2.
double rho_chain_sum(const RhoSequence& s);
/// min(l^(-2/3), ln^2 l / (36 (l + 1))).
double rho_chain_floor(int l);

struct RhoChainMinimum {
    double value = 0.0;
    RhoSequence argmin;
};

/// Projected gradient descent over [0,1]^l (rho_{l+1} fixed to 1) from
/// `restarts` random starting points; returns the best point found.
RhoChainMinimum minimize_rho_chain(int l, std::uint64_t seed = 0, int restarts = 20);

struct AdmRegionCertificate {
    std::vector<Vertex> path;
    /// Radii and centre distances of D_1..D_{l+1}: the internal discs, then
    /// the unit disc inside the endpoint's disc touching at the contact point.
    std::vector<Disc> discs;
    std::vector<double> rho;
    std::vector<double> a;
    /// (pi / 16) * rho_chain_sum(rho).
    double chain_bound = 0.0;
    /// sum of (pi / 4) rho_i^2 / a_i^2.
    double disc_bound = 0.0;
    /// sum of mu(D_i) by quadrature, and its error bound.
    double mu = 0.0;
    double mu_error = 0.0;
    /// max over sampled boundary points of the distance outside the ring
    /// 1 <= |x| <= 2d + 1 (0 when contained).
    double ring_excess = 0.0;
};

/// Region certificate for one strong reachability path starting at u, in a
/// model normalised at u. Asserts (VerificationError) the centre-distance
/// chain inequality, ring containment and mu >= chain bound.
AdmRegionCertificate adm_certificate(const PlanarGraph& g, const CoinModel& m, const VertexOrdering& ord,
                                     std::span<const Vertex> path, int d, double tol = 1e-9);

}  // namespace koebe
