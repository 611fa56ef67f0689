#pragma once

#include <span>
#include <vector>

#include "koebe/coins.hpp"
#include "koebe/graph.hpp"

namespace koebe {

/// An embedded graph whose faces other than the outer face are triangles.
/// The outer face vertices get prescribed radii; usually the outer face is a
/// triangle, but any simple outer cycle works (e.g. the rim of a wheel).
struct PackingProblem {
    PlanarGraph graph;
    FaceSet faces;
    int outer_face = 0;
    /// Outer face vertices in traced order.
    std::vector<Vertex> boundary;
    std::vector<double> boundary_radii;
};

/// Validates the triangulation precondition (InputError otherwise). Empty
/// boundary_radii means radius 1 for every boundary vertex.
PackingProblem make_packing_problem(const PlanarGraph& g, int outer_face, std::vector<double> boundary_radii = {});

struct SolverConfig {
    /// Target for max |angle sum - 2 pi| over interior vertices.
    double tolerance = 1e-10;
    int max_iterations = 100000;
    /// Initial relaxation factor in (0, 1]; halved when the residual keeps growing.
    double damping = 1.0;
    /// Once the sweep residual drops below newton_switch, finish with Newton
    /// steps on the log radii (falls back to sweeps if Newton stalls).
    bool newton = true;
    double newton_switch = 0.1;
};

struct RadiiSolution {
    std::vector<double> radii;
    double max_angle_defect = 0.0;
    int iterations = 0;
};

struct PackingSolution {
    std::vector<double> radii;
    std::vector<Point> centers;
    double max_angle_defect = 0.0;
    /// max |dist - (r_u + r_v)| over edges, divided by the mean radius.
    double max_tangency_defect = 0.0;
    int iterations = 0;
};

/// Angle covered at v by its incident triangles for the given radii.
double angle_sum(const PlanarGraph& g, std::span<const double> radii, Vertex v);

/// Sweeps interior vertices with the uniform-neighbour radius update until
/// every interior angle sum is within tolerance of 2 pi. Throws
/// ConvergenceError after max_iterations sweeps (Newton steps count too).
RadiiSolution solve_radii(const PackingProblem& p, const SolverConfig& cfg = {});

/// Places centres by tangency, breadth-first over faces starting from the
/// boundary edge b0-b1 on the x-axis (b0 at the origin, the rest above it).
std::vector<Point> layout(const PackingProblem& p, std::span<const double> radii);

PackingSolution solve_packing(const PackingProblem& p, const SolverConfig& cfg = {});

/// solve_radii + layout, checked with validate_model.
CoinModel pack(const PlanarGraph& g, int outer_face, const SolverConfig& cfg = {},
               PackingSolution* details = nullptr);

/// Embedded 2-connected planar graph made into a triangulation by inserting
/// one auxiliary vertex into every face longer than three. Auxiliary vertices
/// get ids n, n+1, ...
struct Augmentation {
    PlanarGraph triangulation;
    int original_vertices = 0;
    int outer_face = 0;
};
Augmentation augment_to_triangulation(const PlanarGraph& g);

/// Coin model of an embedded 2-connected planar graph: packs the augmented
/// triangulation and drops the auxiliary discs.
CoinModel pack_planar(const PlanarGraph& g, const SolverConfig& cfg = {});

}  // namespace koebe
