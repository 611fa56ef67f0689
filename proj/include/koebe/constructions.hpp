#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "koebe/coins.hpp"
#include "koebe/graph.hpp"

namespace koebe {

/// Embedded graph plus the face meant to be outside when packing.
struct EmbeddedTriangulation {
    PlanarGraph graph;
    int outer_face = 0;
};

/// Embedded graph whose traced faces are exactly the given cycles. The faces
/// must be consistently oriented and use every directed edge once.
PlanarGraph graph_from_faces(int n, std::span<const std::vector<Vertex>> faces);
/// Id of the traced face with the same vertex set as `face`, or -1.
int find_face(const FaceSet& faces, std::vector<Vertex> face);

EmbeddedTriangulation tetrahedron();
/// Hub 0 and rim 1..k; the outer face is the rim cycle.
EmbeddedTriangulation wheel(int k);
EmbeddedTriangulation icosahedron();

/// Delaunay triangulation of n - 3 uniform random points in the unit square
/// plus three enclosing vertices 0, 1, 2 which form the outer face.
EmbeddedTriangulation random_triangulation(int n, std::uint64_t seed);

struct GridCoinInstance {
    int d = 0;
    PlanarGraph graph;
    CoinModel model;
    std::vector<Vertex> large;
};

/// Unit-disc grid of side d/2 with 2x2 blocks at rows/columns (3t+1, 3t+2)
/// (0-based) merged into discs of radius sqrt(10) - 1. d = 2 mod 12, d >= 14.
GridCoinInstance gen_grid_coin(int d);

struct Certificate {
    int bound = 0;
    Vertex root = -1;
    /// Verified members of the reachability set of root.
    std::vector<Vertex> witnesses;
};

/// Every large disc is strongly d-reachable from the first unit disc of the
/// Koebe ordering. Throws VerificationError if the check fails.
Certificate grid_scol_certificate(const GridCoinInstance& inst);

struct Gadget {
    double scale = 1.0;
    Vertex interface = -1;
    std::vector<Vertex> grid;
    std::vector<Vertex> large;
};

struct MultigridInstance {
    int d = 0;
    std::vector<Gadget> gadgets;
    PlanarGraph graph;
    CoinModel model;
};

/// d/2 gadgets; gadget i is a side-d/4 grid pattern scaled by d^(i-1) with an
/// interface disc below its bottom-right disc. Interfaces sit on the x-axis,
/// consecutive ones tangent, the first centred at the origin. d = 4 mod 24,
/// d >= 28.
MultigridInstance gen_multigrid_coin(int d);

/// Every large disc is weakly d-reachable from the first interface in the
/// Koebe ordering. Throws VerificationError if the check fails.
Certificate multigrid_wcol_certificate(const MultigridInstance& inst);

/// d x d grid, row-major ids, counter-clockwise rotation.
PlanarGraph gen_square_grid(int d);

struct GridLowerCertificate {
    int count = 0;
    Vertex root = -1;
    std::vector<Vertex> witnesses;
    std::vector<std::vector<Vertex>> paths;
};

/// Lower bound |SReach_{3d-2}[u_k]| >= d/2 on the d x d grid, built from
/// column minima and d disjoint paths between the column of u_k and the
/// column minima. Each witness is checked with sreach_vertex.
GridLowerCertificate grid_scol_lower_certificate(const PlanarGraph& grid, int d, const VertexOrdering& ord);

}  // namespace koebe
