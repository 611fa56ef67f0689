#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace koebe {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with an optional combinatorial
/// embedding (cyclic neighbour order per vertex).
///
/// Invariants enforced at construction: no self-loops, no duplicate edges,
/// m <= 3n - 6 when n >= 3, and a rotation (if given) lists exactly the
/// neighbours of every vertex once. Instances are immutable.
class PlanarGraph {
public:
    PlanarGraph() = default;

    static PlanarGraph from_edges(int n, std::span<const Edge> edges,
                                  std::optional<std::vector<std::vector<Vertex>>> rotation = std::nullopt);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    /// Edges with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Sorted neighbour list.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    bool has_rotation() const { return rotation_.has_value(); }
    /// Cyclic neighbour order of v. Requires has_rotation().
    std::span<const Vertex> rotation(Vertex v) const;
    const std::optional<std::vector<std::vector<Vertex>>>& rotation_system() const { return rotation_; }

    bool is_connected() const;

    /// Same graph with the embedding dropped or replaced.
    PlanarGraph with_rotation(std::optional<std::vector<std::vector<Vertex>>> rotation) const;

    friend bool operator==(const PlanarGraph& a, const PlanarGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::optional<std::vector<std::vector<Vertex>>> rotation_;
};

/// Total order on vertices. Position 0 holds the minimum.
class VertexOrdering {
public:
    VertexOrdering() = default;

    /// Throws InputError unless ids is a permutation of 0..ids.size()-1.
    static VertexOrdering from_ids(std::vector<Vertex> ids);
    static VertexOrdering identity(int n);
    static VertexOrdering random(int n, std::mt19937_64& rng);

    int size() const { return static_cast<int>(order_.size()); }
    const std::vector<Vertex>& order() const { return order_; }
    Vertex at(int position) const { return order_[static_cast<std::size_t>(position)]; }
    int rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }
    bool less(Vertex u, Vertex v) const { return rank(u) < rank(v); }

private:
    std::vector<Vertex> order_;
    std::vector<int> rank_;
};

/// Faces of an embedded graph as closed walks of vertices. Face f visits the
/// directed edges (faces[f][i], faces[f][i+1]) cyclically.
struct FaceSet {
    std::vector<std::vector<Vertex>> faces;
    std::map<Edge, int> edge_face;

    int size() const { return static_cast<int>(faces.size()); }
    /// Face containing the directed edge u->v, or -1.
    int face_of(Vertex u, Vertex v) const;
};

/// Traces faces with the rule: after arriving at v along u->v, leave along
/// v->w where w follows u in the rotation of v. Requires a rotation and a
/// connected graph; throws InputError if the rotation does not describe a
/// planar embedding (Euler characteristic != 2).
FaceSet trace_faces(const PlanarGraph& g);

/// True iff every face except possibly `outer_face` is a triangle.
bool is_triangulation(const PlanarGraph& g, const FaceSet& faces, int outer_face);
bool is_triangulation(const PlanarGraph& g, int outer_face);

/// Convenience wrapper around VertexOrdering::from_ids.
inline VertexOrdering ordering_from_ids(std::vector<Vertex> ids) {
    return VertexOrdering::from_ids(std::move(ids));
}

}  // namespace koebe
