#include "koebe/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "koebe/errors.hpp"

namespace koebe {

PlanarGraph PlanarGraph::from_edges(int n, std::span<const Edge> edges,
                                    std::optional<std::vector<std::vector<Vertex>>> rotation) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    PlanarGraph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw InputError("duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
    if (n >= 3 && static_cast<long long>(g.edges_.size()) > 3LL * n - 6)
        throw InputError("edge count " + std::to_string(g.edges_.size()) + " exceeds planar budget 3n-6 = " +
                         std::to_string(3 * n - 6));
    if (n < 3 && g.edges_.size() > static_cast<std::size_t>(n > 1 ? 1 : 0))
        throw InputError("too many edges for a simple graph");

    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());

    if (rotation) {
        if (static_cast<int>(rotation->size()) != n) throw InputError("rotation must list every vertex");
        for (int v = 0; v < n; ++v) {
            auto sorted = (*rotation)[static_cast<std::size_t>(v)];
            std::sort(sorted.begin(), sorted.end());
            if (sorted != g.adj_[static_cast<std::size_t>(v)])
                throw InputError("rotation of vertex " + std::to_string(v) +
                                 " does not list exactly its neighbours");
        }
        g.rotation_ = std::move(rotation);
    }
    return g;
}

bool PlanarGraph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

std::span<const Vertex> PlanarGraph::rotation(Vertex v) const {
    if (!rotation_) throw InputError("graph carries no rotation system");
    return (*rotation_)[static_cast<std::size_t>(v)];
}

bool PlanarGraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == n_;
}

PlanarGraph PlanarGraph::with_rotation(std::optional<std::vector<std::vector<Vertex>>> rotation) const {
    return from_edges(n_, edges_, std::move(rotation));
}

VertexOrdering VertexOrdering::from_ids(std::vector<Vertex> ids) {
    const auto n = ids.size();
    std::vector<int> rank(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = ids[i];
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw InputError("ordering entry out of range");
        if (rank[static_cast<std::size_t>(v)] != -1)
            throw InputError("ordering repeats vertex " + std::to_string(v));
        rank[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    VertexOrdering o;
    o.order_ = std::move(ids);
    o.rank_ = std::move(rank);
    return o;
}

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    return from_ids(std::move(ids));
}

VertexOrdering VertexOrdering::random(int n, std::mt19937_64& rng) {
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    return from_ids(std::move(ids));
}

int FaceSet::face_of(Vertex u, Vertex v) const {
    auto it = edge_face.find({u, v});
    return it == edge_face.end() ? -1 : it->second;
}

FaceSet trace_faces(const PlanarGraph& g) {
    if (!g.has_rotation()) throw InputError("face tracing needs a rotation system");
    if (!g.is_connected()) throw InputError("face tracing needs a connected graph");
    const int n = g.num_vertices();

    // position of each neighbour inside the rotation of v
    std::vector<std::map<Vertex, int>> pos(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        auto rot = g.rotation(v);
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) pos[static_cast<std::size_t>(v)][rot[static_cast<std::size_t>(i)]] = i;
    }

    FaceSet fs;
    for (auto [a, b] : g.edges()) {
        for (Edge start : {Edge{a, b}, Edge{b, a}}) {
            if (fs.edge_face.count(start)) continue;
            const int id = fs.size();
            std::vector<Vertex> cycle;
            Edge e = start;
            do {
                if (fs.edge_face.count(e)) throw InputError("rotation system is inconsistent");
                fs.edge_face[e] = id;
                cycle.push_back(e.first);
                auto [u, v] = e;
                auto rot = g.rotation(v);
                int i = pos[static_cast<std::size_t>(v)].at(u);
                Vertex w = rot[static_cast<std::size_t>((i + 1) % static_cast<int>(rot.size()))];
                e = {v, w};
            } while (e != start);
            fs.faces.push_back(std::move(cycle));
        }
    }
    const int m = g.num_edges();
    const int f = m == 0 ? 1 : fs.size();
    if (n > 0 && n - m + f != 2)
        throw InputError("rotation is not a planar embedding: n - m + f = " + std::to_string(n - m + f));
    return fs;
}

bool is_triangulation(const PlanarGraph& g, const FaceSet& faces, int outer_face) {
    (void)g;
    if (outer_face < 0 || outer_face >= faces.size()) throw InputError("outer face id out of range");
    for (int f = 0; f < faces.size(); ++f) {
        if (f == outer_face) continue;
        if (faces.faces[static_cast<std::size_t>(f)].size() != 3) return false;
    }
    return true;
}

bool is_triangulation(const PlanarGraph& g, int outer_face) {
    return is_triangulation(g, trace_faces(g), outer_face);
}

}  // namespace koebe
