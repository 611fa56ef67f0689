#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "koebe/constructions.hpp"
#include "koebe/graph.hpp"

namespace oracle {

using koebe::PlanarGraph;
using koebe::Vertex;
using koebe::VertexOrdering;

// Every simple path starting at v with at most d edges.
inline void simple_paths(const PlanarGraph& g, Vertex v, int d,
                         const std::function<void(const std::vector<Vertex>&)>& visit) {
    std::vector<Vertex> path{v};
    std::vector<char> on(static_cast<std::size_t>(g.num_vertices()), 0);
    on[static_cast<std::size_t>(v)] = 1;
    std::function<void()> rec = [&] {
        visit(path);
        if (static_cast<int>(path.size()) - 1 == d) return;
        for (Vertex y : g.neighbors(path.back()))
            if (!on[static_cast<std::size_t>(y)]) {
                on[static_cast<std::size_t>(y)] = 1;
                path.push_back(y);
                rec();
                path.pop_back();
                on[static_cast<std::size_t>(y)] = 0;
            }
    };
    rec();
}

inline std::set<Vertex> wreach(const PlanarGraph& g, const VertexOrdering& o, int d, Vertex v) {
    std::set<Vertex> out;
    simple_paths(g, v, d, [&](const std::vector<Vertex>& p) {
        const Vertex u = p.back();
        if (std::all_of(p.begin(), p.end(), [&](Vertex x) { return o.rank(x) >= o.rank(u); })) out.insert(u);
    });
    return out;
}

inline std::set<Vertex> sreach(const PlanarGraph& g, const VertexOrdering& o, int d, Vertex v) {
    std::set<Vertex> out;
    simple_paths(g, v, d, [&](const std::vector<Vertex>& p) {
        const Vertex u = p.back();
        if (o.rank(u) > o.rank(v)) return;
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (o.rank(p[i]) <= o.rank(v)) return;
        out.insert(u);
    });
    return out;
}

// Largest family of strong reachability paths from v, disjoint apart from v.
inline int adm(const PlanarGraph& g, const VertexOrdering& o, int d, Vertex v, bool strict = false) {
    std::vector<std::vector<Vertex>> paths;
    simple_paths(g, v, d, [&](const std::vector<Vertex>& p) {
        if (p.size() < 2 || o.rank(p.back()) >= o.rank(v)) return;
        if (strict && static_cast<int>(p.size()) - 1 != d) return;
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (o.rank(p[i]) <= o.rank(v)) return;
        paths.push_back(p);
    });
    int best = 0;
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int chosen) {
        best = std::max(best, chosen);
        for (std::size_t i = from; i < paths.size(); ++i) {
            bool ok = true;
            for (std::size_t j = 1; j < paths[i].size() && ok; ++j) ok = !used[static_cast<std::size_t>(paths[i][j])];
            if (!ok) continue;
            for (std::size_t j = 1; j < paths[i].size(); ++j) used[static_cast<std::size_t>(paths[i][j])] = 1;
            rec(i + 1, chosen + 1);
            for (std::size_t j = 1; j < paths[i].size(); ++j) used[static_cast<std::size_t>(paths[i][j])] = 0;
        }
    };
    rec(0, 0);
    return best;
}

// Random planar graph: a random triangulation with a random subset of edges.
inline PlanarGraph random_planar(int n, std::uint64_t seed, double keep) {
    const PlanarGraph t = koebe::random_triangulation(n, seed).graph;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::bernoulli_distribution coin(keep);
    std::vector<koebe::Edge> edges;
    for (auto e : t.edges())
        if (coin(rng)) edges.push_back(e);
    return PlanarGraph::from_edges(n, edges);
}

}  // namespace oracle
