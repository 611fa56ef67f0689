#include "koebe/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <unordered_map>

#include "koebe/errors.hpp"
#include "koebe/flow.hpp"
#include "koebe/reach.hpp"

namespace koebe {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Neighbours of every vertex sorted counter-clockwise by direction.
std::vector<std::vector<Vertex>> rotation_by_angle(const std::vector<Disc>& discs, const std::vector<Edge>& edges) {
    std::vector<std::vector<Vertex>> rot(discs.size());
    for (auto [u, v] : edges) {
        rot[idx(u)].push_back(v);
        rot[idx(v)].push_back(u);
    }
    for (std::size_t v = 0; v < rot.size(); ++v) {
        const Point c = discs[v].center;
        std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) {
            const Point pa = discs[idx(a)].center - c, pb = discs[idx(b)].center - c;
            return std::atan2(pa.y, pa.x) < std::atan2(pb.y, pb.x);
        });
    }
    return rot;
}

struct Pattern {
    std::vector<Disc> discs;
    std::vector<Edge> edges;
    std::vector<Vertex> large;
    Vertex bottom_right = -1;
};

// Side-s grid of unit discs at (2c, 2r), r counted upward, with every 2x2
// block at rows/columns (3t+1, 3t+2) merged into one disc of radius
// sqrt(10) - 1. Ids are assigned row by row; a merged disc takes its id at
// its first cell.
Pattern grid_pattern(int s) {
    Pattern p;
    auto in_block = [](int i) { return i % 3 != 0; };
    std::vector<Vertex> cell(idx(s * s), -1);
    std::map<std::pair<int, int>, Vertex> block_id;
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) {
            Vertex id;
            if (in_block(r) && in_block(c)) {
                auto key = std::make_pair(r / 3, c / 3);
                auto it = block_id.find(key);
                if (it == block_id.end()) {
                    id = static_cast<Vertex>(p.discs.size());
                    block_id.emplace(key, id);
                    const double cx = 6.0 * (c / 3) + 3.0, cy = 6.0 * (r / 3) + 3.0;
                    p.discs.push_back({{cx, cy}, std::sqrt(10.0) - 1.0});
                    p.large.push_back(id);
                } else {
                    id = it->second;
                }
            } else {
                id = static_cast<Vertex>(p.discs.size());
                p.discs.push_back({{2.0 * c, 2.0 * r}, 1.0});
            }
            cell[idx(r * s + c)] = id;
        }
    std::set<Edge> edges;
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) {
            const Vertex a = cell[idx(r * s + c)];
            if (c + 1 < s) {
                const Vertex b = cell[idx(r * s + c + 1)];
                if (a != b) edges.insert(std::minmax(a, b));
            }
            if (r + 1 < s) {
                const Vertex b = cell[idx((r + 1) * s + c)];
                if (a != b) edges.insert(std::minmax(a, b));
            }
        }
    p.edges.assign(edges.begin(), edges.end());
    p.bottom_right = cell[idx(s - 1)];
    return p;
}

double orient(Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

// > 0 iff d lies inside the circumcircle of the counter-clockwise triangle abc.
double incircle(Point a, Point b, Point c, Point d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double ad = adx * adx + ady * ady, bd = bdx * bdx + bdy * bdy, cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
}

}  // namespace

PlanarGraph graph_from_faces(int n, std::span<const std::vector<Vertex>> faces) {
    // After u->v along a face, the face continues to w: w follows u in v's rotation.
    std::vector<std::map<Vertex, Vertex>> next(idx(n));
    std::set<Edge> edges;
    for (const auto& f : faces) {
        const std::size_t k = f.size();
        if (k < 3) throw InputError("faces need at least three vertices");
        for (std::size_t i = 0; i < k; ++i) {
            const Vertex u = f[i], v = f[(i + 1) % k], w = f[(i + 2) % k];
            if (u < 0 || u >= n) throw InputError("face vertex out of range");
            if (!next[idx(v)].emplace(u, w).second) throw InputError("directed edge used by two faces");
            edges.insert(std::minmax(u, v));
        }
    }
    std::vector<std::vector<Vertex>> rot(idx(n));
    for (Vertex v = 0; v < n; ++v) {
        const auto& nx = next[idx(v)];
        if (nx.empty()) continue;
        Vertex start = nx.begin()->first, cur = start;
        do {
            rot[idx(v)].push_back(cur);
            auto it = nx.find(cur);
            if (it == nx.end()) throw InputError("faces do not close up around vertex " + std::to_string(v));
            cur = it->second;
        } while (cur != start && rot[idx(v)].size() <= nx.size());
        if (rot[idx(v)].size() != nx.size())
            throw InputError("faces around vertex " + std::to_string(v) + " do not form one cycle");
    }
    std::vector<Edge> list(edges.begin(), edges.end());
    return PlanarGraph::from_edges(n, list, std::move(rot));
}

int find_face(const FaceSet& faces, std::vector<Vertex> face) {
    std::sort(face.begin(), face.end());
    for (int f = 0; f < faces.size(); ++f) {
        std::vector<Vertex> s = faces.faces[idx(f)];
        std::sort(s.begin(), s.end());
        if (s == face) return f;
    }
    return -1;
}

namespace {

EmbeddedTriangulation embed(int n, const std::vector<std::vector<Vertex>>& faces, const std::vector<Vertex>& outer) {
    EmbeddedTriangulation t;
    t.graph = graph_from_faces(n, faces);
    t.outer_face = find_face(trace_faces(t.graph), outer);
    return t;
}

}  // namespace

EmbeddedTriangulation tetrahedron() {
    return embed(4, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {0, 2, 1}}, {0, 1, 2});
}

EmbeddedTriangulation wheel(int k) {
    if (k < 3) throw InputError("wheel needs at least 3 rim vertices");
    std::vector<std::vector<Vertex>> faces;
    std::vector<Vertex> rim;
    for (int i = 1; i <= k; ++i) {
        faces.push_back({i, i % k + 1, 0});
        rim.push_back(i);
    }
    std::vector<Vertex> outer(rim.rbegin(), rim.rend());
    faces.push_back(outer);
    return embed(k + 1, faces, rim);
}

EmbeddedTriangulation icosahedron() {
    std::vector<std::vector<Vertex>> faces;
    for (int i = 0; i < 5; ++i) {
        const Vertex u = 1 + i, u1 = 1 + (i + 1) % 5, l = 6 + i, l1 = 6 + (i + 1) % 5;
        faces.push_back({0, u, u1});
        faces.push_back({u, l, u1});
        faces.push_back({u1, l, l1});
        faces.push_back({11, l1, l});
    }
    return embed(12, faces, {0, 1, 2});
}

EmbeddedTriangulation random_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw InputError("random triangulation needs n >= 3");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> pts{{-1.5, -1.0}, {2.5, -1.0}, {0.5, 3.0}};
    for (int i = 3; i < n; ++i) pts.push_back({unit(rng), unit(rng)});

    std::vector<std::array<Vertex, 3>> tris;
    std::vector<char> alive;
    std::unordered_map<std::int64_t, int> owner;  // directed edge -> triangle
    auto key = [n](Vertex a, Vertex b) { return static_cast<std::int64_t>(a) * n + b; };
    auto add = [&](Vertex a, Vertex b, Vertex c) {
        const int t = static_cast<int>(tris.size());
        tris.push_back({a, b, c});
        alive.push_back(1);
        owner[key(a, b)] = t;
        owner[key(b, c)] = t;
        owner[key(c, a)] = t;
        return t;
    };
    auto kill = [&](int t) {
        alive[idx(t)] = 0;
        const auto [a, b, c] = tris[idx(t)];
        for (auto e : {key(a, b), key(b, c), key(c, a)}) {
            auto it = owner.find(e);
            if (it != owner.end() && it->second == t) owner.erase(it);
        }
    };
    add(0, 1, 2);

    // edges u->v to legalise
    std::vector<Edge> stack;
    for (Vertex p = 3; p < n; ++p) {
        int host = -1;
        for (int t = static_cast<int>(tris.size()) - 1; t >= 0 && host < 0; --t) {
            if (!alive[idx(t)]) continue;
            const auto [a, b, c] = tris[idx(t)];
            if (orient(pts[idx(a)], pts[idx(b)], pts[idx(p)]) >= 0 &&
                orient(pts[idx(b)], pts[idx(c)], pts[idx(p)]) >= 0 &&
                orient(pts[idx(c)], pts[idx(a)], pts[idx(p)]) >= 0)
                host = t;
        }
        if (host < 0) throw VerificationError("point location failed");
        const auto [a, b, c] = tris[idx(host)];
        kill(host);
        add(a, b, p);
        add(b, c, p);
        add(c, a, p);
        stack = {{a, b}, {b, c}, {c, a}};
        while (!stack.empty()) {
            const auto [u, v] = stack.back();
            stack.pop_back();
            auto it = owner.find(key(v, u));
            if (it == owner.end()) continue;  // hull edge
            const int other = it->second;
            const auto& ot = tris[idx(other)];
            Vertex e = ot[0] + ot[1] + ot[2] - u - v;
            auto mine = owner.find(key(u, v));
            if (mine == owner.end()) continue;
            const auto& mt = tris[idx(mine->second)];
            const Vertex q = mt[0] + mt[1] + mt[2] - u - v;
            if (incircle(pts[idx(u)], pts[idx(v)], pts[idx(q)], pts[idx(e)]) <= 0) continue;
            kill(mine->second);
            kill(other);
            add(q, u, e);
            add(e, v, q);
            stack.emplace_back(u, e);
            stack.emplace_back(e, v);
        }
    }
    std::vector<std::vector<Vertex>> faces;
    for (std::size_t t = 0; t < tris.size(); ++t)
        if (alive[t]) faces.push_back({tris[t][0], tris[t][1], tris[t][2]});
    faces.push_back({0, 2, 1});
    return embed(n, faces, {0, 1, 2});
}

GridCoinInstance gen_grid_coin(int d) {
    if (d < 14 || d % 12 != 2) throw InputError("grid coin model needs d = 2 mod 12 and d >= 14");
    Pattern p = grid_pattern(d / 2);
    GridCoinInstance inst;
    inst.d = d;
    inst.model.discs = p.discs;
    inst.graph = PlanarGraph::from_edges(static_cast<int>(p.discs.size()), p.edges, rotation_by_angle(p.discs, p.edges));
    inst.large = p.large;
    return inst;
}

Certificate grid_scol_certificate(const GridCoinInstance& inst) {
    const VertexOrdering ord = koebe_ordering(inst.model);
    std::vector<char> is_large(idx(inst.graph.num_vertices()), 0);
    for (Vertex v : inst.large) is_large[idx(v)] = 1;
    Certificate cert;
    for (Vertex v : ord.order())
        if (!is_large[idx(v)]) {
            cert.root = v;
            break;
        }
    const std::vector<Vertex> reach = sreach_vertex(inst.graph, ord, inst.d, cert.root);
    for (Vertex w : inst.large) {
        if (!std::binary_search(reach.begin(), reach.end(), w))
            throw VerificationError("large disc " + std::to_string(w) + " is not strongly " +
                                    std::to_string(inst.d) + "-reachable from " + std::to_string(cert.root));
        cert.witnesses.push_back(w);
    }
    cert.bound = static_cast<int>(cert.witnesses.size());
    const int expected = ((inst.d - 2) / 6) * ((inst.d - 2) / 6);
    if (cert.bound != expected)
        throw VerificationError("expected " + std::to_string(expected) + " large discs, found " +
                                std::to_string(cert.bound));
    return cert;
}

MultigridInstance gen_multigrid_coin(int d) {
    if (d < 28 || d % 24 != 4) throw InputError("multigrid coin model needs d = 4 mod 24 and d >= 28");
    const int side = d / 4;
    const Pattern p = grid_pattern(side);
    const Point corner = p.discs[idx(p.bottom_right)].center;
    MultigridInstance inst;
    inst.d = d;
    std::vector<Disc>& discs = inst.model.discs;
    std::vector<Edge> edges;
    double x = 0.0, scale = 1.0;
    for (int i = 0; i < d / 2; ++i) {
        if (i > 0) {
            const double next = scale * d;
            x += scale + next;
            scale = next;
        }
        Gadget g;
        g.scale = scale;
        const Vertex base = static_cast<Vertex>(discs.size());
        for (const Disc& disc : p.discs) {
            const Point local = disc.center - corner;
            discs.push_back({{x + scale * local.x, 2.0 * scale + scale * local.y}, scale * disc.radius});
            g.grid.push_back(static_cast<Vertex>(discs.size()) - 1);
        }
        for (Vertex v : p.large) g.large.push_back(base + v);
        for (auto [u, v] : p.edges) edges.emplace_back(base + u, base + v);
        g.interface = static_cast<Vertex>(discs.size());
        discs.push_back({{x, 0.0}, scale});
        edges.emplace_back(base + p.bottom_right, g.interface);
        if (i > 0) edges.emplace_back(inst.gadgets.back().interface, g.interface);
        inst.gadgets.push_back(std::move(g));
    }
    inst.model.tolerances.scale = ToleranceScale::pair;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    inst.graph = PlanarGraph::from_edges(static_cast<int>(discs.size()), edges, rotation_by_angle(discs, edges));
    const ValidationReport rep = validate_model(inst.graph, inst.model);
    if (!rep.valid())
        throw VerificationError("multigrid placement overlaps (max overlap " + std::to_string(rep.max_overlap) + ")");
    return inst;
}

Certificate multigrid_wcol_certificate(const MultigridInstance& inst) {
    const VertexOrdering ord = koebe_ordering(inst.model);
    const ReachSets w = wreach_all(inst.graph, ord, inst.d);
    Certificate cert;
    cert.root = inst.gadgets.front().interface;
    const auto& reach = w.of(cert.root);
    for (const Gadget& g : inst.gadgets)
        for (Vertex v : g.large) {
            if (!std::binary_search(reach.begin(), reach.end(), v))
                throw VerificationError("large disc " + std::to_string(v) + " is not weakly " +
                                        std::to_string(inst.d) + "-reachable from the first interface");
            cert.witnesses.push_back(v);
        }
    cert.bound = static_cast<int>(cert.witnesses.size());
    return cert;
}

PlanarGraph gen_square_grid(int d) {
    if (d < 2) throw InputError("square grid needs d >= 2");
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> rot(idx(d * d));
    auto id = [d](int r, int c) { return r * d + c; };
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            if (c + 1 < d) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < d) edges.emplace_back(id(r, c), id(r + 1, c));
            // counter-clockwise with rows growing upward: east, north, west, south
            auto& ro = rot[idx(id(r, c))];
            if (c + 1 < d) ro.push_back(id(r, c + 1));
            if (r + 1 < d) ro.push_back(id(r + 1, c));
            if (c > 0) ro.push_back(id(r, c - 1));
            if (r > 0) ro.push_back(id(r - 1, c));
        }
    return PlanarGraph::from_edges(d * d, edges, std::move(rot));
}

GridLowerCertificate grid_scol_lower_certificate(const PlanarGraph& grid, int d, const VertexOrdering& ord) {
    if (grid.num_vertices() != d * d) throw InputError("graph is not a d x d grid");
    std::vector<Vertex> minima(idx(d));
    for (int c = 0; c < d; ++c) {
        Vertex best = c;
        for (int r = 1; r < d; ++r)
            if (ord.less(r * d + c, best)) best = r * d + c;
        minima[idx(c)] = best;
    }
    int k = 0;
    for (int c = 1; c < d; ++c)
        if (ord.less(minima[idx(k)], minima[idx(c)])) k = c;
    GridLowerCertificate cert;
    cert.root = minima[idx(k)];
    std::vector<Vertex> column;
    for (int r = 0; r < d; ++r) column.push_back(r * d + k);
    std::vector<char> allowed(idx(d * d), 1);
    DisjointPaths family = vertex_disjoint_paths(grid, column, minima, allowed);
    if (family.value < d)
        throw VerificationError("found only " + std::to_string(family.value) + " disjoint column paths");

    const int budget = 3 * d - 2;
    const std::vector<Vertex> reach = sreach_vertex(grid, ord, budget, cert.root);
    for (const auto& path : family.paths) {
        if (static_cast<int>(path.size()) > 2 * d) continue;
        // first vertex from the column end that is below every column vertex
        Vertex w = -1;
        for (Vertex x : path)
            if (!ord.less(cert.root, x)) {
                w = x;
                break;
            }
        if (w < 0) throw VerificationError("path without a vertex below the column");
        if (!std::binary_search(reach.begin(), reach.end(), w))
            throw VerificationError("witness " + std::to_string(w) + " not in SReach_" + std::to_string(budget));
        cert.witnesses.push_back(w);
        cert.paths.push_back(path);
    }
    cert.count = static_cast<int>(cert.witnesses.size());
    return cert;
}

}  // namespace koebe
