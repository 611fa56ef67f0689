#include "koebe/adm_lower.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "koebe/errors.hpp"

namespace koebe {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

char other(char c) { return c == 'W' ? 'E' : 'W'; }

Side south(char s) { return s == 'W' ? Side::SW : Side::SE; }
Side north(char s) { return s == 'W' ? Side::NW : Side::NE; }

// Cell of a grid in the canonical frame; transposed frames swap row and column.
struct Frame {
    const TreeGrid* grid;
    int m;
    bool transposed;

    Vertex at(int r, int c) const {
        if (transposed) std::swap(r, c);
        return grid->base + r * m + c;
    }
};

int position(const std::vector<Vertex>& side, Vertex v) {
    auto it = std::find(side.begin(), side.end(), v);
    if (it == side.end()) throw VerificationError("routing entry is not on the expected grid side");
    return static_cast<int>(it - side.begin());
}

void append_column(std::vector<Vertex>& path, const Frame& f, int col, int from_row, int to_row) {
    for (int r = from_row; r >= to_row; --r) path.push_back(f.at(r, col));
}

}  // namespace

bool AdmLowerInstance::grid_word(Vertex v, std::string& word) const {
    if (v < 0 || is_apex(v)) return false;
    word = grids[idx(v / (m * m))].word;
    return true;
}

std::string to_string(WitnessFamily::Kind k) {
    switch (k) {
        case WitnessFamily::Kind::P: return "P";
        case WitnessFamily::Kind::Q: return "Q";
        case WitnessFamily::Kind::trimmed: return "trimmed";
    }
    return "?";
}

AdmLowerInstance gen_adm_lower(int k) {
    if (k < 2) throw InputError("admissibility construction needs k >= 2");
    if (k > 6) throw InputError("admissibility construction is limited to k <= 6");
    AdmLowerInstance inst;
    inst.k = k;
    inst.m = 1 << k;
    const int m = inst.m;
    std::vector<std::string> words{""};
    for (std::size_t i = 0; i < words.size(); ++i)
        if (static_cast<int>(words[i].size()) + 1 < k) {
            words.push_back(words[i] + 'W');
            words.push_back(words[i] + 'E');
        }
    std::vector<Edge> edges;
    for (const std::string& w : words) {
        TreeGrid g;
        g.word = w;
        g.base = static_cast<Vertex>(inst.grids.size()) * m * m;
        for (int i = 0; i < m; ++i) {
            g.sides[static_cast<int>(Side::NW)].push_back(g.base + i * m);
            g.sides[static_cast<int>(Side::NE)].push_back(g.base + i);
            g.sides[static_cast<int>(Side::SE)].push_back(g.base + i * m + (m - 1));
            g.sides[static_cast<int>(Side::SW)].push_back(g.base + (m - 1) * m + i);
        }
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                if (c + 1 < m) edges.emplace_back(g.base + r * m + c, g.base + r * m + c + 1);
                if (r + 1 < m) edges.emplace_back(g.base + r * m + c, g.base + (r + 1) * m + c);
            }
        inst.grid_of[w] = static_cast<int>(inst.grids.size());
        inst.grids.push_back(std::move(g));
    }
    for (const std::string& w : words)
        for (char s : {'W', 'E'}) {
            const std::string child = w + s;
            if (inst.grid_of.count(child)) {
                const auto& from = inst.grid(w).side(south(s));
                const auto& to = inst.grid(child).side(north(other(s)));
                for (int i = 0; i < m; ++i) edges.emplace_back(std::min(from[idx(i)], to[idx(i)]), std::max(from[idx(i)], to[idx(i)]));
            } else {
                const Vertex apex = static_cast<Vertex>(inst.grids.size()) * m * m + static_cast<Vertex>(inst.apex.size());
                inst.apex[child] = apex;
                for (Vertex x : inst.grid(w).side(south(s))) edges.emplace_back(x, apex);
            }
        }
    // apex ids follow the order in which words were visited; renumber them
    // lexicographically (W before E) so ids do not depend on traversal order
    std::vector<std::string> leaves;
    for (auto& [u, v] : inst.apex) leaves.push_back(u);
    std::sort(leaves.begin(), leaves.end(), [](const std::string& a, const std::string& b) {
        std::string x = a, y = b;
        std::replace(x.begin(), x.end(), 'W', 'A');
        std::replace(y.begin(), y.end(), 'W', 'A');
        return x < y;
    });
    std::map<Vertex, Vertex> renumber;
    const Vertex first = static_cast<Vertex>(inst.grids.size()) * m * m;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        renumber[inst.apex[leaves[i]]] = first + static_cast<Vertex>(i);
        inst.apex[leaves[i]] = first + static_cast<Vertex>(i);
    }
    for (auto& [a, b] : edges)
        if (renumber.count(b)) b = renumber[b];
    const int n = first + static_cast<int>(leaves.size());
    inst.graph = PlanarGraph::from_edges(n, edges);
    return inst;
}

std::map<std::string, WitnessFamily> build_p_families(const AdmLowerInstance& inst) {
    const int k = inst.k, m = inst.m;
    std::map<std::string, WitnessFamily> fam;
    std::vector<std::string> words;
    for (const auto& g : inst.grids) words.push_back(g.word);
    std::sort(words.begin(), words.end(), [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    for (const std::string& w : words)
        for (char s : {'W', 'E'}) {
            WitnessFamily f;
            f.kind = WitnessFamily::Kind::P;
            f.w = w;
            f.s = std::string(1, s);
            const auto& exits = inst.grid(w).side(south(s));
            if (static_cast<int>(w.size()) == k - 1) {
                f.paths.push_back({inst.apex.at(w + s), exits.front()});
            } else {
                // Canonical frame of H_{ws}: the family continuing with s ends on
                // the bottom row and goes straight up; the other one ends on the
                // right column and turns up along nested L-shapes. Both leave
                // through the top row, which is the north side facing H_w.
                const std::string child = w + s;
                const Frame frame{&inst.grid(child), m, s == 'E'};
                const int h = 1 << (k - static_cast<int>(w.size()) - 2);
                const auto& top = inst.grid(child).side(north(other(s)));
                for (const auto& path : fam.at(child + s).paths) {
                    const int i = position(inst.grid(child).side(south(s)), path.back());
                    std::vector<Vertex> p = path;
                    append_column(p, frame, i, m - 2, 0);
                    p.push_back(exits[idx(position(top, p.back()))]);
                    f.paths.push_back(std::move(p));
                }
                for (const auto& path : fam.at(child + other(s)).paths) {
                    const int i = position(inst.grid(child).side(south(other(s))), path.back());
                    const int col = 2 * h - 1 - i;
                    std::vector<Vertex> p = path;
                    for (int c = m - 2; c >= col; --c) p.push_back(frame.at(i, c));
                    append_column(p, frame, col, i - 1, 0);
                    p.push_back(exits[idx(position(top, p.back()))]);
                    f.paths.push_back(std::move(p));
                }
            }
            fam[w + s] = std::move(f);
        }
    return fam;
}

std::map<std::string, WitnessFamily> build_witness_families(const AdmLowerInstance& inst) {
    const int k = inst.k, m = inst.m;
    const auto pfam = build_p_families(inst);
    std::map<std::string, WitnessFamily> result;
    for (const auto& [u, apex] : inst.apex) {
        std::vector<std::vector<Vertex>> open(idx((1 << k) - 1), std::vector<Vertex>{apex});
        std::vector<std::vector<Vertex>> done;
        for (int len = k - 1; len >= 0; --len) {
            const std::string w = u.substr(0, idx(len));
            const char c = u[idx(len)];
            const TreeGrid& grid = inst.grid(w);
            const Frame frame{&grid, m, c == 'E'};
            const int n1 = (1 << k) - (1 << (k - len));
            const int h = 1 << (k - len - 1);
            if (static_cast<int>(open.size()) != n1 + h) throw VerificationError("unexpected number of open paths");
            // main exits on N t with t opposite to the last symbol of w
            bool main_on_top = true;
            if (len > 0) {
                const Side exit = north(other(w.back()));
                main_on_top = (exit == Side::NE) != frame.transposed;
            }
            std::vector<std::vector<Vertex>> next;
            for (std::size_t j = 0; j < open.size(); ++j) {
                std::vector<Vertex> p = std::move(open[j]);
                int i;
                if (len == k - 1) {
                    i = static_cast<int>(j);
                } else {
                    const TreeGrid& child = inst.grid(w + c);
                    i = position(child.side(north(other(c))), p.back());
                }
                p.push_back(grid.side(south(c))[idx(i)]);
                if (i < n1) {
                    if (main_on_top) {
                        append_column(p, frame, i, m - 2, 0);
                    } else {
                        const int row = n1 - 1 - i;
                        append_column(p, frame, i, m - 2, row);
                        for (int col = i - 1; col >= 0; --col) p.push_back(frame.at(row, col));
                    }
                    next.push_back(std::move(p));
                } else {
                    const int q = i - n1;
                    append_column(p, frame, i, m - 2, q);
                    for (int col = i + 1; col < m; ++col) p.push_back(frame.at(q, col));
                    const WitnessFamily& sibling = pfam.at(w + other(c));
                    auto it = std::find_if(sibling.paths.begin(), sibling.paths.end(),
                                           [&](const std::vector<Vertex>& s) { return s.back() == p.back(); });
                    if (it == sibling.paths.end()) throw VerificationError("no sibling path at the extra exit");
                    p.insert(p.end(), it->rbegin() + 1, it->rend());
                    done.push_back(std::move(p));
                }
            }
            open = std::move(next);
        }
        WitnessFamily f;
        f.kind = WitnessFamily::Kind::Q;
        f.w = "";
        f.s = u;
        f.paths = std::move(done);
        std::sort(f.paths.begin(), f.paths.end());
        const WitnessReport rep = validate_witness(f, inst, inst.radius());
        if (!rep.ok()) throw VerificationError("family Q_" + u + ": " + rep.violations.front());
        result[u] = std::move(f);
    }
    return result;
}

WitnessReport validate_witness(const WitnessFamily& family, const AdmLowerInstance& inst, int d_cap) {
    WitnessReport rep;
    const int k = inst.k, m = inst.m;
    auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };
    const PlanarGraph& g = inst.graph;
    const bool shared_start = family.kind != WitnessFamily::Kind::P;

    std::set<Vertex> seen;
    for (std::size_t j = 0; j < family.paths.size(); ++j) {
        const auto& p = family.paths[j];
        const std::string tag = "path " + std::to_string(j) + ": ";
        if (p.empty()) {
            fail(tag + "empty");
            continue;
        }
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] < 0 || p[i] >= g.num_vertices() || !g.adjacent(p[i], p[i + 1])) {
                fail(tag + "consecutive vertices not adjacent");
                break;
            }
        std::set<Vertex> own(p.begin(), p.end());
        if (own.size() != p.size()) fail(tag + "repeats a vertex");
        if (static_cast<int>(p.size()) - 1 > d_cap) fail(tag + "longer than " + std::to_string(d_cap));
        // disjointness
        for (std::size_t i = shared_start ? 1 : 0; i < p.size(); ++i)
            if (!seen.insert(p[i]).second) fail(tag + "shares vertex " + std::to_string(p[i]));
        if (shared_start && p.front() != family.paths.front().front()) fail(tag + "does not start at the common vertex");
        // straightness
        std::map<std::string, std::pair<int, int>> span;  // word -> (first, last) index
        std::map<std::string, int> count;
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::string word;
            if (!inst.grid_word(p[i], word)) {
                if (i != 0 && i + 1 != p.size()) fail(tag + "passes through an apex");
                continue;
            }
            auto [it, fresh] = span.emplace(word, std::make_pair(static_cast<int>(i), static_cast<int>(i)));
            if (!fresh) it->second.second = static_cast<int>(i);
            ++count[word];
        }
        for (const auto& [word, range] : span) {
            if (range.second - range.first + 1 != count[word]) fail(tag + "enters grid '" + word + "' twice");
            if (range.second - range.first > 2 * m - 2)
                fail(tag + "segment of length " + std::to_string(range.second - range.first) + " in grid '" + word + "'");
        }
    }
    // endpoint contracts
    if (family.kind == WitnessFamily::Kind::P) {
        const std::string ws = family.w + family.s;
        const int size = 1 << (k - static_cast<int>(family.w.size()) - 1);
        if (static_cast<int>(family.paths.size()) != size)
            fail("family has " + std::to_string(family.paths.size()) + " paths, expected " + std::to_string(size));
        const auto& side = inst.grid(family.w).side(south(family.s[0]));
        for (const auto& p : family.paths) {
            if (p.empty()) continue;
            bool start_ok = false;
            for (const auto& [u, v] : inst.apex)
                if (v == p.front() && u.rfind(ws, 0) == 0) start_ok = true;
            if (!start_ok) fail("path does not start at an apex below " + ws);
            auto it = std::find(side.begin(), side.end(), p.back());
            if (it == side.end() || it - side.begin() >= size) fail("path does not end among the first side vertices");
            for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                std::string word;
                if (inst.grid_word(p[i], word) && word.rfind(ws, 0) != 0) fail("internal vertex outside the subtree");
            }
        }
    } else if (family.kind == WitnessFamily::Kind::Q) {
        const std::string& u = family.s;
        const std::string& w = family.w;
        if (static_cast<int>(family.paths.size()) != (1 << k) - 1)
            fail("family has " + std::to_string(family.paths.size()) + " paths, expected " +
                 std::to_string((1 << k) - 1));
        std::set<Vertex> allowed;
        const int n1 = (1 << k) - (1 << (k - static_cast<int>(w.size())));
        if (!w.empty()) {
            const auto& side = inst.grid(w).side(north(other(w.back())));
            allowed.insert(side.begin(), side.begin() + n1);
        }
        for (const auto& [u2, v] : inst.apex)
            if (u2 != u && u2.rfind(w, 0) == 0) allowed.insert(v);
        for (const auto& p : family.paths) {
            if (p.empty()) continue;
            if (p.front() != inst.apex.at(u)) fail("path does not start at v_" + u);
            if (!allowed.count(p.back())) fail("path ends outside I_{w,u}");
        }
    }
    return rep;
}

AdmissibilityCertificate trim_witness(const std::map<std::string, WitnessFamily>& families,
                                      const AdmLowerInstance& inst, const VertexOrdering& ord) {
    std::string best;
    for (const auto& [u, v] : inst.apex)
        if (best.empty() || ord.rank(v) > ord.rank(inst.apex.at(best))) best = u;
    const Vertex v = inst.apex.at(best);
    AdmissibilityCertificate cert;
    cert.v = v;
    cert.d = inst.radius();
    for (const auto& path : families.at(best).paths) {
        std::vector<Vertex> cut{v};
        for (std::size_t i = 1; i < path.size(); ++i) {
            cut.push_back(path[i]);
            if (ord.rank(path[i]) < ord.rank(v)) break;
        }
        if (ord.rank(cut.back()) >= ord.rank(v)) throw VerificationError("path never drops below the top apex");
        cert.paths.push_back(std::move(cut));
    }
    cert.value = static_cast<int>(cert.paths.size());
    cert.upper = cert.value;
    if (auto err = check_adm_certificate(inst.graph, ord, cert))
        throw VerificationError("trimmed family invalid: " + *err);
    return cert;
}

}  // namespace koebe
