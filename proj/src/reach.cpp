#include "koebe/reach.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>

#include "koebe/errors.hpp"
#include "koebe/flow.hpp"

namespace koebe {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

void check_inputs(const PlanarGraph& g, const VertexOrdering& ord, int d) {
    if (ord.size() != g.num_vertices()) throw InputError("ordering size does not match the graph");
    if (d < 0) throw InputError("radius d must be nonnegative");
}

}  // namespace

bool ReachSets::contains(Vertex v, Vertex u) const {
    const auto& s = of(v);
    return std::binary_search(s.begin(), s.end(), u);
}

int ReachSets::max_size() const {
    int best = 0;
    for (const auto& s : sets) best = std::max(best, static_cast<int>(s.size()));
    return best;
}

ReachSets wreach_all(const PlanarGraph& g, const VertexOrdering& ord, int d) {
    check_inputs(g, ord, d);
    const int n = g.num_vertices();
    ReachSets out{d, std::vector<std::vector<Vertex>>(idx(n))};
    std::vector<int> dist(idx(n), -1);
    std::vector<Vertex> touched;
    std::queue<Vertex> q;
    for (Vertex u : ord.order()) {
        const int ru = ord.rank(u);
        dist[idx(u)] = 0;
        touched.push_back(u);
        q.push(u);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            out.sets[idx(x)].push_back(u);
            if (dist[idx(x)] == d) continue;
            for (Vertex y : g.neighbors(x)) {
                if (dist[idx(y)] >= 0 || ord.rank(y) < ru) continue;
                dist[idx(y)] = dist[idx(x)] + 1;
                touched.push_back(y);
                q.push(y);
            }
        }
        for (Vertex t : touched) dist[idx(t)] = -1;
        touched.clear();
    }
    for (auto& s : out.sets) std::sort(s.begin(), s.end());
    return out;
}

std::vector<Vertex> sreach_vertex(const PlanarGraph& g, const VertexOrdering& ord, int d, Vertex v) {
    check_inputs(g, ord, d);
    std::vector<Vertex> result{v};
    if (d == 0) return result;
    const int rv = ord.rank(v);
    std::vector<int> dist(idx(g.num_vertices()), -1);
    std::vector<char> found(idx(g.num_vertices()), 0);
    std::queue<Vertex> q;
    dist[idx(v)] = 0;
    q.push(v);
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : g.neighbors(x)) {
            if (ord.rank(y) < rv) {
                if (!found[idx(y)]) {
                    found[idx(y)] = 1;
                    result.push_back(y);
                }
            } else if (dist[idx(y)] < 0 && y != v && dist[idx(x)] + 1 <= d - 1) {
                dist[idx(y)] = dist[idx(x)] + 1;
                q.push(y);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

ReachSets sreach_all(const PlanarGraph& g, const VertexOrdering& ord, int d) {
    check_inputs(g, ord, d);
    ReachSets out{d, {}};
    out.sets.reserve(idx(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) out.sets.push_back(sreach_vertex(g, ord, d, v));
    return out;
}

namespace {

bool is_simple_walk(const PlanarGraph& g, std::span<const Vertex> path) {
    if (path.empty()) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (path[i] < 0 || path[i] >= g.num_vertices() || path[i + 1] < 0 || path[i + 1] >= g.num_vertices())
            return false;
        if (!g.adjacent(path[i], path[i + 1])) return false;
    }
    std::vector<Vertex> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

bool is_weak_reachability_path(const PlanarGraph& g, const VertexOrdering& ord, std::span<const Vertex> path) {
    if (!is_simple_walk(g, path)) return false;
    const Vertex end = path.back();
    if (ord.rank(end) > ord.rank(path.front())) return false;
    return std::all_of(path.begin(), path.end(), [&](Vertex x) { return ord.rank(x) >= ord.rank(end); });
}

bool is_strong_reachability_path(const PlanarGraph& g, const VertexOrdering& ord, std::span<const Vertex> path) {
    if (!is_simple_walk(g, path)) return false;
    const Vertex start = path.front();
    if (ord.rank(path.back()) > ord.rank(start)) return false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (ord.rank(path[i]) <= ord.rank(start)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Admissibility

namespace {

class AdmSearch {
public:
    AdmSearch(const PlanarGraph& g, const VertexOrdering& ord, int d, Vertex v, const AdmOptions& opts)
        : g_(g), ord_(ord), d_(d), v_(v), opts_(opts), n_(g.num_vertices()) {
        const int rv = ord.rank(v);
        kind_.assign(idx(n_), Kind::none);
        for (Vertex x = 0; x < n_; ++x) {
            if (x == v) continue;
            kind_[idx(x)] = ord.rank(x) > rv ? Kind::high : Kind::low;
        }
        used_.assign(idx(n_), 0);
        used_[idx(v)] = 1;

        // Restrict to the ball reachable by paths that could still end in time:
        // high vertices at hop distance <= d-1 from v through high vertices.
        std::vector<int> dist(idx(n_), -1);
        std::queue<Vertex> q;
        dist[idx(v)] = 0;
        q.push(v);
        in_ball_.assign(idx(n_), 0);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : g.neighbors(x)) {
                if (dist[idx(y)] >= 0) continue;
                if (kind_[idx(y)] == Kind::low) {
                    in_ball_[idx(y)] = 1;
                    continue;
                }
                if (dist[idx(x)] + 1 > d - 1) continue;
                dist[idx(y)] = dist[idx(x)] + 1;
                in_ball_[idx(y)] = 1;
                q.push(y);
            }
        }

        for (Vertex y : g.neighbors(v)) {
            if (kind_[idx(y)] == Kind::low && (!opts.strict_length || d == 1)) direct_.push_back(y);
            if (kind_[idx(y)] == Kind::high && d >= 2) starters_.push_back(y);
        }
        for (Vertex y : direct_) used_[idx(y)] = 1;
    }

    AdmissibilityCertificate run() {
        AdmissibilityCertificate cert;
        cert.v = v_;
        cert.d = d_;
        for (Vertex y : direct_) cert.paths.push_back({v_, y});

        std::vector<std::vector<Vertex>> greedy = greedy_paths();
        upper_ = static_cast<int>(direct_.size()) + flow_bound(0);
        lower_ = static_cast<int>(direct_.size()) + static_cast<int>(greedy.size());

        if (opts_.mode == AdmMode::bounds || lower_ >= upper_) {
            for (auto& p : greedy) cert.paths.push_back(std::move(p));
            cert.value = lower_;
            cert.upper = upper_;
            cert.exact = lower_ >= upper_;
            cert.expansions = expansions_;
            return cert;
        }

        current_.reserve(starters_.size() + 1);
        best_ = static_cast<int>(greedy.size());
        best_family_ = std::move(greedy);
        target_ = upper_ - static_cast<int>(direct_.size());
        search(0, 0);
        for (auto& p : best_family_) cert.paths.push_back(std::move(p));
        cert.value = static_cast<int>(cert.paths.size());
        cert.upper = cert.value;
        cert.exact = true;
        cert.expansions = expansions_;
        return cert;
    }

private:
    enum class Kind : char { none, high, low };

    bool is_free_high(Vertex x) const { return kind_[idx(x)] == Kind::high && !used_[idx(x)] && in_ball_[idx(x)]; }
    bool is_free_low(Vertex x) const { return kind_[idx(x)] == Kind::low && !used_[idx(x)] && in_ball_[idx(x)]; }

    bool length_ok(int len) const { return opts_.strict_length ? len == d_ : len <= d_; }

    void tick() {
        if (++expansions_ > opts_.node_budget)
            throw ResourceError("admissibility search exceeded node budget of " + std::to_string(opts_.node_budget));
    }

    int flow_bound(std::size_t first_starter) const {
        std::vector<Vertex> sources;
        for (std::size_t i = first_starter; i < starters_.size(); ++i)
            if (!used_[idx(starters_[i])]) sources.push_back(starters_[i]);
        if (sources.empty()) return 0;
        std::vector<Vertex> sinks;
        std::vector<char> allowed(idx(n_), 0);
        for (Vertex x = 0; x < n_; ++x) {
            if (is_free_high(x)) allowed[idx(x)] = 1;
            if (is_free_low(x)) {
                allowed[idx(x)] = 1;
                sinks.push_back(x);
            }
        }
        return vertex_disjoint_paths(g_, sources, sinks, allowed, static_cast<int>(sources.size())).value;
    }

    // Multi-source BFS distances from free low vertices through free high ones.
    std::vector<int> distance_to_low() const {
        std::vector<int> dist(idx(n_), -1);
        std::queue<Vertex> q;
        for (Vertex x = 0; x < n_; ++x)
            if (is_free_low(x)) {
                dist[idx(x)] = 0;
                q.push(x);
            }
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : g_.neighbors(x)) {
                if (dist[idx(y)] >= 0 || !is_free_high(y)) continue;
                dist[idx(y)] = dist[idx(x)] + 1;
                q.push(y);
            }
        }
        return dist;
    }

    std::vector<std::vector<Vertex>> greedy_paths() {
        std::vector<std::vector<Vertex>> family;
        if (d_ < 2) return family;
        if (opts_.strict_length) {
            for (std::size_t i = 0; i < starters_.size(); ++i) {
                if (used_[idx(starters_[i])]) continue;
                std::vector<Vertex> path{v_, starters_[i]};
                used_[idx(starters_[i])] = 1;
                std::int64_t local = 0;
                if (strict_dfs(path, local)) {
                    for (std::size_t k = 1; k < path.size(); ++k) used_[idx(path[k])] = 1;
                    family.push_back(path);
                } else {
                    used_[idx(starters_[i])] = 0;
                }
            }
        } else {
            while (true) {
                std::vector<int> dist(idx(n_), -1);
                std::vector<Vertex> parent(idx(n_), -1);
                std::queue<Vertex> q;
                for (Vertex s : starters_) {
                    if (used_[idx(s)]) continue;
                    dist[idx(s)] = 1;
                    parent[idx(s)] = v_;
                    q.push(s);
                }
                Vertex hit = -1;
                while (!q.empty() && hit < 0) {
                    Vertex x = q.front();
                    q.pop();
                    for (Vertex y : g_.neighbors(x)) {
                        if (dist[idx(y)] >= 0 || used_[idx(y)] || y == v_) continue;
                        if (kind_[idx(y)] == Kind::low) {
                            parent[idx(y)] = x;
                            hit = y;
                            break;
                        }
                        if (dist[idx(x)] + 1 > d_ - 1) continue;
                        dist[idx(y)] = dist[idx(x)] + 1;
                        parent[idx(y)] = x;
                        q.push(y);
                    }
                }
                if (hit < 0) break;
                std::vector<Vertex> path;
                for (Vertex x = hit; x != v_; x = parent[idx(x)]) path.push_back(x);
                path.push_back(v_);
                std::reverse(path.begin(), path.end());
                for (std::size_t k = 1; k < path.size(); ++k) used_[idx(path[k])] = 1;
                family.push_back(std::move(path));
            }
        }
        // release greedy marks; the exact search starts from scratch
        std::vector<std::vector<Vertex>> copy = family;
        for (const auto& p : copy)
            for (std::size_t k = 1; k < p.size(); ++k) used_[idx(p[k])] = 0;
        return family;
    }

    // Depth-first search for one path of length exactly d (greedy helper).
    bool strict_dfs(std::vector<Vertex>& path, std::int64_t& local) {
        if (++local > 100000) return false;
        const int len = static_cast<int>(path.size()) - 1;
        const Vertex c = path.back();
        for (Vertex y : g_.neighbors(c)) {
            if (used_[idx(y)] || y == v_) continue;
            if (kind_[idx(y)] == Kind::low) {
                if (len + 1 == d_) {
                    path.push_back(y);
                    return true;
                }
                continue;
            }
            if (len + 1 > d_ - 1) continue;
            used_[idx(y)] = 1;
            path.push_back(y);
            if (strict_dfs(path, local)) {
                used_[idx(y)] = 0;
                return true;
            }
            path.pop_back();
            used_[idx(y)] = 0;
        }
        return false;
    }

    void search(std::size_t first_starter, int count) {
        tick();
        if (count > best_) {
            best_ = count;
            best_family_ = current_;
        }
        if (best_ >= target_) {
            done_ = true;
            return;
        }
        int remaining = 0;
        for (std::size_t i = first_starter; i < starters_.size(); ++i)
            if (!used_[idx(starters_[i])]) ++remaining;
        if (count + remaining <= best_) return;
        if (count + flow_bound(first_starter) <= best_) return;

        const std::vector<int> dist = distance_to_low();
        for (std::size_t i = first_starter; i < starters_.size(); ++i) {
            const Vertex x = starters_[i];
            if (used_[idx(x)]) continue;
            if (count + remaining <= best_) break;
            --remaining;
            if (dist[idx(x)] < 0 || dist[idx(x)] > d_ - 1) continue;
            used_[idx(x)] = 1;
            current_.push_back({v_, x});
            extend(dist, i, count);
            current_.pop_back();
            used_[idx(x)] = 0;
            if (done_) return;
        }
    }

    void extend(const std::vector<int>& dist, std::size_t starter, int count) {
        tick();
        auto& path = current_.back();
        const int len = static_cast<int>(path.size()) - 1;
        const Vertex c = path.back();
        for (Vertex y : g_.neighbors(c)) {
            if (used_[idx(y)]) continue;
            if (kind_[idx(y)] == Kind::low) {
                if (!length_ok(len + 1)) continue;
                used_[idx(y)] = 1;
                path.push_back(y);
                search(starter + 1, count + 1);
                current_.back().pop_back();
                used_[idx(y)] = 0;
            } else if (kind_[idx(y)] == Kind::high) {
                if (len + 1 > d_ - 1 || dist[idx(y)] < 0 || dist[idx(y)] > d_ - (len + 1)) continue;
                used_[idx(y)] = 1;
                path.push_back(y);
                extend(dist, starter, count);
                current_.back().pop_back();
                used_[idx(y)] = 0;
            }
            if (done_) return;
        }
    }

    const PlanarGraph& g_;
    const VertexOrdering& ord_;
    int d_;
    Vertex v_;
    AdmOptions opts_;
    int n_;
    std::vector<Kind> kind_;
    std::vector<char> used_;
    std::vector<char> in_ball_;
    std::vector<Vertex> direct_;
    std::vector<Vertex> starters_;
    std::int64_t expansions_ = 0;
    int upper_ = 0;
    int lower_ = 0;
    int best_ = 0;
    int target_ = 0;
    bool done_ = false;
    std::vector<std::vector<Vertex>> current_;
    std::vector<std::vector<Vertex>> best_family_;
};

}  // namespace

AdmissibilityCertificate adm_vertex(const PlanarGraph& g, const VertexOrdering& ord, int d, Vertex v,
                                    const AdmOptions& opts) {
    check_inputs(g, ord, d);
    if (v < 0 || v >= g.num_vertices()) throw InputError("vertex out of range");
    if (d == 0) {
        AdmissibilityCertificate empty;
        empty.v = v;
        empty.exact = opts.mode == AdmMode::exact;
        return empty;
    }
    return AdmSearch(g, ord, d, v, opts).run();
}

std::optional<std::string> check_adm_certificate(const PlanarGraph& g, const VertexOrdering& ord,
                                                 const AdmissibilityCertificate& cert, bool strict_length) {
    if (static_cast<int>(cert.paths.size()) != cert.value) return "value does not match path count";
    std::vector<char> seen(idx(g.num_vertices()), 0);
    for (std::size_t i = 0; i < cert.paths.size(); ++i) {
        const auto& p = cert.paths[i];
        const std::string tag = "path " + std::to_string(i) + ": ";
        if (p.size() < 2) return tag + "too short";
        if (p.front() != cert.v) return tag + "does not start at the root";
        const int len = static_cast<int>(p.size()) - 1;
        if (len > cert.d || (strict_length && len != cert.d)) return tag + "bad length " + std::to_string(len);
        if (!is_strong_reachability_path(g, ord, p)) return tag + "not a strong reachability path";
        if (ord.rank(p.back()) >= ord.rank(cert.v)) return tag + "endpoint not smaller than root";
        for (std::size_t k = 1; k < p.size(); ++k) {
            if (seen[idx(p[k])]) return tag + "shares vertex " + std::to_string(p[k]);
            seen[idx(p[k])] = 1;
        }
    }
    return std::nullopt;
}

MetricKind parse_metric_kind(const std::string& s) {
    if (s == "wcol") return MetricKind::wcol;
    if (s == "scol") return MetricKind::scol;
    if (s == "adm") return MetricKind::adm;
    throw InputError("unknown metric kind '" + s + "'");
}

std::string to_string(MetricKind k) {
    switch (k) {
        case MetricKind::wcol: return "wcol";
        case MetricKind::scol: return "scol";
        case MetricKind::adm: return "adm";
    }
    return "?";
}

MetricReport metric_of_ordering(const PlanarGraph& g, const VertexOrdering& ord, int d, MetricKind kind,
                                const AdmOptions& adm) {
    check_inputs(g, ord, d);
    MetricReport r;
    r.kind = kind;
    r.d = d;
    const int n = g.num_vertices();
    r.per_vertex.assign(idx(n), 0);
    if (kind == MetricKind::adm) {
        if (adm.mode == AdmMode::bounds) r.per_vertex_lower.assign(idx(n), 0);
        for (Vertex v = 0; v < n; ++v) {
            auto cert = adm_vertex(g, ord, d, v, adm);
            r.per_vertex[idx(v)] = adm.mode == AdmMode::bounds ? cert.upper : cert.value;
            if (adm.mode == AdmMode::bounds) r.per_vertex_lower[idx(v)] = cert.value;
        }
    } else {
        ReachSets rs = kind == MetricKind::wcol ? wreach_all(g, ord, d) : sreach_all(g, ord, d);
        for (Vertex v = 0; v < n; ++v) r.per_vertex[idx(v)] = static_cast<int>(rs.of(v).size());
    }
    for (Vertex v = 0; v < n; ++v) {
        if (r.argmax < 0 || r.per_vertex[idx(v)] > r.value) {
            r.value = r.per_vertex[idx(v)];
            r.argmax = v;
        }
    }
    return r;
}

MinMetricResult graph_min_metric(const PlanarGraph& g, int d, MetricKind kind, SearchStrategy strategy,
                                 std::uint64_t seed, int anneal_steps) {
    const int n = g.num_vertices();
    auto eval = [&](const std::vector<Vertex>& ids) {
        return metric_of_ordering(g, VertexOrdering::from_ids(ids), d, kind).value;
    };
    std::vector<Vertex> ids(idx(n));
    std::iota(ids.begin(), ids.end(), 0);

    if (strategy == SearchStrategy::exhaustive) {
        if (n > 10) throw InputError("exhaustive ordering search is limited to n <= 10");
        int best = eval(ids);
        std::vector<Vertex> best_ids = ids;
        while (std::next_permutation(ids.begin(), ids.end())) {
            int value = eval(ids);
            if (value < best) {
                best = value;
                best_ids = ids;
            }
        }
        return {best, VertexOrdering::from_ids(best_ids)};
    }

    std::mt19937_64 rng(seed);
    std::shuffle(ids.begin(), ids.end(), rng);
    int current = eval(ids);
    int best = current;
    std::vector<Vertex> best_ids = ids;
    if (n < 2) return {best, VertexOrdering::from_ids(best_ids)};
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int step = 0; step < anneal_steps; ++step) {
        const double temperature = 1.0 - 0.99 * step / std::max(1, anneal_steps - 1);
        int a = pick(rng);
        int b = pick(rng);
        if (a == b) continue;
        std::swap(ids[idx(a)], ids[idx(b)]);
        int value = eval(ids);
        if (value <= current || coin(rng) < std::exp((current - value) / temperature)) {
            current = value;
            if (value < best) {
                best = value;
                best_ids = ids;
            }
        } else {
            std::swap(ids[idx(a)], ids[idx(b)]);
        }
    }
    return {best, VertexOrdering::from_ids(best_ids)};
}

}  // namespace koebe
