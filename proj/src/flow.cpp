#include "koebe/flow.hpp"

#include <algorithm>
#include <queue>

namespace koebe {

namespace {

// Unit-capacity Dinic on the split graph: vertex v becomes in = 2v, out = 2v+1.
class UnitFlow {
public:
    explicit UnitFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

    void add_arc(int from, int to) {
        arcs_.push_back({to, head_[static_cast<std::size_t>(from)], 1});
        head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
        head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    int run(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            it_ = head_;
            while (flow < limit && dfs(s, t)) ++flow;
        }
        return flow;
    }

    struct Arc {
        int to;
        int next;
        int cap;
    };
    const std::vector<int>& head() const { return head_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

private:
    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        level_[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
                const auto& arc = arcs_[static_cast<std::size_t>(a)];
                if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
                    level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(x)] + 1;
                    q.push(arc.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(t)] >= 0;
    }

    bool dfs(int x, int t) {
        if (x == t) return true;
        for (int& a = it_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
            auto& arc = arcs_[static_cast<std::size_t>(a)];
            if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] == level_[static_cast<std::size_t>(x)] + 1 &&
                dfs(arc.to, t)) {
                arc.cap -= 1;
                arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
                return true;
            }
        }
        return false;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> it_;
};

}  // namespace

DisjointPaths vertex_disjoint_paths(const PlanarGraph& g, std::span<const Vertex> sources,
                                    std::span<const Vertex> sinks, std::span<const char> allowed, int limit) {
    const int n = g.num_vertices();
    const int source = 2 * n;
    const int sink = 2 * n + 1;
    std::vector<char> is_sink(static_cast<std::size_t>(n), 0);
    for (Vertex t : sinks)
        if (allowed[static_cast<std::size_t>(t)]) is_sink[static_cast<std::size_t>(t)] = 1;

    UnitFlow net(2 * n + 2);
    for (Vertex v = 0; v < n; ++v) {
        if (!allowed[static_cast<std::size_t>(v)]) continue;
        net.add_arc(2 * v, 2 * v + 1);
        if (is_sink[static_cast<std::size_t>(v)]) {
            net.add_arc(2 * v + 1, sink);
            continue;
        }
        for (Vertex w : g.neighbors(v))
            if (allowed[static_cast<std::size_t>(w)]) net.add_arc(2 * v + 1, 2 * w);
    }
    std::vector<char> is_source(static_cast<std::size_t>(n), 0);
    for (Vertex s : sources) {
        if (!allowed[static_cast<std::size_t>(s)] || is_source[static_cast<std::size_t>(s)]) continue;
        is_source[static_cast<std::size_t>(s)] = 1;
        net.add_arc(source, 2 * s);
    }

    DisjointPaths result;
    result.value = net.run(source, sink, limit);

    // Decompose: every saturated forward arc out of a vertex carries flow.
    const auto& arcs = net.arcs();
    const auto& head = net.head();
    auto flow_successor = [&](int node) {
        for (int a = head[static_cast<std::size_t>(node)]; a != -1; a = arcs[static_cast<std::size_t>(a)].next) {
            if ((a & 1) == 0 && arcs[static_cast<std::size_t>(a)].cap == 0) return arcs[static_cast<std::size_t>(a)].to;
        }
        return -1;
    };
    for (int a = head[static_cast<std::size_t>(source)]; a != -1; a = arcs[static_cast<std::size_t>(a)].next) {
        if ((a & 1) != 0 || arcs[static_cast<std::size_t>(a)].cap != 0) continue;
        std::vector<Vertex> path;
        int node = arcs[static_cast<std::size_t>(a)].to;
        while (node != sink) {
            const Vertex v = node / 2;
            path.push_back(v);
            node = flow_successor(2 * v + 1);
        }
        result.paths.push_back(std::move(path));
    }
    return result;
}

}  // namespace koebe
