#include "koebe/coins.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "koebe/errors.hpp"

namespace koebe {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

void check_discs(const CoinModel& m) {
    for (int v = 0; v < m.size(); ++v) {
        const Disc& d = m[v];
        if (!(d.radius > 0.0) || !std::isfinite(d.radius) || !std::isfinite(d.center.x) ||
            !std::isfinite(d.center.y))
            throw InputError("disc " + std::to_string(v) + " has a non-positive radius or non-finite data");
    }
}

double pair_scale(const CoinModel& m, Vertex u, Vertex v, double mean) {
    return m.tolerances.scale == ToleranceScale::pair ? 0.5 * (m[u].radius + m[v].radius) : mean;
}

// Calls f(u, v) (u < v) for every pair whose x-extents come within the
// tolerance slack of each other. Sweep over left endpoints.
template <class F>
void for_each_close_pair(const CoinModel& m, double slack_factor, double mean, F&& f) {
    std::vector<int> order(idx(m.size()));
    std::iota(order.begin(), order.end(), 0);
    auto left = [&](int v) { return m[v].center.x - m[v].radius; };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return left(a) < left(b) || (left(a) == left(b) && a < b); });
    double max_r = 0.0;
    for (const Disc& d : m.discs) max_r = std::max(max_r, d.radius);
    const double slack = slack_factor * (m.tolerances.scale == ToleranceScale::pair ? max_r : mean);
    std::vector<int> active;
    for (int v : order) {
        const double lv = left(v);
        std::erase_if(active, [&](int u) { return m[u].center.x + m[u].radius + slack < lv; });
        for (int u : active) f(std::min(u, v), std::max(u, v));
        active.push_back(v);
    }
}

}  // namespace

double norm(Point p) { return std::hypot(p.x, p.y); }
double distance(Point a, Point b) { return norm(a - b); }

double CoinModel::mean_radius() const {
    if (discs.empty()) return 1.0;
    double s = 0.0;
    for (const Disc& d : discs) s += d.radius;
    return s / static_cast<double>(discs.size());
}

ValidationReport validate_model(const PlanarGraph& g, const CoinModel& m) {
    if (m.size() != g.num_vertices())
        throw InputError("coin model has " + std::to_string(m.size()) + " discs for " +
                         std::to_string(g.num_vertices()) + " vertices");
    check_discs(m);
    const double mean = m.mean_radius();
    const auto& tol = m.tolerances;
    ValidationReport rep;

    for_each_close_pair(m, 0.0, mean, [&](Vertex u, Vertex v) {
        const double gap = distance(m[u].center, m[v].center) - (m[u].radius + m[v].radius);
        const double overlap = -gap / pair_scale(m, u, v, mean);
        rep.max_overlap = std::max(rep.max_overlap, overlap);
        if (overlap > tol.overlap) rep.violations.push_back({ModelViolation::Kind::overlap, u, v, overlap});
    });
    for (auto [u, v] : g.edges()) {
        const double gap = distance(m[u].center, m[v].center) - (m[u].radius + m[v].radius);
        const double defect = std::abs(gap) / pair_scale(m, u, v, mean);
        rep.max_tangency_defect = std::max(rep.max_tangency_defect, defect);
        if (defect > tol.tangent) rep.violations.push_back({ModelViolation::Kind::tangency, u, v, defect});
    }
    return rep;
}

PlanarGraph contact_graph(const CoinModel& m) {
    check_discs(m);
    const double mean = m.mean_radius();
    std::vector<Edge> edges;
    for_each_close_pair(m, m.tolerances.tangent, mean, [&](Vertex u, Vertex v) {
        const double gap = distance(m[u].center, m[v].center) - (m[u].radius + m[v].radius);
        if (std::abs(gap) <= m.tolerances.tangent * pair_scale(m, u, v, mean)) edges.emplace_back(u, v);
    });
    std::vector<std::vector<Vertex>> rotation(idx(m.size()));
    for (auto [u, v] : edges) {
        rotation[idx(u)].push_back(v);
        rotation[idx(v)].push_back(u);
    }
    for (int v = 0; v < m.size(); ++v) {
        auto& r = rotation[idx(v)];
        auto angle = [&](Vertex w) {
            Point d = m[w].center - m[v].center;
            return std::atan2(d.y, d.x);
        };
        std::sort(r.begin(), r.end(), [&](Vertex a, Vertex b) {
            const double aa = angle(a), ab = angle(b);
            return aa < ab || (aa == ab && a < b);
        });
    }
    return PlanarGraph::from_edges(m.size(), edges, std::move(rotation));
}

VertexOrdering koebe_ordering(const CoinModel& m) {
    std::vector<Vertex> ids(idx(m.size()));
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(), [&](Vertex a, Vertex b) { return m[a].radius > m[b].radius; });
    // Clusters: a run stays open while radii are within the tie tolerance of
    // its largest member; inside a cluster ids ascend.
    std::size_t start = 0;
    while (start < ids.size()) {
        const double lead = m[ids[start]].radius;
        std::size_t end = start + 1;
        while (end < ids.size() && m[ids[end]].radius >= lead * (1.0 - m.tolerances.tie)) ++end;
        std::sort(ids.begin() + static_cast<std::ptrdiff_t>(start), ids.begin() + static_cast<std::ptrdiff_t>(end));
        start = end;
    }
    return VertexOrdering::from_ids(std::move(ids));
}

CoinModel normalize(const CoinModel& m, Vertex u) {
    if (u < 0 || u >= m.size()) throw InputError("normalization vertex has no disc");
    const Disc base = m[u];
    CoinModel out;
    out.tolerances = m.tolerances;
    out.discs.reserve(m.discs.size());
    const double s = 1.0 / base.radius;
    for (const Disc& d : m.discs) out.discs.push_back({s * (d.center - base.center), s * d.radius});
    out.discs[idx(u)] = {{0.0, 0.0}, 1.0};
    return out;
}

bool is_normalized_at(const CoinModel& m, Vertex u, double tol) {
    if (u < 0 || u >= m.size()) return false;
    return norm(m[u].center) <= tol && std::abs(m[u].radius - 1.0) <= tol;
}

Disc inner_tangent_disc(const Disc& d, Point x, double rho, double tangent_tol) {
    if (!(rho > 0.0)) throw InputError("target radius must be positive");
    if (rho > d.radius * (1.0 + 1e-12)) throw InputError("target radius exceeds the disc radius");
    if (std::abs(distance(x, d.center) - d.radius) > tangent_tol * d.radius)
        throw InputError("point is not on the disc boundary");
    rho = std::min(rho, d.radius);
    return {x + (rho / d.radius) * (d.center - x), rho};
}

Point contact_point(const Disc& a, const Disc& b) {
    const double dist = distance(a.center, b.center);
    if (dist == 0.0) return a.center;
    return a.center + (a.radius / dist) * (b.center - a.center);
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// Blue (largest discs) to orange (smallest) by ordering rank.
std::string rank_color(int rank, int n) {
    const double t = n > 1 ? static_cast<double>(rank) / (n - 1) : 0.0;
    const int r = static_cast<int>(std::lround(40 + t * (240 - 40)));
    const int g = static_cast<int>(std::lround(110 + t * (150 - 110)));
    const int b = static_cast<int>(std::lround(220 + t * (40 - 220)));
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

std::string render_svg(const CoinModel& m, const SvgOptions& opts) {
    double minx = 0, miny = 0, maxx = 1, maxy = 1;
    if (!m.discs.empty()) {
        minx = miny = std::numeric_limits<double>::infinity();
        maxx = maxy = -std::numeric_limits<double>::infinity();
        for (const Disc& d : m.discs) {
            minx = std::min(minx, d.center.x - d.radius);
            maxx = std::max(maxx, d.center.x + d.radius);
            // y is flipped so the picture keeps the mathematical orientation
            miny = std::min(miny, -d.center.y - d.radius);
            maxy = std::max(maxy, -d.center.y + d.radius);
        }
    }
    const double w = maxx - minx, h = maxy - miny;
    const double pad = 0.02 * std::max(w, h);
    const double stroke = 0.002 * std::max(w, h);
    std::set<Vertex> hl(opts.highlight.begin(), opts.highlight.end());

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"" << fmt(minx - pad)
       << ' ' << fmt(miny - pad) << ' ' << fmt(w + 2 * pad) << ' ' << fmt(h + 2 * pad) << "\">\n";
    os << "<rect x=\"" << fmt(minx - pad) << "\" y=\"" << fmt(miny - pad) << "\" width=\"" << fmt(w + 2 * pad)
       << "\" height=\"" << fmt(h + 2 * pad) << "\" fill=\"white\"/>\n";
    for (int v = 0; v < m.size(); ++v) {
        const Disc& d = m[v];
        std::string fill = "#d9d9d9";
        if (opts.ordering) fill = rank_color(opts.ordering->rank(v), m.size());
        if (hl.count(v)) fill = "#e0245e";
        os << "<circle id=\"v" << v << "\" cx=\"" << fmt(d.center.x) << "\" cy=\"" << fmt(-d.center.y) << "\" r=\""
           << fmt(d.radius) << "\" fill=\"" << fill << "\" fill-opacity=\"0.8\" stroke=\"black\" stroke-width=\""
           << fmt(stroke) << "\"/>\n";
        if (opts.labels)
            os << "<text x=\"" << fmt(d.center.x) << "\" y=\"" << fmt(-d.center.y) << "\" font-size=\""
               << fmt(d.radius * 0.6) << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << v
               << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace koebe
