#include "koebe/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include <Eigen/SparseLU>

#include "koebe/errors.hpp"

namespace koebe {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double corner_angle(double rv, double ru, double rw) {
    const double a = rv + ru, b = rv + rw, c = ru + rw;
    const double cosine = (a * a + b * b - c * c) / (2.0 * a * b);
    return std::acos(std::clamp(cosine, -1.0, 1.0));
}

double max_defect(const PlanarGraph& g, std::span<const double> radii, std::span<const Vertex> interior) {
    double worst = 0.0;
    for (Vertex v : interior) worst = std::max(worst, std::abs(angle_sum(g, radii, v) - 2.0 * std::numbers::pi));
    return worst;
}

// Newton iteration on log radii of the interior vertices. Stops at `target`,
// when a step (with halving) no longer lowers the residual, or after
// max_steps. Returns the number of steps taken.
int newton_polish(const PlanarGraph& g, std::vector<double>& radii, std::span<const Vertex> interior, double target,
                  int max_steps) {
    const int m = static_cast<int>(interior.size());
    std::vector<int> slot(radii.size(), -1);
    for (int i = 0; i < m; ++i) slot[idx(interior[idx(i)])] = i;

    double worst = max_defect(g, radii, interior);
    int steps = 0;
    std::vector<double> trial(radii.size());
    while (worst > target && steps < max_steps) {
        std::vector<Eigen::Triplet<double>> entries;
        Eigen::VectorXd rhs(m);
        for (int i = 0; i < m; ++i) {
            const Vertex v = interior[idx(i)];
            auto rot = g.rotation(v);
            const std::size_t k = rot.size();
            double theta = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                const Vertex u = rot[j], w = rot[(j + 1) % k];
                const double rv = radii[idx(v)], ru = radii[idx(u)], rw = radii[idx(w)];
                const double a = rv + ru, b = rv + rw, c = ru + rw;
                const double f = std::clamp((a * a + b * b - c * c) / (2.0 * a * b), -1.0, 1.0);
                const double alpha = std::acos(f);
                theta += alpha;
                const double sin_alpha = std::max(std::sin(alpha), 1e-300);
                const double da = -((a * a - b * b + c * c) / (2.0 * a * a * b)) / sin_alpha;
                const double db = -((b * b - a * a + c * c) / (2.0 * a * b * b)) / sin_alpha;
                const double dc = (c / (a * b)) / sin_alpha;
                // derivatives with respect to log radii
                entries.emplace_back(i, i, (da + db) * rv);
                if (slot[idx(u)] >= 0) entries.emplace_back(i, slot[idx(u)], (da + dc) * ru);
                if (slot[idx(w)] >= 0) entries.emplace_back(i, slot[idx(w)], (db + dc) * rw);
            }
            rhs[i] = 2.0 * std::numbers::pi - theta;
        }
        Eigen::SparseMatrix<double> jac(m, m);
        jac.setFromTriplets(entries.begin(), entries.end());
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
        lu.compute(jac);
        if (lu.info() != Eigen::Success) break;
        const Eigen::VectorXd step = lu.solve(rhs);
        if (lu.info() != Eigen::Success || !step.allFinite()) break;

        bool improved = false;
        for (double t = 1.0; t > 1e-6; t *= 0.5) {
            trial = radii;
            for (int i = 0; i < m; ++i) trial[idx(interior[idx(i)])] *= std::exp(t * step[i]);
            const double w = max_defect(g, trial, interior);
            if (w < worst) {
                radii.swap(trial);
                worst = w;
                improved = true;
                break;
            }
        }
        ++steps;
        if (!improved) break;
    }
    return steps;
}

}  // namespace

PackingProblem make_packing_problem(const PlanarGraph& g, int outer_face, std::vector<double> boundary_radii) {
    PackingProblem p;
    p.faces = trace_faces(g);
    if (!is_triangulation(g, p.faces, outer_face)) throw InputError("graph is not a triangulation");
    const auto& outer = p.faces.faces[idx(outer_face)];
    std::vector<Vertex> sorted = outer;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("outer face is not a simple cycle");
    if (boundary_radii.empty()) boundary_radii.assign(outer.size(), 1.0);
    if (boundary_radii.size() != outer.size())
        throw InputError("expected " + std::to_string(outer.size()) + " boundary radii");
    for (double r : boundary_radii)
        if (!(r > 0.0) || !std::isfinite(r)) throw InputError("boundary radii must be positive");
    p.graph = g;
    p.outer_face = outer_face;
    p.boundary = outer;
    p.boundary_radii = std::move(boundary_radii);
    return p;
}

double angle_sum(const PlanarGraph& g, std::span<const double> radii, Vertex v) {
    auto rot = g.rotation(v);
    const std::size_t k = rot.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        sum += corner_angle(radii[idx(v)], radii[idx(rot[i])], radii[idx(rot[(i + 1) % k])]);
    return sum;
}

RadiiSolution solve_radii(const PackingProblem& p, const SolverConfig& cfg) {
    if (!(cfg.tolerance > 0.0)) throw InputError("solver tolerance must be positive");
    if (!(cfg.damping > 0.0 && cfg.damping <= 1.0)) throw InputError("damping must lie in (0, 1]");
    const PlanarGraph& g = p.graph;
    const int n = g.num_vertices();
    RadiiSolution sol;
    sol.radii.assign(idx(n), 1.0);
    std::vector<char> boundary(idx(n), 0);
    double start = 0.0;
    for (std::size_t i = 0; i < p.boundary.size(); ++i) {
        boundary[idx(p.boundary[i])] = 1;
        sol.radii[idx(p.boundary[i])] = p.boundary_radii[i];
        start += p.boundary_radii[i];
    }
    // start interior radii at the boundary scale
    start /= static_cast<double>(p.boundary.size());
    std::vector<Vertex> interior;
    for (Vertex v = 0; v < n; ++v)
        if (!boundary[idx(v)]) {
            interior.push_back(v);
            sol.radii[idx(v)] = start;
        }
    if (interior.empty()) return sol;

    double damping = cfg.damping;
    double previous = std::numeric_limits<double>::infinity();
    int growing = 0;
    bool try_newton = cfg.newton;
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        double worst = 0.0;
        for (Vertex v : interior) {
            const double theta = angle_sum(g, sol.radii, v);
            worst = std::max(worst, std::abs(theta - kTwoPi));
            const double k = static_cast<double>(g.degree(v));
            const double beta = std::sin(theta / (2.0 * k));
            const double delta = std::sin(std::numbers::pi / k);
            const double r = sol.radii[idx(v)];
            const double uniform = r * beta / (1.0 - beta);
            const double target = uniform * (1.0 - delta) / delta;
            sol.radii[idx(v)] = r + damping * (target - r);
        }
        sol.iterations = it;
        if (try_newton && worst <= cfg.newton_switch) {
            // Newton runs to rounding level; the layout amplifies whatever is left.
            const std::vector<double> saved = sol.radii;
            sol.iterations += newton_polish(g, sol.radii, interior, 0.0, 50);
            const double exact = max_defect(g, sol.radii, interior);
            if (exact <= cfg.tolerance) {
                sol.max_angle_defect = exact;
                return sol;
            }
            try_newton = false;
            if (!(exact < worst)) sol.radii = saved;
        }
        if (worst <= cfg.tolerance) {
            const double exact = max_defect(g, sol.radii, interior);
            sol.max_angle_defect = exact;
            if (exact <= cfg.tolerance) return sol;
        }
        growing = worst > previous ? growing + 1 : 0;
        previous = worst;
        if (growing >= 10) {
            damping *= 0.5;
            growing = 0;
        }
    }
    const double exact = max_defect(g, sol.radii, interior);
    throw ConvergenceError("radius iteration did not converge in " + std::to_string(cfg.max_iterations) +
                           " sweeps (max angle defect " + std::to_string(exact) + ")");
}

std::vector<Point> layout(const PackingProblem& p, std::span<const double> radii) {
    const PlanarGraph& g = p.graph;
    const int n = g.num_vertices();
    std::vector<Point> centers(idx(n));
    std::vector<char> placed(idx(n), 0);
    // c sits at distance r_a + r_c from a and r_b + r_c from b, on the right of a->b.
    auto third = [&](Vertex a, Vertex b, Vertex c) {
        const Point A = centers[idx(a)], B = centers[idx(b)];
        const double dab = distance(A, B);
        const double la = radii[idx(a)] + radii[idx(c)];
        const double lb = radii[idx(b)] + radii[idx(c)];
        const double cosine = std::clamp((dab * dab + la * la - lb * lb) / (2.0 * dab * la), -1.0, 1.0);
        const double alpha = -std::acos(cosine);
        const Point u = (1.0 / dab) * (B - A);
        const Point dir{u.x * std::cos(alpha) - u.y * std::sin(alpha), u.x * std::sin(alpha) + u.y * std::cos(alpha)};
        return A + la * dir;
    };

    // The outer face is traced in the opposite sense to the interior faces,
    // so with b0->b1 along +x every interior face lies above the axis when
    // interior faces are completed on the right of their traced edges.
    std::queue<Vertex> fresh;
    const Vertex b0 = p.boundary[0], b1 = p.boundary[1];
    centers[idx(b0)] = {0.0, 0.0};
    centers[idx(b1)] = {radii[idx(b0)] + radii[idx(b1)], 0.0};
    placed[idx(b0)] = placed[idx(b1)] = 1;
    fresh.push(b0);
    fresh.push(b1);

    int count = 2;
    while (!fresh.empty()) {
        const Vertex v = fresh.front();
        fresh.pop();
        for (Vertex w : g.rotation(v)) {
            const int f = p.faces.face_of(v, w);
            if (f < 0) throw InputError("face traversal inconsistency at edge (" + std::to_string(v) + "," +
                                        std::to_string(w) + ")");
            if (f == p.outer_face) continue;
            const auto& face = p.faces.faces[idx(f)];
            int missing = -1, unplaced = 0;
            for (int i = 0; i < 3; ++i)
                if (!placed[idx(face[idx(i)])]) {
                    missing = i;
                    ++unplaced;
                }
            if (unplaced != 1) continue;
            const Vertex c = face[idx(missing)];
            const Vertex a = face[idx((missing + 1) % 3)];
            const Vertex b = face[idx((missing + 2) % 3)];
            centers[idx(c)] = third(a, b, c);
            placed[idx(c)] = 1;
            ++count;
            fresh.push(c);
        }
    }
    if (count != n) throw InputError("face traversal did not reach every vertex");
    return centers;
}

PackingSolution solve_packing(const PackingProblem& p, const SolverConfig& cfg) {
    RadiiSolution rs = solve_radii(p, cfg);
    PackingSolution sol;
    sol.centers = layout(p, rs.radii);
    sol.max_angle_defect = rs.max_angle_defect;
    sol.iterations = rs.iterations;
    double mean = 0.0;
    for (double r : rs.radii) mean += r;
    mean /= static_cast<double>(std::max<std::size_t>(1, rs.radii.size()));
    for (auto [u, v] : p.graph.edges()) {
        const double defect =
            std::abs(distance(sol.centers[idx(u)], sol.centers[idx(v)]) - (rs.radii[idx(u)] + rs.radii[idx(v)]));
        sol.max_tangency_defect = std::max(sol.max_tangency_defect, defect / mean);
    }
    sol.radii = std::move(rs.radii);
    return sol;
}

CoinModel pack(const PlanarGraph& g, int outer_face, const SolverConfig& cfg, PackingSolution* details) {
    PackingProblem p = make_packing_problem(g, outer_face);
    PackingSolution sol = solve_packing(p, cfg);
    CoinModel m;
    for (Vertex v = 0; v < g.num_vertices(); ++v) m.discs.push_back({sol.centers[idx(v)], sol.radii[idx(v)]});
    ValidationReport rep = validate_model(g, m);
    if (!rep.valid())
        throw ConvergenceError("packed model fails validation (max overlap " + std::to_string(rep.max_overlap) +
                               ", max tangency defect " + std::to_string(rep.max_tangency_defect) + ")");
    if (details) *details = std::move(sol);
    return m;
}

Augmentation augment_to_triangulation(const PlanarGraph& g) {
    FaceSet fs = trace_faces(g);
    const int n = g.num_vertices();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::vector<std::vector<Vertex>> rot = *g.rotation_system();
    int next = n;
    int outer = -1;
    std::vector<int> long_faces;
    for (int f = 0; f < fs.size(); ++f) {
        const auto& face = fs.faces[idx(f)];
        if (face.size() < 3) throw InputError("face of length < 3; graph must be 2-connected");
        std::vector<Vertex> sorted = face;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("face repeats a vertex; graph must be 2-connected");
        if (face.size() > 3) long_faces.push_back(f);
    }
    for (int f : long_faces) {
        const auto& face = fs.faces[idx(f)];
        const Vertex hub = next++;
        rot.emplace_back();
        // walking the face u->w, w's next rotation entry after u is the next face vertex;
        // the hub goes between u and that successor in w's rotation
        const std::size_t k = face.size();
        for (std::size_t i = 0; i < k; ++i) {
            const Vertex u = face[i];
            const Vertex w = face[(i + 1) % k];
            auto& rw = rot[idx(w)];
            auto pos = std::find(rw.begin(), rw.end(), u);
            rw.insert(pos + 1, hub);
            edges.emplace_back(w, hub);
        }
        // hub rotation: reverse of face order keeps the orientation consistent
        for (std::size_t i = k; i-- > 0;) rot[idx(hub)].push_back(face[(i + 1) % k]);
    }
    Augmentation aug;
    aug.original_vertices = n;
    aug.triangulation = PlanarGraph::from_edges(next, edges, std::move(rot));
    FaceSet tri = trace_faces(aug.triangulation);
    for (int f = 0; f < tri.size() && outer < 0; ++f)
        if (tri.faces[idx(f)].size() == 3) outer = f;
    aug.outer_face = outer;
    return aug;
}

CoinModel pack_planar(const PlanarGraph& g, const SolverConfig& cfg) {
    Augmentation aug = augment_to_triangulation(g);
    CoinModel full = pack(aug.triangulation, aug.outer_face, cfg);
    CoinModel m;
    m.tolerances = full.tolerances;
    m.discs.assign(full.discs.begin(), full.discs.begin() + aug.original_vertices);
    return m;
}

}  // namespace koebe
