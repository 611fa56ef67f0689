#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "koebe/graph.hpp"

namespace koebe {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Point&, const Point&) = default;
};

double norm(Point p);
double distance(Point a, Point b);

struct Disc {
    Point center;
    double radius = 1.0;

    friend bool operator==(const Disc&, const Disc&) = default;
};

/// How residuals are made dimensionless before comparing with tolerances.
enum class ToleranceScale {
    mean_radius,  ///< divide by the mean radius of the whole model
    pair,         ///< divide by the mean radius of the two discs involved
};

struct ToleranceConfig {
    double overlap = 1e-8;
    double tangent = 1e-8;
    /// Radii within this relative difference count as equal for ordering.
    double tie = 1e-9;
    ToleranceScale scale = ToleranceScale::mean_radius;
};

/// Disc per vertex, indexed by vertex id.
struct CoinModel {
    std::vector<Disc> discs;
    ToleranceConfig tolerances;

    int size() const { return static_cast<int>(discs.size()); }
    const Disc& operator[](Vertex v) const { return discs[static_cast<std::size_t>(v)]; }
    double mean_radius() const;
};

struct ModelViolation {
    enum class Kind { overlap, tangency };
    Kind kind;
    Vertex u;
    Vertex v;
    /// Scaled residual: overlap depth, or |distance - (r_u + r_v)|.
    double residual;
};

struct ValidationReport {
    std::vector<ModelViolation> violations;
    double max_overlap = 0.0;
    double max_tangency_defect = 0.0;
    bool valid() const { return violations.empty(); }
};

/// Checks pairwise interior disjointness and tangency along every edge.
ValidationReport validate_model(const PlanarGraph& g, const CoinModel& m);

/// Tangency graph of the model (tolerance taken from m.tolerances), with the
/// rotation given by counter-clockwise angular order around each centre.
PlanarGraph contact_graph(const CoinModel& m);

/// Vertices by non-increasing radius; radii equal within the relative tie
/// tolerance are ordered by ascending id.
VertexOrdering koebe_ordering(const CoinModel& m);

/// Similarity transform mapping D(u) to the unit disc at the origin.
CoinModel normalize(const CoinModel& m, Vertex u);
/// True if D(u) is the unit disc at the origin up to `tol`.
bool is_normalized_at(const CoinModel& m, Vertex u, double tol = 1e-9);

/// Disc of radius rho inside d that touches d's boundary at x (the image of d
/// under the homothety centred at x with ratio rho / r).
Disc inner_tangent_disc(const Disc& d, Point x, double rho, double tangent_tol = 1e-8);

/// Contact point of two externally tangent discs (on the segment between the
/// centres, at distance r_a from a's centre).
Point contact_point(const Disc& a, const Disc& b);

struct SvgOptions {
    std::optional<VertexOrdering> ordering;
    std::vector<Vertex> highlight;
    bool labels = false;
};

/// SVG document with one <circle> per disc. Deterministic for fixed input.
std::string render_svg(const CoinModel& m, const SvgOptions& opts = {});

}  // namespace koebe
