#include "kconvex/polygon.hpp"

#include <cmath>
#include <numbers>

namespace kconvex {

namespace {

constexpr double kTurnTol = 1e-10;

// Orientation of the triple as a normalized determinant; positive for a
// counterclockwise (left) turn at b.
double turn_sign(const ModelPoint& a, const ModelPoint& b, const ModelPoint& c) {
    const Vec3& u = a.coords();
    const Vec3& v = b.coords();
    const Vec3& w = c.coords();
    const double det = u.t * (v.x * w.y - v.y * w.x) - u.x * (v.t * w.y - v.y * w.t) +
                       u.y * (v.t * w.x - v.x * w.t);
    const double k = a.scale();
    return det * k * k * k;  // scale-free
}

}  // namespace

ConvexPolygon ConvexPolygon::create(std::vector<ModelPoint> vertices) {
    auto p = try_create(std::move(vertices));
    if (!p) throw InvalidPolygonError("vertices do not form a strictly convex ccw polygon");
    return *p;
}

std::optional<ConvexPolygon> ConvexPolygon::try_create(std::vector<ModelPoint> vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 3) return std::nullopt;
    const double k = vertices.front().scale();
    for (const auto& v : vertices)
        if (v.scale() != k) return std::nullopt;

    for (int i = 0; i < n; ++i) {
        const ModelPoint& a = vertices[(i + n - 1) % n];
        const ModelPoint& b = vertices[i];
        const ModelPoint& c = vertices[(i + 1) % n];
        const double da = -k * k * mdot(a.coords(), b.coords());
        if (da < 1.0 + 1e-14) return std::nullopt;  // repeated vertex
        if (turn_sign(a, b, c) <= kTurnTol) return std::nullopt;
    }

    // Single winding about the centroid: bearings strictly increasing. This
    // rules out multiply wound all-left-turn cycles.
    Vec3 s{0, 0, 0};
    for (const auto& v : vertices) s = s + v.coords();
    const double n2 = -mdot(s, s);
    if (n2 <= 0.0) return std::nullopt;
    const ModelPoint c0 = ModelPoint::on_sheet(s * (1.0 / (k * std::sqrt(n2))), k);
    int wraps = 0;
    double prev = 0.0;
    for (int i = 0; i <= n; ++i) {
        const Vec3 d = log_direction(c0, vertices[i % n]);
        // Planar bearing of the tangent in the (x,y) chart at the centroid;
        // monotone for a single ccw winding.
        const double bearing = std::atan2(d.y, d.x);
        if (i > 0 && bearing <= prev) ++wraps;
        prev = bearing;
    }
    if (wraps != 1) return std::nullopt;

    return ConvexPolygon(std::move(vertices));
}

const ModelPoint& ConvexPolygon::vertex(int i) const {
    const int n = size();
    return vertices_[((i % n) + n) % n];
}

GeodesicLine ConvexPolygon::side_line(int i) const {
    // mcross orientation: positive on the left of vertex(i-1) -> vertex(i),
    // which is the interior for a ccw polygon.
    return GeodesicLine::through(vertex(i - 1), vertex(i));
}

ModelPoint ConvexPolygon::centroid() const {
    Vec3 s{0, 0, 0};
    for (const auto& v : vertices_) s = s + v.coords();
    const double k = scale();
    return ModelPoint::on_sheet(s * (1.0 / (k * std::sqrt(-mdot(s, s)))), k);
}

bool ConvexPolygon::contains(const ModelPoint& p, double tol) const {
    for (int i = 0; i < size(); ++i)
        if (distance_to_line(p, side_line(i)) < -tol) return false;
    return true;
}

std::vector<double> side_lengths(const ConvexPolygon& p) {
    std::vector<double> out(p.size());
    for (int i = 0; i < p.size(); ++i) out[i] = distance(p.vertex(i - 1), p.vertex(i));
    return out;
}

std::vector<double> interior_angles(const ConvexPolygon& p) {
    std::vector<double> out(p.size());
    for (int i = 0; i < p.size(); ++i)
        out[i] = angle_at(p.vertex(i), p.vertex(i - 1), p.vertex(i + 1));
    return out;
}

VertexCurvatureReport vertex_curvatures(const ConvexPolygon& p, double k1) {
    const auto len = side_lengths(p);
    const auto ang = interior_angles(p);
    const int n = p.size();
    VertexCurvatureReport rep;
    rep.per_vertex.resize(n);
    for (int i = 0; i < n; ++i) {
        VertexCurvature& vc = rep.per_vertex[i];
        vc.alpha = ang[i];
        vc.l_prev = len[i];
        vc.l_next = len[(i + 1) % n];
        const double excess = std::numbers::pi - vc.alpha;
        vc.kappa_a = 2.0 * excess / (vc.l_prev + vc.l_next);
        const double wsum =
            std::tanh(k1 * vc.l_prev / 2.0) / k1 + std::tanh(k1 * vc.l_next / 2.0) / k1;
        vc.kappa_b = excess / wsum;
    }
    return rep;
}

VertexCurvatureReport vertex_curvature_a(const ConvexPolygon& p) {
    return vertex_curvatures(p, p.scale());
}

VertexCurvatureReport vertex_curvature_b(const ConvexPolygon& p, double k1) {
    return vertex_curvatures(p, k1);
}

Theorem2HypothesisFlags check_theorem2_hypotheses(const ConvexPolygon& p,
                                                  const CurvatureBand& band,
                                                  double rho) {
    if (!(rho > 0.0)) throw std::domain_error("rho must be positive");
    Theorem2HypothesisFlags flags;
    flags.kappa_threshold =
        (std::numbers::pi / 2.0) * band.k1 / std::tanh(band.k1 * rho);
    const auto rep = vertex_curvature_a(p);
    flags.vertex_ok.resize(p.size());
    bool all = true;
    for (int i = 0; i < p.size(); ++i) {
        flags.vertex_ok[i] = rep.per_vertex[i].kappa_a >= flags.kappa_threshold;
        all = all && flags.vertex_ok[i];
    }
    // coth(k2 rho) >= k1/k2; always true in the degenerate band k2 = k1,
    // never true at k2 = 0 with finite rho (1/(k2 rho) -> inf dominates...
    // in fact the k2 -> 0 limit reads 1/rho >= k1).
    if (band.k2 > 0.0)
        flags.band_ok = 1.0 / std::tanh(band.k2 * rho) >= band.k1 / band.k2;
    else
        flags.band_ok = 1.0 / rho >= band.k1;
    flags.all_ok = all && flags.band_ok;
    return flags;
}

}  // namespace kconvex
