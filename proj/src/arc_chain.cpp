#include "kconvex/arc_chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace kconvex {

namespace {

// Points of the boundary arc of `arc` against the chord line `side`,
// parametrized by the interpolated central direction, at radius `radius`.
std::vector<ModelPoint> sample_arc(const ModelPoint& center, const ModelPoint& from,
                                   const ModelPoint& to, double radius, int count) {
    const Vec3 d1 = log_direction(center, from);
    const Vec3 d2 = log_direction(center, to);
    const double theta = std::acos(std::clamp(mdot(d1, d2), -1.0, 1.0));
    Vec3 e2 = d2 - mdot(d2, d1) * d1;
    const double n = std::sqrt(std::max(mdot(e2, e2), 0.0));
    std::vector<ModelPoint> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j) {
        const double t = theta * (j + 0.5) / count;
        Vec3 dir = d1 * std::cos(t);
        if (n > 1e-15) dir = dir + e2 * (std::sin(t) / n);
        out.push_back(exp_point(center, dir, radius));
    }
    return out;
}

// Same interpolation between two explicit unit tangents at a point.
std::vector<ModelPoint> sample_fan(const ModelPoint& apex, const Vec3& w1, const Vec3& w2,
                                   double radius, int count) {
    const double theta = std::acos(std::clamp(mdot(w1, w2), -1.0, 1.0));
    Vec3 e2 = w2 - mdot(w2, w1) * w1;
    const double n = std::sqrt(std::max(mdot(e2, e2), 0.0));
    std::vector<ModelPoint> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j) {
        const double t = theta * (j + 0.5) / count;
        Vec3 dir = w1 * std::cos(t);
        if (n > 1e-15) dir = dir + e2 * (std::sin(t) / n);
        out.push_back(exp_point(apex, dir, radius));
    }
    return out;
}

}  // namespace

double delta_bar(double l, double rho, double k1) {
    if (!(rho > 0.0) || l < 0.0 || !(k1 > 0.0))
        throw std::domain_error("delta_bar requires l >= 0, rho > 0, k1 > 0");
    const double num = std::tanh(k1 * l / 2.0);
    const double den = std::tanh(k1 * rho);
    if (num > den * (1.0 + 1e-12))
        throw SpanError(-1, "arc of radius rho cannot span a side of length l");
    return std::asin(std::min(num / den, 1.0));
}

ArcChain build_arc_chain(const ConvexPolygon& p, double rho) {
    if (!(rho > 0.0)) throw std::domain_error("rho must be positive");
    const double k = p.scale();
    const int n = p.size();
    ArcChain chain{p, rho, {}, {}};
    chain.arcs.reserve(n);
    chain.delta.reserve(n);
    for (int i = 0; i < n; ++i) {
        const ModelPoint& a = p.vertex(i - 1);
        const ModelPoint& b = p.vertex(i);
        const double l = distance(a, b);
        if (std::tanh(k * l / 2.0) > std::tanh(k * rho) * (1.0 + 1e-12))
            throw SpanError(i, "rho too small to span side " + std::to_string(i) +
                                   " of length " + std::to_string(l));
        // Center on the interior side of the chord, at the bisector foot
        // height given by the hyperbolic Pythagorean relation.
        const ModelPoint m = geodesic_midpoint(a, b);
        const double h =
            safe_acosh(std::cosh(k * rho) / std::cosh(k * l / 2.0)) / k;
        const Vec3 inward = line_gradient(m, p.side_line(i));
        const ModelPoint center = exp_point(m, inward, h);
        chain.arcs.push_back({center, rho, (i + n - 1) % n, i});
        chain.delta.push_back(std::numbers::pi / 2.0 - angle_at(b, a, center));
    }
    return chain;
}

bool ArcChain::contains(const ModelPoint& p, double tol) const {
    if (polygon.contains(p, tol)) return true;
    for (int i = 0; i < polygon.size(); ++i) {
        if (distance_to_line(p, polygon.side_line(i)) <= tol &&
            distance(p, arcs[i].center) <= rho + tol)
            return true;
    }
    return false;
}

double ArcChain::distance_to_region(const ModelPoint& p) const {
    if (contains(p, 0.0)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < polygon.size(); ++i) {
        const Arc& arc = arcs[i];
        const double d = distance(p, arc.center);
        bool radial = false;
        if (d > 1e-14) {
            const ModelPoint foot = exp_point(arc.center, log_direction(arc.center, p), rho);
            radial = distance_to_line(foot, polygon.side_line(i)) <= 0.0;
        }
        if (radial)
            best = std::min(best, std::abs(d - rho));
        else
            best = std::min(best, std::min(distance(p, polygon.vertex(arc.from_index)),
                                           distance(p, polygon.vertex(arc.to_index))));
    }
    return best;
}

std::vector<ModelPoint> ArcChain::sample_boundary(int per_arc) const {
    std::vector<ModelPoint> out;
    for (int i = 0; i < polygon.size(); ++i) {
        auto s = sample_arc(arcs[i].center, polygon.vertex(arcs[i].from_index),
                            polygon.vertex(arcs[i].to_index), rho, per_arc);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

ConditionReport convexity_condition(const ArcChain& chain, int vertex, double k1) {
    const ConvexPolygon& p = chain.polygon;
    const int n = p.size();
    const int i = ((vertex % n) + n) % n;
    const int next = (i + 1) % n;

    ConditionReport rep;
    rep.vertex = i;
    rep.alpha = angle_at(p.vertex(i), p.vertex(i - 1), p.vertex(i + 1));

    // Tilts measured at vertex i: arc i arrives there, arc i+1 leaves.
    rep.delta_prev = std::numbers::pi / 2.0 -
                     angle_at(p.vertex(i), p.vertex(i - 1), chain.arcs[i].center);
    rep.delta_next = std::numbers::pi / 2.0 -
                     angle_at(p.vertex(i), p.vertex(i + 1), chain.arcs[next].center);

    const double l_prev = distance(p.vertex(i - 1), p.vertex(i));
    const double l_next = distance(p.vertex(i), p.vertex(i + 1));
    rep.delta_bar_prev = delta_bar(l_prev, chain.rho, k1);
    rep.delta_bar_next = delta_bar(l_next, chain.rho, k1);

    const double rhs = std::numbers::pi - rep.alpha;  // kappa_A (l_prev+l_next)/2
    rep.junction_angle = rhs - rep.delta_prev - rep.delta_next;
    rep.cco1 = rep.junction_angle >= -1e-9 && rep.junction_angle <= std::numbers::pi + 1e-9;
    rep.cco2 = rep.delta_prev + rep.delta_next <= rhs + 1e-9;
    rep.cco3 = rep.delta_bar_prev + rep.delta_bar_next <= rhs + 1e-9;
    rep.implication_ok = (!rep.cco3 || rep.cco2) && (!rep.cco2 || rep.cco1);
    return rep;
}

std::array<double, 4> check_bpai_chain(double l_prev, double l_next, double kappa_a,
                                       double k1, double rho) {
    const double db1 = delta_bar(l_prev, rho, k1);
    const double db2 = delta_bar(l_next, rho, k1);
    const double half_pi = std::numbers::pi / 2.0;
    const double sin_sum = half_pi * (std::sin(db1) + std::sin(db2));
    const double tanh_sum = std::tanh(k1 * l_prev / 2.0) + std::tanh(k1 * l_next / 2.0);
    const double trig = half_pi / std::tanh(k1 * rho) * tanh_sum;
    const double half_len = (l_prev + l_next) / 2.0;
    const double hyp_step = tanh_sum / (k1 * half_len) * kappa_a * half_len;
    const double rhs = kappa_a * half_len;
    return {sin_sum - (db1 + db2), trig - sin_sum, hyp_step - trig, rhs - hyp_step};
}

ParallelCurve parallel_curve(const ArcChain& chain, double eps) {
    if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
    for (int i = 0; i < chain.polygon.size(); ++i) {
        const auto rep = convexity_condition(chain, i, chain.polygon.scale());
        if (!rep.cco1)
            throw DegenerateInputError("arc chain is not convex at vertex " +
                                       std::to_string(i));
    }
    return ParallelCurve{chain, eps};
}

double ParallelCurve::side_piece_curvature() const {
    const double k = base.polygon.scale();
    return circle_normal_curvature(k, base.rho + eps);
}

double ParallelCurve::vertex_piece_curvature() const {
    return circle_normal_curvature(base.polygon.scale(), eps);
}

bool ParallelCurve::contains(const ModelPoint& p, double tol) const {
    return base.distance_to_region(p) <= eps + tol;
}

std::vector<ModelPoint> ParallelCurve::sample_boundary(int per_arc) const {
    const ConvexPolygon& poly = base.polygon;
    std::vector<ModelPoint> out;
    for (int i = 0; i < poly.size(); ++i) {
        const Arc& arc = base.arcs[i];
        auto s = sample_arc(arc.center, poly.vertex(arc.from_index),
                            poly.vertex(arc.to_index), base.rho + eps, per_arc);
        out.insert(out.end(), s.begin(), s.end());
        // Vertex fillet between the outward radii of arcs i and i+1.
        const int next = (i + 1) % poly.size();
        const ModelPoint& v = poly.vertex(i);
        const Vec3 w1 = -1.0 * log_direction(v, arc.center);
        const Vec3 w2 = -1.0 * log_direction(v, base.arcs[next].center);
        auto f = sample_fan(v, w1, w2, eps, per_arc);
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

TheoremBounds thm1_bounds_on_parallel(const ParallelCurve& curve,
                                      const CurvatureBand& band) {
    const double rho_eff = curve.base.rho + curve.eps;
    return band.k2 > 0.0 ? thm1_bounds(band, rho_eff)
                         : thm1doubleprime_bounds(band.k1, rho_eff);
}

}  // namespace kconvex
