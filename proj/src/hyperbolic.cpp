#include "kconvex/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kconvex {

namespace {
constexpr double kAcoshClamp = 1e-12;
constexpr double kSheetDriftTol = 1e-9;
}  // namespace

void require_same_scale(double ka, double kb) {
    if (ka != kb)
        throw ScaleMismatchError("curvature scales differ: k=" + std::to_string(ka) +
                                 " vs k=" + std::to_string(kb));
}

double safe_acosh(double x) {
    if (x < 1.0) {
        if (x < 1.0 - kAcoshClamp)
            throw NumericFailureError("acosh argument " + std::to_string(x) +
                                      " below domain");
        x = 1.0;
    }
    return std::acosh(x);
}

double arccoth(double x) {
    if (x <= 1.0 + kAcoshClamp) {
        if (x >= 1.0 - kAcoshClamp)
            return std::numeric_limits<double>::infinity();
        throw HypothesisViolationError("arccoth argument " + std::to_string(x) +
                                       " not greater than 1");
    }
    return 0.5 * std::log((x + 1.0) / (x - 1.0));
}

ModelPoint ModelPoint::on_sheet(const Vec3& v, double k) {
    if (!(k > 0.0)) throw DegenerateInputError("curvature scale k must be positive");
    if (!(v.t > 0.0)) throw DegenerateInputError("point not on the upper sheet");
    const double q = k * k * mdot(v, v);  // should be -1
    // The cancellation in mdot grows with the squared coordinate size, so
    // the admissible drift scales with it.
    const double mag = k * k * (v.t * v.t + v.x * v.x + v.y * v.y);
    if (std::abs(q + 1.0) > kSheetDriftTol * std::max(1.0, mag))
        throw DegenerateInputError("point drifted off the hyperboloid sheet");
    // Renormalize onto the sheet only while the quadratic form is still
    // measurable: its cancellation noise is ~mag*eps, so far from the
    // origin the rescale would inject more error than it removes.
    const double s = mag <= 1e4 ? 1.0 / (k * std::sqrt(-mdot(v, v))) : 1.0;
    return ModelPoint(v * s, k);
}

ModelPoint ModelPoint::base(double k) {
    if (!(k > 0.0)) throw DegenerateInputError("curvature scale k must be positive");
    return ModelPoint({1.0 / k, 0.0, 0.0}, k);
}

ModelPoint ModelPoint::from_disk(double k, double u, double v) {
    const double s = u * u + v * v;
    if (s >= 1.0) throw DegenerateInputError("disk coordinates outside the unit disk");
    const double d = k * (1.0 - s);
    return ModelPoint({(1.0 + s) / d, 2.0 * u / d, 2.0 * v / d}, k);
}

std::array<double, 2> ModelPoint::to_disk() const {
    const double den = 1.0 + k_ * v_.t;
    return {k_ * v_.x / den, k_ * v_.y / den};
}

double distance(const ModelPoint& p, const ModelPoint& q) {
    require_same_scale(p.scale(), q.scale());
    const double k = p.scale();
    return safe_acosh(-k * k * mdot(p.coords(), q.coords())) / k;
}

Vec3 log_direction(const ModelPoint& p, const ModelPoint& q) {
    require_same_scale(p.scale(), q.scale());
    const double k = p.scale();
    const double c = -k * k * mdot(p.coords(), q.coords());  // cosh(k d)
    const Vec3 w = q.coords() - c * p.coords();              // tangential part of q
    const double sh2 = std::max(c * c - 1.0, 0.0);           // sinh^2(k d)
    if (sh2 < 1e-28) throw DegenerateInputError("log direction at coincident points");
    return w * (k / std::sqrt(sh2));
}

ModelPoint exp_point(const ModelPoint& p, const Vec3& dir, double s) {
    const double k = p.scale();
    const Vec3 v = p.coords() * std::cosh(k * s) + dir * (std::sinh(k * s) / k);
    return ModelPoint::on_sheet(v, k);
}

double angle_at(const ModelPoint& vertex, const ModelPoint& a, const ModelPoint& b) {
    const Vec3 u = log_direction(vertex, a);
    const Vec3 w = log_direction(vertex, b);
    const double c = std::clamp(mdot(u, w), -1.0, 1.0);
    return std::acos(c);
}

GeodesicLine GeodesicLine::through(const ModelPoint& a, const ModelPoint& b) {
    require_same_scale(a.scale(), b.scale());
    const Vec3 w = mcross(a.coords(), b.coords());
    const double n2 = mdot(w, w);
    if (n2 < 1e-28) throw DegenerateInputError("line through coincident points");
    return {w * (1.0 / std::sqrt(n2)), a.scale()};
}

double distance_to_line(const ModelPoint& p, const GeodesicLine& line) {
    require_same_scale(p.scale(), line.k);
    const double k = p.scale();
    return std::asinh(k * mdot(p.coords(), line.normal)) / k;
}

Vec3 line_gradient(const ModelPoint& p, const GeodesicLine& line) {
    require_same_scale(p.scale(), line.k);
    const double k = p.scale();
    const double d = mdot(p.coords(), line.normal);
    const Vec3 tang = line.normal + (k * k * d) * p.coords();
    const double n = std::sqrt(1.0 + k * k * d * d);
    return tang * (1.0 / n);
}

double circle_normal_curvature(double k, double r) {
    if (!(r > 0.0)) throw std::domain_error("circle radius must be positive");
    return k / std::tanh(k * r);
}

std::optional<Circle> circumcircle_three_points(const ModelPoint& a,
                                                const ModelPoint& b,
                                                const ModelPoint& c) {
    require_same_scale(a.scale(), b.scale());
    require_same_scale(a.scale(), c.scale());
    const double k = a.scale();
    // Equidistant point satisfies mdot(p, a-b) = mdot(p, b-c) = 0.
    const Vec3 w = mcross(a.coords() - b.coords(), b.coords() - c.coords());
    const double n2 = mdot(w, w);
    // Timelike w <-> a finite equidistant point; otherwise the triple is
    // collinear (or numerically indistinguishable from it).
    if (n2 >= -1e-14 / (k * k)) return std::nullopt;
    Vec3 v = w * (1.0 / (k * std::sqrt(-n2)));
    if (v.t < 0.0) v = -v;
    const ModelPoint center = ModelPoint::on_sheet(v, k);
    return Circle{center, distance(center, a)};
}

ModelPoint geodesic_midpoint(const ModelPoint& a, const ModelPoint& b) {
    require_same_scale(a.scale(), b.scale());
    const double k = a.scale();
    const Vec3 s = a.coords() + b.coords();
    const double n2 = -mdot(s, s);
    return ModelPoint::on_sheet(s * (1.0 / (k * std::sqrt(n2))), k);
}

ModelPoint apply_isometry(const Mat3& iso, const ModelPoint& p) {
    return ModelPoint::on_sheet(iso.apply(p.coords()), p.scale());
}

}  // namespace kconvex
