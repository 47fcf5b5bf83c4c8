#pragma once

#include <array>
#include <optional>

#include "kconvex/errors.hpp"
#include "kconvex/minkowski.hpp"

namespace kconvex {

// Point of the hyperbolic plane of curvature -k^2, as a Minkowski vector on
// the upper sheet of mdot(p,p) = -1/k^2, t > 0. Immutable after construction.
class ModelPoint {
public:
    // Projects a vector near the sheet back onto it. The relative drift of
    // k^2 * mdot(v,v) from -1 must be below 1e-9 or construction fails.
    static ModelPoint on_sheet(const Vec3& v, double k);

    // Pole of the model, (1/k, 0, 0).
    static ModelPoint base(double k);

    // Poincare-disk coordinates (u,v), u^2 + v^2 < 1. See docs/formats.md.
    static ModelPoint from_disk(double k, double u, double v);
    std::array<double, 2> to_disk() const;

    const Vec3& coords() const { return v_; }
    double scale() const { return k_; }

private:
    ModelPoint(const Vec3& v, double k) : v_(v), k_(k) {}
    Vec3 v_;
    double k_;
};

// Geodesic line {p : mdot(p, normal) = 0}, normal unit spacelike. The sign
// of the normal selects the positive side for signed distances.
struct GeodesicLine {
    Vec3 normal;
    double k;

    // Line through two distinct points, positive side on the left of a -> b.
    static GeodesicLine through(const ModelPoint& a, const ModelPoint& b);

    GeodesicLine reversed() const { return {-normal, k}; }
};

struct Circle {
    ModelPoint center;
    double radius;
};

void require_same_scale(double ka, double kb);

double distance(const ModelPoint& p, const ModelPoint& q);

// Unit tangent at p pointing toward q. Throws DegenerateInputError at p = q.
Vec3 log_direction(const ModelPoint& p, const ModelPoint& q);

// Geodesic from p with unit tangent dir, arc length s.
ModelPoint exp_point(const ModelPoint& p, const Vec3& dir, double s);

// Angle in [0, pi] at vertex between the geodesics toward a and b.
double angle_at(const ModelPoint& vertex, const ModelPoint& a, const ModelPoint& b);

double distance_to_line(const ModelPoint& p, const GeodesicLine& line);

// Unit tangent at p along which the signed line distance increases fastest.
Vec3 line_gradient(const ModelPoint& p, const GeodesicLine& line);

// Normal curvature k*coth(k*r) of a geodesic circle of radius r; r > 0.
double circle_normal_curvature(double k, double r);

// Equidistant point of three pairwise distinct points; nullopt for
// collinear triples.
std::optional<Circle> circumcircle_three_points(const ModelPoint& a,
                                                const ModelPoint& b,
                                                const ModelPoint& c);

ModelPoint geodesic_midpoint(const ModelPoint& a, const ModelPoint& b);

ModelPoint apply_isometry(const Mat3& iso, const ModelPoint& p);

// arccoth(x) = 0.5*ln((x+1)/(x-1)) for x > 1; +inf when x is within 1e-12
// of 1; throws HypothesisViolationError for x below that.
double arccoth(double x);

// arccosh with the argument clamped to 1 when within 1e-12 below it.
double safe_acosh(double x);

}  // namespace kconvex
