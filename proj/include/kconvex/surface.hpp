#pragma once

#include <array>
#include <string>
#include <vector>

#include "kconvex/errors.hpp"

namespace kconvex {

// Rotationally symmetric metric dr^2 + f(r)^2 dtheta^2 with f(0) = 0,
// f'(0) = 1 and curvature K(r) = -f''(r)/f(r) pinched in [-k1^2, -k2^2].
class SurfaceProfile {
public:
    // f(r) = sinh(k r)/k, constant curvature -k^2.
    static SurfaceProfile constant_curvature(double k, double r_max = 12.0);

    // -f''/f interpolates from -k1^2 (r <= r0) to -k2^2 (r >= r0 + width)
    // through a clamped smoothstep; f integrated from the pole data.
    static SurfaceProfile blended(double k1, double k2, double r0, double width,
                                  double r_max = 12.0);

    double f(double r) const;
    double fp(double r) const;
    double curvature(double r) const;  // K(r) = -f''/f, evaluated analytically
    double r_max() const { return r_max_; }
    double k1_hint() const { return k1_; }

    // Certificate -k1^2 - tol <= K <= -k2^2 + tol on a uniform grid.
    bool pinched_within(double k1, double k2, double r_lo, double r_hi,
                        double tol = 1e-9, int grid = 10000) const;

private:
    SurfaceProfile() = default;
    double curvature_coeff(double r) const;  // a(r) with f'' = a f

    bool analytic_ = true;  // constant-curvature closed form
    double k_ = 1.0;        // scale of the closed form
    double k1_ = 1.0, k2_ = 1.0, r0_ = 0.0, width_ = 1.0;
    double r_max_ = 12.0;
    double h_ = 0.0;                // table spacing for the blended profile
    std::vector<double> fv_, fpv_;  // Hermite table of f, f'
};

// Polar coordinates about the pole; r = 0 identifies all theta.
struct SurfacePoint {
    double r;
    double theta;
};

// Direction angles are measured from the outward radial direction,
// counterclockwise (toward increasing theta).
struct ShootResult {
    SurfacePoint end;
    double end_direction;
    double clairaut_drift;  // max |f^2 theta-dot - const| over the run
};

ShootResult geodesic_shoot(const SurfaceProfile& prof, const SurfacePoint& start,
                           double direction, double length, double rel_tol = 1e-10);

struct BvpResult {
    double length;
    double launch_angle;  // direction at p toward q
    double arrive_angle;  // direction at q of the incoming geodesic
};

// Two-point geodesic by Newton shooting on (angle, length); unique by
// nonpositive curvature.
BvpResult distance_bvp(const SurfaceProfile& prof, const SurfacePoint& p,
                       const SurfacePoint& q, double rel_tol = 1e-10);

// Interior angle minus the comparison angle of the equal-side-lengths
// triangle in constant curvature -k1^2, per vertex. All must be >= 0 up to
// numerical tolerance when K >= -k1^2.
std::array<double, 3> toponogov_angle_check(const SurfaceProfile& prof,
                                            const std::array<SurfacePoint, 3>& tri,
                                            double k1);

// Inradius and circumradius of a convex geodesic polygon, by polar grid
// search with Nelder-Mead refinement; resolution about 1e-3.
std::pair<double, double> polygon_extremal_radii_numeric(
    const SurfaceProfile& prof, const std::vector<SurfacePoint>& vertices);

double wrap_angle(double a);  // to (-pi, pi]

}  // namespace kconvex
