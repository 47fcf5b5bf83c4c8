#include "kconvex/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/numeric/odeint.hpp>

namespace kconvex {

namespace {
namespace odeint = boost::numeric::odeint;
using State = std::array<double, 4>;  // r, theta, r-dot, theta-dot
}  // namespace

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * std::numbers::pi);
    if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
    if (a > std::numbers::pi) a -= 2.0 * std::numbers::pi;
    return a;
}

SurfaceProfile SurfaceProfile::constant_curvature(double k, double r_max) {
    if (!(k > 0.0)) throw DegenerateInputError("k must be positive");
    SurfaceProfile p;
    p.analytic_ = true;
    p.k_ = k;
    p.k1_ = k;
    p.k2_ = k;
    p.r_max_ = r_max;
    return p;
}

double SurfaceProfile::curvature_coeff(double r) const {
    if (analytic_) return k_ * k_;
    double t = (r - r0_) / width_;
    t = std::clamp(t, 0.0, 1.0);
    const double s = t * t * (3.0 - 2.0 * t);
    return k1_ * k1_ + (k2_ * k2_ - k1_ * k1_) * s;
}

SurfaceProfile SurfaceProfile::blended(double k1, double k2, double r0, double width,
                                       double r_max) {
    if (!(k1 >= k2) || !(k2 > 0.0) || !(width > 0.0))
        throw DegenerateInputError("blended profile requires k1 >= k2 > 0, width > 0");
    SurfaceProfile p;
    p.analytic_ = false;
    p.k1_ = k1;
    p.k2_ = k2;
    p.r0_ = r0;
    p.width_ = width;
    p.r_max_ = r_max;
    // Integrate f'' = a(r) f with RK4 at a step fine enough that the cubic
    // Hermite table is far below the geodesic integration tolerances.
    p.h_ = 1e-3;
    const int n = static_cast<int>(r_max / p.h_) + 2;
    p.fv_.resize(n);
    p.fpv_.resize(n);
    double f = 0.0, fp = 1.0, r = 0.0;
    p.fv_[0] = f;
    p.fpv_[0] = fp;
    const int sub = 4;
    const double hs = p.h_ / sub;
    for (int i = 1; i < n; ++i) {
        for (int s = 0; s < sub; ++s) {
            auto acc = [&](double rr, double ff) { return p.curvature_coeff(rr) * ff; };
            const double k1f = fp, k1p = acc(r, f);
            const double k2f = fp + 0.5 * hs * k1p, k2p = acc(r + 0.5 * hs, f + 0.5 * hs * k1f);
            const double k3f = fp + 0.5 * hs * k2p, k3p = acc(r + 0.5 * hs, f + 0.5 * hs * k2f);
            const double k4f = fp + hs * k3p, k4p = acc(r + hs, f + hs * k3f);
            f += hs / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
            fp += hs / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
            r += hs;
        }
        p.fv_[i] = f;
        p.fpv_[i] = fp;
    }
    return p;
}

double SurfaceProfile::f(double r) const {
    if (analytic_) return std::sinh(k_ * r) / k_;
    if (!(r > 0.0)) return r;  // odd extension near the pole; propagates NaN
    const int n = static_cast<int>(fv_.size());
    const double rcap = (n - 2) * h_;
    if (r >= rcap)  // linear continuation beyond the table, clamped pre-cast
        return fv_[n - 2] + fpv_[n - 2] * (r - rcap);
    const int i = static_cast<int>(r / h_);
    const double t = (r - i * h_) / h_;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    return h00 * fv_[i] + h10 * h_ * fpv_[i] + h01 * fv_[i + 1] + h11 * h_ * fpv_[i + 1];
}

double SurfaceProfile::fp(double r) const {
    if (analytic_) return std::cosh(k_ * r);
    if (!(r > 0.0)) return 1.0;
    const int n = static_cast<int>(fv_.size());
    const double rcap = (n - 2) * h_;
    if (r >= rcap) return fpv_[n - 2];
    const int i = static_cast<int>(r / h_);
    const double t = (r - i * h_) / h_;
    const double d00 = 6 * t * (t - 1) / h_, d10 = (1 - t) * (1 - 3 * t);
    const double d01 = -6 * t * (t - 1) / h_, d11 = t * (3 * t - 2);
    return d00 * fv_[i] + d10 * fpv_[i] + d01 * fv_[i + 1] + d11 * fpv_[i + 1];
}

double SurfaceProfile::curvature(double r) const { return -curvature_coeff(r); }

bool SurfaceProfile::pinched_within(double k1, double k2, double r_lo, double r_hi,
                                    double tol, int grid) const {
    for (int i = 0; i <= grid; ++i) {
        const double r = r_lo + (r_hi - r_lo) * i / grid;
        const double K = curvature(r);
        if (K < -k1 * k1 - tol || K > -k2 * k2 + tol) return false;
    }
    return true;
}

namespace {

State launch_state(const SurfaceProfile& prof, const SurfacePoint& start,
                   double direction) {
    const double fr = prof.f(start.r);
    return {start.r, start.theta, std::cos(direction), std::sin(direction) / fr};
}

double direction_of(const SurfaceProfile& prof, const State& y) {
    return std::atan2(prof.f(y[0]) * y[3], y[2]);
}

}  // namespace

ShootResult geodesic_shoot(const SurfaceProfile& prof, const SurfacePoint& start,
                           double direction, double length, double rel_tol) {
    if (length < 0.0) throw std::domain_error("shoot length must be nonnegative");
    if (start.r < 1e-12) {
        // Radial ray from the pole.
        return {{length, wrap_angle(start.theta + direction)}, 0.0, 0.0};
    }
    State y = launch_state(prof, start, direction);
    const double clairaut0 = prof.f(y[0]) * prof.f(y[0]) * y[3];
    double drift = 0.0;

    auto sys = [&prof](const State& s, State& dsdt, double) {
        // Clamp 1/f away from the pole singularity: rejected trial stages may
        // overshoot through r = 0, and an infinity here turns the adaptive
        // step size into NaN for good.
        const double fr0 = prof.f(s[0]);
        const double fr = std::abs(fr0) > 1e-9 ? fr0 : std::copysign(1e-9, fr0);
        const double fpr = prof.fp(s[0]);
        dsdt[0] = s[2];
        dsdt[1] = s[3];
        dsdt[2] = fr * fpr * s[3] * s[3];
        dsdt[3] = -2.0 * fpr / fr * s[2] * s[3];
    };
    auto observer = [&](const State& s, double) {
        drift = std::max(drift, std::abs(prof.f(s[0]) * prof.f(s[0]) * s[3] - clairaut0));
    };
    auto stepper = odeint::make_controlled(rel_tol * 1e-2, rel_tol,
                                           odeint::runge_kutta_dopri5<State>());
    if (length > 0.0) {
        try {
            // Near-pole launches need an initial step no larger than the
            // distance to the singularity.
            const double dt0 = std::min({length, 1e-2, std::max(0.5 * start.r, 1e-4)});
            odeint::integrate_adaptive(stepper, sys, y, 0.0, length, dt0, observer);
        } catch (const std::exception& e) {
            throw IntegrationError(std::string("geodesic integration failed: ") + e.what());
        }
    }
    return {{y[0], wrap_angle(y[1])}, direction_of(prof, y), drift};
}

BvpResult distance_bvp(const SurfaceProfile& prof, const SurfacePoint& p,
                       const SurfacePoint& q, double rel_tol) {
    const double dtheta = wrap_angle(q.theta - p.theta);
    if (p.r < 1e-12) {
        if (q.r < 1e-12) throw DegenerateInputError("distance_bvp needs distinct points");
        return {q.r, wrap_angle(q.theta - p.theta), 0.0};
    }
    if (q.r < 1e-12) return {p.r, std::numbers::pi, wrap_angle(p.theta - q.theta)};

    // Diametral pair: the geodesic runs radially through the pole, where the
    // polar chart is singular; both directions are the inward radial.
    if (std::abs(std::abs(dtheta) - std::numbers::pi) < 1e-8)
        return {p.r + q.r, std::numbers::pi, std::numbers::pi};

    // Integrate from the endpoint farther from the pole: launches near the
    // coordinate singularity make the polar system needlessly stiff.
    if (p.r < 1e-2 && q.r > 2.0 * p.r) {
        const BvpResult rev = distance_bvp(prof, q, p, rel_tol);
        return {rev.length, rev.arrive_angle, rev.launch_angle};
    }

    // Initial guess from the constant-curvature comparison about the pole.
    const double kg = prof.k1_hint();
    double beta, s;
    if (std::abs(dtheta) < 1e-13) {
        beta = q.r >= p.r ? 0.0 : std::numbers::pi;
        s = std::abs(q.r - p.r);
        if (s < 1e-14) throw DegenerateInputError("distance_bvp needs distinct points");
    } else {
        const double chd = std::cosh(kg * p.r) * std::cosh(kg * q.r) -
                           std::sinh(kg * p.r) * std::sinh(kg * q.r) * std::cos(dtheta);
        s = std::acosh(std::max(chd, 1.0)) / kg;
        double cpsi = (std::cosh(kg * p.r) * chd - std::cosh(kg * q.r)) /
                      (std::sinh(kg * p.r) * std::sinh(kg * s));
        const double psi = std::acos(std::clamp(cpsi, -1.0, 1.0));
        beta = dtheta >= 0.0 ? std::numbers::pi - psi : psi - std::numbers::pi;
    }

    // Endpoint misfit in the Cartesian chart (x, y) = r (cos, sin)(theta):
    // unlike (r, theta), these stay smooth in (beta, s) when a trial geodesic
    // passes near or through the pole.
    const double qx = q.r * std::cos(q.theta), qy = q.r * std::sin(q.theta);
    auto residual = [&](double b, double len, double& f1, double& f2) -> bool {
        if (len < 0.0) return false;
        try {
            const ShootResult sh = geodesic_shoot(prof, p, b, len, rel_tol);
            f1 = sh.end.r * std::cos(sh.end.theta) - qx;
            f2 = sh.end.r * std::sin(sh.end.theta) - qy;
        } catch (const std::exception&) {
            return false;
        }
        return std::isfinite(f1) && std::isfinite(f2);
    };

    double f1, f2;
    if (!residual(beta, s, f1, f2))
        throw NumericFailureError("distance_bvp initial shoot failed");
    double err = std::abs(f1) + std::abs(f2);
    const double accept_tol = std::max(1e-9, 20.0 * rel_tol);
    bool stalled = false;
    for (int it = 0; it < 60 && err > 1e-11 && !stalled; ++it) {
        const double db = 1e-7, ds = 1e-7;
        double a1, a2, b1, b2;
        if (!residual(beta + db, s, a1, a2) || !residual(beta, s + ds, b1, b2)) {
            stalled = true;
            break;
        }
        const double j11 = (a1 - f1) / db, j12 = (b1 - f1) / ds;
        const double j21 = (a2 - f2) / db, j22 = (b2 - f2) / ds;
        const double det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-18)
            throw NumericFailureError("singular shooting Jacobian in distance_bvp");
        double step_b = -(j22 * f1 - j12 * f2) / det;
        double step_s = -(-j21 * f1 + j11 * f2) / det;
        double scale = 1.0;
        bool accepted = false;
        for (int h = 0; h < 10 && !accepted; ++h) {
            double n1, n2;
            if (residual(beta + scale * step_b, s + scale * step_s, n1, n2)) {
                const double nerr = std::abs(n1) + std::abs(n2);
                if (nerr < err || nerr < 1e-12) {
                    beta += scale * step_b;
                    s += scale * step_s;
                    f1 = n1;
                    f2 = n2;
                    err = nerr;
                    accepted = true;
                }
            }
            if (!accepted) scale *= 0.5;
        }
        // No descent within the integration noise floor: keep the best
        // iterate and let the acceptance check below decide.
        if (!accepted) stalled = true;
    }
    if (err > accept_tol) throw NumericFailureError("distance_bvp did not converge");
    const ShootResult sh = geodesic_shoot(prof, p, beta, s, rel_tol);
    // Incoming direction at q, pointing back toward p.
    const double arrive = wrap_angle(sh.end_direction + std::numbers::pi);
    return {s, wrap_angle(beta), arrive};
}

std::array<double, 3> toponogov_angle_check(const SurfaceProfile& prof,
                                            const std::array<SurfacePoint, 3>& tri,
                                            double k1) {
    std::array<double, 3> margins;
    std::array<double, 3> side;  // side[i] opposite vertex i
    std::array<std::array<double, 2>, 3> launch;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, l = (i + 2) % 3;
        const BvpResult to_j = distance_bvp(prof, tri[i], tri[j]);
        const BvpResult to_l = distance_bvp(prof, tri[i], tri[l]);
        launch[i] = {to_j.launch_angle, to_l.launch_angle};
        side[l] = to_j.length;  // side i -> i+1 is opposite vertex i+2
    }
    for (int i = 0; i < 3; ++i) {
        const double alpha = std::abs(wrap_angle(launch[i][0] - launch[i][1]));
        const double b = side[(i + 1) % 3], c = side[(i + 2) % 3], a = side[i];
        const double comp =
            std::acos(std::clamp((std::cosh(k1 * b) * std::cosh(k1 * c) - std::cosh(k1 * a)) /
                                     (std::sinh(k1 * b) * std::sinh(k1 * c)),
                                 -1.0, 1.0));
        margins[i] = alpha - comp;
    }
    return margins;
}

namespace {

// Minimize g over local chart coordinates (x, y) = r(cos, sin)(theta) with
// Nelder-Mead; coarse machinery shared by both extremal searches.
template <typename G>
SurfacePoint nm_minimize(G g, SurfacePoint seed, double size, int max_iter) {
    auto to_pt = [](std::array<double, 2> x) -> SurfacePoint {
        return {std::hypot(x[0], x[1]), std::atan2(x[1], x[0])};
    };
    auto eval = [&](std::array<double, 2> x) { return g(to_pt(x)); };
    std::array<double, 2> seed_xy = {seed.r * std::cos(seed.theta),
                                     seed.r * std::sin(seed.theta)};
    struct V {
        std::array<double, 2> x;
        double f;
    };
    std::array<V, 3> s;
    s[0] = {seed_xy, eval(seed_xy)};
    s[1] = {{seed_xy[0] + size, seed_xy[1]}, 0};
    s[2] = {{seed_xy[0], seed_xy[1] + size}, 0};
    s[1].f = eval(s[1].x);
    s[2].f = eval(s[2].x);
    for (int it = 0; it < max_iter; ++it) {
        std::sort(s.begin(), s.end(), [](const V& a, const V& b) { return a.f < b.f; });
        const double spread = std::max(std::abs(s[2].x[0] - s[0].x[0]),
                                       std::abs(s[2].x[1] - s[0].x[1]));
        if (spread < 2e-4) break;
        const std::array<double, 2> cen = {0.5 * (s[0].x[0] + s[1].x[0]),
                                           0.5 * (s[0].x[1] + s[1].x[1])};
        auto lerp = [&](double t) -> std::array<double, 2> {
            return {cen[0] + t * (cen[0] - s[2].x[0]), cen[1] + t * (cen[1] - s[2].x[1])};
        };
        const auto xr = lerp(1.0);
        const double fr = eval(xr);
        if (fr < s[0].f) {
            const auto xe = lerp(2.0);
            const double fe = eval(xe);
            s[2] = fe < fr ? V{xe, fe} : V{xr, fr};
        } else if (fr < s[1].f) {
            s[2] = {xr, fr};
        } else {
            const auto xc = lerp(fr < s[2].f ? 0.5 : -0.5);
            const double fc = eval(xc);
            if (fc < std::min(fr, s[2].f)) {
                s[2] = {xc, fc};
            } else {
                for (int i = 1; i < 3; ++i) {
                    s[i].x = {0.5 * (s[i].x[0] + s[0].x[0]), 0.5 * (s[i].x[1] + s[0].x[1])};
                    s[i].f = eval(s[i].x);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(), [](const V& a, const V& b) { return a.f < b.f; });
    return to_pt(s[0].x);
}

}  // namespace

std::pair<double, double> polygon_extremal_radii_numeric(
    const SurfaceProfile& prof, const std::vector<SurfacePoint>& vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 3) throw DegenerateInputError("polygon needs at least 3 vertices");

    // Convexity from launch directions: the interior angle at each vertex,
    // measured between the geodesics to its neighbors, must be in (0, pi)
    // with a consistent turning sense.
    int sense = 0;
    for (int i = 0; i < n; ++i) {
        const BvpResult prev = distance_bvp(prof, vertices[i], vertices[(i + n - 1) % n]);
        const BvpResult next = distance_bvp(prof, vertices[i], vertices[(i + 1) % n]);
        const double a = wrap_angle(prev.launch_angle - next.launch_angle);
        if (std::abs(a) < 1e-9 || std::abs(a) > std::numbers::pi - 1e-9)
            throw std::domain_error("degenerate vertex angle in surface polygon");
        const int si = a > 0 ? 1 : -1;
        if (sense == 0) sense = si;
        if (si != sense) throw std::domain_error("surface polygon is not convex");
    }

    // Dense samples along each side, reused by every candidate center.
    const int per_side = 24;
    std::vector<SurfacePoint> samples;
    samples.reserve(n * per_side);
    for (int i = 0; i < n; ++i) {
        const SurfacePoint& a = vertices[i];
        const SurfacePoint& b = vertices[(i + 1) % n];
        const BvpResult side = distance_bvp(prof, a, b);
        for (int j = 0; j <= per_side; ++j) {
            const double t = side.length * j / per_side;
            samples.push_back(geodesic_shoot(prof, a, side.launch_angle, t).end);
        }
    }

    auto dist = [&](const SurfacePoint& a, const SurfacePoint& b) {
        return distance_bvp(prof, a, b, 1e-9).length;
    };
    auto neg_min_side = [&](const SurfacePoint& c) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& s : samples) best = std::min(best, dist(c, s));
        return -best;
    };
    auto max_vertex = [&](const SurfacePoint& c) {
        double worst = 0.0;
        for (const auto& v : vertices) worst = std::max(worst, dist(c, v));
        return worst;
    };

    // Seed at the chart centroid, then a small polar grid, then refine.
    double cx = 0.0, cy = 0.0;
    for (const auto& v : vertices) {
        cx += v.r * std::cos(v.theta) / n;
        cy += v.r * std::sin(v.theta) / n;
    }
    SurfacePoint seed{std::hypot(cx, cy), std::atan2(cy, cx)};
    double best_in = neg_min_side(seed);
    SurfacePoint best_pt = seed;
    for (int gi = -2; gi <= 2; ++gi)
        for (int gj = -2; gj <= 2; ++gj) {
            if (gi == 0 && gj == 0) continue;
            const double x = cx + 0.05 * gi, y = cy + 0.05 * gj;
            const SurfacePoint cand{std::hypot(x, y), std::atan2(y, x)};
            const double v = neg_min_side(cand);
            if (v < best_in) best_in = v, best_pt = cand;
        }
    const SurfacePoint incenter = nm_minimize(neg_min_side, best_pt, 0.02, 120);
    const double r = -neg_min_side(incenter);

    const SurfacePoint circumcenter = nm_minimize(max_vertex, seed, 0.02, 120);
    const double R = max_vertex(circumcenter);
    return {r, R};
}

}  // namespace kconvex
