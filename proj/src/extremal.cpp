#include "kconvex/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kconvex {

namespace {

double min_side_distance(const ModelPoint& p, const std::vector<GeodesicLine>& sides) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : sides) best = std::min(best, distance_to_line(p, s));
    return best;
}

// Golden-section maximization of a unimodal function on [a, b].
template <typename F>
double golden_max(F f, double a, double b, double tol) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d, d = c, fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c, c = d, fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Nelder-Mead maximization in Poincare-disk coordinates.
template <typename F>
std::array<double, 2> nelder_mead_max(F f, std::array<double, 2> seed, double size,
                                      int max_iter, double ftol) {
    struct V {
        std::array<double, 2> x;
        double f;
    };
    auto eval = [&](std::array<double, 2> x) {
        if (x[0] * x[0] + x[1] * x[1] >= 1.0 - 1e-12)
            return -std::numeric_limits<double>::infinity();
        return f(x);
    };
    std::array<V, 3> s;
    s[0] = {seed, eval(seed)};
    s[1] = {{seed[0] + size, seed[1]}, 0.0};
    s[2] = {{seed[0], seed[1] + size}, 0.0};
    s[1].f = eval(s[1].x);
    s[2].f = eval(s[2].x);
    for (int it = 0; it < max_iter; ++it) {
        std::sort(s.begin(), s.end(), [](const V& a, const V& b) { return a.f > b.f; });
        if (s[0].f - s[2].f < ftol) break;
        const std::array<double, 2> cen = {0.5 * (s[0].x[0] + s[1].x[0]),
                                           0.5 * (s[0].x[1] + s[1].x[1])};
        auto lerp = [&](double t) -> std::array<double, 2> {
            return {cen[0] + t * (cen[0] - s[2].x[0]), cen[1] + t * (cen[1] - s[2].x[1])};
        };
        const auto xr = lerp(1.0);
        const double fr = eval(xr);
        if (fr > s[0].f) {
            const auto xe = lerp(2.0);
            const double fe = eval(xe);
            if (fe > fr)
                s[2] = {xe, fe};
            else
                s[2] = {xr, fr};
        } else if (fr > s[1].f) {
            s[2] = {xr, fr};
        } else {
            const auto xc = lerp(fr > s[2].f ? 0.5 : -0.5);
            const double fc = eval(xc);
            if (fc > std::max(fr, s[2].f)) {
                s[2] = {xc, fc};
            } else {
                for (int i = 1; i < 3; ++i) {
                    s[i].x = {0.5 * (s[i].x[0] + s[0].x[0]), 0.5 * (s[i].x[1] + s[0].x[1])};
                    s[i].f = eval(s[i].x);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(), [](const V& a, const V& b) { return a.f > b.f; });
    return s[0].x;
}

struct Ball {
    Vec3 center{1, 0, 0};
    double k{1.0};
    double radius{-1.0};

    bool contains(const ModelPoint& p) const {
        if (radius < 0.0) return false;
        const ModelPoint c = ModelPoint::on_sheet(center, k);
        return distance(c, p) <= radius + 1e-10;
    }
};

Ball ball_from_support(const std::vector<ModelPoint>& pts, const std::vector<int>& sup) {
    Ball b;
    if (sup.empty()) return b;
    b.k = pts[sup[0]].scale();
    if (sup.size() == 1) {
        b.center = pts[sup[0]].coords();
        b.radius = 0.0;
    } else if (sup.size() == 2) {
        const ModelPoint m = geodesic_midpoint(pts[sup[0]], pts[sup[1]]);
        b.center = m.coords();
        b.radius = distance(m, pts[sup[0]]);
    } else {
        const auto c = circumcircle_three_points(pts[sup[0]], pts[sup[1]], pts[sup[2]]);
        if (c) {
            b.center = c->center.coords();
            b.radius = c->radius;
        } else {
            // Collinear supports: diametral ball of the farthest pair.
            double best = -1.0;
            int a = sup[0], bb = sup[1];
            for (size_t i = 0; i < sup.size(); ++i)
                for (size_t j = i + 1; j < sup.size(); ++j) {
                    const double d = distance(pts[sup[i]], pts[sup[j]]);
                    if (d > best) best = d, a = sup[i], bb = sup[j];
                }
            const ModelPoint m = geodesic_midpoint(pts[a], pts[bb]);
            b.center = m.coords();
            b.radius = 0.5 * best;
        }
    }
    return b;
}

Ball welzl_mtf(const std::vector<ModelPoint>& pts, std::vector<int>& order, int end,
               std::vector<int>& support) {
    Ball b = ball_from_support(pts, support);
    if (support.size() == 3) return b;
    for (int i = 0; i < end; ++i) {
        const int p = order[i];
        if (!b.contains(pts[p])) {
            support.push_back(p);
            b = welzl_mtf(pts, order, i, support);
            support.pop_back();
            order.erase(order.begin() + i);
            order.insert(order.begin(), p);
        }
    }
    return b;
}

}  // namespace

InballResult inradius(const ConvexPolygon& poly) {
    const int n = poly.size();
    std::vector<GeodesicLine> sides(n);
    for (int i = 0; i < n; ++i) sides[i] = poly.side_line(i);

    ModelPoint p = poly.centroid();
    double f = min_side_distance(p, sides);

    // Subgradient ascent: step along the normalized sum of the active side
    // gradients with a golden line search.
    const int max_iter = 100000;
    int stagnant = 0;
    for (int it = 0; it < max_iter && stagnant < 3; ++it) {
        const double act = std::max(1e-9, 1e-4 * f);
        Vec3 dir{0, 0, 0};
        for (int i = 0; i < n; ++i)
            if (distance_to_line(p, sides[i]) <= f + act) dir = dir + line_gradient(p, sides[i]);
        const double nrm = std::sqrt(std::max(mdot(dir, dir), 0.0));
        if (nrm < 1e-12) break;
        dir = dir * (1.0 / nrm);
        double span = std::max(f, 1e-3);
        const double t = golden_max(
            [&](double s) { return min_side_distance(exp_point(p, dir, s), sides); }, 0.0,
            span, 1e-12);
        const ModelPoint q = exp_point(p, dir, t);
        const double fq = min_side_distance(q, sides);
        if (fq > f + 1e-15) {
            p = q;
            f = fq;
            stagnant = (t < 1e-10) ? stagnant + 1 : 0;
        } else {
            ++stagnant;
        }
    }

    // Nelder-Mead polish in disk coordinates around the ascent iterate.
    const double k = poly.scale();
    auto obj = [&](std::array<double, 2> x) {
        return min_side_distance(ModelPoint::from_disk(k, x[0], x[1]), sides);
    };
    std::array<double, 2> x = p.to_disk();
    for (double sz : {1e-2, 1e-5, 1e-7}) x = nelder_mead_max(obj, x, sz, 400, 1e-15);
    const ModelPoint center = ModelPoint::from_disk(k, x[0], x[1]);
    const double r = min_side_distance(center, sides);
    if (!(r > 0.0))
        throw NumericFailureError("inradius ascent did not reach an interior maximizer");

    InballResult res{center, r, {}};
    for (int i = 0; i < n; ++i)
        if (distance_to_line(center, sides[i]) <= r + 1e-7) res.active_sides.push_back(i);
    return res;
}

CircumballResult smallest_enclosing_circle(const std::vector<ModelPoint>& pts) {
    if (pts.empty()) throw DegenerateInputError("empty point set");
    std::vector<int> order(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
    std::vector<int> support;
    const Ball b = welzl_mtf(pts, order, static_cast<int>(pts.size()), support);
    const ModelPoint center = ModelPoint::on_sheet(b.center, b.k);
    CircumballResult res{center, std::max(b.radius, 0.0), {}};
    for (size_t i = 0; i < pts.size(); ++i)
        if (std::abs(distance(center, pts[i]) - res.R) <= 1e-9)
            res.support_vertices.push_back(static_cast<int>(i));
    return res;
}

CircumballResult circumradius(const ConvexPolygon& p) {
    return smallest_enclosing_circle(p.vertices());
}

double gap(const ConvexPolygon& p) { return circumradius(p).R - inradius(p).r; }

}  // namespace kconvex
