#pragma once

#include <array>
#include <cmath>

namespace kconvex {

// Vector in Minkowski 3-space with signature (-,+,+); coordinate order (t,x,y).
struct Vec3 {
    double t{0.0};
    double x{0.0};
    double y{0.0};

    Vec3 operator+(const Vec3& o) const { return {t + o.t, x + o.x, y + o.y}; }
    Vec3 operator-(const Vec3& o) const { return {t - o.t, x - o.x, y - o.y}; }
    Vec3 operator*(double s) const { return {t * s, x * s, y * s}; }
    Vec3 operator-() const { return {-t, -x, -y}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double mdot(const Vec3& a, const Vec3& b) {
    return -a.t * b.t + a.x * b.x + a.y * b.y;
}

// w with mdot(w,a) = mdot(w,b) = 0: the Euclidean cross product with the
// time component sign-flipped. For a, b on the upper hyperboloid, w is
// spacelike and positive on the left of the directed geodesic a -> b.
inline Vec3 mcross(const Vec3& a, const Vec3& b) {
    const double ct = a.x * b.y - a.y * b.x;
    const double cx = a.y * b.t - a.t * b.y;
    const double cy = a.t * b.x - a.x * b.t;
    return {-ct, cx, cy};
}

// Linear isometry of the Minkowski metric (M^T J M = J with J = diag(-1,1,1)).
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    Vec3 apply(const Vec3& v) const {
        return {m[0][0] * v.t + m[0][1] * v.x + m[0][2] * v.y,
                m[1][0] * v.t + m[1][1] * v.x + m[1][2] * v.y,
                m[2][0] * v.t + m[2][1] * v.x + m[2][2] * v.y};
    }

    Mat3 compose(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int l = 0; l < 3; ++l) s += m[i][l] * o.m[l][j];
                r.m[i][j] = s;
            }
        return r;
    }

    static Mat3 identity() {
        Mat3 r;
        r.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        return r;
    }

    // Rotation about the t-axis.
    static Mat3 rotation(double phi) {
        const double c = std::cos(phi), s = std::sin(phi);
        Mat3 r;
        r.m = {{{1, 0, 0}, {0, c, -s}, {0, s, c}}};
        return r;
    }

    // Boost along the x-axis (hyperbolic translation).
    static Mat3 boost(double chi) {
        const double c = std::cosh(chi), s = std::sinh(chi);
        Mat3 r;
        r.m = {{{c, s, 0}, {s, c, 0}, {0, 0, 1}}};
        return r;
    }
};

}  // namespace kconvex
