#include <doctest.h>

#include <cmath>
#include <random>

#include "kconvex/extremal.hpp"
#include "kconvex/generator.hpp"
#include "kconvex/surface.hpp"
#include "oracles.hpp"

using namespace kconvex;

namespace {

// Closed-form distance in curvature -k^2 between polar points about the pole.
double polar_distance(double k, const SurfacePoint& a, const SurfacePoint& b) {
    const double ch = std::cosh(k * a.r) * std::cosh(k * b.r) -
                      std::sinh(k * a.r) * std::sinh(k * b.r) * std::cos(b.theta - a.theta);
    return std::acosh(std::max(ch, 1.0)) / k;
}

SurfacePoint random_annulus_point(std::mt19937_64& rng, double r_lo, double r_hi) {
    return {r_lo + (r_hi - r_lo) * uniform01(rng), 2.0 * M_PI * uniform01(rng) - M_PI};
}

}  // namespace

TEST_CASE("profile invariants at the pole and curvature values") {
    const auto cc = SurfaceProfile::constant_curvature(0.8);
    CHECK(cc.f(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(cc.fp(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cc.f(1.3) == doctest::Approx(std::sinh(0.8 * 1.3) / 0.8).epsilon(1e-15));
    CHECK(cc.curvature(2.0) == doctest::Approx(-0.64).epsilon(1e-15));

    const auto bl = SurfaceProfile::blended(1.0, 0.5, 1.0, 1.0);
    CHECK(bl.f(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(bl.fp(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bl.curvature(0.5) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(bl.curvature(2.5) == doctest::Approx(-0.25).epsilon(1e-15));
    // Inside the constant inner region the profile is exactly sinh-type.
    CHECK(bl.f(0.9) == doctest::Approx(std::sinh(0.9)).epsilon(1e-9));
    CHECK(bl.fp(0.9) == doctest::Approx(std::cosh(0.9)).epsilon(1e-9));
}

TEST_CASE("pinching certificate") {
    const auto bl = SurfaceProfile::blended(1.0, 0.5, 1.0, 1.0, 8.0);
    CHECK(bl.pinched_within(1.0, 0.5, 0.0, 8.0));
    CHECK(!bl.pinched_within(0.9, 0.5, 0.0, 8.0));  // band too tight above
    CHECK(!bl.pinched_within(1.0, 0.6, 0.0, 8.0));  // and below
    CHECK(SurfaceProfile::constant_curvature(1.0).pinched_within(1.0, 1.0, 0.0, 8.0));
    CHECK_THROWS_AS(SurfaceProfile::blended(0.5, 1.0, 1.0, 1.0), DegenerateInputError);
}

TEST_CASE("radial geodesics") {
    const auto prof = SurfaceProfile::constant_curvature(1.0);
    const auto out = geodesic_shoot(prof, {0.5, 0.7}, 0.0, 1.1);
    CHECK(out.end.r == doctest::Approx(1.6).epsilon(1e-9));
    CHECK(out.end.theta == doctest::Approx(0.7).epsilon(1e-9));
    CHECK(out.end_direction == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(out.clairaut_drift < 1e-12);

    const auto in = geodesic_shoot(prof, {0.5, 0.7}, M_PI, 0.3);
    CHECK(in.end.r == doctest::Approx(0.2).epsilon(1e-9));
    CHECK(in.end.theta == doctest::Approx(0.7).epsilon(1e-9));

    // From the pole the ray follows the launch bearing.
    const auto ray = geodesic_shoot(prof, {0.0, 0.0}, 1.2, 0.8);
    CHECK(ray.end.r == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(ray.end.theta == doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("sinh profile distances match the constant-curvature closed form") {
    std::mt19937_64 rng(51);
    for (double k : {1.0, 0.7}) {
        const auto prof = SurfaceProfile::constant_curvature(k);
        for (int i = 0; i < 20; ++i) {
            const SurfacePoint p = random_annulus_point(rng, 0.1, 1.5);
            const SurfacePoint q = random_annulus_point(rng, 0.1, 1.5);
            const double expected = polar_distance(k, p, q);
            if (expected < 1e-3) continue;
            CHECK(distance_bvp(prof, p, q).length ==
                  doctest::Approx(expected).epsilon(1e-6));
        }
    }
}

TEST_CASE("Clairaut constant is conserved along shots") {
    std::mt19937_64 rng(52);
    const auto bl = SurfaceProfile::blended(1.0, 0.5, 1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const SurfacePoint p = random_annulus_point(rng, 0.2, 1.5);
        const double dir = 2.0 * M_PI * uniform01(rng) - M_PI;
        const auto sh = geodesic_shoot(bl, p, dir, 1.0);
        CHECK(sh.clairaut_drift < 1e-9);
    }
}

TEST_CASE("shooting reversibility") {
    std::mt19937_64 rng(53);
    const auto bl = SurfaceProfile::blended(1.0, 0.5, 1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const SurfacePoint p = random_annulus_point(rng, 0.3, 1.2);
        const double dir = 2.0 * M_PI * uniform01(rng) - M_PI;
        const auto fwd = geodesic_shoot(bl, p, dir, 0.8);
        const auto back =
            geodesic_shoot(bl, fwd.end, wrap_angle(fwd.end_direction + M_PI), 0.8);
        CHECK(back.end.r == doctest::Approx(p.r).epsilon(1e-8));
        // Compare angular error in length units via the warping factor.
        CHECK(bl.f(p.r) * std::abs(wrap_angle(back.end.theta - p.theta)) < 1e-8);
    }
}

TEST_CASE("two-point solver: radial cases and symmetry") {
    const auto bl = SurfaceProfile::blended(1.0, 0.5, 1.0, 1.0);
    CHECK(distance_bvp(bl, {0.4, 1.0}, {1.1, 1.0}).length ==
          doctest::Approx(0.7).epsilon(1e-10));
    CHECK(distance_bvp(bl, {0.0, 0.0}, {0.9, 2.0}).length ==
          doctest::Approx(0.9).epsilon(1e-12));
    CHECK(distance_bvp(bl, {0.9, 2.0}, {0.0, 0.0}).length ==
          doctest::Approx(0.9).epsilon(1e-12));
    CHECK_THROWS_AS(distance_bvp(bl, {0.0, 0.0}, {0.0, 1.0}), DegenerateInputError);

    std::mt19937_64 rng(54);
    for (int i = 0; i < 15; ++i) {
        const SurfacePoint p = random_annulus_point(rng, 0.1, 1.4);
        const SurfacePoint q = random_annulus_point(rng, 0.1, 1.4);
        const double fwd = distance_bvp(bl, p, q).length;
        const double rev = distance_bvp(bl, q, p).length;
        CHECK(fwd == doctest::Approx(rev).epsilon(1e-8));
    }
}

TEST_CASE("triangle inequality on the blended surface") {
    const auto bl = SurfaceProfile::blended(1.0, 0.5, 1.0, 1.0);
    std::mt19937_64 rng(55);
    for (int i = 0; i < 15; ++i) {
        const SurfacePoint a = random_annulus_point(rng, 0.1, 1.3);
        const SurfacePoint b = random_annulus_point(rng, 0.1, 1.3);
        const SurfacePoint c = random_annulus_point(rng, 0.1, 1.3);
        const double ab = distance_bvp(bl, a, b).length;
        const double bc = distance_bvp(bl, b, c).length;
        const double ac = distance_bvp(bl, a, c).length;
        CHECK(ac <= ab + bc + 1e-9);
    }
}

TEST_CASE("Toponogov margins vanish in the comparison space itself") {
    const auto prof = SurfaceProfile::constant_curvature(1.0);
    std::mt19937_64 rng(56);
    int done = 0;
    while (done < 10) {
        const std::array<SurfacePoint, 3> tri = {random_annulus_point(rng, 0.2, 1.2),
                                                 random_annulus_point(rng, 0.2, 1.2),
                                                 random_annulus_point(rng, 0.2, 1.2)};
        if (polar_distance(1.0, tri[0], tri[1]) < 0.2 ||
            polar_distance(1.0, tri[1], tri[2]) < 0.2 ||
            polar_distance(1.0, tri[2], tri[0]) < 0.2)
            continue;
        for (double m : toponogov_angle_check(prof, tri, 1.0))
            CHECK(std::abs(m) < 1e-6);
        ++done;
    }
}

TEST_CASE("Toponogov margins are nonnegative under pinching") {
    const auto bl = SurfaceProfile::blended(1.0, 0.5, 1.0, 1.0);
    std::mt19937_64 rng(57);
    int done = 0;
    while (done < 30) {
        const std::array<SurfacePoint, 3> tri = {random_annulus_point(rng, 0.2, 1.6),
                                                 random_annulus_point(rng, 0.2, 1.6),
                                                 random_annulus_point(rng, 0.2, 1.6)};
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            ok = ok && distance_bvp(bl, tri[i], tri[(i + 1) % 3]).length > 0.05;
        if (!ok) continue;
        for (double m : toponogov_angle_check(bl, tri, 1.0)) CHECK(m >= -1e-6);
        ++done;
    }
}

TEST_CASE("numeric polygon radii match exact solvers on the sinh profile") {
    // Asymmetric quadrilateral around the pole.
    const std::vector<SurfacePoint> verts = {
        {0.30, 0.1}, {0.26, 1.8}, {0.33, 3.0}, {0.28, -1.7}};
    const auto prof = SurfaceProfile::constant_curvature(1.0);
    const auto [r_num, R_num] = polygon_extremal_radii_numeric(prof, verts);

    const ModelPoint base = ModelPoint::base(1.0);
    std::vector<ModelPoint> mv;
    for (const auto& v : verts)
        mv.push_back(exp_point(base, {0.0, std::cos(v.theta), std::sin(v.theta)}, v.r));
    const auto poly = ConvexPolygon::create(std::move(mv));
    CHECK(r_num == doctest::Approx(inradius(poly).r).epsilon(2e-3));
    CHECK(R_num == doctest::Approx(circumradius(poly).R).epsilon(2e-3));
}

TEST_CASE("pole-symmetric polygon has pole-centered radii") {
    std::vector<SurfacePoint> verts;
    for (int i = 0; i < 5; ++i) verts.push_back({0.3, 2.0 * M_PI * i / 5.0});
    const auto prof = SurfaceProfile::constant_curvature(1.0);
    const auto [r_num, R_num] = polygon_extremal_radii_numeric(prof, verts);
    CHECK(R_num == doctest::Approx(0.3).epsilon(2e-3));

    const auto poly = oracles::regular_polygon(1.0, 5, 0.3);
    const double apothem = distance_to_line(ModelPoint::base(1.0), poly.side_line(0));
    CHECK(r_num == doctest::Approx(apothem).epsilon(2e-3));
}

TEST_CASE("non-convex vertex order is rejected") {
    const std::vector<SurfacePoint> star = {
        {0.30, 0.1}, {0.33, 3.0}, {0.26, 1.8}, {0.28, -1.7}};
    const auto prof = SurfaceProfile::constant_curvature(1.0);
    CHECK_THROWS_AS(polygon_extremal_radii_numeric(prof, star), std::domain_error);
}

TEST_CASE("blended-profile polygon satisfies the inradius inequality") {
    // Hypothesis-style polygon in the inner (strict) region of the blend.
    std::vector<SurfacePoint> verts;
    for (int i = 0; i < 4; ++i) verts.push_back({0.25, 2.0 * M_PI * i / 4.0 + 0.2});
    const auto bl = SurfaceProfile::blended(1.0, 0.5, 1.0, 1.0);
    const auto [r_num, R_num] = polygon_extremal_radii_numeric(bl, verts);
    CHECK(r_num > 0.0);
    CHECK(r_num <= R_num + 1e-9);

    const double rho = 0.5;
    // Eq-style inradius inequality with numeric resolution margin.
    CHECK(1.0 / std::tanh(r_num) >= 0.5 / std::tanh(0.5 * rho) - 1e-3);
}
