#include <doctest.h>

#include <cmath>
#include <random>

#include "kconvex/arc_chain.hpp"
#include "kconvex/generator.hpp"
#include "oracles.hpp"

using namespace kconvex;

TEST_CASE("delta_bar values and domain") {
    CHECK(delta_bar(0.0, 1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    // tanh(k l/2) = tanh(k rho) exactly at l = 2 rho: half circle.
    CHECK(delta_bar(2.0, 1.0, 1.0) == doctest::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(delta_bar(1.4, 0.7, 0.8) == doctest::Approx(M_PI / 2).epsilon(1e-12));

    const double expected = std::asin(std::tanh(0.5) / std::tanh(1.0));
    CHECK(expected == doctest::Approx(0.6522).epsilon(1e-3));
    CHECK(delta_bar(1.0, 1.0, 1.0) == doctest::Approx(expected).epsilon(1e-14));

    CHECK_THROWS_AS(delta_bar(2.1, 1.0, 1.0), SpanError);
    CHECK_THROWS(delta_bar(1.0, -1.0, 1.0));
}

TEST_CASE("arc chain endpoints sit on their arcs") {
    GeneratorParams params;
    GeneratorStats stats;
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = sample_polygon(rng, params, stats);
        const auto chain = build_arc_chain(p, params.rho);
        REQUIRE(static_cast<int>(chain.arcs.size()) == p.size());
        for (const auto& arc : chain.arcs) {
            CHECK(distance(arc.center, p.vertex(arc.from_index)) ==
                  doctest::Approx(chain.rho).epsilon(1e-9));
            CHECK(distance(arc.center, p.vertex(arc.to_index)) ==
                  doctest::Approx(chain.rho).epsilon(1e-9));
        }
    }
}

TEST_CASE("span failure names the offending side") {
    const auto tri = oracles::equilateral_triangle(1.0, 1.0);
    try {
        build_arc_chain(tri, 0.3);  // sides of length 1 need rho >= 0.5
        FAIL("expected SpanError");
    } catch (const SpanError& e) {
        CHECK(e.side_index >= 0);
        CHECK(e.side_index < 3);
    }
}

TEST_CASE("half-circle arcs: side length 2 rho gives delta = pi/2") {
    const double side = 0.6;
    const auto tri = oracles::equilateral_triangle(1.0, side);
    const auto chain = build_arc_chain(tri, side / 2.0);
    // acos/acosh conditioning near the degenerate configuration caps
    // resolution at ~1e-8.
    for (double d : chain.delta) CHECK(d == doctest::Approx(M_PI / 2).epsilon(1e-7));
    // Center of a half circle is the chord midpoint.
    CHECK(distance(chain.arcs[0].center,
                   geodesic_midpoint(tri.vertex(chain.arcs[0].from_index),
                                     tri.vertex(chain.arcs[0].to_index))) < 1e-7);
}

TEST_CASE("large-rho limit: horocyclic curvature and sagitta") {
    const double k = 0.8, side = 1.0, rho = 20.0;
    CHECK(circle_normal_curvature(k, rho) == doctest::Approx(k).epsilon(1e-10));

    const auto tri = oracles::equilateral_triangle(k, side);
    const auto chain = build_arc_chain(tri, rho);
    // Apex of arc i: continue from the chord midpoint away from the center.
    const ModelPoint a = tri.vertex(chain.arcs[0].from_index);
    const ModelPoint b = tri.vertex(chain.arcs[0].to_index);
    const ModelPoint m = geodesic_midpoint(a, b);
    const double h = distance(chain.arcs[0].center, m);
    const double sagitta = rho - h;
    // Exact limit of the bulge height as rho -> infinity.
    CHECK(sagitta == doctest::Approx(std::log(std::cosh(k * side / 2.0)) / k)
                         .epsilon(1e-6));
}

TEST_CASE("arc centers lie on the interior side and bisector") {
    GeneratorParams params;
    GeneratorStats stats;
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = sample_polygon(rng, params, stats);
        const auto chain = build_arc_chain(p, params.rho);
        for (int i = 0; i < p.size(); ++i) {
            const auto& arc = chain.arcs[i];
            CHECK(distance_to_line(arc.center, p.side_line(i)) > 0.0);
            // Equidistance from both endpoints pins the center to the
            // perpendicular bisector; radius rho and the side pick make the
            // two-circle intersection unique.
            CHECK(std::abs(distance(arc.center, p.vertex(arc.from_index)) -
                           distance(arc.center, p.vertex(arc.to_index))) < 1e-12);
        }
    }
}

TEST_CASE("measured delta equals delta_bar when model scale is k1") {
    GeneratorParams params;
    params.k_min = params.k_max = 1.0;
    GeneratorStats stats;
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = sample_polygon(rng, params, stats);
        const auto chain = build_arc_chain(p, params.rho);
        const auto len = side_lengths(p);
        for (int i = 0; i < p.size(); ++i)
            CHECK(chain.delta[i] ==
                  doctest::Approx(delta_bar(len[i], chain.rho, 1.0)).epsilon(1e-9));
    }
}

TEST_CASE("measured delta is bounded by the comparison delta for k < k1") {
    GeneratorParams params;
    params.k_min = 0.5;
    params.k_max = 0.9;
    GeneratorStats stats;
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = sample_polygon(rng, params, stats);
        const auto chain = build_arc_chain(p, params.rho);
        const auto len = side_lengths(p);
        for (int i = 0; i < p.size(); ++i)
            CHECK(chain.delta[i] <= delta_bar(len[i], chain.rho, 1.0) + 1e-12);
    }
}

TEST_CASE("convexity conditions and implication chain on a hypothesis corpus") {
    GeneratorParams params;  // hypothesis-filtered by default
    GeneratorStats stats;
    const auto corpus = generate_corpus(35, 50, params, stats);
    for (const auto& p : corpus) {
        const auto chain = build_arc_chain(p, params.rho);
        for (int i = 0; i < p.size(); ++i) {
            const auto rep = convexity_condition(chain, i, params.band.k1);
            CHECK(rep.cco3);
            CHECK(rep.cco2);
            CHECK(rep.cco1);
            CHECK(rep.implication_ok);
            CHECK(rep.junction_angle >= -1e-9);
            CHECK(rep.junction_angle <= M_PI + 1e-9);
        }
    }
}

TEST_CASE("near-flat vertex fails every convexity condition") {
    const ModelPoint base = ModelPoint::base(1.0);
    const ModelPoint a = exp_point(base, {0.0, 1.0, 0.0}, 0.8);
    const ModelPoint b = exp_point(base, {0.0, 0.0, 1.0}, 0.8);
    const ModelPoint mid = exp_point(base, log_direction(base, a), 0.4);
    const ModelPoint flat = exp_point(mid, -GeodesicLine::through(base, a).normal, 1e-5);
    const auto quad = ConvexPolygon::try_create({base, flat, a, b});
    REQUIRE(quad.has_value());
    const auto chain = build_arc_chain(*quad, 0.7);  // longest side ~1.19 < 2 rho
    const auto rep = convexity_condition(chain, 1, 1.0);
    CHECK(!rep.cco1);
    CHECK(!rep.cco2);
    CHECK(!rep.cco3);
    CHECK(rep.implication_ok);  // the chain direction itself is intact
}

TEST_CASE("bpai chain endpoint tightness") {
    // delta-bar = pi/2 on both sides: first link is exactly tight.
    const auto tight = check_bpai_chain(2.0, 2.0, 4.0, 1.0, 1.0);
    CHECK(std::abs(tight[0]) < 1e-12);
    // Zero-length sides: the sine bound is tight at the origin too.
    const auto zero = check_bpai_chain(0.0, 0.0, 4.0, 1.0, 1.0);
    CHECK(std::abs(zero[0]) < 1e-15);
    // Tiny sides: the final tanh(x) <= x link approaches equality.
    const auto small = check_bpai_chain(1e-5, 1e-5, 4.0, 1.0, 1.0);
    CHECK(small[3] >= 0.0);
    CHECK(small[3] < 1e-9);
}

TEST_CASE("bpai chain slacks on a hypothesis corpus") {
    GeneratorParams params;
    GeneratorStats stats;
    const auto corpus = generate_corpus(36, 100, params, stats);
    for (const auto& p : corpus) {
        const auto rep = vertex_curvature_a(p);
        for (const auto& vc : rep.per_vertex) {
            const auto slack =
                check_bpai_chain(vc.l_prev, vc.l_next, vc.kappa_a, params.band.k1,
                                 params.rho);
            for (double s : slack) CHECK(s >= -1e-12);
            CHECK(std::abs(slack[1]) < 1e-12);  // identity link
        }
    }
}

TEST_CASE("parallel curve piece curvatures") {
    const auto tri = oracles::equilateral_triangle(1.0, 0.8);
    const auto curve = parallel_curve(build_arc_chain(tri, 1.0), 0.1);
    CHECK(curve.side_piece_curvature() == doctest::Approx(1.2492).epsilon(1e-4));
    CHECK(curve.vertex_piece_curvature() == doctest::Approx(10.033).epsilon(1e-4));
    CHECK(curve.side_piece_curvature() ==
          doctest::Approx(1.0 / std::tanh(1.1)).epsilon(1e-14));
    CHECK(curve.vertex_piece_curvature() ==
          doctest::Approx(1.0 / std::tanh(0.1)).epsilon(1e-14));
}

TEST_CASE("parallel curve boundary is equidistant from the chain") {
    const auto tri = oracles::equilateral_triangle(1.0, 0.8);
    const auto chain = build_arc_chain(tri, 1.0);
    for (double eps : {1e-2, 1e-6}) {
        const auto curve = parallel_curve(chain, eps);
        for (const auto& q : curve.sample_boundary(40))
            CHECK(chain.distance_to_region(q) == doctest::Approx(eps).epsilon(1e-8));
    }
}

TEST_CASE("containment nesting: polygon in chain in parallel curves") {
    GeneratorParams params;
    GeneratorStats stats;
    std::mt19937_64 rng(37);
    const auto corpus = generate_corpus(38, 5, params, stats);
    for (const auto& p : corpus) {
        const auto chain = build_arc_chain(p, params.rho);
        for (int i = 0; i < p.size(); ++i) {
            CHECK(chain.contains(p.vertex(i), 1e-9));
            CHECK(chain.contains(geodesic_midpoint(p.vertex(i - 1), p.vertex(i)), 1e-9));
        }
        const auto inner = parallel_curve(chain, 0.05);
        const auto outer = parallel_curve(chain, 0.15);
        for (const auto& q : chain.sample_boundary(50)) {
            CHECK(inner.contains(q));
            CHECK(outer.contains(q));
        }
        // Membership nesting on random points around the polygon.
        for (int s = 0; s < 2000; ++s) {
            const ModelPoint q = oracles::random_point(rng, p.scale(), 1.2);
            if (inner.contains(q, 0.0)) CHECK(outer.contains(q, 1e-12));
            if (chain.contains(q, 0.0)) CHECK(inner.contains(q, 1e-12));
        }
    }
}

TEST_CASE("parallel curve construction rejects non-convex chains") {
    const ModelPoint base = ModelPoint::base(1.0);
    const ModelPoint a = exp_point(base, {0.0, 1.0, 0.0}, 0.8);
    const ModelPoint b = exp_point(base, {0.0, 0.0, 1.0}, 0.8);
    const ModelPoint mid = exp_point(base, log_direction(base, a), 0.4);
    const ModelPoint flat = exp_point(mid, -GeodesicLine::through(base, a).normal, 1e-5);
    const auto quad = ConvexPolygon::try_create({base, flat, a, b});
    REQUIRE(quad.has_value());
    CHECK_THROWS_AS(parallel_curve(build_arc_chain(*quad, 0.7), 0.1),
                    DegenerateInputError);
}

TEST_CASE("theorem-1-on-parallel bound converges to the rho bound as eps -> 0") {
    const CurvatureBand band(1.0, 0.5);
    const double rho = 0.5;
    GeneratorParams params;
    GeneratorStats stats;
    const auto p = generate_corpus(39, 1, params, stats).front();
    const auto chain = build_arc_chain(p, rho);
    const double limit = thm1_bounds(band, rho).r_max;
    double prev = std::numeric_limits<double>::infinity();
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        const double cur = thm1_bounds_on_parallel(parallel_curve(chain, eps), band).r_max;
        CHECK(cur >= limit);           // rho + eps only enlarges the bound
        CHECK(cur <= prev + 1e-15);    // monotone in eps
        CHECK(std::abs(cur - limit) <= 10.0 * eps);
        prev = cur;
    }
}
