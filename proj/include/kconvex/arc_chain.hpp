#pragma once

#include <array>
#include <vector>

#include "kconvex/bounds.hpp"
#include "kconvex/polygon.hpp"

namespace kconvex {

// Circular arc of radius rho about center, from polygon vertex from_index
// to vertex to_index, bulging away from the polygon interior.
struct Arc {
    ModelPoint center;
    double rho;
    int from_index;
    int to_index;
};

// Closed convex curve made of one arc per polygon side; arc i replaces the
// side joining vertex i-1 to vertex i.
struct ArcChain {
    ConvexPolygon polygon;
    double rho;
    std::vector<Arc> arcs;
    std::vector<double> delta;  // measured tilt pi/2 - angle(A_{i-1}, A_i, O_i), per side

    bool contains(const ModelPoint& p, double tol = 1e-9) const;

    // Zero inside the bounded region, else geodesic distance to the chain.
    double distance_to_region(const ModelPoint& p) const;

    std::vector<ModelPoint> sample_boundary(int per_arc) const;
};

// Outward equidistant curve: arcs of radius rho+eps about the O_i joined by
// arcs of radius eps about the vertices.
struct ParallelCurve {
    ArcChain base;
    double eps;

    double side_piece_curvature() const;    // k coth(k (rho+eps))
    double vertex_piece_curvature() const;  // k coth(k eps)

    bool contains(const ModelPoint& p, double tol = 1e-9) const;
    std::vector<ModelPoint> sample_boundary(int per_arc) const;
};

struct ConditionReport {
    int vertex;
    double alpha;           // interior angle
    double delta_prev;      // measured tilt of the arc arriving at the vertex
    double delta_next;      // measured tilt of the arc leaving it
    double delta_bar_prev;  // comparison tilts at scale k1
    double delta_bar_next;
    double junction_angle;  // pi - alpha - delta_prev - delta_next
    bool cco1;              // junction angle in [0, pi]
    bool cco2;              // delta sum <= kappa_A (l_prev + l_next)/2
    bool cco3;              // comparison delta sum <= same right side
    bool implication_ok;    // cco3 => cco2 => cco1, within 1e-9
};

ArcChain build_arc_chain(const ConvexPolygon& p, double rho);

// Comparison tilt: arcsin(tanh(k1 l/2)/tanh(k1 rho)), requires the arc to
// span the side.
double delta_bar(double l, double rho, double k1);

ConditionReport convexity_condition(const ArcChain& chain, int vertex, double k1);

// Slack of each link of the inequality chain bounding the comparison tilt
// sum by kappa_A (l_prev + l_next)/2:
//   [0] delta-bar sum <= (pi/2)(sin sum)
//   [1] (pi/2)(sin sum) = (pi/2)/tanh(k1 rho) * tanh sum  (identity, ~0)
//   [2] hypothesis step kappa_A >= (pi/2) k1 coth(k1 rho)
//   [3] tanh(x) <= x against the final right side
std::array<double, 4> check_bpai_chain(double l_prev, double l_next, double kappa_a,
                                       double k1, double rho);

ParallelCurve parallel_curve(const ArcChain& chain, double eps);

// The parallel curve is k2*coth(k2*(rho+eps))-convex, so the smooth-case
// theorem applies to it with effective radius rho+eps.
TheoremBounds thm1_bounds_on_parallel(const ParallelCurve& curve,
                                      const CurvatureBand& band);

}  // namespace kconvex
