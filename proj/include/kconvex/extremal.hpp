#pragma once

#include <vector>

#include "kconvex/polygon.hpp"

namespace kconvex {

struct InballResult {
    ModelPoint center;
    double r;
    std::vector<int> active_sides;  // sides within tolerance of the min distance
};

struct CircumballResult {
    ModelPoint center;
    double R;
    std::vector<int> support_vertices;  // vertices on the bounding circle
};

// Largest inscribed circle: maximizes the minimum signed distance to the
// side lines. Subgradient ascent with geodesic line search, Nelder-Mead
// polish in disk coordinates on stagnation.
InballResult inradius(const ConvexPolygon& p);

// Smallest enclosing circle of the vertex set (equals the circumball of a
// convex polygon); Welzl-style move-to-front recursion over <= 3 supports.
CircumballResult circumradius(const ConvexPolygon& p);

CircumballResult smallest_enclosing_circle(const std::vector<ModelPoint>& pts);

// Measured circumradius minus inradius, the quantity bounded by the
// R - r gap lemma.
double gap(const ConvexPolygon& p);

}  // namespace kconvex
