#pragma once

#include <optional>
#include <vector>

#include "kconvex/bounds_types.hpp"
#include "kconvex/hyperbolic.hpp"

namespace kconvex {

// Strictly convex geodesic polygon, vertices in counterclockwise order.
// Side i joins vertex i-1 to vertex i (cyclic).
class ConvexPolygon {
public:
    // Validates n >= 3, strict convexity (uniform positive turns) and
    // counterclockwise orientation. Throws InvalidPolygonError.
    static ConvexPolygon create(std::vector<ModelPoint> vertices);
    static std::optional<ConvexPolygon> try_create(std::vector<ModelPoint> vertices);

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<ModelPoint>& vertices() const { return vertices_; }
    const ModelPoint& vertex(int i) const;  // cyclic index
    double scale() const { return vertices_.front().scale(); }

    // Side line i carries the geodesic through vertex(i-1), vertex(i),
    // oriented so the interior is on the positive side.
    GeodesicLine side_line(int i) const;

    // Minkowski centroid projected back to the sheet; interior by convexity.
    ModelPoint centroid() const;

    bool contains(const ModelPoint& p, double tol = 1e-9) const;

private:
    explicit ConvexPolygon(std::vector<ModelPoint> v) : vertices_(std::move(v)) {}
    std::vector<ModelPoint> vertices_;
};

struct VertexCurvature {
    double alpha;    // interior angle
    double l_prev;   // length of side arriving at the vertex
    double l_next;   // length of side leaving it
    double kappa_a;  // 2(pi - alpha)/(l_prev + l_next)
    double kappa_b;  // (pi - alpha)/((1/k1)tanh(k1 l_prev/2) + (1/k1)tanh(k1 l_next/2))
};

struct VertexCurvatureReport {
    std::vector<VertexCurvature> per_vertex;
};

struct Theorem2HypothesisFlags {
    std::vector<bool> vertex_ok;  // kappa_{A_i} >= (pi/2) k1 coth(k1 rho)
    bool band_ok;                 // coth(k2 rho) >= k1/k2
    bool all_ok;
    double kappa_threshold;
};

std::vector<double> side_lengths(const ConvexPolygon& p);

std::vector<double> interior_angles(const ConvexPolygon& p);

// Both vertex-curvature definitions; kappa_b uses the comparison scale k1.
VertexCurvatureReport vertex_curvatures(const ConvexPolygon& p, double k1);

VertexCurvatureReport vertex_curvature_a(const ConvexPolygon& p);
VertexCurvatureReport vertex_curvature_b(const ConvexPolygon& p, double k1);

Theorem2HypothesisFlags check_theorem2_hypotheses(const ConvexPolygon& p,
                                                  const CurvatureBand& band,
                                                  double rho);

}  // namespace kconvex
