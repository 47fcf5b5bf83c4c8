#pragma once

#include <utility>

#include "kconvex/bounds_types.hpp"
#include "kconvex/polygon.hpp"

namespace kconvex {

struct TheoremBounds {
    double r_max;                // may be +inf at the hypothesis boundary
    double R_max_dimensional;    // r_max + ln(2)/k1
    double R_max_as_written;     // r_max + k1*ln(2)
    double pick(Ln2Variant v) const {
        return v == Ln2Variant::dimensional ? R_max_dimensional : R_max_as_written;
    }
};

enum class Verdict { pass, fail, skipped };

struct BoundsReport {
    int n = 0;
    double k = 0.0;
    CurvatureBand band{1.0, 1.0};
    double rho = 0.0;
    Theorem2HypothesisFlags hypotheses;
    double r = 0.0;
    double R = 0.0;
    double r_bound = 0.0;
    double R_bound_dimensional = 0.0;
    double R_bound_as_written = 0.0;
    double rupb_lhs = 0.0;     // k1 coth(k1 r)
    double rupb_rhs = 0.0;     // k2 coth(k2 rho)
    double rupb_margin = 0.0;  // lhs - rhs
    double r_margin = 0.0;     // r_bound - r
    double R_margin = 0.0;     // selected R bound - R
    double tau = 0.0;          // tanh(k1 r / 2)
    double gap_bound = 0.0;    // gap lemma value in the selected variant
    Ln2Variant variant = Ln2Variant::dimensional;
    Verdict verdict = Verdict::skipped;
};

// r <= (1/k1) arccoth((k2/k1) coth(k2 rho)) plus the logarithmic R term,
// under k2 coth(k2 rho) >= k1. Requires k2 > 0.
TheoremBounds thm1_bounds(const CurvatureBand& band, double rho);

// r <= rho, R <= rho + log term; no restriction on rho.
TheoremBounds thm1prime_bounds(double k1, double rho);

// The k2 = 0 limit: r <= (1/k1) arccoth(1/(k1 rho)) under 1/rho >= k1.
TheoremBounds thm1doubleprime_bounds(double k1, double rho);

// R - r <= c * ln((1+sqrt(tau))^2/(1+tau)), tau = tanh(k1 r/2), with
// prefactor c = 1/k1 (dimensional) or c = k1 (as written). Always < c*ln 2.
double lemma_bm02_gap(double k1, double r, Ln2Variant variant);

// Normal-curvature range (k2 coth(k2 r), k1 coth(k1 r)) of a geodesic
// sphere of radius r under the pinching band.
std::pair<double, double> sphere_curvature_range(const CurvatureBand& band, double r);

BoundsReport verify_theorem2(const ConvexPolygon& p, const CurvatureBand& band,
                             double rho, Ln2Variant variant = Ln2Variant::dimensional);

}  // namespace kconvex
