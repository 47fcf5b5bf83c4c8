#include "kconvex/bounds.hpp"

#include <cmath>
#include <numbers>

#include "kconvex/extremal.hpp"

namespace kconvex {

namespace {

double ln2_term(double k1, Ln2Variant v) {
    return (v == Ln2Variant::dimensional ? 1.0 / k1 : k1) * std::numbers::ln2;
}

TheoremBounds with_log_terms(double r_max, double k1) {
    return {r_max, r_max + ln2_term(k1, Ln2Variant::dimensional),
            r_max + ln2_term(k1, Ln2Variant::as_written)};
}

}  // namespace

TheoremBounds thm1_bounds(const CurvatureBand& band, double rho) {
    if (!(rho > 0.0)) throw std::domain_error("rho must be positive");
    if (!(band.k2 > 0.0))
        throw HypothesisViolationError("thm1_bounds requires k2 > 0; use the k2 = 0 form");
    const double arg = (band.k2 / band.k1) / std::tanh(band.k2 * rho);
    // arccoth reports +inf at the hypothesis boundary and throws below it.
    return with_log_terms(arccoth(arg) / band.k1, band.k1);
}

TheoremBounds thm1prime_bounds(double k1, double rho) {
    if (!(k1 > 0.0) || !(rho > 0.0))
        throw std::domain_error("thm1prime_bounds requires k1 > 0, rho > 0");
    return with_log_terms(rho, k1);
}

TheoremBounds thm1doubleprime_bounds(double k1, double rho) {
    if (!(k1 > 0.0) || !(rho > 0.0))
        throw std::domain_error("thm1doubleprime_bounds requires k1 > 0, rho > 0");
    return with_log_terms(arccoth(1.0 / (k1 * rho)) / k1, k1);
}

double lemma_bm02_gap(double k1, double r, Ln2Variant variant) {
    if (!(r > 0.0)) throw std::domain_error("r must be positive");
    const double tau = std::tanh(k1 * r / 2.0);
    const double st = std::sqrt(tau);
    const double c = variant == Ln2Variant::dimensional ? 1.0 / k1 : k1;
    return c * std::log((1.0 + st) * (1.0 + st) / (1.0 + tau));
}

std::pair<double, double> sphere_curvature_range(const CurvatureBand& band, double r) {
    if (!(r > 0.0)) throw std::domain_error("r must be positive");
    const double low = band.k2 > 0.0 ? band.k2 / std::tanh(band.k2 * r) : 1.0 / r;
    const double high = band.k1 / std::tanh(band.k1 * r);
    return {low, high};
}

BoundsReport verify_theorem2(const ConvexPolygon& p, const CurvatureBand& band,
                             double rho, Ln2Variant variant) {
    BoundsReport rep;
    rep.n = p.size();
    rep.k = p.scale();
    rep.band = band;
    rep.rho = rho;
    rep.variant = variant;
    rep.hypotheses = check_theorem2_hypotheses(p, band, rho);

    const InballResult in = inradius(p);
    const CircumballResult out = smallest_enclosing_circle(p.vertices());
    rep.r = in.r;
    rep.R = out.R;
    rep.tau = std::tanh(band.k1 * rep.r / 2.0);
    rep.gap_bound = lemma_bm02_gap(band.k1, rep.r, variant);

    rep.rupb_lhs = band.k1 / std::tanh(band.k1 * rep.r);
    rep.rupb_rhs = band.k2 > 0.0 ? band.k2 / std::tanh(band.k2 * rho) : 1.0 / rho;
    rep.rupb_margin = rep.rupb_lhs - rep.rupb_rhs;

    if (!rep.hypotheses.all_ok) {
        rep.verdict = Verdict::skipped;
        return rep;
    }

    const TheoremBounds b = band.k2 > 0.0 ? thm1_bounds(band, rho)
                                          : thm1doubleprime_bounds(band.k1, rho);
    rep.r_bound = b.r_max;
    rep.R_bound_dimensional = b.R_max_dimensional;
    rep.R_bound_as_written = b.R_max_as_written;
    rep.r_margin = rep.r_bound - rep.r;
    rep.R_margin = b.pick(variant) - rep.R;

    const bool ok = rep.rupb_margin >= -1e-6 && rep.r_margin >= -1e-6 &&
                    rep.R_margin >= -1e-6;
    rep.verdict = ok ? Verdict::pass : Verdict::fail;
    return rep;
}

}  // namespace kconvex
