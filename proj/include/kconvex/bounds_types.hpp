#pragma once

#include "kconvex/errors.hpp"

namespace kconvex {

// Pinching constants: ambient curvature K with -k1^2 <= K <= -k2^2.
struct CurvatureBand {
    double k1;
    double k2;
    bool strict_upper = false;  // whether -k2^2 > K is meant strictly

    CurvatureBand(double k1_, double k2_, bool strict = false)
        : k1(k1_), k2(k2_), strict_upper(strict) {
        if (!(k1 > 0.0) || k2 < 0.0 || k2 > k1)
            throw DegenerateInputError("curvature band requires k1 >= k2 >= 0, k1 > 0");
    }
};

// The circumradius bounds carry an additive logarithmic term the source
// states with prefactor k1; dimensional analysis suggests 1/k1. Both are
// computed; "dimensional" decides verdicts. They coincide at k1 = 1.
enum class Ln2Variant { dimensional, as_written };

}  // namespace kconvex
