#include "kconvex/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kconvex {

double uniform01(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

std::optional<ConvexPolygon> propose(std::mt19937_64& rng, const GeneratorParams& p) {
    const double k = uniform(rng, p.k_min, p.k_max);
    const int n = p.n_min + static_cast<int>(uniform01(rng) * (p.n_max - p.n_min + 1));
    const double r0 = uniform(rng, p.r0_min, p.r0_max);

    std::vector<double> angles(n);
    for (double& a : angles) a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    std::sort(angles.begin(), angles.end());
    for (int i = 0; i < n; ++i) {
        const double gap = (i + 1 < n ? angles[i + 1] : angles[0] + 2.0 * std::numbers::pi) -
                           angles[i];
        if (gap < 0.15) return std::nullopt;  // near-collinear vertex triple ahead
    }

    // Random placement so corpora do not cluster at the model base point.
    const Mat3 iso = Mat3::rotation(uniform(rng, 0.0, 2.0 * std::numbers::pi))
                         .compose(Mat3::boost(uniform(rng, 0.0, 0.5)));

    const ModelPoint base = ModelPoint::base(k);
    std::vector<ModelPoint> verts;
    verts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double rad = r0 * uniform(rng, 0.85, 1.0);
        const Vec3 dir{0.0, std::cos(angles[i]), std::sin(angles[i])};
        verts.push_back(apply_isometry(iso, exp_point(base, dir, rad)));
    }
    return ConvexPolygon::try_create(std::move(verts));
}

}  // namespace

ConvexPolygon sample_polygon(std::mt19937_64& rng, const GeneratorParams& params,
                             GeneratorStats& stats) {
    for (int attempt = 0; attempt < 200000; ++attempt) {
        ++stats.proposed;
        auto poly = propose(rng, params);
        if (!poly) {
            ++stats.rejected_convexity;
            continue;
        }
        if (params.require_hypotheses &&
            !check_theorem2_hypotheses(*poly, params.band, params.rho).all_ok) {
            ++stats.rejected_hypotheses;
            continue;
        }
        return *poly;
    }
    throw NumericFailureError(
        "polygon sampler exhausted its attempt budget; the hypothesis predicate "
        "kappa_A >= (pi/2) k1 coth(k1 rho) may be unreachable for these parameters");
}

std::vector<ConvexPolygon> generate_corpus(std::uint64_t seed, int size,
                                           const GeneratorParams& params,
                                           GeneratorStats& stats) {
    std::mt19937_64 rng(seed);
    std::vector<ConvexPolygon> out;
    out.reserve(size);
    for (int i = 0; i < size; ++i) out.push_back(sample_polygon(rng, params, stats));
    return out;
}

}  // namespace kconvex
