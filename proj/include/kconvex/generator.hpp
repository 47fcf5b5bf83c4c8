#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kconvex/polygon.hpp"

namespace kconvex {

struct GeneratorParams {
    int n_min = 3;
    int n_max = 6;
    double r0_min = 0.15;  // circumradius scale of the sampled vertex circle
    double r0_max = 0.30;
    double k_min = 0.5;  // model curvature scale sampled uniformly
    double k_max = 1.0;
    bool require_hypotheses = true;
    CurvatureBand band{1.0, 0.5};
    double rho = 0.5;
};

struct GeneratorStats {
    std::int64_t proposed = 0;
    std::int64_t rejected_convexity = 0;
    std::int64_t rejected_hypotheses = 0;
};

// Deterministic uniform double in [0, 1) from the raw generator stream;
// avoids distribution objects so the byte stream is pinned to the seed.
double uniform01(std::mt19937_64& rng);

// One rejection-sampled polygon: vertices on geodesic rays from a randomly
// placed base point at sorted angles, rejected until convex and (optionally)
// passing the polygon-theorem hypotheses.
ConvexPolygon sample_polygon(std::mt19937_64& rng, const GeneratorParams& params,
                             GeneratorStats& stats);

std::vector<ConvexPolygon> generate_corpus(std::uint64_t seed, int size,
                                           const GeneratorParams& params,
                                           GeneratorStats& stats);

}  // namespace kconvex
