#pragma once

#include <cstdint>
#include <string>

#include "plab/monte_carlo.hpp"
#include "plab/polynomial.hpp"

namespace plab {

enum class SignMode { mixed, positive_only };

// Deterministic random polynomial: support drawn uniformly (without
// replacement) from the multi-indices with degree in [min_degree,
// max_degree], coefficients from a symmetric uniform distribution on
// [-1,1] \ {0} (or (0,1] in positive-only mode). Identical seeds give
// identical polynomials.
struct SamplerConfig {
    int dim = 1;
    int max_degree = 1;
    int support_size = 1;
    int min_degree = 1; // 0 admits a constant term
    SignMode sign_mode = SignMode::mixed;
    std::string coef_dist = "uniform";
    uint64_t seed = 1;
};

Polynomial sample_polynomial(const SamplerConfig& cfg);

} // namespace plab
