#pragma once

#include <cstdint>

#include "plab/polynomial.hpp"
#include "plab/quadrature.hpp"

namespace plab {

// Counter-based splitmix64: output k of the sequential generator seeded with
// `seed`, computable at any index without stepping. This is what makes the
// Monte Carlo estimate reproducible bit-for-bit under any parallel schedule.
inline constexpr const char* kMonteCarloGenerator = "splitmix64";

inline uint64_t splitmix64_at(uint64_t seed, uint64_t index) {
    uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline double unit_double(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53; // [0, 1)
}

// Stream derivation for independent sub-tasks (sweep cells, sample indices).
inline uint64_t child_seed(uint64_t master, uint64_t index) { return splitmix64_at(master, index); }

struct MonteCarloConfig {
    uint64_t samples = 1'000'000;
    uint64_t seed = 1;
    Exec exec = Exec::parallel;
};

// Mean of |f(U_i)|^q over uniform points of the unit cube; sample i uses
// coordinates splitmix64_at(seed, i*dim + j). err_estimate is one standard
// error. Deterministic for fixed (seed, samples) regardless of threading.
QuadResult integrate_power_mc(const Polynomial& f, double q, const MonteCarloConfig& cfg);

} // namespace plab
