#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "plab/norms.hpp"
#include "plab/sobolev.hpp"

namespace plab {

// One inequality instance. lhs is the triple-stroke norm of P - P_{m-1} at
// p*, rhs the order-m derivative triple norm at p. degenerate means rhs = 0,
// which for polynomials happens exactly when deg P < m; ratio is NaN then
// (serialized as null, never as NaN).
struct RatioReport {
    SobolevParams params;
    std::string theorem; // "1.3", "1.4" or "1.6"
    uint64_t poly_hash = 0;
    std::optional<uint64_t> seed;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = std::nan("");
    bool degenerate = false;
    double lhs_err = 0.0;
    double rhs_err = 0.0;
    uint64_t work = 0;
    // Theorem 1.6 proof sub-identities
    std::optional<bool> const_norm_equal;
    std::optional<bool> p0_le_triple;
};

// ||x^alpha||_{p*} / ||grad x^alpha||_p from closed forms (m = 1).
double monomial_ratio(const MultiIndex& alpha, const SobolevParams& params);

// Order-m analogue (all |beta| = m derivative components, closed forms).
double monomial_ratio_m(const MultiIndex& alpha, const SobolevParams& params);

struct SupResult {
    double sup = 0.0;
    MultiIndex argmax = MultiIndex::zero(1);
    uint64_t scanned = 0;
};

// Exhaustive scan over alpha with entries in [0, box], alpha != 0. Ties are
// broken toward the lexicographically smallest exponent vector, so the
// result does not depend on the execution schedule.
SupResult monomial_ratio_sup(const SobolevParams& params, int box, Exec exec = Exec::parallel);

// Per-coordinate factor (a p + 1)^{1/p} / (p* a + 1)^{1/p*} of the monomial
// ratio estimate; grows like a^{1/N} for m = 1 because 1/p - 1/p* = m/N.
double proof_factor(int a, const SobolevParams& params);
double exponent_identity_gap(const SobolevParams& params); // 1/p - 1/p* - m/N

// [sum_{a_j>=1} a_j^p (p a_j+1)/(p(a_j-1)+1)]^{-1/p}; term-wise dominated by
// the plain l^p sum, so second_factor <= ||alpha||_{l^p}^{-1} with no slack.
double second_factor(const MultiIndex& alpha, double p);
double second_factor_bracket(const MultiIndex& alpha, double p);
double lp_counting_norm(const MultiIndex& alpha, double p); // ||alpha||_{l^p}

// AM-GM and l^q-monotonicity margins. Both are reported in a power domain
// (N-th power, p-th power) where the equality cases reduce to identical
// floating-point expressions, so the margins are exactly >= 0.
struct MeanChecks {
    double amgm_am_pow = 0.0; // ((1/N) sum max(a_j,1))^N
    double amgm_gm_pow = 0.0; // prod max(a_j,1)
    double amgm_margin = 0.0;
    double l1 = 0.0;
    double lp = 0.0;
    double l1_pow = 0.0;      // (sum a_j)^p
    double lp_pow_sum = 0.0;  // sum a_j^p
    double lq_margin = 0.0;
    bool amgm_ok = false;
    bool lq_ok = false;
};

MeanChecks mean_inequality_checks(const MultiIndex& alpha, double p);

RatioReport verify_poincare(const Polynomial& p, const SobolevParams& params,
                            const NormConfig& cfg = {});
RatioReport verify_higher(const Polynomial& p, const SobolevParams& params,
                          const NormConfig& cfg = {});
RatioReport verify_embedding(const Polynomial& p, const SobolevParams& params,
                             const NormConfig& cfg = {});

// ratio(P) <= max(ratio(P_plus), ratio(P_minus)): the mediant inequality,
// which justifies restricting the constant search to single-signed inputs.
struct MediantCheck {
    double ratio_full = 0.0;
    std::optional<double> ratio_plus, ratio_minus;
    double margin = 0.0; // max(part ratios) - ratio_full
    bool single_signed = false;
};

MediantCheck mediant_reduction_check(const Polynomial& p, const SobolevParams& params,
                                     const NormConfig& cfg = {});

} // namespace plab
