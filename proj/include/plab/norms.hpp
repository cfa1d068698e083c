#pragma once

#include <optional>
#include <string>

#include "plab/exact_integrate.hpp"
#include "plab/monte_carlo.hpp"
#include "plab/polynomial.hpp"
#include "plab/quadrature.hpp"

namespace plab {

// L^q quasi-norm of a monomial on the unit cube: prod_j (q a_j + 1)^(-1/q).
// Factors are accumulated over sorted entries so the value is exactly
// invariant under coordinate permutation.
double monomial_norm_closed(const MultiIndex& alpha, double q);

// L^p quasi-norm of the gradient of x^alpha:
//   [ sum_{j: a_j >= 1} a_j^p (p a_j + 1) / (p (a_j - 1) + 1) ]^(1/p)
//   * prod_i (p a_i + 1)^(-1/p),
// equal to (sum_j ||D_j x^alpha||_p^p)^(1/p); each D_j x^alpha integrates in
// closed form, and the per-term factor stays finite at a_j = 1. Returns 0
// for the zero multi-index.
double monomial_gradient_norm_closed(const MultiIndex& alpha, double p);

// The bracket of the formula above (used on its own by the proof-chain
// checks, where it is compared against the plain l^p power sum).
double gradient_bracket(const MultiIndex& alpha, double p);

enum class NormMethod { automatic, closed_form, quadrature, monte_carlo, exact_rational };

const char* norm_method_name(NormMethod m);

struct NormConfig {
    NormMethod method = NormMethod::automatic;
    QuadratureConfig quad;
    MonteCarloConfig mc;
};

struct NormResult {
    double value = 0.0;
    NormMethod method_used = NormMethod::closed_form;
    double err_estimate = 0.0;
    uint64_t work = 0;
    std::optional<Rational> exact; // integral of |f|^q when the exact path ran
};

// Integral of |f|^q for sign-definite f. automatic dispatch: single monomial
// -> closed form, integer q in {1,2,3} -> exact rational, otherwise graded
// quadrature.
NormResult power_integral(const Polynomial& f, double q, const NormConfig& cfg = {});

// (integral of |f|^q)^(1/q), same dispatch.
NormResult lq_quasinorm(const Polynomial& f, double q, const NormConfig& cfg = {});

// |||P|||_q = |p0| + ||P_plus||_q + ||P_minus||_q (the constant term's norm
// is |p0| exactly: the cube has unit volume).
struct TripleStrokeResult {
    double value = 0.0;
    double p0_abs = 0.0;
    NormResult plus, minus;
    std::optional<Rational> exact; // total as a rational when both parts were exact
};

TripleStrokeResult triple_stroke_norm(const Polynomial& p, double q, const NormConfig& cfg = {});

// ||grad Q||_p = (sum_j int |D_j Q|^p)^(1/p) for each sign part Q, added:
// decompose first, differentiate second, so every integrand is sign-definite
// by construction.
struct GradientNormResult {
    double value = 0.0;
    double err_estimate = 0.0;
    uint64_t work = 0;
};

GradientNormResult gradient_triple_norm(const Polynomial& p, double p_exp, const NormConfig& cfg = {});

// Same with all order-m derivative components D^beta, |beta| = m; reduces to
// gradient_triple_norm at m = 1.
GradientNormResult m_gradient_triple_norm(const Polynomial& p, double p_exp, int m,
                                          const NormConfig& cfg = {});

} // namespace plab
