#pragma once

#include <cstdint>
#include <vector>

#include "plab/polynomial.hpp"

namespace plab {

enum class Exec { serial, parallel };

enum class QuadMethod { graded_quadrature, monte_carlo, exact_rational };

const char* quad_method_name(QuadMethod m);

// Integration outcome. err_estimate is a claimed absolute-error bound for
// quadrature (last inter-level difference plus any pruned panel mass) and
// one standard error for Monte Carlo. work counts integrand evaluations.
struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    QuadMethod method = QuadMethod::graded_quadrature;
    uint64_t work = 0;
};

struct QuadratureConfig {
    double rel_tol = 1e-9;  // stop when two successive levels agree this well
    int gl_degree = 12;     // Gauss-Legendre points per panel per axis
    uint64_t max_evals = 500'000'000; // refinement budget across all levels
    Exec exec = Exec::parallel;
};

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Integral of |f|^q over the open unit cube for sign-definite f (all stored
// coefficients share one sign). Tensor-product Gauss-Legendre panels on a
// mesh geometrically graded (ratio 1/2) toward each face {x_j = 0}, refined
// by panel splitting until two successive levels agree to rel_tol.
// Per-axis grading depth adapts to the vanishing order of f on that face.
// Throws InputError on mixed signs, BudgetError when the evaluation budget
// would be exceeded, ConvergenceError if refinement is exhausted.
QuadResult integrate_power(const Polynomial& f, double q, const QuadratureConfig& cfg = {});

} // namespace plab
