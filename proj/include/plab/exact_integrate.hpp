#pragma once

#include <cstddef>

#include "plab/polynomial.hpp"
#include "plab/rational.hpp"

namespace plab {

// Exact integral of a monomial over the unit cube: prod_j 1/(alpha_j + 1).
Rational integrate_monomial_exact(const MultiIndex& alpha);

// Exact rational value of the integral of |f|^k over the unit cube for
// integer k (sign-definite f; coefficients are converted losslessly from
// their binary representation). Expands f^k term-wise, so a term budget
// guards against combinatorial blow-up.
Rational integrate_power_exact(const Polynomial& f, int k, size_t term_budget = 200000);

} // namespace plab
