#include "plab/exact_integrate.hpp"

#include <cmath>
#include <map>

namespace plab {

Rational integrate_monomial_exact(const MultiIndex& alpha) {
    Rational r(1);
    for (int j = 0; j < alpha.dim(); ++j) r /= Rational(alpha[j] + 1);
    return r;
}

namespace {

using RatMap = std::map<MultiIndex, Rational>;

RatMap multiply(const RatMap& a, const RatMap& b, int dim, size_t budget) {
    RatMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(static_cast<size_t>(dim));
            for (int j = 0; j < dim; ++j) e[static_cast<size_t>(j)] = ea[j] + eb[j];
            out[MultiIndex(std::move(e))] += ca * cb;
            if (out.size() > budget)
                throw BudgetError("integrate_power_exact: expansion term budget exceeded");
        }
    return out;
}

} // namespace

Rational integrate_power_exact(const Polynomial& f, int k, size_t term_budget) {
    if (k < 1) throw InputError("integrate_power_exact: power must be >= 1");
    bool has_pos = false, has_neg = false;
    for (const auto& [a, c] : f.terms()) (c > 0.0 ? has_pos : has_neg) = true;
    // |f|^k is a polynomial only for sign-definite f or even k
    if (has_pos && has_neg && k % 2 != 0)
        throw InputError("integrate_power_exact: odd power of a mixed-sign polynomial");
    if (f.is_zero()) return Rational(0);

    RatMap base;
    for (const auto& [a, c] : f.terms()) base[a] = rational_from_double(c);
    RatMap power = base;
    for (int i = 1; i < k; ++i) power = multiply(power, base, f.dim(), term_budget);

    Rational total(0);
    for (const auto& [a, c] : power) total += c * integrate_monomial_exact(a);
    return abs(total); // sign-definite integrand up to one global sign
}

} // namespace plab
