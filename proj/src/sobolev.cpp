#include "plab/sobolev.hpp"

namespace plab {

double sobolev_exponent(int dim, double p, int m) {
    if (dim < 1 || m < 1 || p <= 0.0)
        throw WindowError("sobolev_exponent: need N >= 1, m >= 1, p > 0");
    double denom = static_cast<double>(dim) - static_cast<double>(m) * p;
    if (denom <= 0.0)
        throw WindowError("sobolev_exponent: N - m*p must be positive");
    return static_cast<double>(dim) * p / denom;
}

Rational sobolev_exponent_exact(int dim, const Rational& p, int m) {
    if (dim < 1 || m < 1 || p <= 0)
        throw WindowError("sobolev_exponent: need N >= 1, m >= 1, p > 0");
    Rational denom = Rational(dim) - Rational(m) * p;
    if (denom <= 0)
        throw WindowError("sobolev_exponent: N - m*p must be positive");
    return Rational(dim) * p / denom;
}

SobolevParams SobolevParams::make(int dim, double p, int m) {
    SobolevParams s;
    s.dim = dim;
    s.p = p;
    s.m = m;
    s.p_star = sobolev_exponent(dim, p, m);
    return s;
}

SobolevParams SobolevParams::make_exact(int dim, const Rational& p, int m) {
    SobolevParams s;
    s.dim = dim;
    s.m = m;
    s.p_exact = p;
    s.p = to_double(p);
    s.p_star_exact = sobolev_exponent_exact(dim, p, m);
    s.p_star = to_double(*s.p_star_exact);
    return s;
}

RangeCheck range_check(const SobolevParams& params) {
    RangeCheck rc;
    const int n = params.dim;
    rc.lower = static_cast<double>(n) / static_cast<double>(n + 1);
    if (params.p_exact) {
        const Rational& p = *params.p_exact;
        rc.p_ge_lower = p >= window_lower_exact(n);
        rc.p_below_one = p < 1;
        rc.denom_positive = Rational(n) - Rational(params.m) * p > 0;
        rc.p_star_ge_one = rc.denom_positive && *params.p_star_exact >= 1;
    } else {
        rc.p_ge_lower = params.p >= rc.lower;
        rc.p_below_one = params.p < 1.0;
        rc.denom_positive = static_cast<double>(n) - static_cast<double>(params.m) * params.p > 0.0;
        // p* >= 1 is equivalent to p >= N/(N+m); the p-based form avoids the
        // rounding noise of the derived quotient at the boundary
        rc.p_star_ge_one = params.p >= static_cast<double>(n) / static_cast<double>(n + params.m);
    }
    rc.in_window = rc.p_ge_lower && rc.p_below_one && rc.denom_positive && rc.p_star_ge_one;
    return rc;
}

} // namespace plab
