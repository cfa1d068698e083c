#pragma once

#include <optional>

#include "plab/rational.hpp"

namespace plab {

// Exponent bundle (N, p, m) with the derived critical exponent
// p* = N p / (N - m p). When p is supplied as an exact rational the exact
// value of p* is carried along, so boundary identities like
// p = N/(N+1), m = 1  =>  p* = 1 hold exactly, not just to roundoff.
struct SobolevParams {
    int dim = 1;
    double p = 1.0;
    int m = 1;
    double p_star = 1.0;
    std::optional<Rational> p_exact;
    std::optional<Rational> p_star_exact;

    static SobolevParams make(int dim, double p, int m);
    static SobolevParams make_exact(int dim, const Rational& p, int m);

    // p* == 1 exactly (enables the exact L^1 integration path).
    bool p_star_is_one() const { return p_star_exact ? *p_star_exact == 1 : p_star == 1.0; }
};

double sobolev_exponent(int dim, double p, int m);
Rational sobolev_exponent_exact(int dim, const Rational& p, int m);

// Hypothesis window of the inequalities: N/(N+1) <= p < 1 together with
// N - m p > 0 (the latter is what keeps p* finite and positive). The check
// is exact when the parameters carry exact rationals.
struct RangeCheck {
    bool in_window = false;
    bool p_ge_lower = false;     // p >= N/(N+1)
    bool p_below_one = false;    // p < 1
    bool denom_positive = false; // N - m p > 0
    bool p_star_ge_one = false;
    double lower = 0.0; // N/(N+1) as a double
};

RangeCheck range_check(const SobolevParams& params);

// Lower edge of the window, exact.
inline Rational window_lower_exact(int dim) { return Rational(dim) / Rational(dim + 1); }

} // namespace plab
