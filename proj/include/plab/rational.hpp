#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "plab/errors.hpp"

namespace plab {

// Exact rational arithmetic backs the exact-integration oracle and the
// boundary-exponent identities. Doubles are dyadic rationals, so the
// conversion below is lossless.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw InputError("cannot convert non-finite double to rational");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp); // x = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    BigInt num = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(num);
    if (exp >= 0)
        r *= Rational(BigInt(1) << exp);
    else
        r /= Rational(BigInt(1) << -exp);
    return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace plab
