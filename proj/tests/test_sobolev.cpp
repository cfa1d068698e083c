#include <doctest.h>

#include "plab/sobolev.hpp"

using namespace plab;

TEST_CASE("sobolev exponent values") {
    // boundary p = N/(N+1) gives p* = 1; 3/4 is exact in binary
    CHECK(sobolev_exponent(3, 0.75, 1) == 1.0);
    CHECK(sobolev_exponent(2, 0.8, 1) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(sobolev_exponent(4, 0.9, 2) == doctest::Approx(18.0 / 11.0).epsilon(1e-15));
    CHECK(to_double(sobolev_exponent_exact(2, Rational(4, 5), 1)) == doctest::Approx(4.0 / 3.0));
    CHECK(sobolev_exponent_exact(4, Rational(9, 10), 2) == Rational(18, 11));
}

TEST_CASE("sobolev exponent rejects a nonpositive denominator") {
    CHECK_THROWS_AS(sobolev_exponent(2, 1.5, 2), WindowError);
    CHECK_THROWS_AS(sobolev_exponent(1, 1.0, 1), WindowError);
    CHECK_THROWS_AS(sobolev_exponent_exact(3, Rational(3, 2), 2), WindowError);
    CHECK_THROWS_AS(sobolev_exponent(2, -0.5, 1), WindowError);
}

TEST_CASE("boundary identity is exact in rational arithmetic for N = 1..8") {
    for (int n = 1; n <= 8; ++n) {
        Rational p = window_lower_exact(n);
        CHECK(sobolev_exponent_exact(n, p, 1) == Rational(1));
        SobolevParams params = SobolevParams::make_exact(n, p, 1);
        CHECK(params.p_star_is_one());
        CHECK(params.p_star == 1.0);
    }
}

TEST_CASE("range check accepts exactly [N/(N+1), 1) for m = 1") {
    for (int n = 1; n <= 8; ++n) {
        Rational lower = window_lower_exact(n);
        CHECK(range_check(SobolevParams::make_exact(n, lower, 1)).in_window);
        CHECK(range_check(SobolevParams::make_exact(n, (lower + 1) / 2, 1)).in_window);
        CHECK(!range_check(SobolevParams::make_exact(n, lower - Rational(1, 1000), 1)).in_window);
        // p = 1 is outside: p* diverges at N = m = 1, otherwise p_below_one fails
        if (n == 1) {
            CHECK_THROWS_AS(SobolevParams::make_exact(n, Rational(1), 1), WindowError);
        } else {
            CHECK(!range_check(SobolevParams::make_exact(n, Rational(1), 1)).in_window);
        }
    }
}

TEST_CASE("range check enforces m < N/p for higher orders") {
    CHECK(range_check(SobolevParams::make(3, 0.9, 2)).in_window);
    CHECK_THROWS_AS(SobolevParams::make(3, 0.9, 4), WindowError); // 3 - 3.6 < 0
    CHECK_THROWS_AS(SobolevParams::make(2, 0.9, 3), WindowError);
    // in m >= 2 the N/(N+1) lower bound still applies
    CHECK(!range_check(SobolevParams::make(3, 0.6, 2)).in_window);
}

TEST_CASE("double-precision p_star at the representable boundary") {
    SobolevParams params = SobolevParams::make(3, 0.75, 1);
    CHECK(params.p_star == 1.0);
    CHECK(range_check(params).in_window);
    // the rounded N=2 boundary is accepted even though the quotient p*
    // lands one ulp below 1
    SobolevParams rounded = SobolevParams::make(2, 2.0 / 3.0, 1);
    CHECK(range_check(rounded).in_window);
    CHECK(range_check(rounded).p_star_ge_one);
}
