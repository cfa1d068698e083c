#include <doctest.h>

#include <cmath>

#include "plab/norms.hpp"
#include "plab/sampler.hpp"
#include "plab/sobolev.hpp"
#include "test_support.hpp"

using namespace plab;
using plab::test::make_poly;

TEST_CASE("monomial norm closed form") {
    CHECK(monomial_norm_closed(MultiIndex({0, 0}), 0.7) == 1.0);
    CHECK(monomial_norm_closed(MultiIndex({0, 0}), 2.0) == 1.0);
    CHECK(monomial_norm_closed(MultiIndex({1, 0}), 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    // alpha = (2,1), q = 1/2: (2)^-2 * (1.5)^-2 = 1/9
    CHECK(monomial_norm_closed(MultiIndex({2, 1}), 0.5) ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    // permutation-exact by construction
    CHECK(monomial_norm_closed(MultiIndex({2, 0, 1}), 0.7) ==
          monomial_norm_closed(MultiIndex({0, 1, 2}), 0.7));
}

TEST_CASE("monomial gradient norm closed form") {
    CHECK(monomial_gradient_norm_closed(MultiIndex({1, 0}), 0.7) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(monomial_gradient_norm_closed(MultiIndex({1, 0}), 0.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(monomial_gradient_norm_closed(MultiIndex({2}), 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(monomial_gradient_norm_closed(MultiIndex({1, 1}), 0.5) ==
          doctest::Approx(16.0 / 9.0).epsilon(1e-14));
    CHECK(monomial_gradient_norm_closed(MultiIndex({0, 0}), 0.8) == 0.0);
}

TEST_CASE("gradient closed form equals component-wise quadrature (typo-sensitive cases)") {
    // entries equal to 1 are exactly where a naive closed form can divide by zero
    for (const auto& alpha : {MultiIndex({1, 1}), MultiIndex({1, 3}), MultiIndex({1, 0, 2})}) {
        for (double p : {0.7, 1.0, 1.3}) {
            double sum = 0.0;
            for (int j = 0; j < alpha.dim(); ++j) {
                if (alpha[j] == 0) continue;
                Polynomial dj = differentiate(Polynomial::monomial(alpha, 1.0), j);
                sum += integrate_power(dj, p).value;
            }
            double direct = std::pow(sum, 1.0 / p);
            CHECK(monomial_gradient_norm_closed(alpha, p) ==
                  doctest::Approx(direct).epsilon(1e-8));
        }
    }
}

TEST_CASE("lq_quasinorm dispatch") {
    // single monomial: identical to the closed form
    Polynomial mono = Polynomial::monomial(MultiIndex({2, 1}), 1.0);
    NormResult r = lq_quasinorm(mono, 0.5);
    CHECK(r.method_used == NormMethod::closed_form);
    CHECK(r.value == monomial_norm_closed(MultiIndex({2, 1}), 0.5));

    NormResult r2 = lq_quasinorm(make_poly(1, {{{1}, 2.0}}), 1.0);
    CHECK(r2.method_used == NormMethod::closed_form);
    CHECK(r2.value == doctest::Approx(1.0).epsilon(1e-15));

    // integer exponents go through the exact-rational path
    Polynomial f = make_poly(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}});
    NormResult r3 = lq_quasinorm(f, 2.0);
    CHECK(r3.method_used == NormMethod::exact_rational);
    CHECK(*r3.exact == Rational(7, 6));
    CHECK(r3.value == doctest::Approx(std::sqrt(7.0 / 6.0)).epsilon(1e-15));

    // fractional exponents: quadrature, cross-checked by Monte Carlo
    NormResult r4 = lq_quasinorm(f, 0.8);
    CHECK(r4.method_used == NormMethod::quadrature);
    MonteCarloConfig mc;
    mc.samples = 400000;
    mc.seed = 17;
    QuadResult m = integrate_power_mc(f, 0.8, mc);
    CHECK(std::abs(std::pow(r4.value, 0.8) - m.value) <= 3.0 * m.err_estimate);

    // explicit method overrides win over the dispatch
    NormConfig force;
    force.method = NormMethod::quadrature;
    CHECK(lq_quasinorm(f, 1.0, force).method_used == NormMethod::quadrature);
    NormConfig bad;
    bad.method = NormMethod::exact_rational;
    CHECK_THROWS_AS(lq_quasinorm(f, 0.8, bad), InputError);
}

TEST_CASE("triple stroke norm") {
    CHECK(triple_stroke_norm(Polynomial::constant(2, -4.5), 0.7).value == 4.5);

    Polynomial p = make_poly(2, {{{0, 0}, 3.0}, {{1, 0}, -2.0}, {{1, 1}, 1.0}});
    TripleStrokeResult t = triple_stroke_norm(p, 1.0);
    CHECK(t.value == doctest::Approx(4.25).epsilon(1e-15));
    REQUIRE(t.exact.has_value());
    CHECK(*t.exact == Rational(17, 4));

    // |||x - y|||_1 = 1 while ||x - y||_1 = 1/3 < 1: cancellation is denied
    Polynomial xmy = make_poly(2, {{{1, 0}, 1.0}, {{0, 1}, -1.0}});
    TripleStrokeResult ty = triple_stroke_norm(xmy, 1.0);
    CHECK(ty.value == doctest::Approx(1.0).epsilon(1e-15));
    // the |.| kink limits the aux rule to a few digits, ample for the gap
    double l1 = plab::test::abs_power_integral(xmy, 1.0);
    CHECK(l1 == doctest::Approx(1.0 / 3.0).epsilon(1e-4));
    CHECK(l1 < ty.value);
}

TEST_CASE("gradient triple norm") {
    CHECK(gradient_triple_norm(make_poly(2, {{{1, 0}, 1.0}}), 0.6).value ==
          doctest::Approx(1.0).epsilon(1e-14));
    Polynomial xmy = make_poly(2, {{{1, 0}, 1.0}, {{0, 1}, -1.0}});
    CHECK(gradient_triple_norm(xmy, 0.5).value == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(gradient_triple_norm(make_poly(2, {{{1, 1}, 1.0}}), 0.5).value ==
          doctest::Approx(16.0 / 9.0).epsilon(1e-12));
    CHECK(gradient_triple_norm(Polynomial::constant(2, 7.0), 0.9).value == 0.0);
}

TEST_CASE("m-gradient triple norm") {
    // int |2y| + int |2x| = 2, p = 1
    GradientNormResult g = m_gradient_triple_norm(make_poly(2, {{{2, 1}, 1.0}}), 1.0, 2);
    CHECK(g.value == doctest::Approx(2.0).epsilon(1e-14));
    // degree below the order
    CHECK(m_gradient_triple_norm(make_poly(2, {{{1, 1}, 3.0}}), 0.9, 3).value == 0.0);
    // m = 1 agrees with the first-order path
    for (uint64_t s = 0; s < 100; ++s) {
        SamplerConfig cfg{2, 5, 6, 0, SignMode::mixed, "uniform", 88000 + s};
        Polynomial p = sample_polynomial(cfg);
        double a = gradient_triple_norm(p, 0.8).value;
        double b = m_gradient_triple_norm(p, 0.8, 1).value;
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("homogeneity of the triple stroke norm") {
    for (uint64_t s = 0; s < 10; ++s) {
        SamplerConfig cfg{2, 6, 6, 0, SignMode::mixed, "uniform", 91000 + s};
        Polynomial p = sample_polynomial(cfg);
        for (double q : {0.8, 1.0}) {
            double base = triple_stroke_norm(p, q).value;
            for (double c : {-1000.0, -7.0, 0.001, 7.0, 1000.0}) {
                double scaled = triple_stroke_norm(p.scaled(c), q).value;
                CHECK(std::abs(scaled - std::abs(c) * base) <= 1e-10 * std::abs(c) * base);
            }
        }
    }
}

TEST_CASE("lq quasinorm is nondecreasing in q on the unit cube") {
    const double grid[] = {0.6, 0.8, 1.0, 4.0 / 3.0};
    for (uint64_t s = 0; s < 12; ++s) {
        SamplerConfig cfg{1 + static_cast<int>(s % 3), 5, 5, 1, SignMode::positive_only, "uniform",
                          92000 + s};
        Polynomial f = sample_polynomial(cfg);
        double prev = -1.0;
        for (double q : grid) {
            double v = lq_quasinorm(f, q).value;
            CHECK(v >= prev - 1e-9 * std::max(1.0, v));
            prev = v;
        }
    }
}

TEST_CASE("for q >= 1 the plain norm is dominated by the triple stroke norm") {
    std::vector<Polynomial> cases = {
        make_poly(2, {{{1, 0}, 1.0}, {{0, 1}, -1.0}}),
        make_poly(2, {{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{1, 1}, -2.0}}),
        make_poly(1, {{{1}, 3.0}, {{2}, -1.0}}),
    };
    for (const Polynomial& p : cases) {
        for (double q : {1.0, 2.0}) {
            double plain = q == 2.0 ? std::sqrt(to_double(integrate_power_exact(p, 2)))
                                    : plab::test::abs_lq_norm(p, q);
            double triple = triple_stroke_norm(p, q).value;
            CHECK(plain <= triple + 1e-10);
        }
    }
}
