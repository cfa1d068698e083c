#include <doctest.h>

#include <cmath>

#include "plab/sampler.hpp"
#include "plab/verify.hpp"
#include "test_support.hpp"

using namespace plab;
using plab::test::make_poly;

namespace {
const SobolevParams kN2Boundary = SobolevParams::make_exact(2, Rational(2, 3), 1);  // p* = 1
const SobolevParams kN1Boundary = SobolevParams::make_exact(1, Rational(1, 2), 1);  // p* = 1
const SobolevParams kN2 = SobolevParams::make(2, 0.8, 1);
} // namespace

TEST_CASE("monomial ratio closed-form values") {
    CHECK(kN2Boundary.p_star == 1.0);
    CHECK(monomial_ratio(MultiIndex({1, 0}), kN2Boundary) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(monomial_ratio(MultiIndex({1}), kN1Boundary) == doctest::Approx(0.5).epsilon(1e-14));
    // coordinate exchange: exactly equal by the sorted-entry evaluation
    CHECK(monomial_ratio(MultiIndex({0, 1}), kN2) == monomial_ratio(MultiIndex({1, 0}), kN2));
    CHECK_THROWS_AS(monomial_ratio(MultiIndex({0, 0}), kN2), InputError);
    CHECK_THROWS_AS(monomial_ratio(MultiIndex({1, 0}), SobolevParams::make(2, 0.5, 1)), WindowError);
}

TEST_CASE("monomial ratio sup scan") {
    SupResult s30 = monomial_ratio_sup(kN2, 30);
    SupResult s60 = monomial_ratio_sup(kN2, 60);
    CHECK(s30.scanned == 31ull * 31ull - 1ull);
    CHECK(std::abs(s30.sup - s60.sup) <= 1e-12);
    CHECK(!s30.argmax.is_zero());
    // reported sup is attained by its argmax
    CHECK(monomial_ratio(s30.argmax, kN2) == doctest::Approx(s30.sup).epsilon(1e-12));
    // any permutation of the argmax achieves the same ratio
    MultiIndex perm = s30.argmax.permuted({1, 0});
    CHECK(monomial_ratio(perm, kN2) == monomial_ratio(s30.argmax, kN2));
    // serial and parallel scans agree bitwise
    SupResult ser = monomial_ratio_sup(kN2, 30, Exec::serial);
    CHECK(ser.sup == s30.sup);
    CHECK(ser.argmax == s30.argmax);
}

TEST_CASE("proof factor behaviour") {
    CHECK(proof_factor(0, kN2) == 1.0);
    double f16 = proof_factor(16, kN2);
    double normalized = f16 / std::sqrt(16.0);
    CHECK(normalized > 0.0);
    CHECK(normalized <= 4.0);
    // factor(2a)/factor(a) approaches 2^{1/N}
    double g = proof_factor(2048, kN2) / proof_factor(1024, kN2);
    CHECK(std::abs(g / std::pow(2.0, 0.5) - 1.0) <= 0.05);
    CHECK(std::abs(exponent_identity_gap(kN2)) <= 1e-12);
    CHECK(std::abs(exponent_identity_gap(SobolevParams::make(3, 0.9, 2))) <= 1e-12);
}

TEST_CASE("second factor is dominated by the inverse lp counting norm") {
    CHECK(second_factor(MultiIndex({1, 0}), 0.8) ==
          doctest::Approx(std::pow(1.8, -1.0 / 0.8)).epsilon(1e-14));
    for (int a1 = 0; a1 <= 12; ++a1)
        for (int a2 = 0; a2 <= 12; ++a2) {
            if (a1 == 0 && a2 == 0) continue;
            MultiIndex alpha({a1, a2});
            for (double p : {0.7, 0.9}) {
                double bracket = second_factor_bracket(alpha, p);
                double plain = 0.0;
                for (int v : {a1, a2})
                    if (v > 0) plain += std::pow(static_cast<double>(v), p);
                CHECK(bracket >= plain); // no tolerance: term-wise multipliers >= 1
                CHECK(second_factor(alpha, p) <= std::pow(plain, -1.0 / p));
            }
        }
    MultiIndex ones({1, 1, 1});
    CHECK(second_factor(ones, 0.9) <= std::pow(3.0, -1.0 / 0.9));
    CHECK(second_factor(ones, 0.9) ==
          doctest::Approx(std::pow(3.0 * 1.9, -1.0 / 0.9)).epsilon(1e-14));
}

TEST_CASE("mean inequality margins, equality cases exact") {
    // equal entries: AM-GM equality, margin exactly zero
    MeanChecks eq = mean_inequality_checks(MultiIndex({3, 3, 3}), 0.8);
    CHECK(eq.amgm_margin == 0.0);
    CHECK(eq.amgm_ok);
    // single entry: l1 = lp, margin exactly zero
    MeanChecks single = mean_inequality_checks(MultiIndex({7, 0}), 0.8);
    CHECK(single.lq_margin == 0.0);
    CHECK(single.lq_ok);
    // alpha = (3,4), p = 0.8: 7 <= (3^0.8 + 4^0.8)^{1/0.8}
    MeanChecks m = mean_inequality_checks(MultiIndex({3, 4}), 0.8);
    CHECK(m.l1 == 7.0);
    CHECK(m.lp >= m.l1);
    CHECK(m.lq_margin > 0.0);
    CHECK(m.amgm_margin > 0.0);
}

TEST_CASE("verify_poincare worked examples") {
    RatioReport r = verify_poincare(make_poly(2, {{{1, 0}, 1.0}}), kN2Boundary);
    CHECK(!r.degenerate);
    CHECK(r.lhs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.ratio == doctest::Approx(0.5).epsilon(1e-12));

    RatioReport c = verify_poincare(Polynomial::constant(2, 5.0), kN2Boundary);
    CHECK(c.degenerate);
    CHECK(c.lhs == 0.0);
    CHECK(c.rhs == 0.0);

    RatioReport d = verify_poincare(make_poly(2, {{{1, 0}, 1.0}, {{0, 1}, -1.0}}), kN2Boundary);
    CHECK(d.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.rhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(d.ratio == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("verify_higher: consistency, degeneracy and an exactly computable case") {
    // m = 1 path agrees with the Poincare verifier
    for (uint64_t s = 0; s < 100; ++s) {
        SamplerConfig cfg{2, 5, 5, 0, SignMode::mixed, "uniform", 70000 + s};
        Polynomial p = sample_polynomial(cfg);
        SobolevParams m1 = SobolevParams::make(2, 0.8, 1);
        RatioReport a = verify_poincare(p, m1);
        RatioReport b = verify_higher(p, m1);
        CHECK(a.degenerate == b.degenerate);
        if (!a.degenerate) CHECK(std::abs(a.ratio - b.ratio) <= 1e-12 * std::max(1.0, a.ratio));
    }

    SobolevParams m2 = SobolevParams::make_exact(2, Rational(9, 10), 2); // p* = 9
    RatioReport deg = verify_higher(make_poly(2, {{{1, 0}, 2.0}}), m2);
    CHECK(deg.degenerate);

    // P = x^2 y: lhs = (1/190)^{1/9} by exact monomial integration,
    // rhs = (2 * 2^0.9 / 1.9)^{1/0.9}
    RatioReport r = verify_higher(make_poly(2, {{{2, 1}, 1.0}}), m2);
    CHECK(m2.p_star == 9.0);
    double lhs_expect = std::pow(1.0 / 190.0, 1.0 / 9.0);
    double rhs_expect = std::pow(2.0 * std::pow(2.0, 0.9) / 1.9, 1.0 / 0.9);
    CHECK(r.lhs == doctest::Approx(lhs_expect).epsilon(1e-9));
    CHECK(r.rhs == doctest::Approx(rhs_expect).epsilon(1e-9));
    CHECK(std::isfinite(r.ratio));
}

TEST_CASE("verify_embedding examples and sub-identities") {
    RatioReport c = verify_embedding(Polynomial::constant(2, 3.0), kN2);
    CHECK(!c.degenerate);
    CHECK(c.ratio == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(*c.const_norm_equal);
    CHECK(*c.p0_le_triple);

    // P = x at the boundary: lhs = 1/2, rhs = ||x||_{2/3} + 1
    RatioReport r = verify_embedding(make_poly(2, {{{1, 0}, 1.0}}), kN2Boundary);
    double lq23 = monomial_norm_closed(MultiIndex({1, 0}), 2.0 / 3.0);
    CHECK(r.lhs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(lq23 + 1.0).epsilon(1e-12));

    for (uint64_t s = 0; s < 100; ++s) {
        SamplerConfig cfg{2, 5, 5, 0, SignMode::mixed, "uniform", 71000 + s};
        RatioReport rr = verify_embedding(sample_polynomial(cfg), kN2);
        CHECK(*rr.const_norm_equal);
        CHECK(*rr.p0_le_triple);
    }
}

TEST_CASE("mediant reduction") {
    // symmetric split: both parts score 1/2 and so does the whole
    MediantCheck m = mediant_reduction_check(make_poly(2, {{{1, 0}, 1.0}, {{0, 1}, -1.0}}),
                                             kN2Boundary);
    CHECK(!m.single_signed);
    CHECK(m.ratio_full == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(*m.ratio_plus == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(m.margin) <= 1e-14);

    MediantCheck single = mediant_reduction_check(make_poly(2, {{{1, 1}, 2.0}}), kN2);
    CHECK(single.single_signed);
    CHECK(single.margin == 0.0);

    CHECK_THROWS_AS(mediant_reduction_check(Polynomial::constant(2, 1.0), kN2), InputError);

    for (uint64_t s = 0; s < 100; ++s) {
        SamplerConfig cfg{2, 6, 6, 1, SignMode::mixed, "uniform", 72000 + s};
        Polynomial p = sample_polynomial(cfg);
        Decomposition d = decompose(p);
        if (d.plus.is_zero() || d.minus.is_zero()) continue;
        CHECK(mediant_reduction_check(p, kN2).margin >= -1e-12);
    }
}

TEST_CASE("poincare ratio is scale invariant") {
    for (uint64_t s = 0; s < 10; ++s) {
        SamplerConfig cfg{2, 6, 6, 1, SignMode::mixed, "uniform", 73000 + s};
        Polynomial p = sample_polynomial(cfg);
        double base = verify_poincare(p, kN2).ratio;
        for (double c : {1e-3, 7.0, 1e3}) {
            double scaled = verify_poincare(p.scaled(c), kN2).ratio;
            CHECK(std::abs(scaled - base) <= 1e-10);
        }
    }
}

TEST_CASE("poincare ratio is invariant under coordinate permutations") {
    SobolevParams n3 = SobolevParams::make(3, 0.9, 1);
    for (uint64_t s = 0; s < 8; ++s) {
        SamplerConfig cfg{3, 5, 6, 1, SignMode::mixed, "uniform", 74000 + s};
        Polynomial p = sample_polynomial(cfg);
        double base = verify_poincare(p, n3).ratio;
        for (const auto& perm : {std::vector<int>{1, 0, 2}, std::vector<int>{2, 1, 0}}) {
            double permuted = verify_poincare(permute_coordinates(p, perm), n3).ratio;
            CHECK(std::abs(permuted - base) <= 1e-8 * std::max(1.0, base));
        }
    }
}

TEST_CASE("sampler determinism and modes") {
    SamplerConfig cfg{3, 6, 7, 1, SignMode::mixed, "uniform", 4242};
    CHECK(sample_polynomial(cfg) == sample_polynomial(cfg));
    CHECK(static_cast<int>(sample_polynomial(cfg).term_count()) == 7);

    SamplerConfig pos = cfg;
    pos.sign_mode = SignMode::positive_only;
    Decomposition d = decompose(sample_polynomial(pos));
    CHECK(d.minus.is_zero());
    CHECK(d.p0 == 0.0);

    SamplerConfig tiny{1, 2, 50, 0, SignMode::mixed, "uniform", 1};
    CHECK(sample_polynomial(tiny).term_count() == 3); // whole window when support exceeds it
    CHECK_THROWS_AS(sample_polynomial(SamplerConfig{1, 1, 1, 0, SignMode::mixed, "gauss", 1}),
                    InputError);
}
