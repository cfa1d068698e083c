#include "plab/norms.hpp"

#include <algorithm>
#include <cmath>

namespace plab {

const char* norm_method_name(NormMethod m) {
    switch (m) {
        case NormMethod::automatic: return "auto";
        case NormMethod::closed_form: return "closed-form";
        case NormMethod::quadrature: return "graded-quadrature";
        case NormMethod::monte_carlo: return "monte-carlo";
        case NormMethod::exact_rational: return "exact-rational";
    }
    return "?";
}

namespace {

std::vector<int> sorted_entries(const MultiIndex& alpha) {
    std::vector<int> e = alpha.entries();
    std::sort(e.begin(), e.end());
    return e;
}

bool is_small_integer(double q, int& k) {
    for (int c = 1; c <= 3; ++c)
        if (q == static_cast<double>(c)) {
            k = c;
            return true;
        }
    return false;
}

} // namespace

double monomial_norm_closed(const MultiIndex& alpha, double q) {
    if (q <= 0.0) throw InputError("monomial_norm_closed: exponent must be positive");
    double prod = 1.0;
    for (int a : sorted_entries(alpha)) {
        if (a == 0) continue; // factor 1
        prod *= std::pow(q * static_cast<double>(a) + 1.0, -1.0 / q);
    }
    return prod;
}

double gradient_bracket(const MultiIndex& alpha, double p) {
    double sum = 0.0;
    for (int a : sorted_entries(alpha)) {
        if (a < 1) continue;
        double ad = static_cast<double>(a);
        sum += std::pow(ad, p) * ((p * ad + 1.0) / (p * (ad - 1.0) + 1.0));
    }
    return sum;
}

double monomial_gradient_norm_closed(const MultiIndex& alpha, double p) {
    if (p <= 0.0) throw InputError("monomial_gradient_norm_closed: exponent must be positive");
    if (alpha.is_zero()) return 0.0;
    double prod = 1.0;
    for (int a : sorted_entries(alpha)) prod *= std::pow(p * static_cast<double>(a) + 1.0, -1.0 / p);
    return std::pow(gradient_bracket(alpha, p), 1.0 / p) * prod;
}

NormResult power_integral(const Polynomial& f, double q, const NormConfig& cfg) {
    if (q <= 0.0) throw InputError("power_integral: exponent must be positive");
    NormResult r;
    if (f.is_zero()) {
        r.method_used = NormMethod::closed_form;
        return r;
    }
    NormMethod m = cfg.method;
    int k = 0;
    if (m == NormMethod::automatic) {
        if (f.term_count() == 1)
            m = NormMethod::closed_form;
        else if (is_small_integer(q, k))
            m = NormMethod::exact_rational;
        else
            m = NormMethod::quadrature;
    }
    switch (m) {
        case NormMethod::closed_form: {
            if (f.term_count() != 1)
                throw InputError("power_integral: closed form requires a single monomial");
            const auto& [a, c] = *f.terms().begin();
            double nrm = std::abs(c) * monomial_norm_closed(a, q);
            r.value = std::pow(nrm, q);
            r.method_used = NormMethod::closed_form;
            if (is_small_integer(q, k)) r.exact = integrate_power_exact(f, k);
            return r;
        }
        case NormMethod::exact_rational: {
            if (!is_small_integer(q, k))
                throw InputError("power_integral: exact method needs q in {1,2,3}");
            Rational v = integrate_power_exact(f, k);
            r.value = to_double(v);
            r.exact = v;
            r.method_used = NormMethod::exact_rational;
            r.work = f.term_count();
            return r;
        }
        case NormMethod::monte_carlo: {
            QuadResult qr = integrate_power_mc(f, q, cfg.mc);
            r.value = qr.value;
            r.err_estimate = qr.err_estimate;
            r.work = qr.work;
            r.method_used = NormMethod::monte_carlo;
            return r;
        }
        case NormMethod::quadrature:
        default: {
            QuadResult qr = integrate_power(f, q, cfg.quad);
            r.value = qr.value;
            r.err_estimate = qr.err_estimate;
            r.work = qr.work;
            r.method_used = NormMethod::quadrature;
            return r;
        }
    }
}

NormResult lq_quasinorm(const Polynomial& f, double q, const NormConfig& cfg) {
    if (f.term_count() == 1 && (cfg.method == NormMethod::automatic || cfg.method == NormMethod::closed_form)) {
        const auto& [a, c] = *f.terms().begin();
        NormResult r;
        r.value = std::abs(c) * monomial_norm_closed(a, q);
        r.method_used = NormMethod::closed_form;
        int k = 0;
        if (is_small_integer(q, k)) r.exact = integrate_power_exact(f, k);
        return r;
    }
    NormResult r = power_integral(f, q, cfg);
    if (r.value != 0.0 || !f.is_zero()) r.value = std::pow(r.value, 1.0 / q);
    // relative error is preserved up to the factor 1/q by the root
    r.err_estimate = r.value > 0.0 && r.err_estimate > 0.0
                         ? r.err_estimate / q * std::pow(r.value, 1.0 - q) // d/dx x^(1/q) at the integral
                         : r.err_estimate;
    return r;
}

TripleStrokeResult triple_stroke_norm(const Polynomial& p, double q, const NormConfig& cfg) {
    Decomposition d = decompose(p);
    TripleStrokeResult t;
    t.p0_abs = std::abs(d.p0);
    t.plus = lq_quasinorm(d.plus, q, cfg);
    t.minus = lq_quasinorm(d.minus, q, cfg);
    t.value = t.p0_abs + t.plus.value + t.minus.value;
    if (q == 1.0 && (t.plus.exact || d.plus.is_zero()) && (t.minus.exact || d.minus.is_zero())) {
        Rational tot = rational_from_double(t.p0_abs);
        if (t.plus.exact) tot += *t.plus.exact;
        if (t.minus.exact) tot += *t.minus.exact;
        t.exact = tot;
    }
    return t;
}

namespace {

GradientNormResult part_derivative_norm(const Polynomial& part, double p_exp,
                                        const std::vector<Polynomial>& components,
                                        const NormConfig& cfg) {
    GradientNormResult g;
    if (part.is_zero()) return g;
    double sum = 0.0;
    for (const Polynomial& c : components) {
        if (c.is_zero()) continue;
        NormResult r = power_integral(c, p_exp, cfg);
        sum += r.value;
        g.err_estimate += r.err_estimate;
        g.work += r.work;
    }
    g.value = sum > 0.0 ? std::pow(sum, 1.0 / p_exp) : 0.0;
    return g;
}

} // namespace

GradientNormResult gradient_triple_norm(const Polynomial& p, double p_exp, const NormConfig& cfg) {
    if (p_exp <= 0.0) throw InputError("gradient_triple_norm: exponent must be positive");
    Decomposition d = decompose(p);
    GradientNormResult total;
    for (const Polynomial* part : {&d.plus, &d.minus}) {
        GradientNormResult g = part_derivative_norm(*part, p_exp, gradient(*part), cfg);
        total.value += g.value;
        total.err_estimate += g.err_estimate;
        total.work += g.work;
    }
    return total;
}

GradientNormResult m_gradient_triple_norm(const Polynomial& p, double p_exp, int m,
                                          const NormConfig& cfg) {
    if (p_exp <= 0.0) throw InputError("m_gradient_triple_norm: exponent must be positive");
    if (m < 1) throw InputError("m_gradient_triple_norm: order must be >= 1");
    Decomposition d = decompose(p);
    GradientNormResult total;
    for (const Polynomial* part : {&d.plus, &d.minus}) {
        std::vector<Polynomial> comps;
        for (auto& [beta, dp] : higher_gradient(*part, m)) comps.push_back(std::move(dp));
        GradientNormResult g = part_derivative_norm(*part, p_exp, comps, cfg);
        total.value += g.value;
        total.err_estimate += g.err_estimate;
        total.work += g.work;
    }
    return total;
}

} // namespace plab
