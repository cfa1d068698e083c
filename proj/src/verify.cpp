#include "plab/verify.hpp"

#include <algorithm>
#include <cmath>

namespace plab {

namespace {

void require_window(const SobolevParams& params) {
    RangeCheck rc = range_check(params);
    if (!rc.in_window)
        throw WindowError("parameters outside the admissible window: need N/(N+1) <= p < 1 and N - m*p > 0");
}

void require_m1(const SobolevParams& params, const char* who) {
    if (params.m != 1) throw InputError(std::string(who) + ": requires m = 1");
}

void require_dim(const Polynomial& p, const SobolevParams& params, const char* who) {
    if (p.dim() != params.dim)
        throw InputError(std::string(who) + ": polynomial dimension does not match the parameters");
}

} // namespace

double monomial_ratio(const MultiIndex& alpha, const SobolevParams& params) {
    require_m1(params, "monomial_ratio");
    require_window(params);
    if (alpha.is_zero()) throw InputError("monomial_ratio: zero multi-index");
    return monomial_norm_closed(alpha, params.p_star) / monomial_gradient_norm_closed(alpha, params.p);
}

double monomial_ratio_m(const MultiIndex& alpha, const SobolevParams& params) {
    require_window(params);
    if (alpha.degree() < params.m) throw InputError("monomial_ratio_m: degree below derivative order");
    const double p = params.p;
    double sum = 0.0;
    for (const MultiIndex& beta : multi_indices_of_order(alpha.dim(), params.m)) {
        double c = 1.0;
        bool vanishes = false;
        for (int j = 0; j < alpha.dim(); ++j) {
            if (beta[j] > alpha[j]) {
                vanishes = true;
                break;
            }
            for (int k = 0; k < beta[j]; ++k) c *= static_cast<double>(alpha[j] - k);
        }
        if (vanishes) continue;
        double integral = std::pow(c, p);
        for (int j = 0; j < alpha.dim(); ++j)
            integral /= p * static_cast<double>(alpha[j] - beta[j]) + 1.0;
        sum += integral;
    }
    double denom = std::pow(sum, 1.0 / p);
    return monomial_norm_closed(alpha, params.p_star) / denom;
}

double proof_factor(int a, const SobolevParams& params) {
    if (a < 0) throw InputError("proof_factor: a must be >= 0");
    double ad = static_cast<double>(a);
    return std::pow(params.p * ad + 1.0, 1.0 / params.p) /
           std::pow(params.p_star * ad + 1.0, 1.0 / params.p_star);
}

double exponent_identity_gap(const SobolevParams& params) {
    return 1.0 / params.p - 1.0 / params.p_star -
           static_cast<double>(params.m) / static_cast<double>(params.dim);
}

double second_factor_bracket(const MultiIndex& alpha, double p) {
    if (alpha.is_zero()) throw InputError("second_factor: zero multi-index");
    return gradient_bracket(alpha, p);
}

double second_factor(const MultiIndex& alpha, double p) {
    return std::pow(second_factor_bracket(alpha, p), -1.0 / p);
}

double lp_counting_norm(const MultiIndex& alpha, double p) {
    double s = 0.0;
    for (int j = 0; j < alpha.dim(); ++j)
        if (alpha[j] > 0) s += std::pow(static_cast<double>(alpha[j]), p);
    return std::pow(s, 1.0 / p);
}

MeanChecks mean_inequality_checks(const MultiIndex& alpha, double p) {
    if (alpha.is_zero()) throw InputError("mean_inequality_checks: zero multi-index");
    MeanChecks mc;
    const int n = alpha.dim();
    double sum_max = 0.0, prod_max = 1.0;
    for (int j = 0; j < n; ++j) {
        double v = std::max(alpha[j], 1);
        sum_max += v;
        prod_max *= v;
    }
    double am = sum_max / static_cast<double>(n);
    double am_pow = 1.0;
    for (int j = 0; j < n; ++j) am_pow *= am;
    mc.amgm_am_pow = am_pow;
    mc.amgm_gm_pow = prod_max;
    mc.amgm_margin = am_pow - prod_max;
    mc.amgm_ok = mc.amgm_margin >= 0.0;

    double l1 = 0.0, sp = 0.0;
    for (int j = 0; j < n; ++j)
        if (alpha[j] > 0) {
            l1 += static_cast<double>(alpha[j]);
            sp += std::pow(static_cast<double>(alpha[j]), p);
        }
    mc.l1 = l1;
    mc.lp_pow_sum = sp;
    mc.l1_pow = std::pow(l1, p);
    mc.lp = std::pow(sp, 1.0 / p);
    mc.lq_margin = mc.lp_pow_sum - mc.l1_pow;
    mc.lq_ok = mc.lq_margin >= 0.0;
    return mc;
}

SupResult monomial_ratio_sup(const SobolevParams& params, int box, Exec exec) {
    require_m1(params, "monomial_ratio_sup");
    require_window(params);
    if (box < 1) throw InputError("monomial_ratio_sup: box must be >= 1");
    const int n = params.dim;
    const double p = params.p;

    // per-entry factor tables: the ratio is prod_j g[a_j] * (sum_j h[a_j])^{-1/p}
    std::vector<double> g(static_cast<size_t>(box) + 1), h(static_cast<size_t>(box) + 1);
    for (int a = 0; a <= box; ++a) {
        g[static_cast<size_t>(a)] = proof_factor(a, params);
        double ad = static_cast<double>(a);
        h[static_cast<size_t>(a)] =
            a == 0 ? 0.0 : std::pow(ad, p) * ((p * ad + 1.0) / (p * (ad - 1.0) + 1.0));
    }

    const uint64_t base = static_cast<uint64_t>(box) + 1;
    uint64_t total = 1;
    for (int j = 0; j < n; ++j) total *= base;

    constexpr uint64_t kChunk = 8192;
    const uint64_t nchunks = (total + kChunk - 1) / kChunk;
    std::vector<double> chunk_best(nchunks, -1.0);
    std::vector<uint64_t> chunk_arg(nchunks, 0);

    const bool par = exec == Exec::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (int64_t c = 0; c < static_cast<int64_t>(nchunks); ++c) {
        uint64_t lo = static_cast<uint64_t>(c) * kChunk;
        uint64_t hi = std::min(lo + kChunk, total);
        if (lo == 0) lo = 1; // skip alpha = 0
        double best = -1.0;
        uint64_t arg = 0;
        for (uint64_t flat = lo; flat < hi; ++flat) {
            uint64_t rem = flat;
            double prod = 1.0, sum = 0.0;
            for (int j = 0; j < n; ++j) {
                uint64_t a = rem % base;
                rem /= base;
                prod *= g[a];
                sum += h[a];
            }
            double r = prod * std::pow(sum, -1.0 / p);
            if (r > best) {
                best = r;
                arg = flat;
            }
        }
        chunk_best[static_cast<size_t>(c)] = best;
        chunk_arg[static_cast<size_t>(c)] = arg;
    }

    double best = -1.0;
    uint64_t arg = 0;
    for (uint64_t c = 0; c < nchunks; ++c)
        if (chunk_best[c] > best) {
            best = chunk_best[c];
            arg = chunk_arg[c];
        }

    std::vector<int> entries(static_cast<size_t>(n));
    uint64_t rem = arg;
    for (int j = 0; j < n; ++j) {
        entries[static_cast<size_t>(j)] = static_cast<int>(rem % base);
        rem /= base;
    }
    SupResult res;
    res.sup = best;
    res.argmax = MultiIndex(entries);
    res.scanned = total - 1;
    return res;
}

namespace {

RatioReport make_ratio_report(const Polynomial& poly, const SobolevParams& params,
                              const char* theorem, const Polynomial& rest,
                              const NormConfig& cfg) {
    RatioReport rep;
    rep.params = params;
    rep.theorem = theorem;
    rep.poly_hash = content_hash(poly);

    Decomposition d = decompose(rest);
    NormResult lp = lq_quasinorm(d.plus, params.p_star, cfg);
    NormResult lm = lq_quasinorm(d.minus, params.p_star, cfg);
    rep.lhs = lp.value + lm.value;
    rep.lhs_err = lp.err_estimate + lm.err_estimate;

    GradientNormResult grad = params.m == 1 ? gradient_triple_norm(poly, params.p, cfg)
                                            : m_gradient_triple_norm(poly, params.p, params.m, cfg);
    rep.rhs = grad.value;
    rep.rhs_err = grad.err_estimate;
    rep.work = lp.work + lm.work + grad.work;

    rep.degenerate = rest.is_zero();
    if (!rep.degenerate) rep.ratio = rep.lhs / rep.rhs;
    return rep;
}

} // namespace

RatioReport verify_poincare(const Polynomial& p, const SobolevParams& params, const NormConfig& cfg) {
    require_m1(params, "verify_poincare");
    require_window(params);
    require_dim(p, params, "verify_poincare");
    auto [low, rest] = truncate_degree(p, 1);
    return make_ratio_report(p, params, "1.3", rest, cfg);
}

RatioReport verify_higher(const Polynomial& p, const SobolevParams& params, const NormConfig& cfg) {
    require_window(params);
    require_dim(p, params, "verify_higher");
    auto [low, rest] = truncate_degree(p, params.m);
    return make_ratio_report(p, params, "1.4", rest, cfg);
}

RatioReport verify_embedding(const Polynomial& p, const SobolevParams& params, const NormConfig& cfg) {
    require_m1(params, "verify_embedding");
    require_window(params);
    require_dim(p, params, "verify_embedding");
    RatioReport rep;
    rep.params = params;
    rep.theorem = "1.6";
    rep.poly_hash = content_hash(p);

    TripleStrokeResult at_star = triple_stroke_norm(p, params.p_star, cfg);
    TripleStrokeResult at_p = triple_stroke_norm(p, params.p, cfg);
    GradientNormResult grad = gradient_triple_norm(p, params.p, cfg);

    rep.lhs = at_star.value;
    rep.lhs_err = at_star.plus.err_estimate + at_star.minus.err_estimate;
    rep.rhs = at_p.value + grad.value;
    rep.rhs_err = at_p.plus.err_estimate + at_p.minus.err_estimate + grad.err_estimate;
    rep.work = at_star.plus.work + at_star.minus.work + at_p.plus.work + at_p.minus.work + grad.work;

    // proof sub-identities: the constant term has the same norm at every
    // exponent (unit volume), and it is dominated by the full triple norm
    rep.const_norm_equal = at_star.p0_abs == at_p.p0_abs;
    rep.p0_le_triple = at_p.p0_abs <= at_p.value;

    rep.degenerate = p.is_zero();
    if (!rep.degenerate) rep.ratio = rep.lhs / rep.rhs;
    return rep;
}

MediantCheck mediant_reduction_check(const Polynomial& p, const SobolevParams& params,
                                     const NormConfig& cfg) {
    Decomposition d = decompose(p);
    if (d.plus.is_zero() && d.minus.is_zero())
        throw InputError("mediant_reduction_check: constant polynomial");
    MediantCheck out;
    RatioReport full = params.m == 1 ? verify_poincare(p, params, cfg) : verify_higher(p, params, cfg);
    out.ratio_full = full.ratio;
    double best = -1.0;
    if (!d.plus.is_zero()) {
        RatioReport rp = params.m == 1 ? verify_poincare(d.plus, params, cfg)
                                       : verify_higher(d.plus, params, cfg);
        out.ratio_plus = rp.ratio;
        best = std::max(best, rp.ratio);
    }
    if (!d.minus.is_zero()) {
        RatioReport rm = params.m == 1 ? verify_poincare(d.minus, params, cfg)
                                       : verify_higher(d.minus, params, cfg);
        out.ratio_minus = rm.ratio;
        best = std::max(best, rm.ratio);
    }
    out.single_signed = d.plus.is_zero() || d.minus.is_zero();
    out.margin = best - out.ratio_full;
    return out;
}

} // namespace plab
