#include "plab/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace plab {

namespace {

RatioReport score(const Polynomial& poly, const SobolevParams& params, const NormConfig& cfg) {
    return params.m == 1 ? verify_poincare(poly, params, cfg) : verify_higher(poly, params, cfg);
}

// Best monomial of the degree box as a closed-form scan (selection only;
// the chosen candidate is re-scored through the verifier path).
std::optional<MultiIndex> best_monomial(const SobolevParams& params, int max_degree) {
    std::optional<MultiIndex> best;
    double best_r = -1.0;
    for (const MultiIndex& a : multi_indices_degree_range(params.dim, params.m, max_degree)) {
        double r = params.m == 1 ? monomial_ratio(a, params) : monomial_ratio_m(a, params);
        if (r > best_r) {
            best_r = r;
            best = a;
        }
    }
    return best;
}

} // namespace

ConstantEstimate estimate_constant(const SobolevParams& params, const SearchConfig& cfg,
                                   Exec exec, const SampleObserver& observer) {
    RangeCheck rc = range_check(params);
    if (!rc.in_window) throw WindowError("estimate_constant: parameters outside the admissible window");
    if (cfg.random_budget < 1) throw InputError("estimate_constant: random budget must be >= 1");

    ConstantEstimate est;
    est.params = params;

    double best = -1.0;
    Polynomial best_poly(params.dim);
    uint64_t iteration = 0;

    auto consider = [&](const Polynomial& poly, const RatioReport& rep) {
        ++iteration;
        est.budget_used += 1;
        if (!rep.degenerate && rep.ratio > best) {
            best = rep.ratio;
            best_poly = poly;
            est.trace.push_back({iteration, best});
        }
    };

    // phase 0: monomial seed
    if (cfg.seed_monomials && cfg.sampler.max_degree >= params.m) {
        if (auto alpha = best_monomial(params, cfg.sampler.max_degree)) {
            Polynomial mono = Polynomial::monomial(*alpha, 1.0);
            consider(mono, score(mono, params, cfg.norms));
        }
    }

    // phase 1: random single-signed samples, scored in parallel, consumed in order
    const uint64_t nb = cfg.random_budget;
    std::vector<Polynomial> polys;
    polys.reserve(nb);
    for (uint64_t i = 0; i < nb; ++i) {
        SamplerConfig sc = cfg.sampler;
        sc.seed = child_seed(cfg.seed, i);
        polys.push_back(sample_polynomial(sc));
    }
    std::vector<RatioReport> reps(nb);
    const bool par = exec == Exec::parallel;
    std::exception_ptr first_error = nullptr;
    std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(nb); ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            reps[static_cast<size_t>(i)] = score(polys[static_cast<size_t>(i)], params, cfg.norms);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(plab_search_err)
#endif
            {
                if (!failed.exchange(true)) first_error = std::current_exception();
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    for (uint64_t i = 0; i < nb; ++i) {
        reps[i].seed = child_seed(cfg.seed, i);
        if (observer) observer(i, polys[i], reps[i]);
        consider(polys[i], reps[i]);
    }

    if (best < 0.0) {
        est.degenerate = true;
        est.witness = best_poly;
        return est;
    }

    // phase 2: multiplicative hill climb
    double sigma = cfg.sigma0;
    int fails = 0;
    uint64_t counter = 0;
    const uint64_t climb_seed = child_seed(cfg.seed, 0x5EEDC11Bull);
    for (uint64_t it = 0; it < cfg.climb_budget && sigma >= cfg.sigma_min; ++it) {
        Polynomial cand(params.dim);
        for (const auto& [a, c] : best_poly.terms()) {
            bool up = splitmix64_at(climb_seed, counter++) & 1ULL;
            cand.add_term(a, c * std::exp(up ? sigma : -sigma));
        }
        RatioReport rep = score(cand, params, cfg.norms);
        ++iteration;
        est.budget_used += 1;
        if (!rep.degenerate && rep.ratio > best) {
            best = rep.ratio;
            best_poly = cand;
            est.trace.push_back({iteration, best});
            fails = 0;
        } else if (++fails >= cfg.patience) {
            sigma *= 0.5;
            fails = 0;
        }
    }

    est.value = best;
    est.witness = best_poly;
    return est;
}

std::vector<SweepCellResult> sweep(const std::vector<SobolevParams>& grid, const SearchConfig& cfg,
                                   Exec exec) {
    std::vector<SweepCellResult> out(grid.size());
    const bool par = exec == Exec::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(grid.size()); ++i) {
        SweepCellResult& cell = out[static_cast<size_t>(i)];
        cell.params = grid[static_cast<size_t>(i)];
        try {
            SearchConfig cell_cfg = cfg;
            cell_cfg.seed = child_seed(cfg.seed, static_cast<uint64_t>(i));
            cell_cfg.sampler.dim = cell.params.dim;
            cell.estimate = estimate_constant(cell.params, cell_cfg,
                                              par ? Exec::serial : exec);
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
    }
    return out;
}

} // namespace plab
