#include "plab/monte_carlo.hpp"

#include <cmath>

namespace plab {

namespace {
constexpr uint64_t kBlock = 4096; // fixed block size keeps reductions schedule-independent
}

QuadResult integrate_power_mc(const Polynomial& f, double q, const MonteCarloConfig& cfg) {
    if (q <= 0.0) throw InputError("integrate_power_mc: exponent q must be positive");
    if (cfg.samples < 2) throw InputError("integrate_power_mc: need at least 2 samples");
    bool has_pos = false, has_neg = false;
    for (const auto& [a, c] : f.terms()) (c > 0.0 ? has_pos : has_neg) = true;
    if (has_pos && has_neg)
        throw InputError("integrate_power_mc: polynomial has mixed coefficient signs");

    const int n = f.dim();
    // flat term arrays; per-sample power tables avoid any allocation in the loop
    std::vector<double> coef;
    std::vector<int> expo;
    int max_e = 0;
    for (const auto& [a, c] : f.terms()) {
        coef.push_back(std::abs(c));
        for (int j = 0; j < n; ++j) {
            expo.push_back(a[j]);
            max_e = std::max(max_e, a[j]);
        }
    }
    const size_t nt = coef.size();
    const uint64_t nblocks = (cfg.samples + kBlock - 1) / kBlock;
    std::vector<double> block_sum(nblocks, 0.0), block_sq(nblocks, 0.0);

    const bool par = cfg.exec == Exec::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (int64_t b = 0; b < static_cast<int64_t>(nblocks); ++b) {
        const uint64_t lo = static_cast<uint64_t>(b) * kBlock;
        const uint64_t hi = std::min(lo + kBlock, cfg.samples);
        double s = 0.0, s2 = 0.0;
        std::vector<double> pw(static_cast<size_t>(n) * (static_cast<size_t>(max_e) + 1));
        const size_t stride = static_cast<size_t>(max_e) + 1;
        for (uint64_t i = lo; i < hi; ++i) {
            for (int j = 0; j < n; ++j) {
                double xj = unit_double(
                    splitmix64_at(cfg.seed, i * static_cast<uint64_t>(n) + static_cast<uint64_t>(j)));
                double* row = &pw[static_cast<size_t>(j) * stride];
                row[0] = 1.0;
                for (int e = 1; e <= max_e; ++e) row[e] = row[e - 1] * xj;
            }
            double fx = 0.0;
            for (size_t t = 0; t < nt; ++t) {
                double prod = coef[t];
                const int* et = &expo[t * static_cast<size_t>(n)];
                for (int j = 0; j < n; ++j) prod *= pw[static_cast<size_t>(j) * stride + static_cast<size_t>(et[j])];
                fx += prod;
            }
            double v = std::pow(fx, q);
            s += v;
            s2 += v * v;
        }
        block_sum[static_cast<size_t>(b)] = s;
        block_sq[static_cast<size_t>(b)] = s2;
    }

    double sum = 0.0, sq = 0.0;
    for (uint64_t b = 0; b < nblocks; ++b) {
        sum += block_sum[b];
        sq += block_sq[b];
    }
    const double nn = static_cast<double>(cfg.samples);
    const double mean = sum / nn;
    double var = (sq - nn * mean * mean) / (nn - 1.0);
    if (var < 0.0) var = 0.0;
    return {mean, std::sqrt(var / nn), QuadMethod::monte_carlo, cfg.samples};
}

} // namespace plab
