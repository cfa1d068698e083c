#include "plab/sampler.hpp"

#include <algorithm>

namespace plab {

Polynomial sample_polynomial(const SamplerConfig& cfg) {
    if (cfg.dim < 1) throw InputError("sample_polynomial: dim must be >= 1");
    if (cfg.max_degree < 1) throw InputError("sample_polynomial: max_degree must be >= 1");
    if (cfg.support_size < 1) throw InputError("sample_polynomial: support_size must be >= 1");
    if (cfg.min_degree < 0 || cfg.min_degree > cfg.max_degree)
        throw InputError("sample_polynomial: min_degree out of range");
    if (cfg.coef_dist != "uniform")
        throw InputError("sample_polynomial: unknown coefficient distribution '" + cfg.coef_dist + "'");

    std::vector<MultiIndex> candidates = multi_indices_degree_range(cfg.dim, cfg.min_degree, cfg.max_degree);
    const size_t n = candidates.size();
    const size_t k = std::min(static_cast<size_t>(cfg.support_size), n);

    // partial Fisher-Yates on candidate slots; counters < 2^32 drive the
    // shuffle, counters >= 2^32 the coefficients, so the streams never collide
    std::vector<size_t> slot(n);
    for (size_t i = 0; i < n; ++i) slot[i] = i;
    for (size_t t = 0; t < k; ++t) {
        uint64_t r = splitmix64_at(cfg.seed, t);
        size_t j = t + static_cast<size_t>(r % (n - t));
        std::swap(slot[t], slot[j]);
    }
    std::vector<size_t> chosen(slot.begin(), slot.begin() + static_cast<long>(k));
    std::sort(chosen.begin(), chosen.end());

    Polynomial poly(cfg.dim);
    for (size_t i = 0; i < k; ++i) {
        double u = unit_double(splitmix64_at(cfg.seed, (1ULL << 32) + i));
        double c;
        if (cfg.sign_mode == SignMode::positive_only) {
            c = 1.0 - u; // (0, 1]
        } else {
            c = 2.0 * u - 1.0;
            if (c == 0.0) c = 0.5; // measure-zero fallback keeps determinism
        }
        poly.add_term(candidates[chosen[i]], c);
    }
    return poly;
}

} // namespace plab
