// Benchmark of the OpenMP kernels against their serial reference paths.
// Every kernel must produce bit-identical results under both executions;
// the table reports wall times and the speedup.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "plab/monte_carlo.hpp"
#include "plab/norms.hpp"
#include "plab/sampler.hpp"
#include "plab/search.hpp"
#include "plab/verify.hpp"

using namespace plab;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    static const auto t0 = clock::now();
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
}

int failures = 0;

template <typename F>
void bench(const char* name, F&& run) {
    double t0 = now_ms();
    double serial = run(Exec::serial);
    double t1 = now_ms();
    double parallel = run(Exec::parallel);
    double t2 = now_ms();
    bool identical = std::memcmp(&serial, &parallel, sizeof(double)) == 0;
    if (!identical) ++failures;
    std::printf("%-28s serial %9.1f ms   omp %9.1f ms   speedup %5.2fx   identical %s\n", name,
                t1 - t0, t2 - t1, (t1 - t0) / std::max(t2 - t1, 1e-9), identical ? "yes" : "NO");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif

    bench("quadrature x+y+z ^0.9", [](Exec e) {
        SamplerConfig sc{3, 8, 10, 1, SignMode::positive_only, "uniform", 42};
        Polynomial f = sample_polynomial(sc);
        QuadratureConfig cfg;
        cfg.exec = e;
        return integrate_power(f, 0.9, cfg).value;
    });

    bench("monte carlo 2e7 samples", [](Exec e) {
        SamplerConfig sc{3, 8, 10, 1, SignMode::positive_only, "uniform", 43};
        Polynomial f = sample_polynomial(sc);
        MonteCarloConfig cfg;
        cfg.samples = 20'000'000;
        cfg.seed = 7;
        cfg.exec = e;
        return integrate_power_mc(f, 0.9, cfg).value;
    });

    bench("monomial sup N=4 K=60", [](Exec e) {
        SobolevParams params = SobolevParams::make(4, 0.9, 1);
        return monomial_ratio_sup(params, 60, e).sup;
    });

    bench("estimate N=2 budget 200", [](Exec e) {
        SobolevParams params = SobolevParams::make(2, 0.8, 1);
        SearchConfig cfg;
        cfg.sampler = {2, 6, 6, 1, SignMode::positive_only, "uniform", 1};
        cfg.random_budget = 200;
        cfg.climb_budget = 50;
        cfg.seed = 11;
        return estimate_constant(params, cfg, e).value;
    });

    if (failures) {
        std::printf("%d kernel(s) diverged between serial and parallel execution\n", failures);
        return 1;
    }
    return 0;
}
