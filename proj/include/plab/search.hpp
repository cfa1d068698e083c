#pragma once

#include <functional>
#include <vector>

#include "plab/sampler.hpp"
#include "plab/verify.hpp"

namespace plab {

// Randomized lower-bound estimation of the best inequality constant:
// phase 0 scores the best monomial of the reachable degree box, phase 1
// scores random single-signed polynomials, phase 2 hill-climbs from the
// best find with multiplicative coefficient perturbations e^{+-sigma}
// (additive steps would waste budget on the ratio's scale-invariant
// direction). sigma halves after `patience` consecutive non-improvements
// and the climb stops below sigma_min.
struct SearchConfig {
    SamplerConfig sampler{1, 3, 4, 1, SignMode::positive_only, "uniform", 1};
    uint64_t random_budget = 500;
    uint64_t climb_budget = 500;
    double sigma0 = 0.5;
    double sigma_min = 1e-4;
    int patience = 50;
    bool seed_monomials = true;
    uint64_t seed = 1;
    NormConfig norms;
};

struct TracePoint {
    uint64_t iteration = 0;
    double best = 0.0;
};

struct ConstantEstimate {
    SobolevParams params;
    double value = 0.0;
    Polynomial witness{1};
    uint64_t budget_used = 0;
    std::vector<TracePoint> trace; // best-so-far, nondecreasing
    bool degenerate = false;       // no non-degenerate candidate was seen
};

// Observer sees every phase-1 sample (in index order) with its report;
// suites that must be dominated by the estimate share the stream this way.
using SampleObserver = std::function<void(uint64_t index, const Polynomial&, const RatioReport&)>;

ConstantEstimate estimate_constant(const SobolevParams& params, const SearchConfig& cfg,
                                   Exec exec = Exec::parallel, const SampleObserver& observer = {});

struct SweepCellResult {
    SobolevParams params;
    std::optional<ConstantEstimate> estimate;
    std::string error; // nonempty when the cell failed
};

// Independent cells; cell i derives its stream from child_seed(cfg.seed, i),
// so results do not depend on the execution schedule. Failures are recorded
// in-band and do not abort the sweep.
std::vector<SweepCellResult> sweep(const std::vector<SobolevParams>& grid, const SearchConfig& cfg,
                                   Exec exec = Exec::parallel);

} // namespace plab
