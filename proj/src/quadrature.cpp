#include "plab/quadrature.hpp"

#include <algorithm>
#include <bit>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plab {

const char* quad_method_name(QuadMethod m) {
    switch (m) {
        case QuadMethod::graded_quadrature: return "graded-quadrature";
        case QuadMethod::monte_carlo: return "monte-carlo";
        case QuadMethod::exact_rational: return "exact-rational";
    }
    return "?";
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<size_t>(n), 0.0);
    weights.assign(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence for P_n(x) and P'_n(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<size_t>(i)] = -x; // ascending order
        nodes[static_cast<size_t>(n - 1 - i)] = x;
        weights[static_cast<size_t>(i)] = w;
        weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) nodes[static_cast<size_t>(n / 2)] = 0.0;
}

namespace {

struct Prepared {
    int dim = 0;
    std::vector<double> coef;             // flipped to all-positive
    std::vector<std::vector<int>> expo;   // [term][axis]
    std::vector<int> max_exp, min_exp;    // per axis
    int min_total_degree = 0;
};

Prepared prepare(const Polynomial& f) {
    Prepared p;
    p.dim = f.dim();
    p.max_exp.assign(static_cast<size_t>(p.dim), 0);
    p.min_exp.assign(static_cast<size_t>(p.dim), 1 << 28);
    bool has_pos = false, has_neg = false;
    p.min_total_degree = 1 << 28;
    for (const auto& [a, c] : f.terms()) {
        (c > 0.0 ? has_pos : has_neg) = true;
        p.coef.push_back(std::abs(c));
        std::vector<int> e(static_cast<size_t>(p.dim));
        for (int j = 0; j < p.dim; ++j) {
            e[static_cast<size_t>(j)] = a[j];
            p.max_exp[static_cast<size_t>(j)] = std::max(p.max_exp[static_cast<size_t>(j)], a[j]);
            p.min_exp[static_cast<size_t>(j)] = std::min(p.min_exp[static_cast<size_t>(j)], a[j]);
        }
        p.min_total_degree = std::min(p.min_total_degree, a.degree());
        p.expo.push_back(std::move(e));
    }
    if (has_pos && has_neg)
        throw InputError("integrate_power: polynomial has mixed coefficient signs");
    if (p.coef.empty()) {
        std::fill(p.min_exp.begin(), p.min_exp.end(), 0);
        p.min_total_degree = 0;
    }
    return p;
}

// Smallest error exponent q*v(S) + |S| over coordinate subsets S containing
// axis j on which every term of f vanishes (v(S) = min over terms of the
// degree restricted to S). Controls how deep the mesh must be graded along j.
double worst_face_exponent(const Prepared& p, double q, int axis) {
    const int n = p.dim;
    double best = -1.0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & (1u << axis))) continue;
        int vmin = 1 << 28;
        int per_axis_sum = 0;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) per_axis_sum += p.min_exp[static_cast<size_t>(j)];
        for (const auto& e : p.expo) {
            int v = 0;
            for (int j = 0; j < n; ++j)
                if (mask & (1u << j)) v += e[static_cast<size_t>(j)];
            vmin = std::min(vmin, v);
            if (vmin == 0) break;
        }
        if (vmin == 0) continue; // f does not vanish on this face
        // Joint vanishing fully explained by per-axis monomial factors is
        // already resolved by the singleton faces.
        if (std::popcount(mask) >= 2 && vmin == per_axis_sum) continue;
        double ex = q * static_cast<double>(vmin) + static_cast<double>(std::popcount(mask));
        if (best < 0.0 || ex < best) best = ex;
    }
    return best; // < 0 when axis j borders no vanishing face
}

int depth_cap(const Prepared& p, double q, int axis) {
    // Truncation depth for the algebraic factor x^(q m_j) (and joint faces).
    double ex = worst_face_exponent(p, q, axis);
    int sing_cap = ex < 0.0 ? 4 : static_cast<int>(std::ceil(22.0 / ex)) + 2;
    // A positive polynomial can come arbitrarily close to zero at the face
    // even without vanishing there; the transition scale is governed by the
    // coefficient mass of the face-dominant terms relative to the rest.
    double total = 0.0, face = 0.0;
    for (size_t t = 0; t < p.coef.size(); ++t) {
        total += p.coef[t];
        if (p.expo[t][static_cast<size_t>(axis)] == p.min_exp[static_cast<size_t>(axis)])
            face += p.coef[t];
    }
    int near_cap = face > 0.0 ? static_cast<int>(std::ceil(std::log2(total / face))) + 8 : 26;
    // caps are limits, not targets: refinement stops at the first agreement
    return std::clamp(std::max(sing_cap, near_cap), 4, 26);
}

int depth_at_level(int level, int cap) {
    int d = level == 0 ? 1 : (level == 1 ? 2 : 3 * level - 2);
    return std::min(d, cap);
}

struct AxisMesh {
    std::vector<double> breaks;    // 0, 2^-d, ..., 1/2, 1
    std::vector<double> node_x;    // panel-major
    std::vector<double> node_w;
    std::vector<double> pow_table; // [node][0..maxe]
    std::vector<double> corner_pow; // [break][0..maxe]
    int panels = 0;
    int stride = 0; // maxe + 1
};

AxisMesh build_axis(int depth, int maxe, const std::vector<double>& gx, const std::vector<double>& gw) {
    AxisMesh m;
    m.panels = depth + 1;
    m.stride = maxe + 1;
    m.breaks.resize(static_cast<size_t>(depth) + 2);
    m.breaks[0] = 0.0;
    for (int k = 0; k <= depth; ++k) m.breaks[static_cast<size_t>(k) + 1] = std::ldexp(1.0, k - depth);
    const int ngl = static_cast<int>(gx.size());
    m.node_x.resize(static_cast<size_t>(m.panels * ngl));
    m.node_w.resize(static_cast<size_t>(m.panels * ngl));
    for (int pnl = 0; pnl < m.panels; ++pnl) {
        double a = m.breaks[static_cast<size_t>(pnl)], b = m.breaks[static_cast<size_t>(pnl) + 1];
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < ngl; ++i) {
            m.node_x[static_cast<size_t>(pnl * ngl + i)] = mid + half * gx[static_cast<size_t>(i)];
            m.node_w[static_cast<size_t>(pnl * ngl + i)] = half * gw[static_cast<size_t>(i)];
        }
    }
    m.pow_table.resize(m.node_x.size() * static_cast<size_t>(m.stride));
    for (size_t k = 0; k < m.node_x.size(); ++k) {
        double* row = &m.pow_table[k * static_cast<size_t>(m.stride)];
        row[0] = 1.0;
        for (int e = 1; e <= maxe; ++e) row[e] = row[e - 1] * m.node_x[k];
    }
    m.corner_pow.resize(m.breaks.size() * static_cast<size_t>(m.stride));
    for (size_t k = 0; k < m.breaks.size(); ++k) {
        double* row = &m.corner_pow[k * static_cast<size_t>(m.stride)];
        row[0] = 1.0;
        for (int e = 1; e <= maxe; ++e) row[e] = row[e - 1] * m.breaks[k];
    }
    return m;
}

enum class PowKind { linear, square, cube, general };

PowKind pow_kind(double q) {
    if (q == 1.0) return PowKind::linear;
    if (q == 2.0) return PowKind::square;
    if (q == 3.0) return PowKind::cube;
    return PowKind::general;
}

inline double apply_pow(double s, double q, PowKind k) {
    switch (k) {
        case PowKind::linear: return s;
        case PowKind::square: return s * s;
        case PowKind::cube: return s * s * s;
        case PowKind::general: return std::pow(s, q);
    }
    return 0.0;
}

struct PanelScratch {
    // partial per-term products, one buffer per axis depth
    std::vector<std::vector<double>> part;
    PanelScratch(int dim, size_t terms) : part(static_cast<size_t>(dim)) {
        for (auto& v : part) v.resize(terms);
    }
};

double eval_panel(const Prepared& p, const std::vector<AxisMesh>& ax, const int* pidx, int ngl,
                  double q, PowKind pk, PanelScratch& sc) {
    const int n = p.dim;
    const size_t nt = p.coef.size();
    // recursion over axes; innermost axis does the weighted power sum
    double acc = 0.0;
    auto rec = [&](auto&& self, int axis, double wprod, const std::vector<double>& part) -> void {
        const AxisMesh& m = ax[static_cast<size_t>(axis)];
        const int base = pidx[axis] * ngl;
        if (axis == n - 1) {
            double local = 0.0;
            for (int i = 0; i < ngl; ++i) {
                const double* row = &m.pow_table[static_cast<size_t>(base + i) * static_cast<size_t>(m.stride)];
                double s = 0.0;
                for (size_t t = 0; t < nt; ++t)
                    s += part[t] * row[p.expo[t][static_cast<size_t>(axis)]];
                local += m.node_w[static_cast<size_t>(base + i)] * apply_pow(s, q, pk);
            }
            acc += wprod * local;
            return;
        }
        auto& next = sc.part[static_cast<size_t>(axis) + 1];
        for (int i = 0; i < ngl; ++i) {
            const double* row = &m.pow_table[static_cast<size_t>(base + i) * static_cast<size_t>(m.stride)];
            for (size_t t = 0; t < nt; ++t)
                next[t] = part[t] * row[p.expo[t][static_cast<size_t>(axis)]];
            self(self, axis + 1, wprod * m.node_w[static_cast<size_t>(base + i)], next);
        }
    };
    sc.part[0].assign(p.coef.begin(), p.coef.end());
    rec(rec, 0, 1.0, sc.part[0]);
    return acc;
}

double corner_value(const Prepared& p, const std::vector<AxisMesh>& ax, const int* bidx) {
    double s = 0.0;
    for (size_t t = 0; t < p.coef.size(); ++t) {
        double prod = p.coef[t];
        for (int j = 0; j < p.dim; ++j) {
            const AxisMesh& m = ax[static_cast<size_t>(j)];
            prod *= m.corner_pow[static_cast<size_t>(bidx[j]) * static_cast<size_t>(m.stride) +
                                 static_cast<size_t>(p.expo[t][static_cast<size_t>(j)])];
        }
        s += prod;
    }
    return s;
}

// One refinement level of the tensor rule. Panels whose rigorous upper bound
// (f is coordinate-wise monotone for nonnegative coefficients) falls below a
// small share of the running lower bound are skipped; their bound mass goes
// into pruned_mass. Summation over panels is in fixed lexicographic order.
double level_value(const Prepared& p, double q, PowKind pk, const std::vector<int>& depths,
                   const std::vector<double>& gx, const std::vector<double>& gw, double rel_tol,
                   Exec exec, uint64_t& evals, double& pruned_mass) {
    const int n = p.dim;
    const int ngl = static_cast<int>(gx.size());
    std::vector<AxisMesh> ax;
    ax.reserve(static_cast<size_t>(n));
    int64_t total_panels = 1;
    for (int j = 0; j < n; ++j) {
        ax.push_back(build_axis(depths[static_cast<size_t>(j)], p.max_exp[static_cast<size_t>(j)], gx, gw));
        total_panels *= ax.back().panels;
    }
    const int64_t K = total_panels;

    auto decode = [&](int64_t flat, int* idx) {
        for (int j = n - 1; j >= 0; --j) {
            idx[j] = static_cast<int>(flat % ax[static_cast<size_t>(j)].panels);
            flat /= ax[static_cast<size_t>(j)].panels;
        }
    };

    const bool par = exec == Exec::parallel;
    const bool prune = K >= 256;
    std::vector<double> upper;
    double theta = -1.0;
    if (prune) {
        std::vector<double> lower(static_cast<size_t>(K));
        upper.resize(static_cast<size_t>(K));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
        for (int64_t k = 0; k < K; ++k) {
            int idx[8];
            decode(k, idx);
            double vol = 1.0;
            for (int j = 0; j < n; ++j)
                vol *= ax[static_cast<size_t>(j)].breaks[static_cast<size_t>(idx[j]) + 1] -
                       ax[static_cast<size_t>(j)].breaks[static_cast<size_t>(idx[j])];
            double fa = corner_value(p, ax, idx);
            int up[8];
            for (int j = 0; j < n; ++j) up[j] = idx[j] + 1;
            double fb = corner_value(p, ax, up);
            lower[static_cast<size_t>(k)] = std::pow(fa, q) * vol;
            upper[static_cast<size_t>(k)] = std::pow(fb, q) * vol;
        }
        evals += static_cast<uint64_t>(2 * K);
        double lower_sum = 0.0;
        for (int64_t k = 0; k < K; ++k) lower_sum += lower[static_cast<size_t>(k)];
        theta = rel_tol * 0.05 * lower_sum / static_cast<double>(K);
    }

    std::vector<double> panel_sum(static_cast<size_t>(K), 0.0);
#ifdef _OPENMP
#pragma omp parallel if (par)
#endif
    {
        PanelScratch sc(n, p.coef.size());
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16)
#endif
        for (int64_t k = 0; k < K; ++k) {
            if (prune && upper[static_cast<size_t>(k)] <= theta) continue;
            int idx[8];
            decode(k, idx);
            panel_sum[static_cast<size_t>(k)] = eval_panel(p, ax, idx, ngl, q, pk, sc);
        }
    }

    double value = 0.0;
    uint64_t node_evals = 0;
    uint64_t nodes_per_panel = 1;
    for (int j = 0; j < n; ++j) nodes_per_panel *= static_cast<uint64_t>(ngl);
    for (int64_t k = 0; k < K; ++k) {
        if (prune && upper[static_cast<size_t>(k)] <= theta) {
            pruned_mass += upper[static_cast<size_t>(k)];
            continue;
        }
        value += panel_sum[static_cast<size_t>(k)];
        node_evals += nodes_per_panel;
    }
    evals += node_evals;
    return value;
}

// Single-monomial integrand: the tensor rule factors into a product of 1-D
// composite rules, which is what gets evaluated here.
double composite_1d_power(double s, int depth, const std::vector<double>& gx,
                          const std::vector<double>& gw, uint64_t& evals) {
    double sum = 0.0;
    for (int pnl = 0; pnl <= depth; ++pnl) {
        double b = std::ldexp(1.0, pnl - depth);
        double a = pnl == 0 ? 0.0 : 0.5 * b;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double local = 0.0;
        for (size_t i = 0; i < gx.size(); ++i) {
            double x = mid + half * gx[i];
            local += half * gw[i] * (s == 0.0 ? 1.0 : std::pow(x, s));
        }
        sum += local;
    }
    evals += static_cast<uint64_t>(depth + 1) * gx.size();
    return sum;
}

uint64_t level_cost(const Prepared& p, const std::vector<int>& depths, int ngl) {
    uint64_t c = 1;
    for (int j = 0; j < p.dim; ++j)
        c *= static_cast<uint64_t>((depths[static_cast<size_t>(j)] + 1) * ngl);
    return c;
}

} // namespace

QuadResult integrate_power(const Polynomial& f, double q, const QuadratureConfig& cfg) {
    if (q <= 0.0) throw InputError("integrate_power: exponent q must be positive");
    Prepared p = prepare(f);
    if (p.coef.empty()) return {0.0, 0.0, QuadMethod::graded_quadrature, 0};

    std::vector<double> gx, gw;
    gauss_legendre(cfg.gl_degree, gx, gw);

    const PowKind pk = pow_kind(q);
    std::vector<int> caps(static_cast<size_t>(p.dim));
    for (int j = 0; j < p.dim; ++j) caps[static_cast<size_t>(j)] = depth_cap(p, q, j);

    const bool single_term = p.coef.size() == 1;
    uint64_t evals = 0;
    double prev = 0.0, prev_pruned = 0.0;
    std::vector<int> prev_depths;
    for (int level = 0;; ++level) {
        std::vector<int> depths(static_cast<size_t>(p.dim));
        for (int j = 0; j < p.dim; ++j)
            depths[static_cast<size_t>(j)] = depth_at_level(level, caps[static_cast<size_t>(j)]);
        if (!prev_depths.empty() && depths == prev_depths)
            throw ConvergenceError("integrate_power: refinement exhausted without reaching tolerance");
        if (!single_term && evals + level_cost(p, depths, cfg.gl_degree) > cfg.max_evals)
            throw BudgetError("integrate_power: evaluation budget exceeded before convergence");

        double pruned = 0.0;
        double value;
        if (single_term) {
            value = std::pow(p.coef[0], q);
            for (int j = 0; j < p.dim; ++j)
                value *= composite_1d_power(q * p.expo[0][static_cast<size_t>(j)],
                                            depths[static_cast<size_t>(j)], gx, gw, evals);
            if (evals > cfg.max_evals)
                throw BudgetError("integrate_power: evaluation budget exceeded before convergence");
        } else {
            value = level_value(p, q, pk, depths, gx, gw, cfg.rel_tol, cfg.exec, evals, pruned);
        }

        if (level >= 1) {
            double diff = std::abs(value - prev);
            if (diff <= cfg.rel_tol * std::max(std::abs(value), DBL_MIN))
                return {value, diff + pruned + prev_pruned, QuadMethod::graded_quadrature, evals};
        }
        prev = value;
        prev_pruned = pruned;
        prev_depths = std::move(depths);
    }
}

} // namespace plab
