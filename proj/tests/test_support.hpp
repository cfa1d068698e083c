#pragma once

#include <cmath>
#include <initializer_list>
#include <utility>
#include <vector>

#include "plab/polynomial.hpp"
#include "plab/quadrature.hpp"
#include "plab/rational.hpp"

namespace plab::test {

inline Polynomial make_poly(int dim,
                            std::initializer_list<std::pair<std::vector<int>, double>> terms) {
    Polynomial p(dim);
    for (const auto& [alpha, c] : terms) p.add_term(MultiIndex(alpha), c);
    return p;
}

// Exact evaluation at a rational point; independent oracle for evaluate().
inline Rational rational_evaluate(const Polynomial& p, const std::vector<Rational>& x) {
    Rational sum(0);
    for (const auto& [a, c] : p.terms()) {
        Rational prod = rational_from_double(c);
        for (int j = 0; j < p.dim(); ++j)
            for (int k = 0; k < a[j]; ++k) prod *= x[static_cast<size_t>(j)];
        sum += prod;
    }
    return sum;
}

// Test-only auxiliary: int |P|^q on the unit cube for general (mixed-sign) P
// via a uniform composite Gauss-Legendre mesh. The |.| kink limits accuracy;
// callers use it only where the inequality margin dwarfs the error.
inline double abs_power_integral(const Polynomial& p, double q, int panels_per_axis = 24) {
    std::vector<double> gx, gw;
    gauss_legendre(12, gx, gw);
    const int n = p.dim();
    const int ngl = static_cast<int>(gx.size());
    const int nodes_per_axis = panels_per_axis * ngl;
    std::vector<double> x(static_cast<size_t>(n)), w(static_cast<size_t>(n));
    std::vector<int> idx(static_cast<size_t>(n), 0);
    std::vector<double> ax(static_cast<size_t>(n * nodes_per_axis)), aw(ax.size());
    const double h = 1.0 / panels_per_axis;
    for (int pnl = 0; pnl < panels_per_axis; ++pnl)
        for (int i = 0; i < ngl; ++i) {
            double mid = (pnl + 0.5) * h;
            for (int j = 0; j < n; ++j) {
                ax[static_cast<size_t>(j * nodes_per_axis + pnl * ngl + i)] =
                    mid + 0.5 * h * gx[static_cast<size_t>(i)];
                aw[static_cast<size_t>(j * nodes_per_axis + pnl * ngl + i)] =
                    0.5 * h * gw[static_cast<size_t>(i)];
            }
        }
    double total = 0.0;
    while (true) {
        double wt = 1.0;
        for (int j = 0; j < n; ++j) {
            x[static_cast<size_t>(j)] = ax[static_cast<size_t>(j * nodes_per_axis + idx[static_cast<size_t>(j)])];
            wt *= aw[static_cast<size_t>(j * nodes_per_axis + idx[static_cast<size_t>(j)])];
        }
        total += wt * std::pow(std::abs(p.evaluate(x)), q);
        int j = n - 1;
        while (j >= 0 && ++idx[static_cast<size_t>(j)] == nodes_per_axis) {
            idx[static_cast<size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return total;
}

inline double abs_lq_norm(const Polynomial& p, double q, int panels = 24) {
    return std::pow(abs_power_integral(p, q, panels), 1.0 / q);
}

} // namespace plab::test
