#include "plab/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace plab {

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.dim_ != dim_) throw InputError("polynomial dimension mismatch in addition");
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.dim_ != dim_) throw InputError("polynomial dimension mismatch in subtraction");
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

Polynomial Polynomial::scaled(double c) const {
    Polynomial out(dim_);
    if (c == 0.0) return out;
    for (const auto& [a, v] : terms_) out.add_term(a, c * v);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (o.dim_ != dim_) throw InputError("polynomial dimension mismatch in multiplication");
    Polynomial out(dim_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            std::vector<int> e(static_cast<size_t>(dim_));
            for (int j = 0; j < dim_; ++j) e[static_cast<size_t>(j)] = a[j] + b[j];
            out.add_term(MultiIndex(std::move(e)), ca * cb);
        }
    return out;
}

double Polynomial::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_) throw InputError("evaluation point dimension mismatch");
    if (terms_.empty()) return 0.0;
    // Cached powers per coordinate up to the maximal exponent of that axis.
    std::vector<std::vector<double>> pow_table(static_cast<size_t>(dim_));
    std::vector<int> max_e(static_cast<size_t>(dim_), 0);
    for (const auto& [a, c] : terms_)
        for (int j = 0; j < dim_; ++j) max_e[static_cast<size_t>(j)] = std::max(max_e[static_cast<size_t>(j)], a[j]);
    for (int j = 0; j < dim_; ++j) {
        auto& t = pow_table[static_cast<size_t>(j)];
        t.resize(static_cast<size_t>(max_e[static_cast<size_t>(j)]) + 1);
        t[0] = 1.0;
        for (size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] * x[static_cast<size_t>(j)];
    }
    double sum = 0.0;
    for (const auto& [a, c] : terms_) {
        double prod = c;
        for (int j = 0; j < dim_; ++j) prod *= pow_table[static_cast<size_t>(j)][static_cast<size_t>(a[j])];
        sum += prod;
    }
    return sum;
}

Decomposition decompose(const Polynomial& p) {
    Decomposition d{0.0, Polynomial(p.dim()), Polynomial(p.dim())};
    for (const auto& [a, c] : p.terms()) {
        if (a.is_zero())
            d.p0 = c;
        else if (c > 0.0)
            d.plus.add_term(a, c);
        else
            d.minus.add_term(a, c);
    }
    return d;
}

Polynomial differentiate(const Polynomial& p, int axis) {
    if (axis < 0 || axis >= p.dim()) throw InputError("differentiate: coordinate index out of range");
    Polynomial out(p.dim());
    for (const auto& [a, c] : p.terms()) {
        int e = a[axis];
        if (e >= 1) out.add_term(a.shifted(axis, -1), c * static_cast<double>(e));
    }
    return out;
}

std::vector<Polynomial> gradient(const Polynomial& p) {
    std::vector<Polynomial> g;
    g.reserve(static_cast<size_t>(p.dim()));
    for (int j = 0; j < p.dim(); ++j) g.push_back(differentiate(p, j));
    return g;
}

std::vector<std::pair<MultiIndex, Polynomial>> higher_gradient(const Polynomial& p, int m) {
    if (m < 1) throw InputError("higher_gradient: order must be >= 1");
    std::vector<std::pair<MultiIndex, Polynomial>> out;
    for (const MultiIndex& beta : multi_indices_of_order(p.dim(), m)) {
        Polynomial d = p;
        for (int j = 0; j < p.dim(); ++j)
            for (int k = 0; k < beta[j]; ++k) d = differentiate(d, j);
        out.emplace_back(beta, std::move(d));
    }
    return out;
}

std::pair<Polynomial, Polynomial> truncate_degree(const Polynomial& p, int m) {
    if (m < 1) throw InputError("truncate_degree: order must be >= 1");
    Polynomial low(p.dim()), rest(p.dim());
    for (const auto& [a, c] : p.terms()) {
        if (a.degree() <= m - 1)
            low.add_term(a, c);
        else
            rest.add_term(a, c);
    }
    return {low, rest};
}

Polynomial permute_coordinates(const Polynomial& p, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != p.dim()) throw InputError("permutation size mismatch");
    Polynomial out(p.dim());
    for (const auto& [a, c] : p.terms()) out.add_term(a.permuted(perm), c);
    return out;
}

uint64_t content_hash(const Polynomial& p) {
    constexpr uint64_t offset = 14695981039346656037ULL;
    constexpr uint64_t prime = 1099511628211ULL;
    uint64_t h = offset;
    auto mix = [&h](uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xffULL;
            h *= prime;
        }
    };
    mix(static_cast<uint64_t>(p.dim()));
    for (const auto& [a, c] : p.terms()) {
        for (int j = 0; j < p.dim(); ++j) mix(static_cast<uint64_t>(a[j]));
        mix(std::bit_cast<uint64_t>(c));
    }
    return h;
}

} // namespace plab
