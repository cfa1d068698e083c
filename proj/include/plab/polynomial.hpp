#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "plab/multi_index.hpp"

namespace plab {

// Sparse real-coefficient polynomial in a fixed dimension. Zero coefficients
// are never stored; the term map iterates in graded-lex order, so serialized
// output is deterministic. Values are immutable in spirit: all operations
// return fresh polynomials.
class Polynomial {
  public:
    using TermMap = std::map<MultiIndex, double>;

    explicit Polynomial(int dim) : dim_(dim) {
        if (dim < 1) throw InputError("polynomial dimension must be >= 1");
    }

    static Polynomial constant(int dim, double c) {
        Polynomial p(dim);
        p.add_term(MultiIndex::zero(dim), c);
        return p;
    }

    static Polynomial monomial(const MultiIndex& alpha, double c) {
        Polynomial p(alpha.dim());
        p.add_term(alpha, c);
        return p;
    }

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Degree of the zero polynomial is reported as -1.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    double coefficient(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? 0.0 : it->second;
    }

    // Merges into the term map; exact zero results are deleted.
    void add_term(const MultiIndex& alpha, double c) {
        if (alpha.dim() != dim_) throw InputError("multi-index dimension mismatch");
        if (c == 0.0) return;
        auto [it, inserted] = terms_.emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0.0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial scaled(double c) const;
    Polynomial operator*(const Polynomial& o) const;

    double evaluate(std::span<const double> x) const;

    bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  private:
    int dim_;
    TermMap terms_;
};

// Sign-split decomposition: constant term, positive-coefficient part and
// negative-coefficient part (both of degree >= 1, disjoint supports).
struct Decomposition {
    double p0;
    Polynomial plus;
    Polynomial minus;

    Polynomial reassemble() const {
        Polynomial p = plus + minus;
        p.add_term(MultiIndex::zero(plus.dim()), p0);
        return p;
    }
};

Decomposition decompose(const Polynomial& p);

Polynomial differentiate(const Polynomial& p, int axis); // axis in [0, dim)
std::vector<Polynomial> gradient(const Polynomial& p);

// All order-m partial derivatives D^beta p, keyed by beta with |beta| = m.
// Identically-zero entries are kept so the component set is predictable.
std::vector<std::pair<MultiIndex, Polynomial>> higher_gradient(const Polynomial& p, int m);

// Splits p into (low, rest) with deg(low) <= m-1 and every term of rest of degree >= m.
std::pair<Polynomial, Polynomial> truncate_degree(const Polynomial& p, int m);

Polynomial permute_coordinates(const Polynomial& p, const std::vector<int>& perm);

// FNV-1a over the canonical (graded-lex) term sequence; stable across runs.
uint64_t content_hash(const Polynomial& p);

} // namespace plab
