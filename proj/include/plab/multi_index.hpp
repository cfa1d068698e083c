#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "plab/errors.hpp"

namespace plab {

// Exponent vector of a monomial x^alpha. Entries are non-negative and the
// length equals the ambient dimension. Ordering is graded-lexicographic
// (total degree first, then entry-wise lexicographic), which fixes the
// iteration order of every term map in the project.
class MultiIndex {
  public:
    explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
        if (e_.empty()) throw InputError("multi-index must have dimension >= 1");
        for (int v : e_)
            if (v < 0) throw InputError("multi-index entries must be >= 0");
    }

    static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(static_cast<size_t>(dim), 0)); }

    static MultiIndex unit(int dim, int axis) {
        std::vector<int> e(static_cast<size_t>(dim), 0);
        e.at(static_cast<size_t>(axis)) = 1;
        return MultiIndex(std::move(e));
    }

    int dim() const { return static_cast<int>(e_.size()); }
    int operator[](int j) const { return e_[static_cast<size_t>(j)]; }
    const std::vector<int>& entries() const { return e_; }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_zero() const {
        for (int v : e_)
            if (v != 0) return false;
        return true;
    }

    // alpha with entry `axis` shifted by `delta` (used by differentiation).
    MultiIndex shifted(int axis, int delta) const {
        std::vector<int> e = e_;
        e.at(static_cast<size_t>(axis)) += delta;
        return MultiIndex(std::move(e));
    }

    MultiIndex permuted(const std::vector<int>& perm) const {
        std::vector<int> e(e_.size());
        for (size_t j = 0; j < e_.size(); ++j) e[j] = e_[static_cast<size_t>(perm[j])];
        return MultiIndex(std::move(e));
    }

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }

    // Graded-lexicographic: degree first, then lex on entries.
    bool operator<(const MultiIndex& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        return e_ < o.e_;
    }

    std::string to_string() const {
        std::string s;
        for (size_t j = 0; j < e_.size(); ++j) {
            if (j) s += ';';
            s += std::to_string(e_[j]);
        }
        return s;
    }

  private:
    std::vector<int> e_;
};

// All multi-indices of dimension `dim` with degree in [lo, hi], in graded-lex order.
std::vector<MultiIndex> multi_indices_degree_range(int dim, int lo, int hi);

// All multi-indices with |alpha| == m (one derivative-component index set per order).
std::vector<MultiIndex> multi_indices_of_order(int dim, int m);

} // namespace plab
