#include "plab/multi_index.hpp"

namespace plab {

namespace {

void emit_with_degree(int dim, int remaining, std::vector<int>& acc,
                      std::vector<MultiIndex>& out) {
    if (static_cast<int>(acc.size()) == dim - 1) {
        acc.push_back(remaining);
        out.emplace_back(acc);
        acc.pop_back();
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        acc.push_back(v);
        emit_with_degree(dim, remaining - v, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> multi_indices_of_order(int dim, int m) {
    if (dim < 1 || m < 0) throw InputError("multi_indices_of_order: bad arguments");
    std::vector<MultiIndex> out;
    std::vector<int> acc;
    acc.reserve(static_cast<size_t>(dim));
    emit_with_degree(dim, m, acc, out);
    return out; // lex order within one degree == graded-lex order
}

std::vector<MultiIndex> multi_indices_degree_range(int dim, int lo, int hi) {
    if (lo < 0) lo = 0;
    std::vector<MultiIndex> out;
    for (int d = lo; d <= hi; ++d) {
        auto layer = multi_indices_of_order(dim, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace plab
