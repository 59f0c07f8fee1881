#pragma once

#include <map>
#include <optional>
#include <vector>

#include "piflag/rational.hpp"

namespace piflag {

// Sparse row over Q: (column, value) pairs, sorted by column, no zeros.
struct SparseRow {
    std::vector<std::pair<int, Rational>> entries;

    bool empty() const { return entries.empty(); }
    void push(int col, const Rational& v);
};

SparseRow axpy(const SparseRow& a, const Rational& c, const SparseRow& b);  // a + c*b

// Incremental reduced row echelon form over Q with deterministic pivots
// (smallest column). Rows can be streamed in; the kernel basis is canonical
// (one vector per free column, RREF-normalized).
class RrefBuilder {
public:
    explicit RrefBuilder(int cols) : cols_(cols) {}

    void add_row(SparseRow row);
    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    std::vector<std::vector<Rational>> nullspace() const;

private:
    int cols_;
    std::map<int, SparseRow> rows_;  // pivot column -> normalized row
};

// Exact coordinates of t in span(gens), or nullopt when t lies outside.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& gens,
                                                   const std::vector<Rational>& target);

int rank_of(const std::vector<std::vector<Rational>>& vectors);

}  // namespace piflag
