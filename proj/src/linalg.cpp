#include "piflag/linalg.hpp"

#include <algorithm>

namespace piflag {

void SparseRow::push(int col, const Rational& v) {
    if (v == 0) return;
    entries.emplace_back(col, v);
}

SparseRow axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
    SparseRow r;
    r.entries.reserve(a.entries.size() + b.entries.size());
    auto ia = a.entries.begin(), ib = b.entries.begin();
    while (ia != a.entries.end() || ib != b.entries.end()) {
        if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
            r.entries.push_back(*ia++);
        } else if (ia == a.entries.end() || ib->first < ia->first) {
            r.push(ib->first, c * ib->second);
            ++ib;
        } else {
            r.push(ia->first, ia->second + c * ib->second);
            ++ia;
            ++ib;
        }
    }
    return r;
}

void RrefBuilder::add_row(SparseRow row) {
    // forward reduction against existing pivots; a pivot row only touches
    // columns >= its pivot, so entries already scanned stay reduced
    std::size_t pos = 0;
    while (pos < row.entries.size()) {
        const int col = row.entries[pos].first;
        auto it = rows_.find(col);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        const Rational c = -row.entries[pos].second;
        row = axpy(row, c, it->second);
        const auto next = std::lower_bound(
            row.entries.begin(), row.entries.end(), col + 1,
            [](const std::pair<int, Rational>& e, int cc) { return e.first < cc; });
        pos = static_cast<std::size_t>(next - row.entries.begin());
    }
    if (row.empty()) return;
    // normalize to pivot 1
    const int pivot = row.entries.front().first;
    const Rational inv = Rational(1) / row.entries.front().second;
    for (auto& [c, v] : row.entries) v *= inv;
    // back-eliminate the new pivot column from existing rows
    for (auto& [p, r] : rows_) {
        auto it = std::lower_bound(
            r.entries.begin(), r.entries.end(), pivot,
            [](const std::pair<int, Rational>& e, int c) { return e.first < c; });
        if (it != r.entries.end() && it->first == pivot) {
            const Rational c = -it->second;
            r = axpy(r, c, row);
        }
    }
    rows_.emplace(pivot, std::move(row));
}

std::vector<std::vector<Rational>> RrefBuilder::nullspace() const {
    std::vector<bool> is_pivot(cols_, false);
    for (const auto& [p, r] : rows_) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[f] = 1;
        for (const auto& [p, r] : rows_) {
            for (const auto& [c, val] : r.entries) {
                if (c == f) {
                    v[p] = -val;
                    break;
                }
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& gens,
                                                   const std::vector<Rational>& target) {
    const int k = static_cast<int>(gens.size());
    const int dim = static_cast<int>(target.size());
    // dense elimination on the augmented system [gens | target]
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(k + 1, Rational(0)));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < dim; ++i) m[i][j] = gens[j][i];
    for (int i = 0; i < dim; ++i) m[i][k] = target[i];

    std::vector<int> pivot_row_of_col(k, -1);
    int row = 0;
    for (int col = 0; col < k && row < dim; ++col) {
        int pr = -1;
        for (int i = row; i < dim; ++i) {
            if (m[i][col] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        const Rational inv = Rational(1) / m[row][col];
        for (int j = col; j <= k; ++j) m[row][j] *= inv;
        for (int i = 0; i < dim; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational c = m[i][col];
            for (int j = col; j <= k; ++j) m[i][j] -= c * m[row][j];
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    // consistency: no row with zero generator part and nonzero target part
    for (int i = 0; i < dim; ++i) {
        bool zero = true;
        for (int j = 0; j < k; ++j)
            if (m[i][j] != 0) zero = false;
        if (zero && m[i][k] != 0) return std::nullopt;
    }
    std::vector<Rational> coords(k, Rational(0));
    for (int col = 0; col < k; ++col)
        if (pivot_row_of_col[col] >= 0) coords[col] = m[pivot_row_of_col[col]][k];
    return coords;
}

int rank_of(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return 0;
    RrefBuilder rref(static_cast<int>(vectors.front().size()));
    for (const auto& v : vectors) {
        SparseRow row;
        for (std::size_t i = 0; i < v.size(); ++i) row.push(static_cast<int>(i), v[i]);
        rref.add_row(std::move(row));
    }
    return rref.rank();
}

}  // namespace piflag
