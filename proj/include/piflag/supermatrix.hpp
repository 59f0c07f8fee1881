#pragma once

#include <vector>

#include "piflag/grassmann.hpp"

namespace piflag {

// Dense rectangular matrix over SuperRational. Entries live in a common
// chart ring; the matrix itself imposes no sign rule beyond the ring's.
class SuperMatrix {
public:
    SuperMatrix() : rows_(0), cols_(0) {}
    SuperMatrix(int rows, int cols);
    static SuperMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    SuperRational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const SuperRational& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_zero() const;
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    SuperMatrix operator-() const;

    SuperMatrix body() const;

    // Standard-format check for a block annotation (p|q) x (r|s): diagonal
    // blocks even-valued, off-diagonal blocks odd-valued.
    bool check_standard_format(int p, int q, int r, int s) const;

    std::string str(const VarTable& vars) const;

private:
    int rows_, cols_;
    std::vector<SuperRational> e_;
};

SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b);

// Exact inverse: invert the body by Gauss-Jordan over the fraction field,
// then a finite Neumann series in the nilpotent remainder. Throws
// NotInvertible when the body is singular.
SuperMatrix inverse(const SuperMatrix& m);

SuperMatrix extract_rows(const SuperMatrix& m, const std::vector<int>& rows);

}  // namespace piflag
