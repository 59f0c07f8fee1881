#include "piflag/supermatrix.hpp"

#include <sstream>

namespace piflag {

SuperMatrix::SuperMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

SuperMatrix SuperMatrix::identity(int n) {
    SuperMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = SuperRational::constant(1);
    return m;
}

bool SuperMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (!(a.e_[i] == b.e_[i])) return false;
    return true;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix add: dimension mismatch");
    SuperMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sub: dimension mismatch");
    SuperMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

SuperMatrix SuperMatrix::operator-() const {
    SuperMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

SuperMatrix SuperMatrix::body() const {
    SuperMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].body();
    return r;
}

bool SuperMatrix::check_standard_format(int p, int q, int r, int s) const {
    if (p + q != rows_ || r + s != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            const bool diag = (i < p) == (j < r);
            const SuperRational& x = at(i, j);
            if (x.is_zero()) continue;
            if (diag && !x.is_even_element()) return false;
            if (!diag && !x.is_odd_element()) return false;
        }
    }
    return true;
}

SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    SuperMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const SuperRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const SuperRational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

namespace {

// Gauss-Jordan inverse of a matrix with purely even (body-only) entries.
SuperMatrix invert_body(const SuperMatrix& b) {
    const int n = b.rows();
    SuperMatrix a = b;
    SuperMatrix inv = SuperMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i) {
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) throw NotInvertible("inverse: singular body");
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        const SuperRational pivinv = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = (a.at(col, j) * pivinv).reduced();
            inv.at(col, j) = (inv.at(col, j) * pivinv).reduced();
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            const SuperRational f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = (a.at(i, j) - f * a.at(col, j)).reduced();
                inv.at(i, j) = (inv.at(i, j) - f * inv.at(col, j)).reduced();
            }
        }
    }
    return inv;
}

}  // namespace

SuperMatrix inverse(const SuperMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    const SuperMatrix b = m.body();
    const SuperMatrix binv = invert_body(b);
    const SuperMatrix nil = m - b;
    if (nil.is_zero()) return binv;
    // (B + N)^-1 = sum_j (-B^-1 N)^j B^-1, finite by nilpotency of N.
    const SuperMatrix step = -matmul(binv, nil);
    SuperMatrix acc = SuperMatrix::identity(n);
    SuperMatrix power = step;
    while (!power.is_zero()) {
        acc = acc + power;
        power = matmul(power, step);
    }
    SuperMatrix r = matmul(acc, binv);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j).reduce();
    return r;
}

SuperMatrix extract_rows(const SuperMatrix& m, const std::vector<int>& rows) {
    SuperMatrix r(static_cast<int>(rows.size()), m.cols());
    std::vector<bool> seen(m.rows(), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int src = rows[i];
        if (src < 0 || src >= m.rows()) throw std::out_of_range("extract_rows: index out of range");
        if (seen[src]) throw std::invalid_argument("extract_rows: duplicate row index");
        seen[src] = true;
        for (int j = 0; j < m.cols(); ++j) r.at(static_cast<int>(i), j) = m.at(src, j);
    }
    return r;
}

std::string SuperMatrix::str(const VarTable& vars) const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str(vars);
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

}  // namespace piflag
