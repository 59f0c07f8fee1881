#include "piflag/qn.hpp"

#include <sstream>

namespace piflag {

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat zero_mat(int n) { return Mat(n, std::vector<Rational>(n, Rational(0))); }

bool mat_zero(const Mat& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.size());
    Mat r = zero_mat(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Mat mat_add(const Mat& a, const Mat& b, bool subtract = false) {
    const int n = static_cast<int>(a.size());
    Mat r = zero_mat(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[i][j] = subtract ? Rational(a[i][j] - b[i][j]) : Rational(a[i][j] + b[i][j]);
    return r;
}

}  // namespace

QnElement QnElement::zero(int n) {
    QnElement e;
    e.n = n;
    e.A = zero_mat(n);
    e.B = zero_mat(n);
    return e;
}

QnElement QnElement::even_unit(int n, int i, int j) {
    QnElement e = zero(n);
    e.A[i - 1][j - 1] = 1;
    return e;
}

QnElement QnElement::odd_unit(int n, int i, int j) {
    QnElement e = zero(n);
    e.B[i - 1][j - 1] = 1;
    return e;
}

QnElement QnElement::identity(int n) {
    QnElement e = zero(n);
    for (int i = 0; i < n; ++i) e.A[i][i] = 1;
    return e;
}

bool QnElement::is_zero() const { return mat_zero(A) && mat_zero(B); }
bool QnElement::even_part_zero() const { return mat_zero(A); }
bool QnElement::odd_part_zero() const { return mat_zero(B); }

std::optional<Parity> QnElement::parity() const {
    const bool a = !mat_zero(A), b = !mat_zero(B);
    if (a && !b) return Parity::Even;
    if (!a && b) return Parity::Odd;
    return std::nullopt;
}

QnElement QnElement::operator+(const QnElement& o) const {
    QnElement e = *this;
    e.A = mat_add(A, o.A);
    e.B = mat_add(B, o.B);
    return e;
}

QnElement QnElement::operator*(const Rational& c) const {
    QnElement e = *this;
    for (auto& row : e.A)
        for (auto& v : row) v *= c;
    for (auto& row : e.B)
        for (auto& v : row) v *= c;
    return e;
}

std::string QnElement::str() const {
    std::ostringstream os;
    for (int i = 0; i < 2 * n; ++i) {
        os << "[";
        for (int j = 0; j < 2 * n; ++j) {
            if (j) os << ", ";
            const bool top = i < n, left = j < n;
            const Rational& v =
                (top == left) ? A[i % n][j % n] : B[i % n][j % n];
            os << rational_str(v);
        }
        os << "]";
        if (i + 1 < 2 * n) os << "\n";
    }
    return os.str();
}

std::vector<QnElement> qn_basis(int n) {
    if (n < 1) throw std::invalid_argument("qn_basis: n must be >= 1");
    std::vector<QnElement> basis;
    basis.reserve(2 * n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) basis.push_back(QnElement::even_unit(n, i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) basis.push_back(QnElement::odd_unit(n, i, j));
    return basis;
}

QnElement qn_bracket(const QnElement& x, const QnElement& y) {
    // [X, Y] = YX - (-1)^{p(X)p(Y)} XY on the block representatives. This
    // order pairs with the standard super-commutator of vector fields so
    // that X -> fundamental field is a strict homomorphism; the reversed
    // matrix order cannot be repaired by rescaling (the odd part would need
    // a square root of -1). Block arithmetic:
    //   even-even -> even(A2 A1 - A1 A2)
    //   even-odd  -> odd (B2 A1 - A1 B2), and symmetrically
    //   odd-odd   -> even(B2 B1 + B1 B2)
    QnElement r = QnElement::zero(x.n);
    r.A = mat_add(mat_add(mat_mul(y.A, x.A), mat_mul(x.A, y.A), true),
                  mat_add(mat_mul(y.B, x.B), mat_mul(x.B, y.B)));
    r.B = mat_add(mat_add(mat_mul(y.B, x.A), mat_mul(x.A, y.B), true),
                  mat_add(mat_mul(y.A, x.B), mat_mul(x.B, y.A), true));
    return r;
}

// ---------------------------------------------------------------------------
// Fundamental fields

namespace {

constexpr int kFlowGens = 2;  // odd generators prepended for the flow parameter

SuperPolynomial lift_poly(const SuperPolynomial& p) {
    SuperPolynomial q;
    for (const auto& [m, c] : p.terms()) {
        SuperMonomial n = m;
        n.odd <<= kFlowGens;
        q.add_term(n, c);
    }
    return q;
}

SuperRational lift(const SuperRational& f) {
    return SuperRational(lift_poly(f.num()), lift_poly(f.den()));
}

SuperMatrix lift(const SuperMatrix& m) {
    SuperMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = lift(m.at(i, j));
    return r;
}

// Extract the left coefficient of the flow monomial (tau1*tau2 for even
// flows, tau1 for odd ones) and return it in the chart's own ring.
SuperPolynomial extract_flow(const SuperPolynomial& delta, bool even_flow) {
    const std::uint64_t flow_mask = even_flow ? 0b11 : 0b01;
    SuperPolynomial out;
    for (const auto& [m, c] : delta.terms()) {
        const std::uint64_t flow_bits = m.odd & 0b11;
        if (flow_bits != flow_mask)
            throw std::logic_error("fundamental_field: unexpected flow term");
        SuperMonomial n = m;
        n.odd = (m.odd & ~flow_mask) >> kFlowGens;
        out.add_term(n, c);
    }
    return out;
}

// 2n x 2n representative of X with the flow parameter attached: even part
// scaled by tau1*tau2, odd part by tau1 (the flow generators are the first
// two odd variables of the lifted ring).
SuperMatrix flow_matrix(const QnElement& x, bool even_part) {
    const int n = x.n;
    SuperMonomial flow;
    flow.odd = even_part ? 0b11 : 0b01;
    SuperMatrix m(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational& v = even_part ? x.A[i][j] : x.B[i][j];
            if (v == 0) continue;
            const SuperRational entry{SuperPolynomial::term(flow, v)};
            if (even_part) {
                m.at(i, j) = entry;
                m.at(n + i, n + j) = entry;
            } else {
                m.at(i, n + j) = entry;
                m.at(n + i, j) = entry;
            }
        }
    }
    return m;
}

void accumulate_flow_part(const Atlas& atlas, const QnElement& x, int ordinal, bool even_part,
                          ChartVectorField& out) {
    const Chart& chart = atlas.chart(ordinal);
    const FlagType& f = chart.flag;
    const int n = f.n();
    const int r = f.r();

    SuperMatrix L = lift(SuperMatrix::identity(2 * n)) + flow_matrix(x, even_part);
    std::vector<SuperMatrix> Zt(r);
    SuperMatrix Cprev = L;
    for (int s = 0; s < r; ++s) {
        const SuperMatrix M = matmul(Cprev, lift(chart.Z[s]));
        SuperMatrix C = extract_rows(M, chart.distinguished_rows[s]);
        Zt[s] = matmul(M, inverse(C));
        Cprev = std::move(C);
    }

    auto entry_positions = [&](const Chart::VarPos& p) {
        const int kprev = f.k_at(p.step), ks = f.k_at(p.step + 1);
        if (p.group == Chart::Group::X)
            return std::pair{std::pair{p.i - 1, p.j - 1}, std::pair{kprev + p.i - 1, ks + p.j - 1}};
        return std::pair{std::pair{p.i - 1, ks + p.j - 1}, std::pair{kprev + p.i - 1, p.j - 1}};
    };
    auto extract_at = [&](const Chart::VarPos& p, const SuperRational& original) {
        const auto [primary, mirror] = entry_positions(p);
        const SuperRational& v1 = Zt[p.step].at(primary.first, primary.second);
        if (!(v1 == Zt[p.step].at(mirror.first, mirror.second)))
            throw std::logic_error("fundamental_field: Pi block form broken");
        const SuperRational delta = v1 - lift(original);
        if (!delta.den().is_one())
            throw std::logic_error("fundamental_field: non-polynomial coefficient");
        return extract_flow(delta.num(), even_part);
    };

    for (int v = 0; v < chart.even_count(); ++v) {
        const auto& p = chart.even_pos[v];
        const SuperRational original{SuperPolynomial::even_var(v)};
        out.even_coeff[v] += SuperRational(extract_at(p, original));
    }
    for (int v = 0; v < chart.odd_count(); ++v) {
        const auto& p = chart.odd_pos[v];
        const SuperRational original{SuperPolynomial::odd_var(v)};
        out.odd_coeff[v] += SuperRational(extract_at(p, original));
    }
}

}  // namespace

ChartVectorField fundamental_field(const Atlas& atlas, const QnElement& x, int chart_ordinal) {
    if (!atlas.flag().is_pi_symmetric())
        throw std::invalid_argument("fundamental_field: chart must be Pi-symmetric");
    ChartVectorField out = ChartVectorField::zero(atlas.chart(chart_ordinal), chart_ordinal);
    if (!x.even_part_zero()) accumulate_flow_part(atlas, x, chart_ordinal, true, out);
    if (!x.odd_part_zero()) accumulate_flow_part(atlas, x, chart_ordinal, false, out);
    return out;
}

GlobalField fundamental_global(const Atlas& atlas, const QnElement& x) {
    GlobalField f;
    f.reps.reserve(atlas.chart_count());
    for (int c = 0; c < atlas.chart_count(); ++c) f.reps.push_back(fundamental_field(atlas, x, c));
    return f;
}

std::vector<QnElement> mu_kernel(const Atlas& atlas) {
    const int n = atlas.flag().n();
    const std::vector<QnElement> basis = qn_basis(n);
    const int cols = static_cast<int>(basis.size());

    // rows indexed by (chart, direction, monomial); columns by basis element
    std::map<std::tuple<int, int, int>, std::map<SuperMonomial, std::map<int, Rational>,
                                                 GrlexDescending>>
        rows;
    for (int e = 0; e < cols; ++e) {
        for (int c = 0; c < atlas.chart_count(); ++c) {
            const ChartVectorField f = fundamental_field(atlas, basis[e], c);
            for (std::size_t u = 0; u < f.even_coeff.size(); ++u) {
                const SuperPolynomial p = f.even_coeff[u].as_polynomial();
                for (const auto& [m, coeff] : p.terms())
                    rows[{c, 0, static_cast<int>(u)}][m][e] = coeff;
            }
            for (std::size_t u = 0; u < f.odd_coeff.size(); ++u) {
                const SuperPolynomial p = f.odd_coeff[u].as_polynomial();
                for (const auto& [m, coeff] : p.terms())
                    rows[{c, 1, static_cast<int>(u)}][m][e] = coeff;
            }
        }
    }
    RrefBuilder rref(cols);
    for (const auto& [key, by_mono] : rows) {
        for (const auto& [m, cols_map] : by_mono) {
            SparseRow row;
            for (const auto& [e, v] : cols_map) row.push(e, v);
            rref.add_row(std::move(row));
        }
    }
    std::vector<QnElement> kernel;
    for (const auto& coords : rref.nullspace()) {
        QnElement k = QnElement::zero(n);
        for (int e = 0; e < cols; ++e)
            if (coords[e] != 0) k = k + basis[e] * coords[e];
        kernel.push_back(std::move(k));
    }
    return kernel;
}

}  // namespace piflag
