#pragma once

#include "piflag/fields.hpp"
#include "piflag/linalg.hpp"

namespace piflag {

// Element of q_n(C): the pair (A, B) standing for the block matrix
// [[A, B], [B, A]]. A carries the even part, B the odd part.
struct QnElement {
    int n = 0;
    std::vector<std::vector<Rational>> A, B;

    static QnElement zero(int n);
    static QnElement even_unit(int n, int i, int j);  // A = E_{ij}, 1-based
    static QnElement odd_unit(int n, int i, int j);   // B = E_{ij}
    static QnElement identity(int n);                 // A = E_n

    bool is_zero() const;
    bool even_part_zero() const;
    bool odd_part_zero() const;
    std::optional<Parity> parity() const;

    QnElement operator+(const QnElement& o) const;
    QnElement operator*(const Rational& c) const;
    friend bool operator==(const QnElement&, const QnElement&) = default;

    std::string str() const;  // rendered 2n x 2n block matrix
};

// Homogeneous basis: 2n^2 elements, the even units E_{ij} in row-major
// order followed by the odd units.
std::vector<QnElement> qn_basis(int n);

// Standard super-commutator [X, Y] = XY - (-1)^{p(X)p(Y)} YX of the block
// representatives, extended bilinearly to mixed inputs.
QnElement qn_bracket(const QnElement& x, const QnElement& y);

// Fundamental vector field of the q_n action on a Pi-symmetric chart,
// normalized so that X -> field is a Lie superalgebra homomorphism for the
// bracket above. Coefficients are polynomial.
ChartVectorField fundamental_field(const Atlas& atlas, const QnElement& x, int chart_ordinal);

GlobalField fundamental_global(const Atlas& atlas, const QnElement& x);

// Exact kernel of X -> (fundamental field on every chart).
std::vector<QnElement> mu_kernel(const Atlas& atlas);

}  // namespace piflag
