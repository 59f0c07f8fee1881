#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "piflag/rational.hpp"

namespace piflag {

enum class Parity : int { Even = 0, Odd = 1 };

// Ordered variable context shared by all elements of one chart's coordinate
// ring: even polynomial variables x_i and odd (Grassmann) generators xi_j.
// Variables are identified by index; names are for rendering only.
class VarTable {
public:
    VarTable() = default;
    VarTable(std::vector<std::string> even_names, std::vector<std::string> odd_names);

    int even_count() const { return static_cast<int>(even_.size()); }
    int odd_count() const { return static_cast<int>(odd_.size()); }
    const std::string& even_name(int v) const { return even_.at(v); }
    const std::string& odd_name(int v) const { return odd_.at(v); }
    std::optional<int> find_even(const std::string& name) const;
    std::optional<int> find_odd(const std::string& name) const;

private:
    std::vector<std::string> even_;
    std::vector<std::string> odd_;
};

// Monomial x^alpha * xi_{i1}...xi_{ik}: sparse even exponents plus an odd
// generator bitmask. The odd factors are kept in increasing generator order;
// reordering signs live in the coefficient, never in the monomial.
struct SuperMonomial {
    std::vector<std::pair<int, int>> even;  // (var, exponent), sorted, exponent > 0
    std::uint64_t odd = 0;

    static SuperMonomial one() { return {}; }
    static SuperMonomial even_var(int v, int e = 1);
    static SuperMonomial odd_var(int v);

    int total_degree() const;
    int parity() const { return std::popcount(odd) & 1; }
    int even_exponent(int v) const;
    bool is_one() const { return even.empty() && odd == 0; }

    friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
};

// Graded lexicographic order over the VarTable order (even variables first,
// then odd generators). Returns +1 when a > b.
int grlex_cmp(const SuperMonomial& a, const SuperMonomial& b);

struct GrlexDescending {
    bool operator()(const SuperMonomial& a, const SuperMonomial& b) const {
        return grlex_cmp(a, b) > 0;
    }
};

// Element of Q[x_1..x_N] (x) Lambda(xi_1..xi_M). Term map is kept leading
// term first; no zero coefficients are stored.
class SuperPolynomial {
public:
    using TermMap = std::map<SuperMonomial, Rational, GrlexDescending>;

    SuperPolynomial() = default;
    static SuperPolynomial constant(const Rational& c);
    static SuperPolynomial even_var(int v);
    static SuperPolynomial odd_var(int v);
    static SuperPolynomial term(SuperMonomial m, Rational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_body_only() const;     // no odd generators anywhere
    bool is_even_element() const;  // every monomial of even parity
    bool is_odd_element() const;
    std::optional<Parity> parity() const;  // nullopt when mixed or zero
    int total_degree() const;              // -1 for the zero polynomial

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const SuperMonomial& m) const;
    const SuperMonomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    SuperPolynomial body() const;
    SuperPolynomial soul() const;

    void add_term(const SuperMonomial& m, const Rational& c);

    SuperPolynomial operator-() const;
    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
    SuperPolynomial operator*(const Rational& c) const;
    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    // Left derivative for odd variables: d/dxi_i (xi_i * rest) = rest.
    SuperPolynomial derivative(Parity p, int var) const;

    std::string str(const VarTable& vars) const;

private:
    TermMap terms_;
};

// Division with remainder by a purely even divisor g != 0: f = q*g + r where
// no monomial of r is divisible by the leading monomial of g.
std::pair<SuperPolynomial, SuperPolynomial> div_rem(const SuperPolynomial& f,
                                                    const SuperPolynomial& g);
std::optional<SuperPolynomial> exact_divide(const SuperPolynomial& f, const SuperPolynomial& g);

// Gcd of purely even polynomials (primitive PRS), normalized to leading
// coefficient 1. poly_gcd(0, 0) = 0.
SuperPolynomial poly_gcd(const SuperPolynomial& a, const SuperPolynomial& b);
SuperPolynomial poly_lcm(const SuperPolynomial& a, const SuperPolynomial& b);

// Fraction num/den with den purely even, body(den) != 0, den normalized to
// leading coefficient 1. num/den gcd reduction is lazy: arithmetic keeps the
// cheap normal form, reduce() performs the full cancellation.
class SuperRational {
public:
    SuperRational();  // zero
    SuperRational(SuperPolynomial num);
    SuperRational(SuperPolynomial num, SuperPolynomial den);
    static SuperRational constant(const Rational& c);

    const SuperPolynomial& num() const { return num_; }
    const SuperPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_even_element() const { return num_.is_even_element(); }
    bool is_odd_element() const { return num_.is_odd_element(); }
    std::optional<Parity> parity() const { return num_.parity(); }

    SuperRational operator-() const;
    SuperRational& operator+=(const SuperRational& o);
    SuperRational& operator-=(const SuperRational& o);
    friend SuperRational operator+(SuperRational a, const SuperRational& b) { return a += b; }
    friend SuperRational operator-(SuperRational a, const SuperRational& b) { return a -= b; }
    friend SuperRational operator*(const SuperRational& a, const SuperRational& b);
    friend SuperRational operator/(const SuperRational& a, const SuperRational& b);
    SuperRational operator*(const Rational& c) const;

    // Exact equality (cross multiplication; independent of reduction state).
    friend bool operator==(const SuperRational& a, const SuperRational& b);

    SuperRational inverse() const;  // NotInvertible when body(num) == 0

    SuperRational& reduce();  // full gcd cancellation of num against den
    SuperRational reduced() const;

    SuperRational body() const;
    SuperRational soul() const;

    bool is_polynomial() const;
    SuperPolynomial as_polynomial() const;  // throws when not polynomial

    SuperRational derivative(Parity p, int var) const;

    std::string str(const VarTable& vars) const;

private:
    void normalize_light();
    SuperPolynomial num_, den_;
};

// Parity-preserving substitution: images of the source variables, written in
// some target ring.
struct Substitution {
    std::vector<SuperRational> even_images;
    std::vector<SuperRational> odd_images;
};

SuperRational substitute(const SuperPolynomial& f, const Substitution& s);
SuperRational substitute(const SuperRational& f, const Substitution& s);

}  // namespace piflag
