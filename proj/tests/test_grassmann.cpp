#include "doctest.h"

#include <random>

#include "piflag/grassmann.hpp"

using namespace piflag;

namespace {

// Small fixture: Q[x, y] (x) Lambda(xi1, xi2, xi3).
const VarTable kVars({"x", "y"}, {"xi1", "xi2", "xi3"});

SuperPolynomial X() { return SuperPolynomial::even_var(0); }
SuperPolynomial Y() { return SuperPolynomial::even_var(1); }
SuperPolynomial Xi(int i) { return SuperPolynomial::odd_var(i); }
SuperPolynomial C(long long n) { return SuperPolynomial::constant(Rational(n)); }

SuperPolynomial random_poly(std::mt19937_64& rng, int max_terms, int max_deg, int n_even,
                            int n_odd) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> dist_exp(0, max_deg);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> oddbit(0, 1);
    SuperPolynomial p;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        SuperMonomial m;
        for (int v = 0; v < n_even; ++v) {
            const int e = dist_exp(rng);
            if (e > 0) m.even.emplace_back(v, e);
        }
        for (int i = 0; i < n_odd; ++i)
            if (oddbit(rng)) m.odd |= std::uint64_t{1} << i;
        p.add_term(m, Rational(coeff(rng)));
    }
    return p;
}

SuperPolynomial random_homogeneous(std::mt19937_64& rng, Parity parity) {
    for (;;) {
        SuperPolynomial p = random_poly(rng, 4, 2, 2, 3);
        SuperPolynomial h;
        for (const auto& [m, c] : p.terms())
            if (m.parity() == static_cast<int>(parity)) h.add_term(m, c);
        if (!h.is_zero()) return h;
    }
}

}  // namespace

TEST_CASE("supercommutative product with Koszul signs") {
    // xi1*xi2 = -(xi2*xi1)
    CHECK(Xi(0) * Xi(1) == -(Xi(1) * Xi(0)));
    // odd squares vanish
    CHECK((Xi(0) * Xi(0)).is_zero());
    // (x + xi1 xi2)(x - xi1 xi2) = x^2
    const SuperPolynomial a = X() + Xi(0) * Xi(1);
    const SuperPolynomial b = X() - Xi(0) * Xi(1);
    CHECK(a * b == X() * X());
}

TEST_CASE("supercommutativity on random homogeneous pairs") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 1000; ++iter) {
        const Parity pa = (iter & 1) ? Parity::Odd : Parity::Even;
        const Parity pb = (iter & 2) ? Parity::Odd : Parity::Even;
        const SuperPolynomial f = random_homogeneous(rng, pa);
        const SuperPolynomial g = random_homogeneous(rng, pb);
        SuperPolynomial gf = g * f;
        if (pa == Parity::Odd && pb == Parity::Odd) gf = -gf;
        CHECK(f * g == gf);
    }
}

TEST_CASE("left derivative on odd variables") {
    // d/dxi1 (xi2 xi1) = -xi2
    CHECK((Xi(1) * Xi(0)).derivative(Parity::Odd, 0) == -Xi(1));
    // d/dx x^2 = 2x
    CHECK((X() * X()).derivative(Parity::Even, 0) == C(2) * X());
    // d/dxi1 (x xi1) = x
    CHECK((X() * Xi(0)).derivative(Parity::Odd, 0) == X());
}

TEST_CASE("odd derivatives square to zero") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 1000; ++iter) {
        const SuperPolynomial f = random_poly(rng, 6, 3, 2, 3);
        for (int i = 0; i < 3; ++i)
            CHECK(f.derivative(Parity::Odd, i).derivative(Parity::Odd, i).is_zero());
    }
}

TEST_CASE("super-Leibniz rule for partial derivatives") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 1000; ++iter) {
        const Parity pf = (iter & 1) ? Parity::Odd : Parity::Even;
        const SuperPolynomial f = random_homogeneous(rng, pf);
        const SuperPolynomial g = random_poly(rng, 4, 2, 2, 3);
        // even derivative: no sign
        CHECK((f * g).derivative(Parity::Even, 0) ==
              f.derivative(Parity::Even, 0) * g + f * g.derivative(Parity::Even, 0));
        // odd derivative: sign (-1)^{p(f)}
        const SuperPolynomial lhs = (f * g).derivative(Parity::Odd, 1);
        SuperPolynomial rhs = f.derivative(Parity::Odd, 1) * g;
        const SuperPolynomial tail = f * g.derivative(Parity::Odd, 1);
        rhs += (pf == Parity::Odd) ? -tail : tail;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("body and soul") {
    const SuperRational f(X() + Xi(0) * Xi(1));
    CHECK(f.body() == SuperRational(X()));
    CHECK(f.soul() == SuperRational(Xi(0) * Xi(1)));
    const SuperRational g(Xi(0));
    CHECK(g.body().is_zero());
    CHECK(g.soul() == g);
    const SuperRational five = SuperRational::constant(5);
    CHECK(five.body() == five);
    CHECK(five.soul().is_zero());
}

TEST_CASE("soul is nilpotent") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        const SuperPolynomial f = random_poly(rng, 5, 2, 2, 3);
        SuperPolynomial s = f.soul();
        SuperPolynomial p = SuperPolynomial::constant(1);
        for (int j = 0; j < 4; ++j) p = p * s;  // 4 = #odd generators + 1
        CHECK(p.is_zero());
    }
}

TEST_CASE("invert: nilpotent geometric series") {
    // (1 + xi1 xi2)^-1 = 1 - xi1 xi2
    const SuperRational a(C(1) + Xi(0) * Xi(1));
    CHECK(a.inverse() == SuperRational(C(1) - Xi(0) * Xi(1)));
    // x^-1 = 1/x
    const SuperRational x(X());
    CHECK(x.inverse() == SuperRational(C(1), X()));
    // (x + xi1 xi2)^-1 = 1/x - xi1 xi2 / x^2; oracle: multiply back to 1.
    const SuperRational b(X() + Xi(0) * Xi(1));
    const SuperRational binv = b.inverse();
    CHECK(b * binv == SuperRational::constant(1));
    CHECK(binv == SuperRational(C(1), X()) - SuperRational(Xi(0) * Xi(1), X() * X()));
    // zero body is not invertible
    CHECK_THROWS_AS(SuperRational(Xi(0)).inverse(), NotInvertible);
}

TEST_CASE("invert on random invertible elements") {
    std::mt19937_64 rng(31337);
    int done = 0;
    while (done < 1000) {
        SuperPolynomial f = random_poly(rng, 5, 2, 2, 3);
        if (f.body().is_zero()) continue;
        ++done;
        const SuperRational r{f};
        CHECK(r * r.inverse() == SuperRational::constant(1));
    }
}

TEST_CASE("exact_divide") {
    // x^2 xi1 / x = x xi1
    CHECK(*exact_divide(X() * X() * Xi(0), X()) == X() * Xi(0));
    // (x+1) xi1 / x -> not divisible
    CHECK(!exact_divide((X() + C(1)) * Xi(0), X()).has_value());
    // (x^2 y - x y^2) / (xy) = x - y
    const SuperPolynomial f = X() * X() * Y() - X() * Y() * Y();
    CHECK(*exact_divide(f, X() * Y()) == X() - Y());
}

TEST_CASE("division with remainder leaves no reducible term") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 500; ++iter) {
        const SuperPolynomial f = random_poly(rng, 6, 4, 2, 3);
        SuperPolynomial g = random_poly(rng, 3, 2, 2, 0).body();
        if (g.is_zero()) continue;
        const auto [q, r] = div_rem(f, g);
        CHECK(q * g + r == f);
        if (!r.is_zero()) {
            for (const auto& [m, c] : r.terms()) {
                bool divisible = true;
                for (const auto& [v, e] : g.leading_monomial().even)
                    if (m.even_exponent(v) < e) divisible = false;
                CHECK(!divisible);
            }
        }
    }
}

TEST_CASE("poly_gcd on structured inputs") {
    const SuperPolynomial a = (X() + C(1)) * (X() + C(1)) * (X() - Y());
    const SuperPolynomial b = (X() + C(1)) * (X() - Y()) * (X() - Y());
    const SuperPolynomial g = poly_gcd(a, b);
    CHECK(g == (X() + C(1)) * (X() - Y()));
    CHECK(poly_gcd(X() * X(), Y() * Y()).is_one());
    CHECK(poly_gcd(SuperPolynomial(), X()) == X());
    // lcm * gcd = a*b (up to the monic normalization)
    const SuperPolynomial l = poly_lcm(a, b);
    CHECK(exact_divide(l, a).has_value());
    CHECK(exact_divide(l, b).has_value());
}

TEST_CASE("poly_gcd randomized: common factor recovered") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 200; ++iter) {
        SuperPolynomial c = random_poly(rng, 3, 2, 2, 0).body();
        SuperPolynomial a = random_poly(rng, 3, 2, 2, 0).body();
        SuperPolynomial b = random_poly(rng, 3, 2, 2, 0).body();
        if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
        const SuperPolynomial g = poly_gcd(a * c, b * c);
        CHECK(exact_divide(g, poly_gcd(poly_gcd(a, b), c) * Rational(1)).has_value());
        CHECK(exact_divide(a * c, g).has_value());
        CHECK(exact_divide(b * c, g).has_value());
    }
}

TEST_CASE("SuperRational arithmetic and reduction") {
    const SuperRational half = SuperRational::constant(Rational(1, 2));
    CHECK(half + half == SuperRational::constant(1));
    const SuperRational f(X() * X() * Xi(0), X());
    CHECK(f.is_polynomial());
    CHECK(f.as_polynomial() == X() * Xi(0));
    const SuperRational g(C(1), X());
    CHECK(!g.is_polynomial());
    // reduce cancels gcd factors
    SuperRational h((X() + C(1)) * (X() - Y()), (X() + C(1)) * (X() + C(1)));
    h.reduce();
    CHECK(h.den() == (X() + C(1)));
    CHECK(h.num() == X() - Y());
}

TEST_CASE("substitute: composition, homomorphism, parity errors") {
    // f = x*xi, sigma = {x -> 1/x', xi -> -xi'/x'^2}  ==>  -xi'/x'^3
    Substitution sigma;
    sigma.even_images = {SuperRational(C(1), X())};
    sigma.odd_images = {SuperRational(-Xi(0), X() * X()), SuperRational(Xi(1)),
                        SuperRational(Xi(2))};
    const SuperPolynomial f = X() * Xi(0);
    const SuperRational image = substitute(f, sigma);
    CHECK(image == SuperRational(-Xi(0), X() * X() * X()));
    // identity substitution
    Substitution id;
    id.even_images = {SuperRational(X()), SuperRational(Y())};
    id.odd_images = {SuperRational(Xi(0)), SuperRational(Xi(1)), SuperRational(Xi(2))};
    CHECK(substitute(X(), id) == SuperRational(X()));
    // parity mismatch rejected
    Substitution bad = id;
    bad.even_images[0] = SuperRational(Xi(0));
    CHECK_THROWS_AS(substitute(X(), bad), VarError);
}

TEST_CASE("substitute is a ring homomorphism (randomized)") {
    std::mt19937_64 rng(808);
    Substitution sigma;
    sigma.even_images = {SuperRational(X() + Xi(0) * Xi(1)), SuperRational(Y() * Y() + C(3))};
    sigma.odd_images = {SuperRational(Xi(1)), SuperRational(Xi(0) + X() * Xi(2)),
                        SuperRational(Y() * Xi(2))};
    for (int iter = 0; iter < 1000; ++iter) {
        const SuperPolynomial f = random_poly(rng, 4, 2, 2, 3);
        const SuperPolynomial g = random_poly(rng, 4, 2, 2, 3);
        CHECK(substitute(f + g, sigma) == substitute(f, sigma) + substitute(g, sigma));
        CHECK(substitute(f * g, sigma) == substitute(f, sigma) * substitute(g, sigma));
    }
}

TEST_CASE("derivative of quotients") {
    // d/dx (1/x) = -1/x^2
    const SuperRational f(C(1), X());
    CHECK(f.derivative(Parity::Even, 0) == SuperRational(C(-1), X() * X()));
    // odd derivative passes through the denominator
    const SuperRational g(Xi(0) * Xi(1), X());
    CHECK(g.derivative(Parity::Odd, 0) == SuperRational(Xi(1), X()));
}

TEST_CASE("canonical rendering") {
    const SuperPolynomial p = X() * X() - C(2) * X() * Xi(0) * Xi(1) + C(1);
    CHECK(p.str(kVars) == "-2*x*xi1*xi2 + x^2 + 1");
    CHECK(SuperPolynomial().str(kVars) == "0");
    const SuperRational q(Xi(0), X() * X());
    CHECK(q.str(kVars) == "(xi1)/(x^2)");
    CHECK(SuperRational(-Xi(0) - X() * Xi(1)).str(kVars) == "-x*xi2 - xi1");
}
