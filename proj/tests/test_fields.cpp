#include "doctest.h"

#include <random>

#include "piflag/fields.hpp"

using namespace piflag;

namespace {

// 1|1-dimensional chart ring of PiGr_{2|2,1|1}, I = {2}: variables (x, xi).
SuperPolynomial X() { return SuperPolynomial::even_var(0); }
SuperPolynomial Xi() { return SuperPolynomial::odd_var(0); }
SuperPolynomial C(long long n) { return SuperPolynomial::constant(Rational(n)); }

ChartVectorField field(const SuperRational& on_x, const SuperRational& on_xi) {
    ChartVectorField v;
    v.even_coeff = {on_x};
    v.odd_coeff = {on_xi};
    return v;
}

ChartVectorField zero_field() { return field(SuperRational(), SuperRational()); }

std::mt19937_64 g_rng(90125);

SuperPolynomial random_poly_11(int max_deg) {
    std::uniform_int_distribution<int> nterms(1, 3), dexp(0, max_deg), coeff(-4, 4), bit(0, 1);
    SuperPolynomial p;
    const int k = nterms(g_rng);
    for (int t = 0; t < k; ++t) {
        SuperMonomial m;
        const int e = dexp(g_rng);
        if (e) m.even.emplace_back(0, e);
        if (bit(g_rng)) m.odd = 1;
        p.add_term(m, Rational(coeff(g_rng)));
    }
    return p;
}

ChartVectorField random_homogeneous_field(Parity p) {
    for (;;) {
        SuperPolynomial cx = random_poly_11(3), cxi = random_poly_11(3);
        SuperPolynomial hx, hxi;
        for (const auto& [m, c] : cx.terms())
            if (m.parity() == static_cast<int>(p)) hx.add_term(m, c);
        for (const auto& [m, c] : cxi.terms())
            if (m.parity() != static_cast<int>(p)) hxi.add_term(m, c);
        if (!hx.is_zero() || !hxi.is_zero())
            return field(SuperRational(hx), SuperRational(hxi));
    }
}

}  // namespace

TEST_CASE("apply: derivation action") {
    // d/dx (x^2) = 2x
    CHECK(apply(field(SuperRational(C(1)), SuperRational()), SuperRational(X() * X())) ==
          SuperRational(C(2) * X()));
    // (xi d/dx)(x) = xi
    CHECK(apply(field(SuperRational(Xi()), SuperRational()), SuperRational(X())) ==
          SuperRational(Xi()));
    // z = xi d/dxi acts on xi by 1
    CHECK(apply(field(SuperRational(), SuperRational(Xi())), SuperRational(Xi())) ==
          SuperRational(Xi()));
}

TEST_CASE("apply satisfies super-Leibniz") {
    for (int iter = 0; iter < 1000; ++iter) {
        const Parity pv = (iter & 1) ? Parity::Odd : Parity::Even;
        const ChartVectorField v = random_homogeneous_field(pv);
        SuperPolynomial f, g;
        for (;;) {
            f = random_poly_11(2);
            if (f.parity()) break;
        }
        g = random_poly_11(2);
        const Parity pf = *f.parity();
        const SuperRational lhs = apply(v, SuperRational(f * g));
        SuperRational rhs = apply(v, SuperRational(f)) * SuperRational(g);
        const SuperRational tail = SuperRational(f) * apply(v, SuperRational(g));
        rhs += (pv == Parity::Odd && pf == Parity::Odd) ? -tail : tail;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("field_bracket examples") {
    const ChartVectorField d_xi = field(SuperRational(), SuperRational(C(1)));
    const ChartVectorField xi_dx = field(SuperRational(Xi()), SuperRational());
    const ChartVectorField d_x = field(SuperRational(C(1)), SuperRational());
    const ChartVectorField x_dx = field(SuperRational(X()), SuperRational());
    const ChartVectorField z = field(SuperRational(), SuperRational(Xi()));
    // [d/dxi, xi d/dx] = d/dx (odd-odd anticommutator)
    CHECK(field_bracket(d_xi, xi_dx) == d_x);
    // [d/dx, x d/dx] = d/dx
    CHECK(field_bracket(d_x, x_dx) == d_x);
    // [z, d/dxi] = -d/dxi
    CHECK(field_bracket(z, d_xi) == -d_xi);
}

TEST_CASE("bracket agrees with composed action (randomized)") {
    for (int iter = 0; iter < 1000; ++iter) {
        const Parity pv = (iter & 1) ? Parity::Odd : Parity::Even;
        const Parity pw = (iter & 2) ? Parity::Odd : Parity::Even;
        const ChartVectorField v = random_homogeneous_field(pv);
        const ChartVectorField w = random_homogeneous_field(pw);
        const SuperRational f{random_poly_11(3)};
        const SuperRational lhs = apply(field_bracket(v, w), f);
        SuperRational rhs = apply(v, apply(w, f));
        const SuperRational tail = apply(w, apply(v, f));
        rhs += (pv == Parity::Odd && pw == Parity::Odd) ? tail : -tail;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("super-Jacobi identity (randomized)") {
    for (int iter = 0; iter < 1000; ++iter) {
        const Parity px = (iter & 1) ? Parity::Odd : Parity::Even;
        const Parity py = (iter & 2) ? Parity::Odd : Parity::Even;
        const ChartVectorField x = random_homogeneous_field(px);
        const ChartVectorField y = random_homogeneous_field(py);
        const ChartVectorField z = random_homogeneous_field((iter & 4) ? Parity::Odd
                                                                       : Parity::Even);
        // [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]
        const ChartVectorField lhs = field_bracket(x, field_bracket(y, z));
        ChartVectorField rhs = field_bracket(field_bracket(x, y), z);
        const ChartVectorField tail = field_bracket(y, field_bracket(x, z));
        rhs = rhs + ((px == Parity::Odd && py == Parity::Odd) ? -tail : tail);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pushforward across the PiGr_{2|2,1|1} transition") {
    Atlas atlas(FlagType::pi_symmetric(2, {1}));
    const CoordinateMap& sigma = atlas.transition(1, 0);
    const CoordinateMap& sigma_inv = atlas.transition(0, 1);

    // d/dx pushes to -x'^2 d/dx' - 2 x' xi' d/dxi' (hand chain rule through
    // x' = 1/x, xi' = -xi/x^2)
    ChartVectorField dx = ChartVectorField::zero(atlas.chart(1), 1);
    dx.even_coeff[0] = SuperRational(C(1));
    const ChartVectorField pushed = pushforward(dx, sigma, sigma_inv);
    CHECK(pushed.even_coeff[0] == SuperRational(-(X() * X())));
    CHECK(pushed.odd_coeff[0] == SuperRational(C(-2) * X() * Xi()));
    CHECK(is_holomorphic(pushed));

    // identity pushforward
    const CoordinateMap& id = atlas.transition(1, 1);
    ChartVectorField v = ChartVectorField::zero(atlas.chart(1), 1);
    v.even_coeff[0] = SuperRational(X() * Xi());
    v.odd_coeff[0] = SuperRational(X() * X());
    CHECK(pushforward(v, id, id) == v);

    // round trip
    CHECK(pushforward(pushed, sigma_inv, sigma) == dx);
}

TEST_CASE("pushforward commutes with the bracket") {
    Atlas atlas(FlagType::pi_symmetric(2, {1}));
    const CoordinateMap& sigma = atlas.transition(1, 0);
    const CoordinateMap& sigma_inv = atlas.transition(0, 1);
    for (int iter = 0; iter < 200; ++iter) {
        ChartVectorField v = random_homogeneous_field((iter & 1) ? Parity::Odd : Parity::Even);
        ChartVectorField w = random_homogeneous_field((iter & 2) ? Parity::Odd : Parity::Even);
        v.chart = w.chart = 1;
        const ChartVectorField lhs = pushforward(field_bracket(v, w), sigma, sigma_inv);
        const ChartVectorField rhs =
            field_bracket(pushforward(v, sigma, sigma_inv), pushforward(w, sigma, sigma_inv));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("is_holomorphic") {
    // x^2 xi / x reduces to a polynomial
    CHECK(is_holomorphic(field(SuperRational(X() * X() * Xi(), X()), SuperRational())));
    // 1/x does not
    CHECK(!is_holomorphic(field(SuperRational(C(1), X()), SuperRational())));
    CHECK(is_holomorphic(zero_field()));
}

TEST_CASE("make_global / is_global") {
    Atlas atlas(FlagType::pi_symmetric(2, {1}));
    // x d/dx + xi d/dxi is global (it is a fundamental field up to sign)
    ChartVectorField v = ChartVectorField::zero(atlas.chart(1), 1);
    v.even_coeff[0] = SuperRational(X());
    v.odd_coeff[0] = SuperRational(Xi());
    const GlobalField g = make_global(atlas, v);
    CHECK(is_global(atlas, g));
    // 1/x d/dx is not even holomorphic on its own chart
    ChartVectorField w = ChartVectorField::zero(atlas.chart(1), 1);
    w.even_coeff[0] = SuperRational(C(1), X());
    GlobalField bad = make_global(atlas, w);
    CHECK(!is_global(atlas, bad));
}
