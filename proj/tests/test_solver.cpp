#include "doctest.h"

#include "piflag/solver.hpp"

using namespace piflag;

namespace {

SuperPolynomial X() { return SuperPolynomial::even_var(0); }
SuperPolynomial Xi() { return SuperPolynomial::odd_var(0); }
SuperPolynomial C(long long n) { return SuperPolynomial::constant(Rational(n)); }

bool spans_equal(const std::vector<ChartVectorField>& a, const std::vector<ChartVectorField>& b) {
    FieldVectorizer vz;
    for (const auto& v : a) vz.add_support(v);
    for (const auto& v : b) vz.add_support(v);
    std::vector<std::vector<Rational>> va, vb, all;
    for (const auto& v : a) va.push_back(vz.vectorize(v));
    for (const auto& v : b) vb.push_back(vz.vectorize(v));
    all = va;
    all.insert(all.end(), vb.begin(), vb.end());
    return rank_of(va) == rank_of(vb) && rank_of(vb) == rank_of(all);
}

}  // namespace

TEST_CASE("nullspace basics") {
    // [[1,1],[2,2]] -> span{(1,-1)}
    {
        RrefBuilder r(2);
        SparseRow a, b;
        a.push(0, 1);
        a.push(1, 1);
        b.push(0, 2);
        b.push(1, 2);
        r.add_row(a);
        r.add_row(b);
        const auto ns = r.nullspace();
        REQUIRE(ns.size() == 1);
        CHECK(ns[0][0] * Rational(-1) == ns[0][1]);
    }
    // identity -> trivial kernel
    {
        RrefBuilder r(3);
        for (int i = 0; i < 3; ++i) {
            SparseRow row;
            row.push(i, 1);
            r.add_row(row);
        }
        CHECK(r.nullspace().empty());
    }
    // zero 2x3 matrix -> 3-dimensional kernel
    {
        RrefBuilder r(3);
        r.add_row(SparseRow{});
        r.add_row(SparseRow{});
        CHECK(r.nullspace().size() == 3);
    }
}

TEST_CASE("ansatz_pool size") {
    Atlas atlas(FlagType::pi_symmetric(2, {1}));
    // 1 even var, 1 odd var: (D+1) even monomials x 2 odd subsets
    CHECK(ansatz_pool(atlas.chart(0), 2).size() == 6);
    Atlas flag(FlagType::pi_symmetric(3, {2, 1}));
    // 3 even vars, 3 odd vars: C(3+2,2)=10 even monomials of degree <= 2, x 8
    CHECK(ansatz_pool(flag.chart(0), 2).size() == 80);
}

TEST_CASE("global functions are the constants") {
    Atlas atlas(FlagType::pi_symmetric(2, {1}));
    const FunctionsResult res = global_functions(atlas, 4);
    CHECK(res.basis.size() == 1);
    CHECK(res.stable);
    REQUIRE(res.basis.size() == 1);
    CHECK(res.basis.front().is_constant());
    Atlas atlas3(FlagType::pi_symmetric(3, {1}));
    const FunctionsResult res3 = global_functions(atlas3, 4);
    CHECK(res3.basis.size() == 1);
    CHECK(res3.stable);
}

TEST_CASE("global fields of PiGr_{2|2,1|1}: graded dimension 4|4") {
    Atlas atlas(FlagType::pi_symmetric(2, {1}));
    const GradedBasis basis = global_fields(atlas, 2);
    CHECK(basis.even_dim() == 4);
    CHECK(basis.odd_dim() == 4);
    CHECK(basis.stable);
    CHECK(basis.sc.closed);

    // span equality with the classical list in the (x, xi) chart (ordinal 1)
    auto mk = [&](const SuperPolynomial& cx, const SuperPolynomial& cxi) {
        ChartVectorField v = ChartVectorField::zero(atlas.chart(1), 1);
        v.even_coeff[0] = SuperRational(cx);
        v.odd_coeff[0] = SuperRational(cxi);
        return v;
    };
    const std::vector<ChartVectorField> expected_even = {
        mk(C(1), SuperPolynomial()),            // d/dx
        mk(X(), Xi()),                          // x d/dx + xi d/dxi
        mk(X() * X(), C(2) * X() * Xi()),       // x^2 d/dx + 2x xi d/dxi
        mk(SuperPolynomial(), Xi()),            // z = xi d/dxi
    };
    const std::vector<ChartVectorField> expected_odd = {
        mk(SuperPolynomial(), C(1)),            // d/dxi
        mk(SuperPolynomial(), X()),             // x d/dxi
        mk(SuperPolynomial(), X() * X()),       // x^2 d/dxi
        mk(Xi(), SuperPolynomial()),            // xi d/dx
    };
    std::vector<ChartVectorField> solver_even, solver_odd;
    for (const auto& f : basis.even_fields) solver_even.push_back(f.reps[1]);
    for (const auto& f : basis.odd_fields) solver_odd.push_back(f.reps[1]);
    CHECK(spans_equal(solver_even, expected_even));
    CHECK(spans_equal(solver_odd, expected_odd));
    // note: the full odd span includes x d/dxi + xi d/dx and xi d/dx, which
    // together give x d/dxi; the four expected odd fields span the same space
}

TEST_CASE("solver dimensions are anchor independent") {
    Atlas atlas(FlagType::pi_symmetric(2, {1}));
    for (int anchor = 0; anchor < atlas.chart_count(); ++anchor) {
        const GradedBasis basis = global_fields(atlas, 2, anchor);
        CHECK(basis.even_dim() == 4);
        CHECK(basis.odd_dim() == 4);
    }
}

TEST_CASE("exceptional comparison on PiGr_{2|2,1|1}") {
    Atlas atlas(FlagType::pi_symmetric(2, {1}));
    const GradedBasis basis = global_fields(atlas, 2);
    const ComparisonReport rep = compare_with_qn(atlas, basis);
    CHECK(rep.exceptional);
    CHECK(rep.dims_match);
    CHECK(rep.kernel_dim == 1);
    CHECK(rep.kernel_is_identity_line);
    CHECK(rep.mu_image_contained);
    CHECK(rep.codim == 1);
    CHECK(rep.z_is_global);
    CHECK(rep.z_outside_mu_image);
    CHECK(rep.z_completes_basis);
    CHECK(rep.g0_g1_commute);
    CHECK(rep.d_maps_gm1_onto_g0);
    CHECK(rep.z_grading_ok);
    CHECK(rep.structure_confirmed);
    CHECK(!rep.isomorphic);
}

TEST_CASE("generic comparison on PiGr_{3|3,1|1}") {
    Atlas atlas(FlagType::pi_symmetric(3, {1}));
    const GradedBasis basis = global_fields(atlas, 2);
    CHECK(basis.even_dim() == 8);
    CHECK(basis.odd_dim() == 9);
    CHECK(basis.stable);
    const ComparisonReport rep = compare_with_qn(atlas, basis);
    CHECK(!rep.exceptional);
    CHECK(rep.dims_match);
    CHECK(rep.mu_image_contained);
    CHECK(rep.codim == 0);
    CHECK(rep.isomorphic);
}

TEST_CASE("vertical_fields requires r > 1") {
    Atlas atlas(FlagType::pi_symmetric(2, {1}));
    CHECK_THROWS_AS(vertical_fields(atlas, 2), std::invalid_argument);
}

TEST_CASE("default degrees") {
    CHECK(default_field_degree(FlagType::pi_symmetric(2, {1})) == 2);
    CHECK(default_field_degree(FlagType::pi_symmetric(3, {2, 1})) == 3);
}
