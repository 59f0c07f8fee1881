#include "piflag/solver.hpp"

#include <algorithm>

namespace piflag {

std::vector<SuperMonomial> ansatz_pool(const Chart& chart, int degree) {
    const int ne = chart.even_count();
    const int no = chart.odd_count();
    // even monomials of total degree <= D, by degree then lexicographically
    std::vector<SuperMonomial> evens;
    std::vector<int> exps(ne, 0);
    auto emit = [&]() {
        SuperMonomial m;
        for (int v = 0; v < ne; ++v)
            if (exps[v]) m.even.emplace_back(v, exps[v]);
        evens.push_back(std::move(m));
    };
    // enumerate all exponent vectors with sum <= degree (odometer over a
    // simplex)
    for (;;) {
        emit();
        int i = ne - 1;
        for (; i >= 0; --i) {
            int sum = 0;
            for (int v = 0; v < ne; ++v) sum += exps[v];
            if (sum - exps[i] + (exps[i] + 1) <= degree) {
                ++exps[i];
                for (int j = i + 1; j < ne; ++j) exps[j] = 0;
                break;
            }
            exps[i] = 0;
        }
        if (i < 0) break;
    }
    std::sort(evens.begin(), evens.end(),
              [](const SuperMonomial& a, const SuperMonomial& b) { return grlex_cmp(a, b) < 0; });
    std::vector<SuperMonomial> pool;
    pool.reserve(evens.size() << no);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << no); ++mask) {
        for (const auto& e : evens) {
            SuperMonomial m = e;
            m.odd = mask;
            pool.push_back(std::move(m));
        }
    }
    return pool;
}

namespace {

// Linear constraint assembly: the coefficient attached to one ansatz unknown
// on a target chart is T_m * K, a fraction; polynomiality of the combined
// coefficient is equivalent to the vanishing of all division remainders
// against a common denominator.
struct ConstraintSink {
    RrefBuilder rref;
    explicit ConstraintSink(int cols) : rref(cols) {}

    // contributions: (column, value) per unknown, all over target chart vars
    void add_polynomiality_rows(std::vector<std::pair<int, SuperRational>>& contributions) {
        std::vector<SuperPolynomial> distinct;
        for (auto& [col, p] : contributions) {
            p.reduce();
            if (p.den().is_one()) continue;
            bool seen = false;
            for (const auto& d : distinct)
                if (d == p.den()) {
                    seen = true;
                    break;
                }
            if (!seen) distinct.push_back(p.den());
        }
        if (distinct.empty()) return;  // every contribution already polynomial
        SuperPolynomial lcm = distinct.front();
        for (std::size_t i = 1; i < distinct.size(); ++i) lcm = poly_lcm(lcm, distinct[i]);
        std::map<SuperMonomial, std::map<int, Rational>, GrlexDescending> rows;
        for (const auto& [col, p] : contributions) {
            if (p.is_zero()) continue;
            SuperPolynomial scaled = p.num();
            if (!(p.den() == lcm)) scaled = scaled * *exact_divide(lcm, p.den());
            const SuperPolynomial rem = div_rem(scaled, lcm).second;
            for (const auto& [m, c] : rem.terms()) rows[m][col] += c;
        }
        for (const auto& [m, cols] : rows) {
            SparseRow row;
            for (const auto& [col, v] : cols)
                if (v != 0) row.push(col, v);
            if (!row.empty()) rref.add_row(std::move(row));
        }
    }
};

// Substitution images of the pool monomials under the inverse transition.
std::vector<SuperRational> pool_images(const std::vector<SuperMonomial>& pool,
                                       const Substitution& sigma_inv) {
    std::vector<SuperRational> images;
    images.reserve(pool.size());
    for (const auto& m : pool)
        images.push_back(substitute(SuperPolynomial::term(m, Rational(1)), sigma_inv).reduced());
    return images;
}

struct FieldUnknowns {
    // unknown = (direction parity, direction index, pool index)
    std::vector<std::tuple<int, int, int>> list;
    int cols() const { return static_cast<int>(list.size()); }
};

FieldUnknowns field_unknowns(const Chart& chart, const std::vector<SuperMonomial>& pool,
                             Parity field_parity) {
    FieldUnknowns u;
    for (int dir = 0; dir < chart.even_count(); ++dir) {
        const int want = static_cast<int>(field_parity);
        for (int m = 0; m < static_cast<int>(pool.size()); ++m)
            if (pool[m].parity() == want) u.list.emplace_back(0, dir, m);
    }
    for (int dir = 0; dir < chart.odd_count(); ++dir) {
        const int want = 1 - static_cast<int>(field_parity);
        for (int m = 0; m < static_cast<int>(pool.size()); ++m)
            if (pool[m].parity() == want) u.list.emplace_back(1, dir, m);
    }
    return u;
}

// Solve for anchor-chart fields of one parity with polynomial coefficients
// of degree <= D whose pushforward to every other chart stays polynomial.
std::vector<ChartVectorField> solve_fields(const Atlas& atlas, int degree, int anchor,
                                           Parity field_parity) {
    const Chart& chart = atlas.chart(anchor);
    const std::vector<SuperMonomial> pool = ansatz_pool(chart, degree);
    const FieldUnknowns unknowns = field_unknowns(chart, pool, field_parity);
    ConstraintSink sink(unknowns.cols());

    for (int j = 0; j < atlas.chart_count(); ++j) {
        if (j == anchor) continue;
        const CoordinateMap& sigma = atlas.transition(anchor, j);
        const CoordinateMap& sigma_inv = atlas.transition(j, anchor);
        const std::vector<SuperRational> T = pool_images(pool, sigma_inv.assignment);
        const Chart& target = atlas.chart(j);

        auto process_direction = [&](Parity p, int w) {
            const SuperRational& expr = p == Parity::Even
                                            ? sigma.assignment.even_images[w]
                                            : sigma.assignment.odd_images[w];
            // K_u = d expr / d u rewritten on the target chart
            std::vector<SuperRational> K_even(chart.even_count()), K_odd(chart.odd_count());
            for (int u = 0; u < chart.even_count(); ++u)
                K_even[u] =
                    substitute(expr.derivative(Parity::Even, u), sigma_inv.assignment).reduced();
            for (int u = 0; u < chart.odd_count(); ++u)
                K_odd[u] =
                    substitute(expr.derivative(Parity::Odd, u), sigma_inv.assignment).reduced();
            std::vector<std::pair<int, SuperRational>> contributions;
            contributions.reserve(unknowns.list.size());
            for (int col = 0; col < unknowns.cols(); ++col) {
                const auto& [kind, dir, m] = unknowns.list[col];
                const SuperRational& K = kind == 0 ? K_even[dir] : K_odd[dir];
                if (K.is_zero() || T[m].is_zero()) continue;
                contributions.emplace_back(col, T[m] * K);
            }
            sink.add_polynomiality_rows(contributions);
        };
        for (int w = 0; w < target.even_count(); ++w) process_direction(Parity::Even, w);
        for (int w = 0; w < target.odd_count(); ++w) process_direction(Parity::Odd, w);
    }

    std::vector<ChartVectorField> out;
    for (const auto& coords : sink.rref.nullspace()) {
        ChartVectorField v = ChartVectorField::zero(chart, anchor);
        for (int col = 0; col < unknowns.cols(); ++col) {
            if (coords[col] == 0) continue;
            const auto& [kind, dir, m] = unknowns.list[col];
            const SuperPolynomial t = SuperPolynomial::term(pool[m], coords[col]);
            if (kind == 0)
                v.even_coeff[dir] += SuperRational(t);
            else
                v.odd_coeff[dir] += SuperRational(t);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::pair<int, int> solve_dims(const Atlas& atlas, int degree, int anchor) {
    return {static_cast<int>(solve_fields(atlas, degree, anchor, Parity::Even).size()),
            static_cast<int>(solve_fields(atlas, degree, anchor, Parity::Odd).size())};
}

}  // namespace

FunctionsResult global_functions(const Atlas& atlas, int degree, int anchor) {
    auto solve = [&](int D) {
        const Chart& chart = atlas.chart(anchor);
        const std::vector<SuperMonomial> pool = ansatz_pool(chart, D);
        ConstraintSink sink(static_cast<int>(pool.size()));
        for (int j = 0; j < atlas.chart_count(); ++j) {
            if (j == anchor) continue;
            const CoordinateMap& sigma_inv = atlas.transition(j, anchor);
            std::vector<SuperRational> T = pool_images(pool, sigma_inv.assignment);
            std::vector<std::pair<int, SuperRational>> contributions;
            for (int m = 0; m < static_cast<int>(pool.size()); ++m)
                contributions.emplace_back(m, std::move(T[m]));
            sink.add_polynomiality_rows(contributions);
        }
        std::vector<SuperPolynomial> basis;
        for (const auto& coords : sink.rref.nullspace()) {
            SuperPolynomial f;
            for (int m = 0; m < static_cast<int>(pool.size()); ++m)
                if (coords[m] != 0) f.add_term(pool[m], coords[m]);
            basis.push_back(std::move(f));
        }
        return basis;
    };
    FunctionsResult res;
    res.degree = degree;
    res.anchor = anchor;
    res.basis = solve(degree);
    res.stable = solve(degree + 1).size() == res.basis.size();
    return res;
}

GradedBasis global_fields(const Atlas& atlas, int degree, int anchor) {
    GradedBasis gb;
    gb.anchor = anchor;
    gb.degree = degree;
    std::vector<ChartVectorField> even_reps = solve_fields(atlas, degree, anchor, Parity::Even);
    std::vector<ChartVectorField> odd_reps = solve_fields(atlas, degree, anchor, Parity::Odd);
    const auto next = solve_dims(atlas, degree + 1, anchor);
    gb.stable = next.first == static_cast<int>(even_reps.size()) &&
                next.second == static_cast<int>(odd_reps.size());

    for (auto& rep : even_reps) gb.even_fields.push_back(make_global(atlas, rep));
    for (auto& rep : odd_reps) gb.odd_fields.push_back(make_global(atlas, rep));
    for (const auto& f : gb.even_fields)
        for (const auto& rep : f.reps)
            if (!is_holomorphic(rep)) throw std::logic_error("global_fields: non-polynomial rep");
    for (const auto& f : gb.odd_fields)
        for (const auto& rep : f.reps)
            if (!is_holomorphic(rep)) throw std::logic_error("global_fields: non-polynomial rep");

    // structure constants on the anchor representatives
    const int total = gb.total_dim();
    std::vector<ChartVectorField> reps;
    std::vector<ChartVectorField> brackets;
    reps.reserve(total);
    for (int i = 0; i < total; ++i) reps.push_back(gb.field(i).reps[anchor]);
    FieldVectorizer vz;
    for (const auto& r : reps) vz.add_support(r);
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) brackets.push_back(field_bracket(reps[i], reps[j]));
    for (const auto& b : brackets) vz.add_support(b);
    std::vector<std::vector<Rational>> gens;
    gens.reserve(total);
    for (const auto& r : reps) gens.push_back(vz.vectorize(r));
    gb.sc.closed = true;
    gb.sc.c.assign(total, std::vector<std::vector<Rational>>(total));
    for (int i = 0; i < total; ++i) {
        for (int j = 0; j < total; ++j) {
            const auto coords = solve_in_span(gens, vz.vectorize(brackets[i * total + j]));
            if (!coords) {
                gb.sc.closed = false;
                gb.sc.c[i][j].assign(total, Rational(0));
            } else {
                gb.sc.c[i][j] = *coords;
            }
        }
    }
    return gb;
}

std::vector<GlobalField> vertical_fields(const Atlas& atlas, const GradedBasis& basis) {
    if (atlas.flag().r() <= 1)
        throw std::invalid_argument("vertical_fields: requires a flag with r > 1");
    const FlagType base_type =
        FlagType::pi_symmetric(atlas.flag().n(), {atlas.flag().k().front()});
    Atlas base_atlas(base_type);
    std::vector<GlobalField> verticals;
    for (int i = 0; i < basis.total_dim(); ++i) {
        const ProjectResult res = project(atlas, base_atlas, basis.field(i));
        if (res.status == ProjectStatus::NotProjectable)
            throw std::logic_error("vertical_fields: solver output not projectable");
        if (res.status == ProjectStatus::Vertical && !basis.field(i).is_zero())
            verticals.push_back(basis.field(i));
    }
    return verticals;
}

std::vector<GlobalField> vertical_fields(const Atlas& atlas, int degree) {
    return vertical_fields(atlas, global_fields(atlas, degree));
}

GlobalField exceptional_z(const Atlas& atlas, int anchor) {
    const Chart& chart = atlas.chart(anchor);
    if (!(atlas.flag() == FlagType::pi_symmetric(2, {1})))
        throw std::invalid_argument("exceptional_z: defined on PiGr_{2|2,1|1} only");
    ChartVectorField z = ChartVectorField::zero(chart, anchor);
    z.odd_coeff[0] = SuperRational(SuperPolynomial::odd_var(0));
    return make_global(atlas, z);
}

int default_field_degree(const FlagType& f) { return f.r() == 1 ? 2 : 3; }

ComparisonReport compare_with_qn(const Atlas& atlas, const GradedBasis& basis) {
    ComparisonReport rep;
    const int n = atlas.flag().n();
    rep.exceptional = atlas.flag().r() == 1 && n == 2 && atlas.flag().k().front() == 1;
    rep.solver_dims = {basis.even_dim(), basis.odd_dim()};
    rep.expected_dims = {n * n - 1 + (rep.exceptional ? 1 : 0), n * n};
    rep.dims_match = rep.solver_dims == rep.expected_dims;

    const auto kernel = mu_kernel(atlas);
    rep.kernel_dim = static_cast<int>(kernel.size());
    if (rep.kernel_dim == 1) {
        const QnElement& k = kernel.front();
        const Rational scale = k.A[0][0];
        rep.kernel_is_identity_line =
            scale != 0 && k == QnElement::identity(n) * scale;
    }

    const int anchor = basis.anchor;
    const auto qbasis = qn_basis(n);
    std::vector<ChartVectorField> mu_reps;
    mu_reps.reserve(qbasis.size());
    for (const auto& e : qbasis) mu_reps.push_back(fundamental_field(atlas, e, anchor));

    std::vector<ChartVectorField> solver_reps;
    for (int i = 0; i < basis.total_dim(); ++i) solver_reps.push_back(basis.field(i).reps[anchor]);

    // register every field that will be vectorized, including the brackets
    // used by the exceptional-structure analysis
    FieldVectorizer vz;
    for (const auto& r : solver_reps) vz.add_support(r);
    for (const auto& r : mu_reps) vz.add_support(r);
    GlobalField zf;
    if (rep.exceptional) {
        zf = exceptional_z(atlas, anchor);
        vz.add_support(zf.reps[anchor]);
        std::vector<ChartVectorField> gens = mu_reps;
        gens.push_back(zf.reps[anchor]);
        for (const auto& a : gens)
            for (const auto& b : gens) vz.add_support(field_bracket(a, b));
    }

    std::vector<std::vector<Rational>> solver_vecs, mu_vecs;
    for (const auto& r : solver_reps) solver_vecs.push_back(vz.vectorize(r));
    for (const auto& r : mu_reps) mu_vecs.push_back(vz.vectorize(r));

    rep.mu_image_contained = true;
    for (const auto& v : mu_vecs)
        if (!solve_in_span(solver_vecs, v)) rep.mu_image_contained = false;
    rep.mu_image_rank = rank_of(mu_vecs);
    rep.codim = basis.total_dim() - rep.mu_image_rank;
    rep.isomorphic = rep.dims_match && rep.mu_image_contained && rep.codim == 0 &&
                     rep.kernel_dim == 1 && rep.kernel_is_identity_line && !rep.exceptional;

    if (!rep.exceptional) return rep;

    // exceptional structure of v(PiGr_{2|2,1|1}) = g_{-1} + g_0 + g_1 + <z>
    const ChartVectorField z = zf.reps[anchor];
    rep.z_is_global = is_global(atlas, zf);
    rep.z_outside_mu_image = !solve_in_span(mu_vecs, vz.vectorize(z)).has_value();
    {
        auto with_z = mu_vecs;
        with_z.push_back(vz.vectorize(z));
        rep.z_completes_basis =
            rank_of(with_z) == basis.total_dim() && rep.codim == 1 && rep.mu_image_contained;
    }

    // split the mu-image into parity parts (g_0 is the even part)
    std::vector<ChartVectorField> g0_fields, odd_fields;
    for (std::size_t e = 0; e < qbasis.size(); ++e) {
        if (mu_reps[e].is_zero()) continue;
        if (qbasis[e].parity() == Parity::Even)
            g0_fields.push_back(mu_reps[e]);
        else
            odd_fields.push_back(mu_reps[e]);
    }
    // independent odd generators
    std::vector<ChartVectorField> odd_basis;
    std::vector<std::vector<Rational>> odd_vecs;
    for (const auto& f : odd_fields) {
        auto v = vz.vectorize(f);
        auto probe = odd_vecs;
        probe.push_back(v);
        if (rank_of(probe) > rank_of(odd_vecs)) {
            odd_basis.push_back(f);
            odd_vecs.push_back(std::move(v));
        }
    }
    std::vector<ChartVectorField> g0_basis;
    std::vector<std::vector<Rational>> g0_vecs;
    for (const auto& f : g0_fields) {
        auto v = vz.vectorize(f);
        auto probe = g0_vecs;
        probe.push_back(v);
        if (rank_of(probe) > rank_of(g0_vecs)) {
            g0_basis.push_back(f);
            g0_vecs.push_back(std::move(v));
        }
    }

    // ad_z on the odd part: eigenvalues -1 (g_{-1}) and +1 (g_1)
    const int od = static_cast<int>(odd_basis.size());
    std::vector<std::vector<Rational>> adz(od);
    bool adz_ok = true;
    for (int i = 0; i < od; ++i) {
        const auto coords = solve_in_span(odd_vecs, vz.vectorize(field_bracket(z, odd_basis[i])));
        if (!coords) {
            adz_ok = false;
            break;
        }
        adz[i] = *coords;
    }
    std::vector<ChartVectorField> g_m1, g_1;
    if (adz_ok) {
        for (const long long lambda : {-1LL, 1LL}) {
            // kernel of (adz^T - lambda I) -> eigenvectors in odd_basis coords
            RrefBuilder rref(od);
            for (int r = 0; r < od; ++r) {
                SparseRow row;
                for (int ccol = 0; ccol < od; ++ccol) {
                    Rational val = adz[ccol][r];  // matrix of ad_z in column convention
                    if (ccol == r) val -= Rational(lambda);
                    row.push(ccol, val);
                }
                rref.add_row(std::move(row));
            }
            for (const auto& coords : rref.nullspace()) {
                ChartVectorField f = ChartVectorField::zero(atlas.chart(anchor), anchor);
                for (int i = 0; i < od; ++i)
                    if (coords[i] != 0) f = f + odd_basis[i] * coords[i];
                (lambda < 0 ? g_m1 : g_1).push_back(std::move(f));
            }
        }
    }
    rep.z_grading_ok = adz_ok && static_cast<int>(g_m1.size()) == 3 &&
                       static_cast<int>(g_1.size()) == 1 &&
                       static_cast<int>(g0_basis.size()) == 3;
    // z centralizes g_0 (eigenvalue 0 on the even part)
    if (rep.z_grading_ok)
        for (const auto& f : g0_basis)
            if (!field_bracket(z, f).is_zero()) rep.z_grading_ok = false;

    if (rep.z_grading_ok) {
        // [g_0, g_1] = 0
        rep.g0_g1_commute = true;
        for (const auto& a : g0_basis)
            for (const auto& b : g_1)
                if (!field_bracket(a, b).is_zero()) rep.g0_g1_commute = false;
        // [d, g_{-1}] = g_0, bijectively
        std::vector<std::vector<Rational>> image_vecs;
        bool inside = true;
        for (const auto& w : g_m1) {
            const ChartVectorField bw = field_bracket(g_1.front(), w);
            if (!solve_in_span(g0_vecs, vz.vectorize(bw))) inside = false;
            image_vecs.push_back(vz.vectorize(bw));
        }
        rep.d_maps_gm1_onto_g0 = inside && rank_of(image_vecs) == 3;
    }
    rep.structure_confirmed = rep.dims_match && rep.mu_image_contained && rep.codim == 1 &&
                              rep.z_is_global && rep.z_outside_mu_image &&
                              rep.z_completes_basis && rep.z_grading_ok &&
                              rep.g0_g1_commute && rep.d_maps_gm1_onto_g0 &&
                              rep.kernel_dim == 1 && rep.kernel_is_identity_line;
    return rep;
}

}  // namespace piflag
