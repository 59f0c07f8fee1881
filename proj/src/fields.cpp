#include "piflag/fields.hpp"

#include <sstream>

namespace piflag {

ChartVectorField ChartVectorField::zero(const Chart& c, int ordinal) {
    ChartVectorField v;
    v.chart = ordinal;
    v.even_coeff.resize(c.even_count());
    v.odd_coeff.resize(c.odd_count());
    return v;
}

bool ChartVectorField::is_zero() const {
    for (const auto& c : even_coeff)
        if (!c.is_zero()) return false;
    for (const auto& c : odd_coeff)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<Parity> ChartVectorField::parity() const {
    // parity(field) = parity(coefficient) + parity(direction)
    std::optional<Parity> p;
    auto merge = [&p](const SuperRational& c, Parity dir) -> bool {
        if (c.is_zero()) return true;
        const auto cp = c.parity();
        if (!cp) return false;
        const Parity fp = (static_cast<int>(*cp) + static_cast<int>(dir)) % 2 == 0
                              ? Parity::Even
                              : Parity::Odd;
        if (p && *p != fp) return false;
        p = fp;
        return true;
    };
    for (const auto& c : even_coeff)
        if (!merge(c, Parity::Even)) return std::nullopt;
    for (const auto& c : odd_coeff)
        if (!merge(c, Parity::Odd)) return std::nullopt;
    return p;
}

namespace {

SuperRational parity_component(const SuperRational& f, int parity) {
    SuperPolynomial num;
    for (const auto& [m, c] : f.num().terms())
        if (m.parity() == parity) num.add_term(m, c);
    return SuperRational(std::move(num), f.den());
}

}  // namespace

ChartVectorField ChartVectorField::parity_part(Parity p) const {
    ChartVectorField v = *this;
    // an even (odd) field has even (odd) coefficients on even directions
    const int on_even = static_cast<int>(p);
    for (auto& c : v.even_coeff) c = parity_component(c, on_even);
    for (auto& c : v.odd_coeff) c = parity_component(c, 1 - on_even);
    return v;
}

ChartVectorField ChartVectorField::operator+(const ChartVectorField& o) const {
    ChartVectorField v = *this;
    for (std::size_t i = 0; i < even_coeff.size(); ++i) v.even_coeff[i] += o.even_coeff[i];
    for (std::size_t i = 0; i < odd_coeff.size(); ++i) v.odd_coeff[i] += o.odd_coeff[i];
    return v;
}

ChartVectorField ChartVectorField::operator-(const ChartVectorField& o) const {
    return *this + (-o);
}

ChartVectorField ChartVectorField::operator*(const Rational& c) const {
    ChartVectorField v = *this;
    for (auto& x : v.even_coeff) x = x * c;
    for (auto& x : v.odd_coeff) x = x * c;
    return v;
}

ChartVectorField ChartVectorField::operator-() const { return *this * Rational(-1); }

bool operator==(const ChartVectorField& a, const ChartVectorField& b) {
    if (a.even_coeff.size() != b.even_coeff.size()) return false;
    if (a.odd_coeff.size() != b.odd_coeff.size()) return false;
    for (std::size_t i = 0; i < a.even_coeff.size(); ++i)
        if (!(a.even_coeff[i] == b.even_coeff[i])) return false;
    for (std::size_t i = 0; i < a.odd_coeff.size(); ++i)
        if (!(a.odd_coeff[i] == b.odd_coeff[i])) return false;
    return true;
}

std::string ChartVectorField::str(const VarTable& vars) const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const SuperRational& c, const std::string& name) {
        if (c.is_zero()) return;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(vars) << ")*d/d" << name;
    };
    for (std::size_t i = 0; i < even_coeff.size(); ++i)
        emit(even_coeff[i], vars.even_name(static_cast<int>(i)));
    for (std::size_t i = 0; i < odd_coeff.size(); ++i)
        emit(odd_coeff[i], vars.odd_name(static_cast<int>(i)));
    if (first) return "0";
    return os.str();
}

SuperRational apply(const ChartVectorField& v, const SuperRational& f) {
    SuperRational out;
    for (std::size_t u = 0; u < v.even_coeff.size(); ++u) {
        if (v.even_coeff[u].is_zero()) continue;
        out += v.even_coeff[u] * f.derivative(Parity::Even, static_cast<int>(u));
    }
    for (std::size_t u = 0; u < v.odd_coeff.size(); ++u) {
        if (v.odd_coeff[u].is_zero()) continue;
        out += v.odd_coeff[u] * f.derivative(Parity::Odd, static_cast<int>(u));
    }
    return out;
}

namespace {

ChartVectorField bracket_homogeneous(const ChartVectorField& v, Parity pv,
                                     const ChartVectorField& w, Parity pw) {
    ChartVectorField out;
    out.chart = v.chart;
    out.even_coeff.resize(v.even_coeff.size());
    out.odd_coeff.resize(v.odd_coeff.size());
    const bool flip = pv == Parity::Odd && pw == Parity::Odd;
    for (std::size_t u = 0; u < v.even_coeff.size(); ++u) {
        SuperRational c = apply(v, w.even_coeff[u]);
        const SuperRational d = apply(w, v.even_coeff[u]);
        c += flip ? d : -d;
        out.even_coeff[u] = std::move(c);
    }
    for (std::size_t u = 0; u < v.odd_coeff.size(); ++u) {
        SuperRational c = apply(v, w.odd_coeff[u]);
        const SuperRational d = apply(w, v.odd_coeff[u]);
        c += flip ? d : -d;
        out.odd_coeff[u] = std::move(c);
    }
    return out;
}

}  // namespace

ChartVectorField field_bracket(const ChartVectorField& v, const ChartVectorField& w) {
    ChartVectorField out = ChartVectorField{};
    out.chart = v.chart;
    out.even_coeff.resize(v.even_coeff.size());
    out.odd_coeff.resize(v.odd_coeff.size());
    for (Parity pv : {Parity::Even, Parity::Odd}) {
        const ChartVectorField a = v.parity_part(pv);
        if (a.is_zero()) continue;
        for (Parity pw : {Parity::Even, Parity::Odd}) {
            const ChartVectorField b = w.parity_part(pw);
            if (b.is_zero()) continue;
            out = out + bracket_homogeneous(a, pv, b, pw);
        }
    }
    return out;
}

ChartVectorField pushforward(const ChartVectorField& v, const CoordinateMap& sigma,
                             const CoordinateMap& sigma_inv) {
    ChartVectorField out;
    out.chart = sigma.target;
    out.even_coeff.resize(sigma.assignment.even_images.size());
    out.odd_coeff.resize(sigma.assignment.odd_images.size());
    for (std::size_t u = 0; u < out.even_coeff.size(); ++u) {
        const SuperRational d = apply(v, sigma.assignment.even_images[u]);
        out.even_coeff[u] = substitute(d, sigma_inv.assignment).reduced();
    }
    for (std::size_t u = 0; u < out.odd_coeff.size(); ++u) {
        const SuperRational d = apply(v, sigma.assignment.odd_images[u]);
        out.odd_coeff[u] = substitute(d, sigma_inv.assignment).reduced();
    }
    return out;
}

bool is_holomorphic(const ChartVectorField& v) {
    for (const auto& c : v.even_coeff)
        if (!c.is_polynomial()) return false;
    for (const auto& c : v.odd_coeff)
        if (!c.is_polynomial()) return false;
    return true;
}

bool GlobalField::is_zero() const {
    for (const auto& r : reps)
        if (!r.is_zero()) return false;
    return true;
}

GlobalField GlobalField::operator+(const GlobalField& o) const {
    GlobalField f;
    f.reps.reserve(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) f.reps.push_back(reps[i] + o.reps[i]);
    return f;
}

GlobalField GlobalField::operator*(const Rational& c) const {
    GlobalField f;
    f.reps.reserve(reps.size());
    for (const auto& r : reps) f.reps.push_back(r * c);
    return f;
}

GlobalField make_global(const Atlas& atlas, const ChartVectorField& anchor_rep) {
    GlobalField f;
    f.reps.reserve(atlas.chart_count());
    for (int j = 0; j < atlas.chart_count(); ++j) {
        if (j == anchor_rep.chart) {
            f.reps.push_back(anchor_rep);
        } else {
            f.reps.push_back(pushforward(anchor_rep, atlas.transition(anchor_rep.chart, j),
                                         atlas.transition(j, anchor_rep.chart)));
        }
    }
    return f;
}

bool is_global(const Atlas& atlas, const GlobalField& f) {
    const int n = atlas.chart_count();
    if (static_cast<int>(f.reps.size()) != n) return false;
    for (const auto& r : f.reps)
        if (!is_holomorphic(r)) return false;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const ChartVectorField pushed =
                pushforward(f.reps[i], atlas.transition(i, j), atlas.transition(j, i));
            if (!(pushed == f.reps[j])) return false;
        }
    }
    return true;
}

bool FieldVectorizer::KeyLess::operator()(const Key& a, const Key& b) const {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return grlex_cmp(std::get<2>(a), std::get<2>(b)) > 0;
}

void FieldVectorizer::add_support(const ChartVectorField& v) {
    auto touch = [this](int kind, int dir, const SuperRational& c) {
        const SuperPolynomial p = c.as_polynomial();
        for (const auto& [m, coeff] : p.terms()) {
            const Key k{kind, dir, m};
            if (!index_.count(k)) {
                const int next = static_cast<int>(index_.size());
                index_.emplace(k, next);
            }
        }
    };
    for (std::size_t u = 0; u < v.even_coeff.size(); ++u)
        touch(0, static_cast<int>(u), v.even_coeff[u]);
    for (std::size_t u = 0; u < v.odd_coeff.size(); ++u)
        touch(1, static_cast<int>(u), v.odd_coeff[u]);
}

std::vector<Rational> FieldVectorizer::vectorize(const ChartVectorField& v) const {
    std::vector<Rational> out(index_.size(), Rational(0));
    auto fill = [&](int kind, int dir, const SuperRational& c) {
        const SuperPolynomial p = c.as_polynomial();
        for (const auto& [m, coeff] : p.terms()) {
            auto it = index_.find(Key{kind, dir, m});
            if (it == index_.end())
                throw std::logic_error("FieldVectorizer: unregistered support");
            out[it->second] = coeff;
        }
    };
    for (std::size_t u = 0; u < v.even_coeff.size(); ++u)
        fill(0, static_cast<int>(u), v.even_coeff[u]);
    for (std::size_t u = 0; u < v.odd_coeff.size(); ++u)
        fill(1, static_cast<int>(u), v.odd_coeff[u]);
    return out;
}

ProjectResult project(const Atlas& flag_atlas, const Atlas& base_atlas, const GlobalField& v) {
    ProjectResult res;
    std::map<int, ChartVectorField> base_reps;
    for (int c = 0; c < flag_atlas.chart_count(); ++c) {
        const Chart& chart = flag_atlas.chart(c);
        const int be = chart.base_even_count();
        const int bo = chart.base_odd_count();
        // fiber-variable dependence check on the base-coordinate coefficients
        auto base_only = [&](const SuperRational& f) {
            for (const auto& [m, coeff] : f.num().terms()) {
                if (m.odd >> bo) return false;
                for (const auto& [var, e] : m.even)
                    if (var >= be) return false;
            }
            for (const auto& [m, coeff] : f.den().terms())
                for (const auto& [var, e] : m.even)
                    if (var >= be) return false;
            return true;
        };
        ChartVectorField rep;
        rep.even_coeff.resize(be);
        rep.odd_coeff.resize(bo);
        for (int u = 0; u < be; ++u) {
            SuperRational coeff = v.reps[c].even_coeff[u].reduced();
            if (!base_only(coeff)) {
                res.status = ProjectStatus::NotProjectable;
                res.why = "coefficient of a base coordinate depends on fiber variables (chart " +
                          std::to_string(c) + ")";
                return res;
            }
            rep.even_coeff[u] = std::move(coeff);
        }
        for (int u = 0; u < bo; ++u) {
            SuperRational coeff = v.reps[c].odd_coeff[u].reduced();
            if (!base_only(coeff)) {
                res.status = ProjectStatus::NotProjectable;
                res.why = "coefficient of a base coordinate depends on fiber variables (chart " +
                          std::to_string(c) + ")";
                return res;
            }
            rep.odd_coeff[u] = std::move(coeff);
        }
        ChartIndex base_idx;
        base_idx.even_rows = {flag_atlas.index(c).even_rows[0]};
        base_idx.odd_rows = {flag_atlas.index(c).odd_rows[0]};
        const auto ordinal = base_atlas.find(base_idx);
        if (!ordinal) throw std::logic_error("project: base chart not found");
        rep.chart = *ordinal;
        auto [it, inserted] = base_reps.emplace(*ordinal, rep);
        if (!inserted && !(it->second == rep)) {
            res.status = ProjectStatus::NotProjectable;
            res.why = "charts over the same base chart disagree";
            return res;
        }
    }
    GlobalField base;
    base.reps.resize(base_atlas.chart_count());
    for (auto& [ordinal, rep] : base_reps) base.reps[ordinal] = std::move(rep);
    if (base.is_zero()) {
        res.status = ProjectStatus::Vertical;
        return res;
    }
    res.status = ProjectStatus::Projected;
    res.base = std::move(base);
    return res;
}

}  // namespace piflag
