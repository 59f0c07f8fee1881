#include "piflag/grassmann.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace piflag {

namespace {

const Rational kOne{1};

// Koszul sign of interleaving odd sets a and b (number of pairs i in a,
// j in b with i > j). Assumes a & b == 0.
int koszul_inversions(std::uint64_t a, std::uint64_t b) {
    int inv = 0;
    while (b) {
        const int j = std::countr_zero(b);
        inv += std::popcount(a >> (j + 1));
        b &= b - 1;
    }
    return inv;
}

bool even_divides(const SuperMonomial& g, const SuperMonomial& m) {
    // g purely even; does g's even part divide m's?
    auto it = m.even.begin();
    for (const auto& [v, e] : g.even) {
        while (it != m.even.end() && it->first < v) ++it;
        if (it == m.even.end() || it->first != v || it->second < e) return false;
    }
    return true;
}

SuperMonomial even_quotient(const SuperMonomial& m, const SuperMonomial& g) {
    SuperMonomial q;
    q.odd = m.odd;
    auto it = g.even.begin();
    for (const auto& [v, e] : m.even) {
        int ge = 0;
        while (it != g.even.end() && it->first < v) ++it;
        if (it != g.even.end() && it->first == v) ge = it->second;
        if (e - ge > 0) q.even.emplace_back(v, e - ge);
    }
    return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// VarTable

VarTable::VarTable(std::vector<std::string> even_names, std::vector<std::string> odd_names)
    : even_(std::move(even_names)), odd_(std::move(odd_names)) {
    std::set<std::string> seen;
    for (const auto& n : even_)
        if (!seen.insert(n).second) throw VarError("duplicate variable name: " + n);
    for (const auto& n : odd_)
        if (!seen.insert(n).second) throw VarError("duplicate variable name: " + n);
    if (odd_.size() > 64) throw VarError("too many odd generators (max 64)");
}

std::optional<int> VarTable::find_even(const std::string& name) const {
    for (std::size_t i = 0; i < even_.size(); ++i)
        if (even_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> VarTable::find_odd(const std::string& name) const {
    for (std::size_t i = 0; i < odd_.size(); ++i)
        if (odd_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// SuperMonomial

SuperMonomial SuperMonomial::even_var(int v, int e) {
    SuperMonomial m;
    if (e > 0) m.even.emplace_back(v, e);
    return m;
}

SuperMonomial SuperMonomial::odd_var(int v) {
    SuperMonomial m;
    m.odd = std::uint64_t{1} << v;
    return m;
}

int SuperMonomial::total_degree() const {
    int d = std::popcount(odd);
    for (const auto& [v, e] : even) d += e;
    return d;
}

int SuperMonomial::even_exponent(int v) const {
    for (const auto& [w, e] : even)
        if (w == v) return e;
    return 0;
}

int grlex_cmp(const SuperMonomial& a, const SuperMonomial& b) {
    const int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Lexicographic on the even exponent sequence, lowest variable index
    // first; higher exponent on an earlier variable wins.
    auto ia = a.even.begin(), ib = b.even.begin();
    while (ia != a.even.end() || ib != b.even.end()) {
        const int va = ia == a.even.end() ? INT32_MAX : ia->first;
        const int vb = ib == b.even.end() ? INT32_MAX : ib->first;
        if (va != vb) return va < vb ? 1 : -1;  // the one holding the earlier var is larger
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (a.odd != b.odd) {
        const std::uint64_t diff = a.odd ^ b.odd;
        const int low = std::countr_zero(diff);
        return (a.odd >> low) & 1 ? 1 : -1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// SuperPolynomial

SuperPolynomial SuperPolynomial::constant(const Rational& c) {
    SuperPolynomial p;
    p.add_term(SuperMonomial::one(), c);
    return p;
}

SuperPolynomial SuperPolynomial::even_var(int v) {
    SuperPolynomial p;
    p.add_term(SuperMonomial::even_var(v), kOne);
    return p;
}

SuperPolynomial SuperPolynomial::odd_var(int v) {
    SuperPolynomial p;
    p.add_term(SuperMonomial::odd_var(v), kOne);
    return p;
}

SuperPolynomial SuperPolynomial::term(SuperMonomial m, Rational c) {
    SuperPolynomial p;
    p.add_term(m, c);
    return p;
}

bool SuperPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool SuperPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool SuperPolynomial::is_body_only() const {
    for (const auto& [m, c] : terms_)
        if (m.odd) return false;
    return true;
}

bool SuperPolynomial::is_even_element() const {
    for (const auto& [m, c] : terms_)
        if (m.parity() != 0) return false;
    return true;
}

bool SuperPolynomial::is_odd_element() const {
    for (const auto& [m, c] : terms_)
        if (m.parity() != 1) return false;
    return true;
}

std::optional<Parity> SuperPolynomial::parity() const {
    if (terms_.empty()) return std::nullopt;
    const int p = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != p) return std::nullopt;
    return p == 0 ? Parity::Even : Parity::Odd;
}

int SuperPolynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Rational SuperPolynomial::coeff(const SuperMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational{0} : it->second;
}

const SuperMonomial& SuperPolynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& SuperPolynomial::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
    return terms_.begin()->second;
}

SuperPolynomial SuperPolynomial::body() const {
    SuperPolynomial p;
    for (const auto& [m, c] : terms_)
        if (m.odd == 0) p.terms_.emplace(m, c);
    return p;
}

SuperPolynomial SuperPolynomial::soul() const {
    SuperPolynomial p;
    for (const auto& [m, c] : terms_)
        if (m.odd != 0) p.terms_.emplace(m, c);
    return p;
}

void SuperPolynomial::add_term(const SuperMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
    SuperPolynomial p;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.odd & mb.odd) continue;  // repeated odd generator
            SuperMonomial m;
            m.odd = ma.odd | mb.odd;
            m.even.reserve(ma.even.size() + mb.even.size());
            auto ia = ma.even.begin(), ib = mb.even.begin();
            while (ia != ma.even.end() || ib != mb.even.end()) {
                if (ib == mb.even.end() || (ia != ma.even.end() && ia->first < ib->first)) {
                    m.even.push_back(*ia++);
                } else if (ia == ma.even.end() || ib->first < ia->first) {
                    m.even.push_back(*ib++);
                } else {
                    m.even.emplace_back(ia->first, ia->second + ib->second);
                    ++ia;
                    ++ib;
                }
            }
            Rational c = ca * cb;
            if (koszul_inversions(ma.odd, mb.odd) & 1) c = -c;
            p.add_term(m, c);
        }
    }
    return p;
}

SuperPolynomial SuperPolynomial::operator*(const Rational& c) const {
    SuperPolynomial p;
    if (c == 0) return p;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

SuperPolynomial SuperPolynomial::derivative(Parity p, int var) const {
    SuperPolynomial r;
    if (p == Parity::Even) {
        for (const auto& [m, c] : terms_) {
            const int e = m.even_exponent(var);
            if (e == 0) continue;
            SuperMonomial n = m;
            for (auto& [v, ex] : n.even)
                if (v == var) ex -= 1;
            std::erase_if(n.even, [](const auto& pr) { return pr.second == 0; });
            r.add_term(n, c * e);
        }
    } else {
        const std::uint64_t bit = std::uint64_t{1} << var;
        for (const auto& [m, c] : terms_) {
            if (!(m.odd & bit)) continue;
            SuperMonomial n = m;
            n.odd &= ~bit;
            // left derivative: sign from moving xi_var across earlier factors
            const int below = std::popcount(m.odd & (bit - 1));
            r.add_term(n, (below & 1) ? -c : c);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Division / gcd (purely even divisors)

std::pair<SuperPolynomial, SuperPolynomial> div_rem(const SuperPolynomial& f,
                                                    const SuperPolynomial& g) {
    if (g.is_zero() || !g.is_body_only())
        throw std::invalid_argument("div_rem: divisor must be purely even and nonzero");
    SuperPolynomial q, r, work = f;
    const SuperMonomial& gl = g.leading_monomial();
    const Rational& glc = g.leading_coeff();
    while (!work.is_zero()) {
        const auto& [m, c] = *work.terms().begin();
        if (even_divides(gl, m)) {
            const SuperMonomial qm = even_quotient(m, gl);
            const Rational qc = c / glc;
            q.add_term(qm, qc);
            work -= SuperPolynomial::term(qm, qc) * g;
        } else {
            r.add_term(m, c);
            work -= SuperPolynomial::term(m, c);
        }
    }
    return {q, r};
}

std::optional<SuperPolynomial> exact_divide(const SuperPolynomial& f, const SuperPolynomial& g) {
    auto [q, r] = div_rem(f, g);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

namespace {

SuperPolynomial make_monic(const SuperPolynomial& p) {
    if (p.is_zero()) return p;
    return p * (kOne / p.leading_coeff());
}

int degree_in(const SuperPolynomial& p, int v) {
    int d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.even_exponent(v));
    return d;
}

bool involves(const SuperPolynomial& p, int v) { return degree_in(p, v) > 0; }

int min_var(const SuperPolynomial& p) {
    int v = INT32_MAX;
    for (const auto& [m, c] : p.terms())
        if (!m.even.empty()) v = std::min(v, m.even.front().first);
    return v;
}

// Coefficient of x_v^d, as a polynomial free of x_v.
SuperPolynomial coeff_of(const SuperPolynomial& p, int v, int d) {
    SuperPolynomial r;
    for (const auto& [m, c] : p.terms()) {
        if (m.even_exponent(v) != d) continue;
        SuperMonomial n = m;
        std::erase_if(n.even, [v](const auto& pr) { return pr.first == v; });
        r.add_term(n, c);
    }
    return r;
}

SuperPolynomial times_power(const SuperPolynomial& p, int v, int d) {
    if (d == 0) return p;
    return p * SuperPolynomial::term(SuperMonomial::even_var(v, d), kOne);
}

SuperPolynomial content_wrt(const SuperPolynomial& p, int v) {
    SuperPolynomial g;
    for (int d = degree_in(p, v); d >= 0; --d) {
        const SuperPolynomial c = coeff_of(p, v, d);
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Pseudo-remainder of a by b in the variable v (deg_v(a) >= deg_v(b) >= 1).
SuperPolynomial prem(SuperPolynomial a, const SuperPolynomial& b, int v) {
    const int db = degree_in(b, v);
    const SuperPolynomial lb = coeff_of(b, v, db);
    int da = degree_in(a, v);
    while (!a.is_zero() && da >= db) {
        const SuperPolynomial la = coeff_of(a, v, da);
        a = a * lb - times_power(b * la, v, da - db);
        da = a.is_zero() ? -1 : degree_in(a, v);
    }
    return a;
}

}  // namespace

SuperPolynomial poly_gcd(const SuperPolynomial& a, const SuperPolynomial& b) {
    if (!a.is_body_only() || !b.is_body_only())
        throw std::invalid_argument("poly_gcd: arguments must be purely even");
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return SuperPolynomial::constant(kOne);
    const int v = std::min(min_var(a), min_var(b));
    if (!involves(a, v)) return poly_gcd(a, content_wrt(b, v));
    if (!involves(b, v)) return poly_gcd(content_wrt(a, v), b);

    const SuperPolynomial ca = content_wrt(a, v);
    const SuperPolynomial cb = content_wrt(b, v);
    const SuperPolynomial c = poly_gcd(ca, cb);
    SuperPolynomial A = *exact_divide(a, ca);
    SuperPolynomial B = *exact_divide(b, cb);
    if (degree_in(A, v) < degree_in(B, v)) std::swap(A, B);

    SuperPolynomial G;
    while (true) {
        SuperPolynomial R = prem(A, B, v);
        if (R.is_zero()) {
            G = B;
            break;
        }
        R = *exact_divide(R, content_wrt(R, v));
        if (degree_in(R, v) == 0) {
            G = SuperPolynomial::constant(kOne);
            break;
        }
        A = std::move(B);
        B = std::move(R);
    }
    if (G.is_one()) return make_monic(c);
    return make_monic(c * G);
}

SuperPolynomial poly_lcm(const SuperPolynomial& a, const SuperPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const SuperPolynomial g = poly_gcd(a, b);
    return make_monic(a * *exact_divide(b, g));
}

// ---------------------------------------------------------------------------
// SuperRational

SuperRational::SuperRational() : den_(SuperPolynomial::constant(kOne)) {}

SuperRational::SuperRational(SuperPolynomial num)
    : num_(std::move(num)), den_(SuperPolynomial::constant(kOne)) {}

SuperRational::SuperRational(SuperPolynomial num, SuperPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero() || !den_.is_body_only())
        throw std::invalid_argument("SuperRational: denominator must be purely even, nonzero");
    normalize_light();
}

SuperRational SuperRational::constant(const Rational& c) {
    return SuperRational(SuperPolynomial::constant(c));
}

void SuperRational::normalize_light() {
    if (num_.is_zero()) {
        den_ = SuperPolynomial::constant(kOne);
        return;
    }
    // Cancel a common even-monomial factor.
    std::map<int, int> min_exp;
    for (const auto& [v, e] : num_.terms().begin()->first.even) min_exp[v] = e;
    auto clip = [&min_exp](const SuperMonomial& m) {
        for (auto it = min_exp.begin(); it != min_exp.end();) {
            const int e = m.even_exponent(it->first);
            if (e == 0) {
                it = min_exp.erase(it);
            } else {
                it->second = std::min(it->second, e);
                ++it;
            }
        }
    };
    bool first = true;
    for (const auto& [m, c] : num_.terms()) {
        if (first) {
            first = false;
            continue;
        }
        if (min_exp.empty()) break;
        clip(m);
    }
    for (const auto& [m, c] : den_.terms()) {
        if (min_exp.empty()) break;
        clip(m);
    }
    if (!min_exp.empty()) {
        SuperMonomial g;
        for (const auto& [v, e] : min_exp) g.even.emplace_back(v, e);
        const SuperPolynomial gp = SuperPolynomial::term(g, kOne);
        num_ = *exact_divide(num_, gp);
        den_ = *exact_divide(den_, gp);
    }
    const Rational lc = den_.leading_coeff();
    if (lc != 1) {
        const Rational inv = kOne / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

SuperRational SuperRational::operator-() const {
    SuperRational r = *this;
    r.num_ = -r.num_;
    return r;
}

SuperRational& SuperRational::operator+=(const SuperRational& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize_light();
        return *this;
    }
    const SuperPolynomial g = poly_gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        const SuperPolynomial db = *exact_divide(o.den_, g);
        const SuperPolynomial da = *exact_divide(den_, g);
        num_ = num_ * db + o.num_ * da;
        den_ = den_ * db;
    }
    normalize_light();
    return *this;
}

SuperRational& SuperRational::operator-=(const SuperRational& o) { return *this += -o; }

SuperRational operator*(const SuperRational& a, const SuperRational& b) {
    if (a.is_zero() || b.is_zero()) return SuperRational();
    SuperRational r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.normalize_light();
    return r;
}

SuperRational operator/(const SuperRational& a, const SuperRational& b) { return a * b.inverse(); }

SuperRational SuperRational::operator*(const Rational& c) const {
    SuperRational r = *this;
    r.num_ = r.num_ * c;
    if (c == 0) r.den_ = SuperPolynomial::constant(kOne);
    return r;
}

bool operator==(const SuperRational& a, const SuperRational& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

SuperRational SuperRational::inverse() const {
    const SuperPolynomial b = num_.body();
    if (b.is_zero()) throw NotInvertible("inverse: zero body");
    const SuperPolynomial s = num_.soul();
    // 1/num = sum_j (-1)^j s^j / b^(j+1), a finite sum since s is nilpotent.
    std::vector<SuperPolynomial> spow{SuperPolynomial::constant(kOne)};
    while (!(spow.back() * s).is_zero()) spow.push_back(spow.back() * s);
    const int J = static_cast<int>(spow.size()) - 1;
    std::vector<SuperPolynomial> bpow{SuperPolynomial::constant(kOne)};
    for (int j = 1; j <= J + 1; ++j) bpow.push_back(bpow.back() * b);
    SuperPolynomial acc;
    for (int j = 0; j <= J; ++j) {
        SuperPolynomial t = spow[j] * bpow[J - j];
        acc += (j & 1) ? -t : t;
    }
    SuperRational r(den_ * acc, bpow[J + 1]);
    r.reduce();
    return r;
}

SuperRational& SuperRational::reduce() {
    if (den_.is_one() || num_.is_zero()) return *this;
    // Sector decomposition of num by odd monomial; gcd against den.
    std::map<std::uint64_t, SuperPolynomial> sectors;
    for (const auto& [m, c] : num_.terms()) {
        SuperMonomial n = m;
        n.odd = 0;
        sectors[m.odd].add_term(n, c);
    }
    SuperPolynomial g = den_;
    for (const auto& [mask, p] : sectors) {
        g = poly_gcd(g, p);
        if (g.is_one()) return *this;
    }
    SuperPolynomial num;
    for (const auto& [mask, p] : sectors) {
        const SuperPolynomial q = *exact_divide(p, g);
        for (const auto& [m, c] : q.terms()) {
            SuperMonomial n = m;
            n.odd = mask;
            num.add_term(n, c);
        }
    }
    num_ = std::move(num);
    den_ = *exact_divide(den_, g);
    normalize_light();
    return *this;
}

SuperRational SuperRational::reduced() const {
    SuperRational r = *this;
    r.reduce();
    return r;
}

SuperRational SuperRational::body() const {
    SuperRational r(num_.body(), den_);
    return r;
}

SuperRational SuperRational::soul() const { return *this - body(); }

bool SuperRational::is_polynomial() const {
    if (den_.is_one()) return true;
    return exact_divide(num_, den_).has_value();
}

SuperPolynomial SuperRational::as_polynomial() const {
    if (den_.is_one()) return num_;
    auto q = exact_divide(num_, den_);
    if (!q) throw std::logic_error("as_polynomial: element is not polynomial");
    return *q;
}

SuperRational SuperRational::derivative(Parity p, int var) const {
    if (p == Parity::Odd || !involves(den_, var)) {
        SuperRational r(num_.derivative(p, var), den_);
        return r;
    }
    SuperRational r(num_.derivative(p, var) * den_ - num_ * den_.derivative(p, var), den_ * den_);
    r.reduce();
    return r;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

void check_substitution(const Substitution& s) {
    for (const auto& f : s.even_images)
        if (!f.is_zero() && !f.is_even_element())
            throw VarError("substitute: even variable mapped to non-even element");
    for (const auto& f : s.odd_images)
        if (!f.is_zero() && !f.is_odd_element())
            throw VarError("substitute: odd variable mapped to non-odd element");
}

}  // namespace

SuperRational substitute(const SuperPolynomial& f, const Substitution& s) {
    check_substitution(s);
    std::vector<std::vector<SuperRational>> pw(s.even_images.size());
    auto power = [&](int v, int e) -> const SuperRational& {
        if (v >= static_cast<int>(pw.size())) throw VarError("substitute: unknown even variable");
        auto& cache = pw[v];
        if (cache.empty()) cache.push_back(SuperRational::constant(kOne));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back((cache.back() * s.even_images[v]).reduced());
        return cache[e];
    };
    SuperRational result;
    for (const auto& [m, c] : f.terms()) {
        SuperRational acc = SuperRational::constant(c);
        for (const auto& [v, e] : m.even) acc = acc * power(v, e);
        for (std::uint64_t bits = m.odd; bits; bits &= bits - 1) {
            const int i = std::countr_zero(bits);
            if (i >= static_cast<int>(s.odd_images.size()))
                throw VarError("substitute: unknown odd variable");
            acc = acc * s.odd_images[i];
        }
        result += acc;
    }
    return result;
}

SuperRational substitute(const SuperRational& f, const Substitution& s) {
    const SuperRational n = substitute(f.num(), s);
    if (f.den().is_one()) return n;
    const SuperRational d = substitute(f.den(), s);
    if (d.num().body().is_zero()) throw NotInvertible("substitute: denominator image has zero body");
    SuperRational r = n / d;
    r.reduce();
    return r;
}

// ---------------------------------------------------------------------------
// Rendering

std::string SuperPolynomial::str(const VarTable& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (a != 1 || m.is_one()) factors.push_back(rational_str(a));
        for (const auto& [v, e] : m.even) {
            std::string f = vars.even_name(v);
            if (e > 1) f += "^" + std::to_string(e);
            factors.push_back(f);
        }
        for (std::uint64_t bits = m.odd; bits; bits &= bits - 1)
            factors.push_back(vars.odd_name(std::countr_zero(bits)));
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

std::string SuperRational::str(const VarTable& vars) const {
    SuperRational r = reduced();
    if (r.den_.is_one()) return r.num_.str(vars);
    return "(" + r.num_.str(vars) + ")/(" + r.den_.str(vars) + ")";
}

}  // namespace piflag
