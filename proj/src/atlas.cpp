#include "piflag/atlas.hpp"

#include <sstream>

namespace piflag {

// ---------------------------------------------------------------------------
// FlagType

FlagType FlagType::general(int m, int n, std::vector<int> k, std::vector<int> l) {
    FlagType f;
    f.kind_ = Kind::General;
    f.m_ = m;
    f.n_ = n;
    f.k_ = std::move(k);
    f.l_ = std::move(l);
    return f;
}

FlagType FlagType::pi_symmetric(int n, std::vector<int> k) {
    FlagType f;
    f.kind_ = Kind::PiSymmetric;
    f.m_ = n;
    f.n_ = n;
    f.k_ = k;
    f.l_ = std::move(k);
    return f;
}

std::optional<std::string> FlagType::validate() const {
    if (k_.empty()) return "empty flag type (r = 0)";
    if (kind_ == Kind::PiSymmetric) {
        // strictly decreasing chain n > k_1 > ... > k_r > 0
        int prev = n_;
        for (std::size_t s = 0; s < k_.size(); ++s) {
            if (k_[s] >= prev)
                return "k_" + std::to_string(s + 1) + " = " + std::to_string(k_[s]) +
                       " must be < " + (s == 0 ? "n" : "k_" + std::to_string(s)) + " = " +
                       std::to_string(prev);
            prev = k_[s];
        }
        if (prev <= 0) return "k_r must be positive";
        return std::nullopt;
    }
    if (l_.size() != k_.size()) return "k and l must have the same length";
    const int r = static_cast<int>(k_.size());
    for (int s = 0; s < r; ++s) {
        const int kp = s == 0 ? m_ : k_[s - 1];
        const int lp = s == 0 ? n_ : l_[s - 1];
        if (k_[s] < 0 || k_[s] > kp) return "k chain violated at step " + std::to_string(s + 1);
        if (l_[s] < 0 || l_[s] > lp) return "l chain violated at step " + std::to_string(s + 1);
        const int prev_sum = s == 0 ? m_ + n_ : k_[s - 1] + l_[s - 1];
        if (k_[s] + l_[s] >= prev_sum)
            return "k_s + l_s must decrease strictly (step " + std::to_string(s + 1) + ")";
    }
    if (k_[r - 1] + l_[r - 1] <= 0) return "k_r + l_r must be positive";
    return std::nullopt;
}

std::string FlagType::str() const {
    std::ostringstream os;
    auto list = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s;
    };
    if (kind_ == Kind::PiSymmetric) {
        if (r() == 1)
            os << "PiGr_{" << n_ << "|" << n_ << "," << k_[0] << "|" << k_[0] << "}";
        else
            os << "PiF^{" << n_ << "|" << n_ << "}_{(" << list(k_) << ")}";
    } else {
        os << "F^{" << m_ << "|" << n_ << "}_{(" << list(k_) << ")|(" << list(l_) << ")}";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Chart enumeration

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) return {std::vector<int>{}};
    if (k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

std::vector<ChartIndex> enumerate_charts(const FlagType& f) {
    if (auto bad = f.validate()) throw std::invalid_argument("enumerate_charts: " + *bad);
    const int r = f.r();
    std::vector<std::vector<std::vector<int>>> even_choices(r), odd_choices(r);
    for (int s = 0; s < r; ++s) {
        even_choices[s] = subsets_of_size(f.k_at(s), f.k_at(s + 1));
        odd_choices[s] =
            f.is_pi_symmetric() ? even_choices[s] : subsets_of_size(f.l_at(s), f.l_at(s + 1));
    }
    const int slots = f.is_pi_symmetric() ? r : 2 * r;
    auto slot_size = [&](int i) {
        if (f.is_pi_symmetric()) return even_choices[i].size();
        return i % 2 ? odd_choices[i / 2].size() : even_choices[i / 2].size();
    };
    std::vector<ChartIndex> out;
    std::vector<std::size_t> pos(slots, 0);
    for (;;) {
        ChartIndex idx;
        idx.even_rows.resize(r);
        idx.odd_rows.resize(r);
        for (int s = 0; s < r; ++s) {
            if (f.is_pi_symmetric()) {
                idx.even_rows[s] = even_choices[s][pos[s]];
                idx.odd_rows[s] = idx.even_rows[s];
            } else {
                idx.even_rows[s] = even_choices[s][pos[2 * s]];
                idx.odd_rows[s] = odd_choices[s][pos[2 * s + 1]];
            }
        }
        out.push_back(std::move(idx));
        int i = slots - 1;
        while (i >= 0) {
            if (++pos[i] < slot_size(i)) break;
            pos[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

std::string ChartIndex::str() const {
    std::ostringstream os;
    auto set = [&os](const std::vector<int>& v) {
        os << "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << v[i];
        }
        os << "}";
    };
    for (std::size_t s = 0; s < even_rows.size(); ++s) {
        if (s) os << ";";
        set(even_rows[s]);
        if (odd_rows[s] != even_rows[s]) {
            os << "|";
            set(odd_rows[s]);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Chart construction

namespace {

std::string var_name(const char* base, int step, int i, int j) {
    return std::string(base) + std::to_string(step + 1) + "_" + std::to_string(i) +
           std::to_string(j);
}

}  // namespace

Chart build_chart(const FlagType& f, const ChartIndex& idx) {
    if (auto bad = f.validate()) throw std::invalid_argument("build_chart: " + *bad);
    const int r = f.r();
    Chart c;
    c.flag = f;
    c.index = idx;
    c.Z.resize(r);
    c.distinguished_rows.resize(r);

    std::vector<std::string> even_names, odd_names;
    // Variable order: by (step, group, i, j); the step-0 block is a prefix of
    // the table, which the bundle projection relies on.
    for (int s = 0; s < r; ++s) {
        const int kprev = f.k_at(s), ks = f.k_at(s + 1);
        const int lprev = f.l_at(s), ls = f.l_at(s + 1);
        std::vector<bool> in_even(kprev + 1, false), in_odd(lprev + 1, false);
        for (int i : idx.even_rows[s]) in_even[i] = true;
        for (int i : idx.odd_rows[s]) in_odd[i] = true;
        for (int i = 1; i <= kprev; ++i) {
            if (in_even[i]) continue;
            for (int j = 1; j <= ks; ++j) {
                even_names.push_back(var_name("x", s, i, j));
                c.even_pos.push_back({Chart::Group::X, s, i, j});
            }
            for (int j = 1; j <= ls; ++j) {
                odd_names.push_back(var_name("xi", s, i, j));
                c.odd_pos.push_back({Chart::Group::Xi, s, i, j});
            }
        }
        if (!f.is_pi_symmetric()) {
            for (int i = 1; i <= lprev; ++i) {
                if (in_odd[i]) continue;
                for (int j = 1; j <= ks; ++j) {
                    odd_names.push_back(var_name("eta", s, i, j));
                    c.odd_pos.push_back({Chart::Group::Eta, s, i, j});
                }
                for (int j = 1; j <= ls; ++j) {
                    even_names.push_back(var_name("y", s, i, j));
                    c.even_pos.push_back({Chart::Group::Y, s, i, j});
                }
            }
        }
    }
    c.vars = std::make_shared<VarTable>(even_names, odd_names);

    std::map<std::tuple<int, int, int, int>, int> even_lookup, odd_lookup;  // (group,s,i,j)
    for (std::size_t v = 0; v < c.even_pos.size(); ++v) {
        const auto& p = c.even_pos[v];
        even_lookup[{static_cast<int>(p.group), p.step, p.i, p.j}] = static_cast<int>(v);
    }
    for (std::size_t v = 0; v < c.odd_pos.size(); ++v) {
        const auto& p = c.odd_pos[v];
        odd_lookup[{static_cast<int>(p.group), p.step, p.i, p.j}] = static_cast<int>(v);
    }

    const auto one = SuperRational::constant(1);
    auto even_entry = [](int v) { return SuperRational(SuperPolynomial::even_var(v)); };
    auto odd_entry = [](int v) { return SuperRational(SuperPolynomial::odd_var(v)); };

    for (int s = 0; s < r; ++s) {
        const int kprev = f.k_at(s), ks = f.k_at(s + 1);
        const int lprev = f.l_at(s), ls = f.l_at(s + 1);
        SuperMatrix z(kprev + lprev, ks + ls);
        std::vector<bool> in_even(kprev + 1, false), in_odd(lprev + 1, false);
        for (std::size_t t = 0; t < idx.even_rows[s].size(); ++t) {
            const int i = idx.even_rows[s][t];
            in_even[i] = true;
            z.at(i - 1, static_cast<int>(t)) = one;
            c.distinguished_rows[s].push_back(i - 1);
        }
        for (std::size_t t = 0; t < idx.odd_rows[s].size(); ++t) {
            const int i = idx.odd_rows[s][t];
            in_odd[i] = true;
            z.at(kprev + i - 1, ks + static_cast<int>(t)) = one;
            c.distinguished_rows[s].push_back(kprev + i - 1);
        }
        if (f.is_pi_symmetric()) {
            for (int i = 1; i <= kprev; ++i) {
                if (in_even[i]) continue;
                for (int j = 1; j <= ks; ++j) {
                    const int v = even_lookup.at({static_cast<int>(Chart::Group::X), s, i, j});
                    z.at(i - 1, j - 1) = even_entry(v);
                    z.at(kprev + i - 1, ks + j - 1) = even_entry(v);
                }
                for (int j = 1; j <= ls; ++j) {
                    const int v = odd_lookup.at({static_cast<int>(Chart::Group::Xi), s, i, j});
                    z.at(i - 1, ks + j - 1) = odd_entry(v);
                    z.at(kprev + i - 1, j - 1) = odd_entry(v);
                }
            }
        } else {
            for (int i = 1; i <= kprev; ++i) {
                if (in_even[i]) continue;
                for (int j = 1; j <= ks; ++j)
                    z.at(i - 1, j - 1) =
                        even_entry(even_lookup.at({static_cast<int>(Chart::Group::X), s, i, j}));
                for (int j = 1; j <= ls; ++j)
                    z.at(i - 1, ks + j - 1) =
                        odd_entry(odd_lookup.at({static_cast<int>(Chart::Group::Xi), s, i, j}));
            }
            for (int i = 1; i <= lprev; ++i) {
                if (in_odd[i]) continue;
                for (int j = 1; j <= ks; ++j)
                    z.at(kprev + i - 1, j - 1) =
                        odd_entry(odd_lookup.at({static_cast<int>(Chart::Group::Eta), s, i, j}));
                for (int j = 1; j <= ls; ++j)
                    z.at(kprev + i - 1, ks + j - 1) =
                        even_entry(even_lookup.at({static_cast<int>(Chart::Group::Y), s, i, j}));
            }
        }
        c.Z[s] = std::move(z);
    }
    return c;
}

int Chart::base_even_count() const {
    int n = 0;
    for (const auto& p : even_pos)
        if (p.step == 0) ++n;
    return n;
}

int Chart::base_odd_count() const {
    int n = 0;
    for (const auto& p : odd_pos)
        if (p.step == 0) ++n;
    return n;
}

Substitution Chart::identity_substitution() const {
    Substitution s;
    for (int v = 0; v < even_count(); ++v)
        s.even_images.push_back(SuperRational(SuperPolynomial::even_var(v)));
    for (int v = 0; v < odd_count(); ++v)
        s.odd_images.push_back(SuperRational(SuperPolynomial::odd_var(v)));
    return s;
}

// ---------------------------------------------------------------------------
// Transitions

namespace {

// Matrix entry positions of one variable inside Z_s: primary position plus
// the Pi-symmetric mirror copy.
std::vector<std::pair<int, int>> positions_of(const FlagType& f, const Chart::VarPos& p) {
    const int kprev = f.k_at(p.step), ks = f.k_at(p.step + 1);
    switch (p.group) {
        case Chart::Group::X:
            if (f.is_pi_symmetric()) return {{p.i - 1, p.j - 1}, {kprev + p.i - 1, ks + p.j - 1}};
            return {{p.i - 1, p.j - 1}};
        case Chart::Group::Xi:
            if (f.is_pi_symmetric()) return {{p.i - 1, ks + p.j - 1}, {kprev + p.i - 1, p.j - 1}};
            return {{p.i - 1, ks + p.j - 1}};
        case Chart::Group::Eta:
            return {{kprev + p.i - 1, p.j - 1}};
        case Chart::Group::Y:
            return {{kprev + p.i - 1, ks + p.j - 1}};
    }
    throw std::logic_error("positions_of: bad group");
}

}  // namespace

CoordinateMap transition(const Chart& source, const Chart& target) {
    if (!(source.flag == target.flag))
        throw std::invalid_argument("transition: charts of different flag types");
    const FlagType& f = source.flag;
    const int r = f.r();

    std::vector<SuperMatrix> Zt(r);
    SuperMatrix Cprev;
    for (int s = 0; s < r; ++s) {
        const SuperMatrix M = (s == 0) ? source.Z[0] : matmul(Cprev, source.Z[s]);
        SuperMatrix C = extract_rows(M, target.distinguished_rows[s]);
        Zt[s] = matmul(M, inverse(C));
        const SuperMatrix id_check = extract_rows(Zt[s], target.distinguished_rows[s]);
        if (!(id_check == SuperMatrix::identity(id_check.rows())))
            throw std::logic_error("transition: identity rows not restored");
        Cprev = std::move(C);
    }

    CoordinateMap map;
    map.assignment.even_images.resize(target.even_count());
    map.assignment.odd_images.resize(target.odd_count());
    for (int v = 0; v < target.even_count(); ++v) {
        const auto& p = target.even_pos[v];
        const auto pos = positions_of(f, p);
        SuperRational val = Zt[p.step].at(pos[0].first, pos[0].second).reduced();
        for (std::size_t q = 1; q < pos.size(); ++q)
            if (!(Zt[p.step].at(pos[q].first, pos[q].second) == val))
                throw std::logic_error("transition: Pi-symmetric block form broken");
        if (!val.is_zero() && !val.is_even_element())
            throw std::logic_error("transition: parity of even coordinate image broken");
        map.assignment.even_images[v] = std::move(val);
    }
    for (int v = 0; v < target.odd_count(); ++v) {
        const auto& p = target.odd_pos[v];
        const auto pos = positions_of(f, p);
        SuperRational val = Zt[p.step].at(pos[0].first, pos[0].second).reduced();
        for (std::size_t q = 1; q < pos.size(); ++q)
            if (!(Zt[p.step].at(pos[q].first, pos[q].second) == val))
                throw std::logic_error("transition: Pi-symmetric block form broken");
        if (!val.is_zero() && !val.is_odd_element())
            throw std::logic_error("transition: parity of odd coordinate image broken");
        map.assignment.odd_images[v] = std::move(val);
    }
    return map;
}

CoordinateMap compose(const CoordinateMap& f, const CoordinateMap& g,
                      const Chart& /*source_chart*/) {
    CoordinateMap h;
    h.source = f.source;
    h.target = g.target;
    for (const auto& img : g.assignment.even_images)
        h.assignment.even_images.push_back(substitute(img, f.assignment).reduced());
    for (const auto& img : g.assignment.odd_images)
        h.assignment.odd_images.push_back(substitute(img, f.assignment).reduced());
    return h;
}

bool same_map(const CoordinateMap& a, const CoordinateMap& b) {
    if (a.assignment.even_images.size() != b.assignment.even_images.size()) return false;
    if (a.assignment.odd_images.size() != b.assignment.odd_images.size()) return false;
    for (std::size_t i = 0; i < a.assignment.even_images.size(); ++i)
        if (!(a.assignment.even_images[i] == b.assignment.even_images[i])) return false;
    for (std::size_t i = 0; i < a.assignment.odd_images.size(); ++i)
        if (!(a.assignment.odd_images[i] == b.assignment.odd_images[i])) return false;
    return true;
}

bool is_identity_map(const CoordinateMap& m, const Chart& chart) {
    const Substitution id = chart.identity_substitution();
    if (m.assignment.even_images.size() != id.even_images.size()) return false;
    if (m.assignment.odd_images.size() != id.odd_images.size()) return false;
    for (std::size_t i = 0; i < id.even_images.size(); ++i)
        if (!(m.assignment.even_images[i] == id.even_images[i])) return false;
    for (std::size_t i = 0; i < id.odd_images.size(); ++i)
        if (!(m.assignment.odd_images[i] == id.odd_images[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Atlas

Atlas::Atlas(FlagType flag) : flag_(std::move(flag)) {
    if (auto bad = flag_.validate()) throw std::invalid_argument("Atlas: " + *bad);
    indices_ = enumerate_charts(flag_);
}

const Chart& Atlas::chart(int ordinal) const {
    auto it = charts_.find(ordinal);
    if (it == charts_.end())
        it = charts_.emplace(ordinal, build_chart(flag_, indices_.at(ordinal))).first;
    return it->second;
}

const CoordinateMap& Atlas::transition(int source, int target) const {
    const auto key = std::make_pair(source, target);
    auto it = transitions_.find(key);
    if (it == transitions_.end()) {
        CoordinateMap m = piflag::transition(chart(source), chart(target));
        m.source = source;
        m.target = target;
        it = transitions_.emplace(key, std::move(m)).first;
    }
    return it->second;
}

std::optional<int> Atlas::find(const ChartIndex& idx) const {
    for (std::size_t i = 0; i < indices_.size(); ++i)
        if (indices_[i] == idx) return static_cast<int>(i);
    return std::nullopt;
}

}  // namespace piflag
