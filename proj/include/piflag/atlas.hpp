#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "piflag/supermatrix.hpp"

namespace piflag {

// Flag type: either a general flag in C^{m|n} (type k|l) or a Pi-symmetric
// flag in C^{n|n} (type k, strictly decreasing, k_0 = n).
class FlagType {
public:
    enum class Kind { General, PiSymmetric };

    static FlagType general(int m, int n, std::vector<int> k, std::vector<int> l);
    static FlagType pi_symmetric(int n, std::vector<int> k);

    Kind kind() const { return kind_; }
    bool is_pi_symmetric() const { return kind_ == Kind::PiSymmetric; }
    int r() const { return static_cast<int>(k_.size()); }
    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<int>& k() const { return k_; }
    const std::vector<int>& l() const { return l_; }
    int k_at(int s) const { return s == 0 ? m_ : k_.at(s - 1); }  // k_0 = m
    int l_at(int s) const { return s == 0 ? n_ : l_.at(s - 1); }  // l_0 = n

    // nullopt when the chain conditions hold; otherwise a description of the
    // violated inequality.
    std::optional<std::string> validate() const;

    std::string str() const;
    friend bool operator==(const FlagType&, const FlagType&) = default;

private:
    Kind kind_ = Kind::PiSymmetric;
    int m_ = 0, n_ = 0;
    std::vector<int> k_, l_;
};

inline std::optional<std::string> validate_type(const FlagType& f) { return f.validate(); }

// Chart index I = (I_s): per step the rows carrying the identity block,
// sorted, 1-based. For Pi-symmetric charts odd_rows mirrors even_rows.
struct ChartIndex {
    std::vector<std::vector<int>> even_rows;
    std::vector<std::vector<int>> odd_rows;

    std::string str() const;
    friend bool operator==(const ChartIndex&, const ChartIndex&) = default;
};

std::vector<ChartIndex> enumerate_charts(const FlagType& f);

struct Chart {
    enum class Group { X, Y, Xi, Eta };
    struct VarPos {
        Group group;
        int step;  // 0-based
        int i, j;  // 1-based position inside the block
    };

    FlagType flag;
    ChartIndex index;
    std::shared_ptr<const VarTable> vars;
    std::vector<SuperMatrix> Z;  // coordinate matrices, one per step
    std::vector<VarPos> even_pos, odd_pos;
    std::vector<std::vector<int>> distinguished_rows;  // 0-based, identity row order

    int even_count() const { return static_cast<int>(even_pos.size()); }
    int odd_count() const { return static_cast<int>(odd_pos.size()); }
    // Number of step-0 (base) variables; base variables come first in the
    // table order.
    int base_even_count() const;
    int base_odd_count() const;

    Substitution identity_substitution() const;
};

Chart build_chart(const FlagType& f, const ChartIndex& idx);

// Transition per the recursive change-of-pivot formula: each step conjugates
// by the submatrix that restores the identity rows of the target index.
struct CoordinateMap {
    int source = -1;
    int target = -1;
    Substitution assignment;  // target variable -> SuperRational in source vars
};

CoordinateMap transition(const Chart& source, const Chart& target);

// g after f: f maps source I to target J, g maps source J to target K;
// result maps I to K.
CoordinateMap compose(const CoordinateMap& f, const CoordinateMap& g, const Chart& source_chart);

bool same_map(const CoordinateMap& a, const CoordinateMap& b);
bool is_identity_map(const CoordinateMap& m, const Chart& chart);

// Chart/transition cache for one flag type. Charts are enumerated eagerly
// (deterministic order), built lazily, cached write-once.
class Atlas {
public:
    explicit Atlas(FlagType flag);

    const FlagType& flag() const { return flag_; }
    int chart_count() const { return static_cast<int>(indices_.size()); }
    const ChartIndex& index(int ordinal) const { return indices_.at(ordinal); }
    const Chart& chart(int ordinal) const;
    const CoordinateMap& transition(int source, int target) const;
    std::optional<int> find(const ChartIndex& idx) const;

private:
    FlagType flag_;
    std::vector<ChartIndex> indices_;
    mutable std::map<int, Chart> charts_;
    mutable std::map<std::pair<int, int>, CoordinateMap> transitions_;
};

}  // namespace piflag
