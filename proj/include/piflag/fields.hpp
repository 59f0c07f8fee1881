#pragma once

#include <optional>

#include "piflag/atlas.hpp"

namespace piflag {

// Super-derivation on one chart, written with left coefficients:
// v = sum_u coeff(u) d/du over the chart variables.
struct ChartVectorField {
    int chart = -1;
    std::vector<SuperRational> even_coeff;  // per even direction
    std::vector<SuperRational> odd_coeff;   // per odd direction

    static ChartVectorField zero(const Chart& c, int ordinal);
    bool is_zero() const;
    // Even/Odd for parity-homogeneous fields, nullopt for mixed or zero.
    std::optional<Parity> parity() const;
    ChartVectorField parity_part(Parity p) const;

    ChartVectorField operator+(const ChartVectorField& o) const;
    ChartVectorField operator-(const ChartVectorField& o) const;
    ChartVectorField operator*(const Rational& c) const;
    ChartVectorField operator-() const;
    friend bool operator==(const ChartVectorField& a, const ChartVectorField& b);

    std::string str(const VarTable& vars) const;
};

// Derivation action with the left-derivative convention.
SuperRational apply(const ChartVectorField& v, const SuperRational& f);

// Super-commutator [v, w] = v w - (-1)^{p(v)p(w)} w v; mixed-parity inputs
// distribute bilinearly over their parity parts.
ChartVectorField field_bracket(const ChartVectorField& v, const ChartVectorField& w);

// Chain rule across a transition: the coefficient of a target variable u is
// apply(v, sigma(u)) rewritten in target coordinates via the inverse map.
ChartVectorField pushforward(const ChartVectorField& v, const CoordinateMap& sigma,
                             const CoordinateMap& sigma_inv);

// True when every coefficient is polynomial on the affine chart.
bool is_holomorphic(const ChartVectorField& v);

// Compatible family of chart representatives, one per chart of the atlas.
struct GlobalField {
    std::vector<ChartVectorField> reps;

    bool is_zero() const;
    GlobalField operator+(const GlobalField& o) const;
    GlobalField operator*(const Rational& c) const;
};

// Spread one chart representative over the whole atlas by pushforward.
GlobalField make_global(const Atlas& atlas, const ChartVectorField& anchor_rep);

// Definition check: polynomial representatives, pairwise pushforward
// compatible.
bool is_global(const Atlas& atlas, const GlobalField& f);

// Flattens polynomial chart fields into exact coordinate vectors over the
// union of their supports, for span and membership computations. Register
// every field first, then vectorize.
class FieldVectorizer {
public:
    void add_support(const ChartVectorField& v);
    int dimension() const { return static_cast<int>(index_.size()); }
    std::vector<Rational> vectorize(const ChartVectorField& v) const;

private:
    using Key = std::tuple<int, int, SuperMonomial>;  // (direction parity, direction, monomial)
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    std::map<Key, int, KeyLess> index_;
};

enum class ProjectStatus { Projected, Vertical, NotProjectable };

struct ProjectResult {
    ProjectStatus status = ProjectStatus::NotProjectable;
    std::string why;                  // set for NotProjectable
    std::optional<GlobalField> base;  // set for Projected (nonzero projection)
};

// Bundle projection onto the first flag step: drop all fiber coordinates.
// The field projects when the base-coordinate coefficients depend only on
// base variables, consistently across charts over the same base chart.
ProjectResult project(const Atlas& flag_atlas, const Atlas& base_atlas, const GlobalField& v);

}  // namespace piflag
