#pragma once

#include "piflag/qn.hpp"

namespace piflag {

// Ansatz monomial pool on one chart: every even monomial of degree <= D
// times every odd generator subset.
std::vector<SuperMonomial> ansatz_pool(const Chart& chart, int degree);

// Global holomorphic functions of bounded anchor degree, by polynomial
// ansatz and exact elimination of the polynomiality constraints on every
// other chart.
struct FunctionsResult {
    int degree = 0;
    int anchor = 0;
    std::vector<SuperPolynomial> basis;  // anchor-chart representatives
    bool stable = false;                 // dimension unchanged at degree + 1
};
FunctionsResult global_functions(const Atlas& atlas, int degree, int anchor = 0);

// Structure constants of the bracket on the solver basis, even fields
// listed before odd ones.
struct StructureConstants {
    std::vector<std::vector<std::vector<Rational>>> c;  // c[i][j] = coords of [b_i, b_j]
    bool closed = false;
};

struct GradedBasis {
    int anchor = 0;
    int degree = 0;
    std::vector<GlobalField> even_fields, odd_fields;
    StructureConstants sc;
    bool stable = false;

    int even_dim() const { return static_cast<int>(even_fields.size()); }
    int odd_dim() const { return static_cast<int>(odd_fields.size()); }
    int total_dim() const { return even_dim() + odd_dim(); }
    const GlobalField& field(int i) const {  // combined index, evens first
        return i < even_dim() ? even_fields[i] : odd_fields[i - even_dim()];
    }
};

GradedBasis global_fields(const Atlas& atlas, int degree, int anchor = 0);

// Global fields with zero projection onto the first-step base (r > 1 only).
std::vector<GlobalField> vertical_fields(const Atlas& atlas, const GradedBasis& basis);
std::vector<GlobalField> vertical_fields(const Atlas& atlas, int degree);

struct ComparisonReport {
    bool exceptional = false;
    std::pair<int, int> solver_dims{0, 0};
    std::pair<int, int> expected_dims{0, 0};
    bool dims_match = false;
    int kernel_dim = 0;
    bool kernel_is_identity_line = false;
    bool mu_image_contained = false;  // every fundamental field lies in the solver span
    int mu_image_rank = 0;
    int codim = 0;
    bool isomorphic = false;
    // exceptional structure (set when exceptional):
    bool z_is_global = false;
    bool z_outside_mu_image = false;
    bool z_completes_basis = false;  // mu-image + <z> = solver span
    bool g0_g1_commute = false;
    bool d_maps_gm1_onto_g0 = false;
    bool z_grading_ok = false;  // ad_z eigenvalues -1, 0, 1 with dims 3|3|1
    bool structure_confirmed = false;
};

ComparisonReport compare_with_qn(const Atlas& atlas, const GradedBasis& basis);

// The grading field xi d/dxi of the exceptional super-Grassmannian, written
// on the given chart of PiGr_{2|2,1|1}.
GlobalField exceptional_z(const Atlas& atlas, int anchor = 0);

// Default ansatz degrees: 2 for super-Grassmannians, 3 for two-step flags.
int default_field_degree(const FlagType& f);

}  // namespace piflag
