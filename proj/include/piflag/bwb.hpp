#pragma once

#include <map>
#include <optional>
#include <vector>

#include "piflag/rational.hpp"

namespace piflag {

// gl_n weight in the orthonormal mu-basis.
using Weight = std::vector<long long>;

// Weakly decreasing coordinates, i.e. nonnegative pairing with every
// positive root mu_i - mu_j (i < j).
bool is_dominant(const Weight& w);

using WeightMultiset = std::map<Weight, int>;

// Weights of Lambda^p(rho_1^* (x) rho_2) for gl_n with the (n-k) x k grid:
// each grid cell (i, j) contributes -mu_i + mu_{n-k+j}.
WeightMultiset wedge_weights(int n, int k, int p);

// H^0 dimension through the dominance filter alone: 1 for p = 0, 0 when no
// weight is dominant, NeedsDecomposition otherwise (general character
// decomposition is out of scope).
struct H0Result {
    std::optional<Int> dim;
    bool needs_decomposition = false;
};
H0Result h0_wedge_dimension(int n, int k, int p);

// Highest weights of the isotropy representation on the fiber fields: the
// adjoint of gl_{k1} embedded in the last k1 slots plus trivial summands.
// Non-exceptional fibers: adjoint twice and one trivial; exceptional fibers:
// adjoint twice and two trivials. For k1 = 1 the adjoint of sl_1 is the zero
// module and contributes nothing.
WeightMultiset psi_highest_weights(int n, int k1, bool exceptional);

// Weyl dimension formula for gl_n: prod_{i<j} (w_i - w_j + j - i)/(j - i).
Int weyl_dim(const Weight& w);

// Graded dimension (even, odd) of the degree-zero vertical sections via the
// dominance filter applied to the per-parity highest weights.
std::pair<Int, Int> w0_sections(int n, int k1, bool exceptional);

// Exhaustive dominance scan summary for reports.
struct DominanceScan {
    int n = 0, k = 0, p = 0;
    long long total_weights = 0;
    long long dominant_count = 0;
};
DominanceScan scan_wedge_dominance(int n, int k, int p);

}  // namespace piflag
