#include "piflag/bwb.hpp"

#include <stdexcept>

namespace piflag {

bool is_dominant(const Weight& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

WeightMultiset wedge_weights(int n, int k, int p) {
    if (k <= 0 || k >= n) throw std::invalid_argument("wedge_weights: need 0 < k < n");
    const int cells = (n - k) * k;
    if (p < 0 || p > cells) throw std::invalid_argument("wedge_weights: p out of range");
    WeightMultiset out;
    // iterate over p-element subsets of the grid
    std::vector<int> subset(p);
    for (int i = 0; i < p; ++i) subset[i] = i;
    if (p == 0) {
        out[Weight(n, 0)] = 1;
        return out;
    }
    for (;;) {
        Weight w(n, 0);
        for (int cell : subset) {
            const int i = cell / k;          // 0-based row in 1..n-k
            const int j = cell % k;          // 0-based column in 1..k
            w[i] -= 1;
            w[n - k + j] += 1;
        }
        out[w] += 1;
        int i = p - 1;
        while (i >= 0 && subset[i] == cells - (p - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < p; ++j) subset[j] = subset[j - 1] + 1;
    }
    return out;
}

H0Result h0_wedge_dimension(int n, int k, int p) {
    H0Result res;
    if (p == 0) {
        res.dim = 1;  // Weyl dimension of the zero weight
        return res;
    }
    const WeightMultiset ws = wedge_weights(n, k, p);
    for (const auto& [w, mult] : ws) {
        if (is_dominant(w)) {
            res.needs_decomposition = true;
            return res;
        }
    }
    res.dim = 0;
    return res;
}

WeightMultiset psi_highest_weights(int n, int k1, bool exceptional) {
    if (k1 < 1 || k1 >= n) throw std::invalid_argument("psi_highest_weights: need 1 <= k1 < n");
    WeightMultiset out;
    const Weight zero(n, 0);
    if (k1 >= 2) {
        Weight ad(n, 0);
        ad[n - k1] = 1;  // mu_{n-k1+1}
        ad[n - 1] = -1;  // -mu_n
        out[ad] = 2;
    }
    out[zero] += exceptional ? 2 : 1;
    return out;
}

Int weyl_dim(const Weight& w) {
    if (!is_dominant(w)) throw std::invalid_argument("weyl_dim: weight not dominant");
    const int n = static_cast<int>(w.size());
    Rational prod(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            prod *= Rational(w[i] - w[j] + j - i, j - i);
    if (denominator(prod) != 1) throw std::logic_error("weyl_dim: non-integral result");
    return numerator(prod);
}

std::pair<Int, Int> w0_sections(int n, int k1, bool exceptional) {
    // per-parity split: even part carries the adjoint (plus a trivial factor
    // in the exceptional case), odd part carries adjoint + trivial
    auto sum_dominant = [n](const WeightMultiset& ws) {
        Int total = 0;
        for (const auto& [w, mult] : ws)
            if (is_dominant(w)) total += weyl_dim(w) * mult;
        return total;
    };
    WeightMultiset even_part, odd_part;
    const Weight zero(n, 0);
    if (k1 >= 2) {
        Weight ad(n, 0);
        ad[n - k1] = 1;
        ad[n - 1] = -1;
        even_part[ad] = 1;
        odd_part[ad] = 1;
    }
    if (exceptional) even_part[zero] += 1;
    odd_part[zero] += 1;
    return {sum_dominant(even_part), sum_dominant(odd_part)};
}

DominanceScan scan_wedge_dominance(int n, int k, int p) {
    DominanceScan s;
    s.n = n;
    s.k = k;
    s.p = p;
    for (const auto& [w, mult] : wedge_weights(n, k, p)) {
        s.total_weights += mult;
        if (is_dominant(w)) s.dominant_count += mult;
    }
    return s;
}

}  // namespace piflag
