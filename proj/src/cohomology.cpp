#include "crepant/cohomology.hpp"

#include <functional>
#include <vector>

#include "crepant/numeric.hpp"

namespace crepant {

IntVector bott_cohomology(const ProjSpace& P, const LineBundle& L) {
    const int n = P.n;
    IntVector h = IntVector::Zero(n);
    if (n == 1) {  // P^0 is a point; O(k) is trivial
        h[0] = 1;
        return h;
    }
    const int k = L.twist;
    if (k >= 0) h[0] = binomial(static_cast<long long>(k) + n - 1, n - 1);
    if (k <= -n) h[n - 1] = binomial(static_cast<long long>(-k) - 1, n - 1);
    return h;
}

namespace {

// Cohomology of the Cech complex restricted to one Laurent multidegree.
// Basis of C^p: subsets S of the n charts, |S| = p + 1, S containing every
// index with negative exponent. Differentials have entries 0, +-1; ranks
// are computed exactly.
IntVector per_multidegree_cohomology(int n, unsigned neg_mask) {
    std::vector<std::vector<unsigned>> basis(static_cast<size_t>(n));
    for (unsigned s = 1; s < (1u << n); ++s)
        if ((s & neg_mask) == neg_mask)
            basis[static_cast<size_t>(__builtin_popcount(s)) - 1].push_back(s);

    auto differential = [&](int p) -> IntMatrix {
        // C^p -> C^{p+1}
        if (p < 0 || p + 1 >= n) return IntMatrix::Zero(0, 0);
        const auto& dom = basis[static_cast<size_t>(p)];
        const auto& cod = basis[static_cast<size_t>(p) + 1];
        IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(cod.size()),
                                      static_cast<Eigen::Index>(dom.size()));
        for (size_t r = 0; r < cod.size(); ++r) {
            int pos = 0;
            for (int i = 0; i < n; ++i) {
                if (!(cod[r] & (1u << i))) continue;
                unsigned without = cod[r] & ~(1u << i);
                if ((without & neg_mask) == neg_mask) {
                    for (size_t c = 0; c < dom.size(); ++c)
                        if (dom[c] == without) m(static_cast<Eigen::Index>(r),
                                                 static_cast<Eigen::Index>(c)) = (pos % 2 == 0) ? 1 : -1;
                }
                ++pos;
            }
        }
        return m;
    };

    IntVector h = IntVector::Zero(n);
    int prev_rank = 0;
    for (int p = 0; p < n; ++p) {
        int rank = integer_rank(differential(p));
        h[p] = static_cast<long long>(basis[static_cast<size_t>(p)].size()) - rank - prev_rank;
        prev_rank = rank;
    }
    return h;
}

}  // namespace

IntVector cech_cohomology_oracle(const ProjSpace& P, const LineBundle& L,
                                 const CechOptions& opts) {
    const int n = P.n;
    const int k = L.twist;
    if (n == 1) {
        IntVector h = IntVector::Zero(1);
        h[0] = 1;
        return h;
    }

    // Exponent window: a_i >= -W. Every multidegree with all-nonnegative or
    // all-negative exponents and total k fits once W > |k|.
    const int W = std::abs(k) + 1;
    Int total = binomial(static_cast<long long>(k) + static_cast<long long>(n) * W + n - 1, n - 1);
    if (total > opts.max_multidegrees)
        throw resource_limit_error("cech_cohomology_oracle: monomial window too large");

    // The complex splits over Laurent multidegrees, and the per-degree piece
    // depends only on which exponents are negative. Tally multidegrees per
    // negativity pattern, then compute each pattern's complex once.
    std::vector<long long> pattern_count(1u << n, 0);
    std::vector<int> expo(static_cast<size_t>(n));
    std::function<void(int, int)> enumerate = [&](int idx, int remaining) {
        if (idx == n - 1) {
            if (remaining < -W) return;
            expo[static_cast<size_t>(idx)] = remaining;
            unsigned mask = 0;
            for (int i = 0; i < n; ++i)
                if (expo[static_cast<size_t>(i)] < 0) mask |= 1u << i;
            ++pattern_count[mask];
            return;
        }
        for (int a = -W; a <= remaining + W * (n - 1 - idx); ++a) {
            expo[static_cast<size_t>(idx)] = a;
            enumerate(idx + 1, remaining - a);
        }
    };
    enumerate(0, k);

    IntVector h = IntVector::Zero(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (pattern_count[mask] == 0) continue;
        h += Int(pattern_count[mask]) * per_multidegree_cohomology(n, mask);
    }
    return h;
}

CohomologyTable total_space_cohomology(const TotalSpaceBundle& B, int M) {
    if (M < 0) throw std::invalid_argument("total_space_cohomology: M must be >= 0");
    CohomologyTable table;
    table.n = B.n;
    table.max_fiber_degree = M;
    table.dims = IntMatrix::Zero(B.n, M + 1);
    const ProjSpace P(B.n);
    for (int m = 0; m <= M; ++m)
        table.dims.col(m) = bott_cohomology(P, LineBundle{B.twist + m * B.d});
    return table;
}

PushforwardVanishing pushforward_vanishing(int n, int d, int j) {
    if (n < 1 || d < 1) throw std::invalid_argument("pushforward_vanishing: need n, d >= 1");
    PushforwardVanishing out;
    // h^i(O(j + m d)) for i > 0 reduces to h^{n-1}, nonzero only when
    // j + m d <= -n; since d >= 1 the degree grows with m, so m = 0 is the
    // only candidate.
    if (n == 1 || j > -n) {
        out.vanishes = true;
        return out;
    }
    out.vanishes = false;
    out.witness_i = n - 1;
    out.witness_m = 0;
    return out;
}

}  // namespace crepant
