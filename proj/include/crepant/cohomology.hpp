#pragma once

#include <optional>

#include "crepant/types.hpp"

namespace crepant {

/// P^{n-1}; n is stored (not the dimension) to keep every formula in terms
/// of the same n as the ambient C^n.
struct ProjSpace {
    int n = 2;
    explicit ProjSpace(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("ProjSpace: n must be >= 1");
    }
    int dim() const { return n - 1; }
};

/// O_{P^{n-1}}(k).
struct LineBundle {
    int twist = 0;
};

/// t*O_{P^{n-1}}(j) on the total space of t : O_{P^{n-1}}(-d) -> P^{n-1}.
struct TotalSpaceBundle {
    int n = 2;
    int d = 1;
    int twist = 0;
    TotalSpaceBundle(int n_, int d_, int j) : n(n_), d(d_), twist(j) {
        if (n < 2 || d < 1) throw std::invalid_argument("TotalSpaceBundle: need n >= 2, d >= 1");
    }
};

/// Entry (i, m): cohomological degree i, fiber degree m. Fiber degree m
/// counts symmetric powers of the dual of O(-d), so t_* t*O(j) =
/// sum_{m>=0} O(j + m d); that convention is fixed here and shared by every
/// module.
struct CohomologyTable {
    IntMatrix dims;  // rows i = 0..n-1, cols m = 0..M
    int n = 2;
    int max_fiber_degree = 0;

    const Int& operator()(int i, int m) const { return dims(i, m); }
};

struct PushforwardVanishing {
    bool vanishes = false;
    // smallest offending (i, m) when not
    int witness_i = -1;
    int witness_m = -1;
};

struct CechOptions {
    // enumerated Laurent multidegrees beyond this raise resource_limit_error
    long long max_multidegrees = 2'000'000;
};

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// h^0..h^{n-1} of O(k) on P^{n-1}, closed form: only h^0 (k >= 0) and
/// h^{n-1} (k <= -n) can be nonzero.
IntVector bott_cohomology(const ProjSpace& P, const LineBundle& L);

/// Same dimensions from the Cech complex on the n coordinate charts,
/// computed as exact integer ranks of the Cech differentials on Laurent
/// monomial bases. Independent of the closed form. Practical for n <= 5,
/// |k| <= 12 or so.
IntVector cech_cohomology_oracle(const ProjSpace& P, const LineBundle& L,
                                 const CechOptions& opts = {});

/// (i, m) entry = h^i(P^{n-1}, O(j + m d)): the fiber-degree-m graded piece
/// of H^i(Xtilde, t*O(j)).
CohomologyTable total_space_cohomology(const TotalSpaceBundle& B, int M);

/// True iff h^i(P^{n-1}, O(j + m d)) = 0 for all i > 0 and all m >= 0.
/// Exact (no truncation): only h^{n-1} can obstruct and only at m = 0.
PushforwardVanishing pushforward_vanishing(int n, int d, int j);

}  // namespace crepant
