#pragma once

#include <string>
#include <vector>

#include "crepant/types.hpp"

namespace crepant {

/// chi_j descends to the pullback line bundle t*O(image_twist) on the
/// blow-up total space; image_twist = -j in the range (-d, 0].
struct DescentDatum {
    Character character;
    int image_twist = 0;
};

struct TiltingReport {
    int n = 0, d = 0, truncation = 0;

    bool ext_vanishing = false;
    std::string ext_witness;

    bool hilbert_match = false;
    std::string hilbert_witness;  // first mismatch, if any

    bool k0_generation = false;
    int summands = 0;
    int k0_rank = 0;  // rank of the representation ring of Z/d

    /// The reindexing fixed for the comparison: fiber degree m on the
    /// geometric side corresponds to polynomial degree a - b + m d on the
    /// skew-algebra side.
    std::string grading_note =
        "fiber degree m <-> polynomial degree a-b+m*d; "
        "checked: Ext-vanishing, graded-dimension match, K0 count (generation itself is not "
        "decidable from Hilbert series)";

    bool pass() const { return ext_vanishing && hilbert_match && k0_generation; }
};

/// The d characters of Z/d and the pullback bundles they descend to:
/// chi_j -> t*O(-j). Requires d | n (the standing Gorenstein hypothesis).
std::vector<DescentDatum> descent_line_bundles(int n, int d);

/// Graded dimensions of Hom(t*O(-a), t*O(-b)) on the total space:
/// coefficient at fiber degree m is h^0(P^{n-1}, O(a - b + m d)).
HilbertSeries hom_hilbert(int n, int d, const Character& a, const Character& b, int M);

/// Graded dimensions of the corresponding skew-group-algebra summand
/// e_b (Sym V # Z/d) e_a: coefficient at m counts monomials in n variables
/// of total degree a - b + m d. Computed through covariant counting, not
/// through cohomology; the two routes must agree.
HilbertSeries skew_hom_hilbert(int n, int d, const Character& a, const Character& b, int M);

/// The three finite shadows of the tilting property for the bundle
/// sum_j t*O(-j): Ext-vanishing, graded-dimension equality of the two
/// endomorphism algebras, and the K0 count.
TiltingReport tilting_check(int n, int d, int M);

}  // namespace crepant
