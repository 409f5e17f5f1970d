#pragma once

#include <string>

#include "crepant/types.hpp"

namespace crepant {

/// Outcome of the Gorenstein test, recording which criterion fired and the
/// data it was decided on.
struct GorensteinCertificate {
    bool gorenstein = false;
    enum class Branch { ScalarCase, DeterminantCharacter } branch = Branch::ScalarCase;
    int weight_sum_mod_d = 0;
    /// Some nontrivial group element fixes a hyperplane; the determinant
    /// criterion is not claimed valid in that case.
    bool has_pseudo_reflection = false;
    std::string note;
};

/// c_k = number of monomials x^a of total degree k with sum a_i w_i == chi
/// (mod d). For chi = chi_0 this is the Hilbert series of the invariant
/// ring of C^n / (Z/d).
HilbertSeries covariant_hilbert(const CyclicAction& action, const Character& chi, int N);

/// Same series computed by the Molien average over group elements, with
/// exact cyclotomic integer arithmetic (Z[x] mod the d-th cyclotomic
/// polynomial). Independent of covariant_hilbert; the two must agree.
HilbertSeries molien_series(const CyclicAction& action, const Character& chi, int N);

/// Character of the induced action on the volume form: chi_{sum w_i mod d}.
/// Trivial iff the action lies in SL(V).
Character det_character(const CyclicAction& action);

/// True iff some nontrivial element acts as a pseudo-reflection (fixes a
/// hyperplane): some j != 0 with j*w_i == 0 mod d for all but one i.
bool has_pseudo_reflection(const CyclicAction& action);

/// Gorenstein test. Scalar case: d | n. General diagonal case: trivial
/// determinant character; the certificate flags that branch as extrapolated
/// beyond the scalar statement and records any pseudo-reflection.
GorensteinCertificate is_gorenstein(const CyclicAction& action);

}  // namespace crepant
