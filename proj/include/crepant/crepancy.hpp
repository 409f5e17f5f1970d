#pragma once

#include <string>
#include <vector>

#include "crepant/types.hpp"

namespace crepant {

/// Discrepancy a of the exceptional divisor in K_Xtilde = q*K_X + a E,
/// as an exact rational with the two-line derivation recorded.
struct DiscrepancyResult {
    long long numerator = 0;
    long long denominator = 1;  // always > 0, fraction reduced
    bool gorenstein_hypothesis = false;  // d | n
    std::vector<std::string> trace;

    bool integral() const { return denominator == 1; }
    bool crepant() const { return numerator == 0; }
};

/// omega_Xtilde = t*O(d - n) by adjunction on the total space of O(-d);
/// returns the twist d - n. Trivial iff d = n.
int canonical_of_total_space(int n, int d);

/// a = n/d - 1 when d | n, from t*O(d-n) = O_Xtilde((n/d - 1) E) with
/// O_Xtilde(E) = t*O(-d). For d not dividing n the fractional value
/// (n-d)/d is still computed and flagged non-Gorenstein.
DiscrepancyResult discrepancy(int n, int d);

/// Equivariant local triviality of the dualizing bundle, which for a
/// diagonal linear action reduces to triviality of the determinant
/// character.
bool weak_crepancy_hypothesis(const CyclicAction& action);

/// Canonical-bundle summary for the scalar action of Z/d on C^n.
/// Invariant: crepant_blowup iff discrepancy 0 iff d = n (when Gorenstein).
struct CanonicalReport {
    int omega_total_space_twist = 0;
    DiscrepancyResult discrepancy;
    bool gorenstein = false;
    bool crepant_blowup = false;
    bool equivariantly_trivial_canonical = false;
};

CanonicalReport canonical_report(int n, int d);

}  // namespace crepant
