#include "crepant/crepancy.hpp"

#include <numeric>
#include <sstream>

#include "crepant/group_rep.hpp"

namespace crepant {

int canonical_of_total_space(int n, int d) {
    if (n < 2 || d < 1) throw std::invalid_argument("need n >= 2, d >= 1");
    return d - n;
}

DiscrepancyResult discrepancy(int n, int d) {
    const int omega_twist = canonical_of_total_space(n, d);
    DiscrepancyResult result;
    result.gorenstein_hypothesis = n % d == 0;

    const long long g = std::gcd(static_cast<long long>(n - d), static_cast<long long>(d));
    result.numerator = (n - d) / (g == 0 ? 1 : g);
    result.denominator = d / (g == 0 ? 1 : g);
    if (n == d) { result.numerator = 0; result.denominator = 1; }

    std::ostringstream l1, l2, l3;
    l1 << "omega_Xtilde = t*O(d - n) = t*O(" << omega_twist << ")";
    l2 << "O_Xtilde(E) = t*O(-d) = t*O(" << -d << ")";
    l3 << "K_Xtilde - q*K_X = a E with a = (n - d)/d = " << result.numerator;
    if (!result.integral()) l3 << "/" << result.denominator << "  [fractional: non-Gorenstein, d does not divide n]";
    result.trace = {l1.str(), l2.str(), l3.str()};
    return result;
}

bool weak_crepancy_hypothesis(const CyclicAction& action) {
    return det_character(action).trivial();
}

CanonicalReport canonical_report(int n, int d) {
    CanonicalReport report;
    report.omega_total_space_twist = canonical_of_total_space(n, d);
    report.discrepancy = discrepancy(n, d);
    const CyclicAction action = CyclicAction::scalar(d, n);
    report.gorenstein = is_gorenstein(action).gorenstein;
    report.crepant_blowup = report.discrepancy.crepant() && report.gorenstein;
    report.equivariantly_trivial_canonical = weak_crepancy_hypothesis(action);
    return report;
}

}  // namespace crepant
