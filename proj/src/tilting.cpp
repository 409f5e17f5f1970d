#include "crepant/tilting.hpp"

#include <sstream>

#include "crepant/cohomology.hpp"
#include "crepant/group_rep.hpp"

namespace crepant {

namespace {

void require_divisor(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("need n, d >= 1");
    if (n % d != 0)
        throw std::invalid_argument("d must divide n (Gorenstein hypothesis for the scalar action)");
}

void check_pair(int d, const Character& a, const Character& b, int M) {
    if (a.d != d || b.d != d) throw std::invalid_argument("character modulus must equal d");
    if (M < 0) throw std::invalid_argument("truncation must be >= 0");
}

}  // namespace

std::vector<DescentDatum> descent_line_bundles(int n, int d) {
    require_divisor(n, d);
    std::vector<DescentDatum> data;
    data.reserve(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) data.push_back({Character(d, j), -j});
    return data;
}

HilbertSeries hom_hilbert(int n, int d, const Character& a, const Character& b, int M) {
    if (n < 2 || d < 1) throw std::invalid_argument("need n >= 2, d >= 1");
    check_pair(d, a, b, M);
    const ProjSpace P(n);
    HilbertSeries out(M);
    for (int m = 0; m <= M; ++m)
        out[m] = bott_cohomology(P, LineBundle{a.index - b.index + m * d})[0];
    return out;
}

HilbertSeries skew_hom_hilbert(int n, int d, const Character& a, const Character& b, int M) {
    if (n < 1 || d < 1) throw std::invalid_argument("need n, d >= 1");
    check_pair(d, a, b, M);
    HilbertSeries out(M);
    const CyclicAction scalar = CyclicAction::scalar(d, n);
    for (int m = 0; m <= M; ++m) {
        const int degree = a.index - b.index + m * d;
        if (degree < 0) continue;
        // monomials of degree k all have weighted degree k under the scalar
        // action, so the covariant count at chi_{k mod d} is the full count
        out[m] = covariant_hilbert(scalar, Character(d, degree), degree)[degree];
    }
    return out;
}

TiltingReport tilting_check(int n, int d, int M) {
    require_divisor(n, d);
    if (M < 0) throw std::invalid_argument("truncation must be >= 0");
    TiltingReport report;
    report.n = n;
    report.d = d;
    report.truncation = M;

    report.ext_vanishing = true;
    report.hilbert_match = true;
    for (int a = 0; a < d && (report.ext_vanishing || report.hilbert_match); ++a) {
        for (int b = 0; b < d; ++b) {
            auto vanish = pushforward_vanishing(n, d, a - b);
            if (!vanish.vanishes && report.ext_vanishing) {
                report.ext_vanishing = false;
                std::ostringstream ss;
                ss << "H^" << vanish.witness_i << "(Xtilde, t*O(" << a - b << ")) != 0 at fiber degree "
                   << vanish.witness_m;
                report.ext_witness = ss.str();
            }
            const Character ca(d, a), cb(d, b);
            const HilbertSeries geometric = hom_hilbert(n, d, ca, cb, M);
            const HilbertSeries algebraic = skew_hom_hilbert(n, d, ca, cb, M);
            for (int m = 0; m <= M; ++m) {
                if (geometric[m] == algebraic[m]) continue;
                if (report.hilbert_match) {
                    report.hilbert_match = false;
                    std::ostringstream ss;
                    ss << "(a=" << a << ", b=" << b << ", m=" << m << "): geometric " << geometric[m]
                       << " vs skew " << algebraic[m];
                    report.hilbert_witness = ss.str();
                }
                break;
            }
        }
    }

    report.summands = d;
    report.k0_rank = d;  // rank of the representation ring of Z/d
    report.k0_generation = report.summands == report.k0_rank;
    return report;
}

}  // namespace crepant
