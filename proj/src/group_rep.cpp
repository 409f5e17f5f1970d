#include "crepant/group_rep.hpp"

#include <vector>

namespace crepant {
namespace {

using Poly = std::vector<Int>;  // coefficients, low degree first

// Quotient of exact polynomial division (monic or not, remainder must be 0).
Poly exact_divide(const Poly& num, const Poly& den) {
    const size_t dd = den.size() - 1;
    if (num.size() <= dd) throw std::logic_error("exact_divide: degree too small");
    Poly rem = num;
    Poly quot(num.size() - dd, Int(0));
    for (size_t i = rem.size() - 1; i + 1 > dd; --i) {
        Int q = rem[i] / den[dd];
        if (q * den[dd] != rem[i]) throw std::logic_error("exact_divide: inexact");
        quot[i - dd] = q;
        for (size_t s = 0; s <= dd; ++s) rem[i - dd + s] -= q * den[s];
        if (i == dd) break;
    }
    for (const Int& c : rem)
        if (c != 0) throw std::logic_error("exact_divide: nonzero remainder");
    return quot;
}

// d-th cyclotomic polynomial, by dividing x^d - 1 by the proper-divisor ones.
Poly cyclotomic_polynomial(int d) {
    Poly num(static_cast<size_t>(d) + 1, Int(0));
    num[0] = -1;
    num[static_cast<size_t>(d)] = 1;
    for (int e = 1; e < d; ++e)
        if (d % e == 0) num = exact_divide(num, cyclotomic_polynomial(e));
    return num;
}

// Elements of Z[zeta_d] as integer vectors over 1, x, ..., x^{phi(d)-1}
// modulo Phi_d(x). Phi_d is monic, so reduction stays integral.
class CyclotomicRing {
public:
    explicit CyclotomicRing(int d) : d_(d), phi_(cyclotomic_polynomial(d)) {
        deg_ = static_cast<int>(phi_.size()) - 1;
        powers_.resize(static_cast<size_t>(d));
        for (int e = 0; e < d; ++e) {
            Poly p(static_cast<size_t>(e) + 1, Int(0));
            p[static_cast<size_t>(e)] = 1;
            powers_[static_cast<size_t>(e)] = reduce(std::move(p));
        }
    }

    using Elem = std::vector<Int>;  // length deg_

    Elem zero() const { return Elem(static_cast<size_t>(deg_), Int(0)); }
    /// zeta^e, e taken mod d.
    const Elem& root_power(int e) const { return powers_[static_cast<size_t>(((e % d_) + d_) % d_)]; }

    Elem mul(const Elem& a, const Elem& b) const {
        Poly conv(static_cast<size_t>(2 * deg_ - 1), Int(0));
        for (int i = 0; i < deg_; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < deg_; ++j)
                conv[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        }
        return reduce(std::move(conv));
    }

    void add_in_place(Elem& a, const Elem& b) const {
        for (int i = 0; i < deg_; ++i) a[static_cast<size_t>(i)] += b[static_cast<size_t>(i)];
    }

private:
    Elem reduce(Poly p) const {
        for (size_t i = p.size(); i-- > static_cast<size_t>(deg_);) {
            Int c = p[i];
            if (c == 0) continue;
            // p -= c * x^{i-deg} * Phi  (Phi monic of degree deg_)
            for (size_t s = 0; s < phi_.size(); ++s) p[i - static_cast<size_t>(deg_) + s] -= c * phi_[s];
        }
        p.resize(static_cast<size_t>(deg_), Int(0));
        return p;
    }

    int d_;
    Poly phi_;
    int deg_;
    std::vector<Elem> powers_;
};

void check_inputs(const CyclicAction& action, const Character& chi, int N) {
    if (chi.d != action.d) throw std::invalid_argument("character modulus must equal group order");
    if (N < 0) throw std::invalid_argument("truncation must be >= 0");
}

}  // namespace

HilbertSeries covariant_hilbert(const CyclicAction& action, const Character& chi, int N) {
    check_inputs(action, chi, N);
    const int d = action.d;
    // dp[k][r]: monomials of degree k in the variables processed so far
    // whose weighted degree is r mod d.
    std::vector<std::vector<Int>> dp(static_cast<size_t>(N) + 1,
                                     std::vector<Int>(static_cast<size_t>(d), Int(0)));
    dp[0][0] = 1;
    for (int w : action.weights) {
        std::vector<std::vector<Int>> next(static_cast<size_t>(N) + 1,
                                           std::vector<Int>(static_cast<size_t>(d), Int(0)));
        for (int k = 0; k <= N; ++k)
            for (int r = 0; r < d; ++r) {
                if (dp[static_cast<size_t>(k)][static_cast<size_t>(r)] == 0) continue;
                for (int a = 0; k + a <= N; ++a)
                    next[static_cast<size_t>(k + a)][static_cast<size_t>((r + a * w) % d)] +=
                        dp[static_cast<size_t>(k)][static_cast<size_t>(r)];
            }
        dp = std::move(next);
    }
    HilbertSeries out(N);
    for (int k = 0; k <= N; ++k) out[k] = dp[static_cast<size_t>(k)][static_cast<size_t>(chi.index)];
    return out;
}

HilbertSeries molien_series(const CyclicAction& action, const Character& chi, int N) {
    check_inputs(action, chi, N);
    const int d = action.d;
    CyclotomicRing ring(d);

    // (1/d) sum_j zeta^{-j chi} prod_i (1 - zeta^{j w_i} t)^{-1}, truncated at N.
    std::vector<CyclotomicRing::Elem> total(static_cast<size_t>(N) + 1, ring.zero());
    for (int j = 0; j < d; ++j) {
        std::vector<CyclotomicRing::Elem> series(static_cast<size_t>(N) + 1, ring.zero());
        series[0][0] = 1;
        for (int w : action.weights) {
            // multiply by sum_m zeta^{j w m} t^m
            std::vector<CyclotomicRing::Elem> next(static_cast<size_t>(N) + 1, ring.zero());
            for (int k = 0; k <= N; ++k)
                for (int m = 0; k + m <= N; ++m)
                    ring.add_in_place(next[static_cast<size_t>(k + m)],
                                      ring.mul(series[static_cast<size_t>(k)], ring.root_power(j * w * m)));
            series = std::move(next);
        }
        const auto& prefactor = ring.root_power(-j * chi.index);
        for (int k = 0; k <= N; ++k)
            ring.add_in_place(total[static_cast<size_t>(k)],
                              ring.mul(prefactor, series[static_cast<size_t>(k)]));
    }

    HilbertSeries out(N);
    for (int k = 0; k <= N; ++k) {
        const auto& elem = total[static_cast<size_t>(k)];
        for (size_t i = 1; i < elem.size(); ++i)
            if (elem[i] != 0) throw std::logic_error("molien_series: non-rational cyclotomic result");
        Int c = elem[0] / d;
        if (c * d != elem[0]) throw std::logic_error("molien_series: average not divisible by d");
        out[k] = c;
    }
    return out;
}

Character det_character(const CyclicAction& action) {
    int sum = 0;
    for (int w : action.weights) sum = (sum + w) % action.d;
    return Character(action.d, sum);
}

bool has_pseudo_reflection(const CyclicAction& action) {
    const int d = action.d;
    for (int j = 1; j < d; ++j) {
        int moved = 0;
        for (int w : action.weights)
            if ((j * w) % d != 0) ++moved;
        if (moved == 1) return true;
    }
    return false;
}

GorensteinCertificate is_gorenstein(const CyclicAction& action) {
    GorensteinCertificate cert;
    cert.weight_sum_mod_d = det_character(action).index;
    cert.has_pseudo_reflection = has_pseudo_reflection(action);
    if (action.is_scalar()) {
        cert.branch = GorensteinCertificate::Branch::ScalarCase;
        cert.gorenstein = action.n() % action.d == 0;
        cert.note = "scalar action: Gorenstein iff d divides n";
    } else {
        cert.branch = GorensteinCertificate::Branch::DeterminantCharacter;
        cert.gorenstein = cert.weight_sum_mod_d == 0;
        cert.note = "general diagonal action: determinant-character criterion, extrapolated, not from paper";
        if (cert.has_pseudo_reflection)
            cert.note += "; pseudo-reflection present, criterion not claimed valid";
    }
    return cert;
}

}  // namespace crepant
