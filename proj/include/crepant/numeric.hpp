#pragma once

#include <stdexcept>

#include "crepant/types.hpp"

namespace crepant {

/// C(top, r) for top >= 0; zero when top < r or r < 0.
inline Int binomial(long long top, int r) {
    if (r < 0 || top < 0 || top < r) return 0;
    Int acc = 1;
    for (int s = 1; s <= r; ++s) {
        acc *= top - r + s;
        acc /= s;  // exact: product of s consecutive integers
    }
    return acc;
}

/// C(t + r, r) evaluated as a polynomial in t, valid for any integer t
/// (signed binomial): prod_{s=1}^{r} (t + s) / r!.
inline Int polynomial_binomial(long long t, int r) {
    if (r < 0) return 0;
    Int num = 1;
    for (int s = 1; s <= r; ++s) num *= t + s;
    Int den = 1;
    for (int s = 2; s <= r; ++s) den *= s;
    Int q = num / den;
    if (q * den != num) throw std::logic_error("polynomial_binomial: inexact division");
    return q;
}

/// Exact rank over Q of an integer matrix, by fraction-free (Bareiss-style)
/// elimination. The input is taken by value and destroyed.
inline int integer_rank(IntMatrix m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    int rank = 0;
    Int prev_pivot = 1;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = row; r < rows; ++r)
            if (m(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        const Int pivot = m(row, col);
        for (Eigen::Index r = row + 1; r < rows; ++r) {
            for (Eigen::Index c = col + 1; c < cols; ++c)
                m(r, c) = (pivot * m(r, c) - m(r, col) * m(row, c)) / prev_pivot;
            m(r, col) = 0;
        }
        prev_pivot = pivot;
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace crepant
