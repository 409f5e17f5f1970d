#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace crepant {

/// Exact arbitrary-precision integer; every dimension count in this
/// library is one of these, never a float.
using Int = boost::multiprecision::cpp_int;

using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact element-wise equality (Eigen's operator== is coefficient-wise).
template <typename A, typename B>
bool same(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

template <typename A>
bool all_zero(const Eigen::MatrixBase<A>& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != 0) return false;
    return true;
}

/// Character chi_j of Z/d, j taken mod d. chi_0 is trivial.
struct Character {
    int d = 1;
    int index = 0;

    Character() = default;
    Character(int d_, int index_) : d(d_) {
        if (d < 1) throw std::invalid_argument("Character: d must be >= 1");
        index = ((index_ % d) + d) % d;
    }

    Character operator+(const Character& o) const {
        if (o.d != d) throw std::invalid_argument("Character: mixed moduli");
        return Character(d, index + o.index);
    }
    Character operator-() const { return Character(d, -index); }
    bool trivial() const { return index == 0; }
    bool operator==(const Character& o) const = default;
};

/// Diagonal action of Z/d on C^n: the generator scales x_i by zeta^{w_i},
/// zeta a primitive d-th root of unity. Weights stored in [0, d).
struct CyclicAction {
    int d = 1;
    std::vector<int> weights;

    CyclicAction() = default;
    CyclicAction(int d_, std::vector<int> w) : d(d_), weights(std::move(w)) {
        if (d < 1) throw std::invalid_argument("CyclicAction: d must be >= 1");
        if (weights.empty()) throw std::invalid_argument("CyclicAction: need n >= 1 weights");
        for (auto& wi : weights) wi = ((wi % d) + d) % d;
    }

    int n() const { return static_cast<int>(weights.size()); }

    /// All weights congruent to 1 mod d (the scalar action zeta * Id).
    bool is_scalar() const {
        for (int w : weights)
            if (w != 1 % d) return false;
        return true;
    }

    /// The scalar action of Z/d on C^n.
    static CyclicAction scalar(int d, int n) {
        return CyclicAction(d, std::vector<int>(static_cast<size_t>(n), 1));
    }
};

/// Truncated graded dimension sequence c_0..c_N. The truncation bound is
/// always carried with the data; nothing downstream invents one.
struct HilbertSeries {
    IntVector coefficients;  // length truncation + 1
    int truncation = 0;

    HilbertSeries() : coefficients(IntVector::Zero(1)) {}
    explicit HilbertSeries(int N) : coefficients(IntVector::Zero(N + 1)), truncation(N) {
        if (N < 0) throw std::invalid_argument("HilbertSeries: N must be >= 0");
    }

    const Int& operator[](int k) const { return coefficients[k]; }
    Int& operator[](int k) { return coefficients[k]; }

    bool operator==(const HilbertSeries& o) const {
        return truncation == o.truncation && same(coefficients, o.coefficients);
    }
};

}  // namespace crepant
