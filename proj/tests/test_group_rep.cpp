#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "crepant/group_rep.hpp"
#include "crepant/numeric.hpp"
#include "oracles.hpp"

using namespace crepant;

namespace {

IntVector series(std::initializer_list<long long> values) {
    IntVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (long long x : values) v[i++] = x;
    return v;
}

}  // namespace

TEST_CASE("covariant_hilbert matches direct monomial enumeration on the spec instances") {
    const CyclicAction a22(2, {1, 1});
    CHECK(same(covariant_hilbert(a22, Character(2, 0), 4).coefficients, series({1, 0, 3, 0, 5})));
    CHECK(same(covariant_hilbert(a22, Character(2, 1), 4).coefficients, series({0, 2, 0, 4, 0})));
    CHECK(same(covariant_hilbert(CyclicAction(1, {1}), Character(1, 0), 3).coefficients,
               series({1, 1, 1, 1})));

    // frozen values above were produced by the enumeration oracle
    CHECK(covariant_hilbert(a22, Character(2, 0), 4) ==
          oracles::enumerate_covariants(a22, Character(2, 0), 4));
    CHECK(covariant_hilbert(a22, Character(2, 1), 4) ==
          oracles::enumerate_covariants(a22, Character(2, 1), 4));
}

TEST_CASE("molien_series spec instances") {
    CHECK(same(molien_series(CyclicAction(2, {1, 1}), Character(2, 0), 4).coefficients,
               series({1, 0, 3, 0, 5})));
    CHECK(same(molien_series(CyclicAction(3, {1, 1, 1}), Character(3, 0), 6).coefficients,
               series({1, 0, 0, 10, 0, 0, 28})));
    CHECK(same(molien_series(CyclicAction(1, {1, 1}), Character(1, 0), 2).coefficients,
               series({1, 2, 3})));
}

TEST_CASE("molien average equals covariant count for mixed weights") {
    for (int d = 1; d <= 5; ++d) {
        const CyclicAction action(d, {1, 2, d - 1});
        for (int j = 0; j < d; ++j) {
            const Character chi(d, j);
            CHECK(molien_series(action, chi, 8) == covariant_hilbert(action, chi, 8));
            CHECK(covariant_hilbert(action, chi, 8) == oracles::enumerate_covariants(action, chi, 8));
        }
    }
}

TEST_CASE("character partition: the covariant series sum to the full monomial count") {
    for (int d = 1; d <= 5; ++d)
        for (int n = 1; n <= 4; ++n) {
            const CyclicAction action = CyclicAction::scalar(d, n);
            for (int k = 0; k <= 9; ++k) {
                Int total = 0;
                for (int j = 0; j < d; ++j) total += covariant_hilbert(action, Character(d, j), k)[k];
                CHECK(total == binomial(k + n - 1, n - 1));
            }
        }
}

TEST_CASE("scalar case support: chi_j covariants live in degrees k == j mod d") {
    const CyclicAction action = CyclicAction::scalar(4, 3);
    for (int j = 0; j < 4; ++j) {
        const HilbertSeries s = covariant_hilbert(action, Character(4, j), 10);
        for (int k = 0; k <= 10; ++k)
            if (k % 4 != j) CHECK(s[k] == 0);
    }
}

TEST_CASE("det_character") {
    CHECK(det_character(CyclicAction(2, {1, 1})) == Character(2, 0));
    CHECK(det_character(CyclicAction(2, {1, 1, 1})) == Character(2, 1));
    CHECK(det_character(CyclicAction(4, {1, 3})) == Character(4, 0));
}

TEST_CASE("is_gorenstein") {
    CHECK(is_gorenstein(CyclicAction(2, {1, 1, 1, 1})).gorenstein);
    CHECK_FALSE(is_gorenstein(CyclicAction(2, {1, 1, 1})).gorenstein);
    CHECK(is_gorenstein(CyclicAction(1, {1})).gorenstein);

    const auto cert = is_gorenstein(CyclicAction(4, {1, 3}));
    CHECK(cert.gorenstein);
    CHECK(cert.branch == GorensteinCertificate::Branch::DeterminantCharacter);
    CHECK(cert.weight_sum_mod_d == 0);
    CHECK(cert.note.find("extrapolated") != std::string::npos);
}

TEST_CASE("is_gorenstein is invariant under weight permutation") {
    std::vector<int> weights = {1, 2, 3, 0};
    std::sort(weights.begin(), weights.end());
    const bool reference = is_gorenstein(CyclicAction(4, weights)).gorenstein;
    do {
        CHECK(is_gorenstein(CyclicAction(4, weights)).gorenstein == reference);
    } while (std::next_permutation(weights.begin(), weights.end()));
}

TEST_CASE("pseudo-reflection detection") {
    CHECK(has_pseudo_reflection(CyclicAction(2, {1, 0})));
    CHECK_FALSE(has_pseudo_reflection(CyclicAction(2, {1, 1})));
    CHECK(is_gorenstein(CyclicAction(2, {1, 0})).has_pseudo_reflection);
}

TEST_CASE("precondition violations") {
    CHECK_THROWS_AS(covariant_hilbert(CyclicAction(2, {1}), Character(2, 0), -1),
                    std::invalid_argument);
    CHECK_THROWS_AS(covariant_hilbert(CyclicAction(2, {1}), Character(3, 0), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(CyclicAction(0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(CyclicAction(2, {}), std::invalid_argument);
}
