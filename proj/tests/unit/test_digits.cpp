#include "qudigit/digits.hpp"

#include "qudigit/lattice.hpp"

#include <doctest.h>

using namespace qudigit;

TEST_CASE("digits_of expands over the scale range") {
    // 17 = 1 2 2 in ternary, scales 1, 0, -1
    const DigitVector dv = digits_of(17, 3, 1, 2);
    CHECK(dv.q == 3);
    CHECK(dv.s_min == -1);
    CHECK(dv.s_max == 1);
    CHECK(dv.length() == 3);
    CHECK(dv.at_scale(-1) == 2);
    CHECK(dv.at_scale(0) == 2);
    CHECK(dv.at_scale(1) == 1);
    CHECK_THROWS_AS(dv.at_scale(2), std::domain_error);
    CHECK_THROWS_AS(dv.at_scale(-2), std::domain_error);

    const DigitVector zero = digits_of(0, 2, 0, 3);
    CHECK(zero.digits == std::vector<int>{0, 0, 0});
}

TEST_CASE("digits_of rejects bad arguments") {
    CHECK_THROWS_AS(digits_of(-1, 2, 1, 1), std::domain_error);
    CHECK_THROWS_AS(digits_of(8, 2, 1, 2), std::domain_error);  // N = 8
    CHECK_THROWS_AS(digits_of(0, 1, 1, 1), std::domain_error);
    CHECK_THROWS_AS(digits_of(0, 2, 0, 0), std::domain_error);
    CHECK_THROWS_AS(digits_of(0, 2, -1, 2), std::domain_error);
    CHECK_THROWS_AS(digits_of(0, 2, 0, 70), std::domain_error);  // 64-bit overflow
}

TEST_CASE("value_of reproduces the constructive node map") {
    const DigitVector dv = digits_of(17, 3, 1, 2);
    CHECK(value_of(dv, 0) == Rational(17, 3));
    // offset d1 (Xi - dx) / (q - 1) = -13/3 at d1 = -1
    CHECK(value_of(dv, -1) == Rational(4, 3));

    const LatticeSpec spec(2, 1, 2, Rational(-1, 2), 0);
    for (std::int64_t m = 0; m < spec.size(); ++m)
        CHECK(value_of(digits_of(m, 2, 1, 2), Rational(-1, 2)) == spec.coordinate_value(m));
}

TEST_CASE("value_of validates the vector") {
    DigitVector bad{2, 0, 1, {0, 2}};  // digit 2 with q = 2
    CHECK_THROWS_AS(value_of(bad, 0), std::domain_error);
    DigitVector mismatch{2, 0, 1, {0}};
    CHECK_THROWS_AS(value_of(mismatch, 0), std::domain_error);
}

TEST_CASE("digit_function reads one shifted digit") {
    // 3 = 1 1 in binary over scales 0, -1
    CHECK(digit_function(0, 3, 2, 1, 1, 0) == 1);
    CHECK(digit_function(-1, 3, 2, 1, 1, 0) == 1);
    CHECK(digit_function(0, 2, 2, 1, 1, 0) == 1);
    CHECK(digit_function(-1, 2, 2, 1, 1, 0) == 0);
    CHECK(digit_function(0, 3, 2, 1, 1, Rational(-1, 2)) == Rational(1, 2));
    CHECK_THROWS_AS(digit_function(1, 0, 2, 1, 1, 0), std::domain_error);
    CHECK_THROWS_AS(digit_function(-2, 0, 2, 1, 1, 0), std::domain_error);
}

TEST_CASE("linear renormalization of the reference strings") {
    // all-2 ternary string -> -dx, all-1 -> -dx/2
    for (int n_minus : {1, 2}) {
        const int len = n_minus + 1;
        const DigitVector all2{3, -n_minus, 0, std::vector<int>(len, 2)};
        const DigitVector all1{3, -n_minus, 0, std::vector<int>(len, 1)};
        const Rational dx = rat_pow(3, -n_minus);
        CHECK(renormalize_linear(all2) == -dx);
        CHECK(renormalize_linear(all1) == -dx / 2);
    }
}

TEST_CASE("binary linear renormalization equals the top-digit flip") {
    for (std::int64_t m = 0; m < 16; ++m) {
        const DigitVector dv = digits_of(m, 2, 2, 2);
        CHECK(renormalize_linear(dv) == renormalize_top_digit(dv));
    }
}

TEST_CASE("ternary top-digit remap") {
    // 2 2 -> top flips to -1: 8/3 - 3 = -1/3
    CHECK(renormalize_top_digit(digits_of(8, 3, 1, 1)) == Rational(-1, 3));
    // 1 0 -> top stays 1; the linear rule gives a different value here
    const DigitVector dv = digits_of(3, 3, 1, 1);
    CHECK(renormalize_top_digit(dv) == 1);
    CHECK(renormalize_linear(dv) == Rational(-1, 2));
    CHECK_THROWS_AS(renormalize_top_digit(digits_of(0, 5, 1, 1)), std::domain_error);
}
