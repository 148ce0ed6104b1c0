#pragma once

#include "qudigit/rational.hpp"

#include <cstdint>
#include <vector>

namespace qudigit {

// Canonical digits of a lattice index, attached to their positional range.
// digits[j] holds the digit at scale s_min + j, each in {0 .. q-1}.
struct DigitVector {
    int q = 2;
    int s_min = 0;
    int s_max = -1;
    std::vector<int> digits;

    int length() const { return s_max - s_min + 1; }
    int at_scale(int s) const;  // throws std::domain_error outside [s_min, s_max]
};

// Base-q expansion of m over scales [-n_minus, n_plus - 1].
DigitVector digits_of(std::int64_t m, int q, int n_minus, int n_plus);

// Positional value with every digit shifted by d1:
//   sum_s (d1 + c_s) q^s  =  m dx + d1 (Xi - dx) / (q - 1).
Rational value_of(const DigitVector& dv, const Rational& d1);

// Single digit read, shifted: d1 + c_s(m).
Rational digit_function(int s, std::int64_t m, int q, int n_minus, int n_plus,
                        const Rational& d1);

// 1/(q-1) * sum_s (c_{s-1} - c_s) q^s with c_{-n_minus-1} = 0. The result can
// land off the lattice for q > 2.
Rational renormalize_linear(const DigitVector& dv);

// q = 2: value with the top digit sign-flipped. q = 3: top digit remapped
// {0, 1, 2} -> {0, 1, -1}, the rest unchanged. Other radices are unsupported.
Rational renormalize_top_digit(const DigitVector& dv);

}  // namespace qudigit
