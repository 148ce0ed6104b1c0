#include "qudigit/digits.hpp"

#include <limits>
#include <stdexcept>

namespace qudigit {

namespace {

void check_vector(const DigitVector& dv) {
    if (dv.q < 2) throw std::domain_error("digit vector: radix must be at least 2");
    if (dv.length() < 1 || static_cast<int>(dv.digits.size()) != dv.length())
        throw std::domain_error("digit vector: length mismatch");
    for (int d : dv.digits)
        if (d < 0 || d >= dv.q) throw std::domain_error("digit vector: digit out of range");
}

std::int64_t checked_power(int q, int n) {
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > std::numeric_limits<std::int64_t>::max() / q)
            throw std::domain_error("lattice too large for 64-bit indexing");
        v *= q;
    }
    return v;
}

}  // namespace

int DigitVector::at_scale(int s) const {
    if (s < s_min || s > s_max) throw std::domain_error("digit scale out of range");
    return digits[static_cast<std::size_t>(s - s_min)];
}

DigitVector digits_of(std::int64_t m, int q, int n_minus, int n_plus) {
    if (q < 2) throw std::domain_error("digits_of: radix must be at least 2");
    if (n_minus < 0 || n_plus < 0 || n_minus + n_plus < 1)
        throw std::domain_error("digits_of: need at least one digit position");
    const int n = n_minus + n_plus;
    const std::int64_t N = checked_power(q, n);
    if (m < 0 || m >= N) throw std::domain_error("digits_of: index outside [0, q^n)");

    DigitVector dv;
    dv.q = q;
    dv.s_min = -n_minus;
    dv.s_max = n_plus - 1;
    dv.digits.resize(static_cast<std::size_t>(n));
    std::int64_t rest = m;
    for (int j = 0; j < n; ++j) {
        dv.digits[static_cast<std::size_t>(j)] = static_cast<int>(rest % q);
        rest /= q;
    }
    return dv;
}

Rational value_of(const DigitVector& dv, const Rational& d1) {
    check_vector(dv);
    Rational v = 0;
    for (int s = dv.s_min; s <= dv.s_max; ++s)
        v += (d1 + dv.at_scale(s)) * rat_pow(dv.q, s);
    return v;
}

Rational digit_function(int s, std::int64_t m, int q, int n_minus, int n_plus,
                        const Rational& d1) {
    if (s < -n_minus || s > n_plus - 1)
        throw std::domain_error("digit_function: scale outside [-n_minus, n_plus - 1]");
    const DigitVector dv = digits_of(m, q, n_minus, n_plus);
    return d1 + dv.at_scale(s);
}

Rational renormalize_linear(const DigitVector& dv) {
    check_vector(dv);
    Rational sum = 0;
    for (int s = dv.s_min; s <= dv.s_max; ++s) {
        const int below = (s - 1 < dv.s_min) ? 0 : dv.at_scale(s - 1);
        sum += Rational(below - dv.at_scale(s)) * rat_pow(dv.q, s);
    }
    return sum / (dv.q - 1);
}

Rational renormalize_top_digit(const DigitVector& dv) {
    check_vector(dv);
    const int top = dv.at_scale(dv.s_max);
    int remapped;
    if (dv.q == 2) {
        remapped = -top;
    } else if (dv.q == 3) {
        remapped = (top == 2) ? -1 : top;
    } else {
        throw std::domain_error("renormalize_top_digit: unsupported radix");
    }
    return value_of(dv, 0) + Rational(remapped - top) * rat_pow(dv.q, dv.s_max);
}

}  // namespace qudigit
