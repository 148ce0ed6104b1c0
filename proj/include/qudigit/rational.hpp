#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace qudigit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// base^exp for an integer exponent of either sign.
Rational rat_pow(const Rational& base, long exp);

// Largest integer not exceeding r.
BigInt rat_floor(const Rational& r);

// r reduced into [0, period); period must be positive.
Rational rat_mod(const Rational& r, const Rational& period);

// Fractional part in [0, 1).
Rational rat_frac(const Rational& r);

double rat_double(const Rational& r);

// Accepts "3", "-3", "3/4", "-3/4". Throws std::invalid_argument on anything else.
Rational rat_parse(const std::string& text);

// "num/den", or just "num" when the denominator is 1.
std::string rat_str(const Rational& r);

// e^{2 pi i t} with t measured in turns. The angle is reduced exactly modulo
// one turn before any floating-point conversion, and the four quarter-turn
// points come out exact.
std::complex<double> cis_turns(const Rational& turns);

}  // namespace qudigit
