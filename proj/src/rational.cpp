#include "qudigit/rational.hpp"

#include <cctype>
#include <numbers>
#include <stdexcept>

namespace qudigit {

Rational rat_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return 1 / rat_pow(base, -exp);
    }
    Rational acc = 1;
    Rational b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e != 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

BigInt rat_floor(const Rational& r) {
    const BigInt n = numerator(r);
    const BigInt d = denominator(r);
    BigInt q = n / d;  // truncated division
    if (n < 0 && q * d != n) --q;
    return q;
}

Rational rat_mod(const Rational& r, const Rational& period) {
    if (period <= 0) throw std::domain_error("rat_mod: period must be positive");
    return r - period * Rational(rat_floor(r / period));
}

Rational rat_frac(const Rational& r) {
    return r - Rational(rat_floor(r));
}

double rat_double(const Rational& r) {
    return r.convert_to<double>();
}

namespace {

BigInt parse_integer(const std::string& s, const std::string& whole) {
    std::size_t k = 0;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
    if (k == s.size())
        throw std::invalid_argument("rat_parse: bad rational '" + whole + "'");
    for (std::size_t i = k; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("rat_parse: bad rational '" + whole + "'");
    return BigInt(s);
}

}  // namespace

Rational rat_parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text, text));
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string rat_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::complex<double> cis_turns(const Rational& turns) {
    Rational f = rat_frac(turns);
    if (f == 0) return {1.0, 0.0};
    if (4 * f == 1) return {0.0, 1.0};
    if (2 * f == 1) return {-1.0, 0.0};
    if (4 * f == 3) return {0.0, -1.0};
    if (2 * f > 1) f -= 1;  // center on zero for accuracy
    return std::polar(1.0, 2.0 * std::numbers::pi * rat_double(f));
}

}  // namespace qudigit
