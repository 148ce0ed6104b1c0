#include "qudigit/series.hpp"

#include <stdexcept>

namespace qudigit {

namespace {

void check_digits(const std::vector<int>& digits, int q) {
    for (int d : digits)
        if (d < 0 || d >= q) throw std::domain_error("series digit out of range");
}

}  // namespace

Rational eval_renormalized_series(const DigitSeries& s) {
    if (s.q < 2) throw std::domain_error("series radix must be at least 2");
    check_digits(s.core, s.q);

    const bool has_core = !s.core.empty();
    const int core_max = s.core_s_min + static_cast<int>(s.core.size()) - 1;

    Rational total = 0;
    for (std::size_t i = 0; i < s.core.size(); ++i)
        total += Rational(s.core[i]) * rat_pow(s.q, s.core_s_min + static_cast<int>(i));

    if (s.left) {
        if (s.left->pattern.empty()) throw std::domain_error("left tail pattern is empty");
        check_digits(s.left->pattern, s.q);
        if (has_core && s.left->start <= core_max)
            throw std::domain_error("left tail overlaps the core block");
        if (s.right && s.left->start <= s.right->start)
            throw std::domain_error("left tail overlaps the right tail");
        const int period = static_cast<int>(s.left->pattern.size());
        Rational head = 0;
        for (int i = 0; i < period; ++i)
            head += Rational(s.left->pattern[static_cast<std::size_t>(i)]) *
                    rat_pow(s.q, s.left->start + i);
        total += head / (1 - rat_pow(s.q, period));
    }

    if (s.right) {
        if (s.right->pattern.empty()) throw std::domain_error("right tail pattern is empty");
        check_digits(s.right->pattern, s.q);
        if (has_core && s.right->start >= s.core_s_min)
            throw std::domain_error("right tail overlaps the core block");
        const int period = static_cast<int>(s.right->pattern.size());
        Rational head = 0;
        for (int i = 0; i < period; ++i)
            head += Rational(s.right->pattern[static_cast<std::size_t>(i)]) *
                    rat_pow(s.q, s.right->start - i);
        total += head / (1 - rat_pow(s.q, -period));
    }

    return total;
}

}  // namespace qudigit
