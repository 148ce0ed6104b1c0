#pragma once

#include "qudigit/rational.hpp"

#include <optional>
#include <vector>

namespace qudigit {

// Periodic digit pattern extending a series to infinity in one direction.
// Used as a left tail it repeats ascending: the digit at scale start + i is
// pattern[i mod P]. Used as a right tail it repeats descending: the digit at
// scale start - i is pattern[i mod P].
struct TailPattern {
    std::vector<int> pattern;
    int start = 0;
};

// Two-sided positional series: a finite core plus optional periodic tails.
// The core digit at scale core_s_min + i is core[i].
struct DigitSeries {
    int q = 2;
    std::vector<int> core;
    int core_s_min = 0;
    std::optional<TailPattern> left;   // toward +infinity
    std::optional<TailPattern> right;  // toward -infinity
};

// Renormalized evaluation. Core and right tail are ordinary exact sums; the
// divergent left tail is assigned its analytic continuation
//   (sum of one pattern period) / (1 - q^P),
// which reproduces sum'_{s >= 0} q^s = 1/(1-q) and makes the full two-sided
// all-ones sum vanish.
Rational eval_renormalized_series(const DigitSeries& s);

}  // namespace qudigit
