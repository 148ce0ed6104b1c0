#pragma once

#include "qudigit/lattice.hpp"
#include "qudigit/matrix.hpp"

#include <vector>

namespace qudigit {

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

struct CommutatorEntry {
    int s = 0;
    int r = 0;
    double norm = 0.0;
    bool commutes = false;
};

// Frobenius norms of [x_s, p_r] over every digit pair of one lattice.
struct CommutatorReport {
    double threshold = 0.0;
    std::vector<CommutatorEntry> pairs;

    // Every pair with s + r <= -2 commutes (the sufficient condition; pairs
    // above the line are recorded but nothing is claimed about them).
    bool law_holds() const;
};

CommutatorReport commutation_region(const LatticeSpec& spec, double threshold = 1e-10);

// [x, d(r, p)] assembled from the closed-form shift coefficients: each shift
// contributes (x - x shifted) as a diagonal factor, with the wraparound rows
// both displaced by the period and phased by the boundary twist.
ComplexMatrix coordinate_digit_commutator_closed_form(int r, const LatticeSpec& spec);

// Direct [x, p] from the assembled operators.
ComplexMatrix coordinate_momentum_commutator(const LatticeSpec& spec);

// The same commutator from the triple shift sum over (r, D, sigma).
ComplexMatrix coordinate_momentum_commutator_closed_form(const LatticeSpec& spec);

// Frobenius distance of [x, p] from i hbar times identity, hbar = 1/(2 pi).
double canonical_deviation(const LatticeSpec& spec);

}  // namespace qudigit
