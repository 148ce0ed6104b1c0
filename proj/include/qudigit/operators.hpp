#pragma once

#include "qudigit/lattice.hpp"
#include "qudigit/matrix.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace qudigit {

// --- shifts ----------------------------------------------------------------

// Cyclic coordinate shift by a lattice multiple A = a dx:
//   <x'| T_A |x''> = delta_{x' + A, x''}   (values compared modulo Xi).
// T_dx is the minimum shift: ones on the first subdiagonal plus a single
// wraparound entry in the top-right corner.
ComplexMatrix shift_operator(const Rational& A, const LatticeSpec& spec);

// e^{2 pi i A p} for arbitrary real A, assembled in the momentum
// representation. Coincides with shift_operator when A is a lattice multiple;
// otherwise unitary but no longer a permutation.
ComplexMatrix arbitrary_shift(double A, const LatticeSpec& spec);

// Momentum-side shift: diag(e^{-2 pi i B x}) in the coordinate basis. Moves
// momentum wavefunctions by +B.
ComplexMatrix momentum_shift_operator(const Rational& B, const LatticeSpec& spec);

// --- observables -----------------------------------------------------------

ComplexMatrix coordinate_operator(const LatticeSpec& spec);

// Diagonal digit observable d1_x + c_s(x).
ComplexMatrix coordinate_digit(int s, const LatticeSpec& spec);

// F diag(f) F^dagger for an arbitrary momentum-indexed function, f[k]
// attached to momentum index k. Exploits the Toeplitz structure of the
// result, so the cost is O(N^2) with exactly reduced phase angles.
ComplexMatrix momentum_function_operator(const std::vector<std::complex<double>>& f,
                                         const LatticeSpec& spec);

// Momentum digit observable d1_p + c_r(p), conjugated into the coordinate
// basis. Ground truth for every closed-form decomposition below.
ComplexMatrix momentum_digit_oracle(int r, const LatticeSpec& spec);

ComplexMatrix momentum_operator(const LatticeSpec& spec);

// Rank-1 projector onto the momentum eigenstate at lattice point p:
// entries e^{2 pi i p (x' - x'')} / N.
ComplexMatrix projector(const Rational& p, const LatticeSpec& spec);

// --- shift decompositions --------------------------------------------------

// Coefficient map of a shift decomposition, keyed by the canonical step count
// a in [0, N); the shift value of a key is a * step. The coefficient function
// is not periodic when the matching offset is nonzero: growing the argument
// by one full period multiplies it by cis_turns(period_turns()). Insertions
// and lookups outside [0, N) steps fold through that phase, so closed forms
// quoting shifts at -A compare directly with transform values.
class ShiftCoefficients {
public:
    ShiftCoefficients(const LatticeSpec& spec, Axis axis);

    Axis axis() const { return axis_; }
    std::int64_t modulus() const { return modulus_; }
    const Rational& step() const { return step_; }
    const Rational& period_turns() const { return period_turns_; }

    void add_step(std::int64_t t, std::complex<double> v);
    void add_shift(const Rational& shift, std::complex<double> v);

    // Coefficient at shift t * step; zero when the canonical key is absent.
    std::complex<double> at_step(std::int64_t t) const;

    const std::map<std::int64_t, std::complex<double>>& terms() const { return terms_; }

private:
    Axis axis_;
    std::int64_t modulus_;
    Rational step_;
    Rational period_turns_;
    std::map<std::int64_t, std::complex<double>> terms_;
};

// Fourier data of the momentum digit over coordinate shifts:
//   c(A) = (1/N) sum_p d(r, p) e^{-2 pi i A p}.
ShiftCoefficients digit_shift_coefficients(int r, const LatticeSpec& spec);

enum class NumeralSystem { base_q, binary, ternary_symmetric, shifted };

// corrected: the reading that matches the oracle (see ERRATA.md).
// as_printed: the literal table form, kept so divergences can be measured and
// reported; it differs from corrected only for the shifted system.
enum class FormulaReading { corrected, as_printed };

ShiftCoefficients closed_form_coefficients(int r, const LatticeSpec& spec,
                                           NumeralSystem system,
                                           FormulaReading reading = FormulaReading::corrected);

// Dual decomposition of the coordinate digit over momentum shifts:
//   c(B) = (1/N) sum_x d(s, x) e^{+2 pi i B x}.
ShiftCoefficients coordinate_digit_coefficients(int s, const LatticeSpec& spec);

// sum_a c(a dx) T_a with the wraparound entries of each shift carrying the
// compensating boundary phase; reproduces the momentum digit for any d1.
ComplexMatrix reconstruct_from_coordinate_shifts(const ShiftCoefficients& coeffs,
                                                 const LatticeSpec& spec);

// sum_b c(b dp) diag(e^{-2 pi i b dp x}); reproduces the coordinate digit.
ComplexMatrix reconstruct_from_momentum_shifts(const ShiftCoefficients& coeffs,
                                               const LatticeSpec& spec);

}  // namespace qudigit
