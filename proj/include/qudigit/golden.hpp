#pragma once

#include "qudigit/lattice.hpp"
#include "qudigit/matrix.hpp"

#include <string>
#include <vector>

namespace qudigit {

// The four reference cases: ternary lattices with dx = 1 (n_minus = 0),
// digit alphabets {0, 1, 2} (nonsymmetric) or {-1, 0, 1} (symmetric).
enum class GoldenCase { nonsymmetric_n1, symmetric_n1, nonsymmetric_n2, symmetric_n2 };

enum class GoldenMatrix { x, x0, x1, p_m1, p_m2, p };

// as_printed: the literal reference table, including its known defects.
// corrected: the reading that regenerates from the operator definitions;
// see ERRATA.md for every difference and its justification.
enum class Transcription { as_printed, corrected };

std::vector<GoldenCase> golden_cases();
std::vector<GoldenMatrix> golden_matrices(GoldenCase c);

LatticeSpec golden_spec(GoldenCase c);

std::string golden_case_name(GoldenCase c);      // "nonsymmetric-n1", ...
std::string golden_matrix_name(GoldenMatrix m);  // "x", "x0", "x1", "p_m1", "p_m2", "p"

ComplexMatrix golden_transcription(GoldenCase c, GoldenMatrix m, Transcription t);

// The same observable rebuilt from the operator definitions.
ComplexMatrix golden_oracle(GoldenCase c, GoldenMatrix m);

// True where the literal table is known to disagree with the regenerated
// operator. The corrected transcription agrees everywhere.
bool golden_diverges_as_printed(GoldenCase c, GoldenMatrix m);

// The n = 9 symmetric first momentum digit under each of the four readings of
// its table: the sine argument with or without the factor pi, and the overall
// prefactor -i/sqrt(3) (literal) or +i/sqrt(3). Exactly one combination
// reproduces the operator.
ComplexMatrix golden_symmetric_n2_reading(bool pi_in_sine, bool positive_prefactor);

enum class FixtureKind { printed, oracle };

// data/appendix_a/<case>/<matrix>.<printed|oracle>.json
std::string golden_fixture_path(GoldenCase c, GoldenMatrix m, FixtureKind kind);

}  // namespace qudigit
