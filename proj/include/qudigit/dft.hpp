#pragma once

#include "qudigit/lattice.hpp"
#include "qudigit/matrix.hpp"

namespace qudigit {

// Lattice Fourier matrix F[i, j] = e^{2 pi i x_i p_j} / sqrt(N), rows running
// over coordinate nodes and columns over momentum nodes, both in decreasing
// order. Every phase angle x * p is reduced as an exact rational before the
// complex exponential is taken, so the matrix is unitary to machine accuracy
// for any least-digit shifts.
ComplexMatrix dft_matrix(const LatticeSpec& spec);

}  // namespace qudigit
