#pragma once

#include "qudigit/lattice.hpp"
#include "qudigit/matrix.hpp"
#include "qudigit/operators.hpp"

#include <complex>
#include <vector>

namespace qudigit {

// A lattice with a twisted boundary: wavefunctions obey
// psi(x + Xi) = e^{i phi} psi(x).
struct TwistSpec {
    LatticeSpec base;
    double phi = 0.0;
};

// Boundary phase produced by a least-digit shift: phi = -2 pi d1.
double phase_from_d1(const Rational& d1);

// Minimum shift with the single wraparound entry multiplied by e^{i phi}.
// phi is reduced modulo 2 pi, so physically equivalent phases give the same
// matrix exactly.
ComplexMatrix twisted_shift(const TwistSpec& twist);

// Analytic spectrum of the twisted shift: lambda_m = e^{i (2 pi m + phi)/N}
// with eigenvector psi_m(x) = e^{i x (2 pi m + phi) dp} / sqrt(N). No
// numerical eigensolver is involved anywhere.
std::complex<double> twisted_eigenvalue(std::int64_t m, const TwistSpec& twist);
std::vector<std::complex<double>> twisted_eigenvector(std::int64_t m, const TwistSpec& twist);

// Aharonov-Bohm relation phi = 2 pi flux / flux_quantum and its inverse.
double flux_to_phase(double flux, double flux_quantum);
double phase_to_flux(double phase, double flux_quantum);

// Allowed momenta on a ring of length a with boundary phase phi:
// k_n = 2 pi n / a - phi / a for n in [n_lo, n_hi].
std::vector<double> ring_momenta(double a, double phi, long n_lo, long n_hi);

// One row of the digit-coefficient convergence study toward the line.
struct ConvergenceRow {
    int n_plus = 0;
    double delta_p = 0.0;
    std::complex<double> lattice_coeff;
    std::complex<double> line_coeff;
    double err = 0.0;
};

// For each lattice in the sequence, compares the transform coefficient at
// shift -A with its continuum value q^{-r} / (2 pi i A). The deviation is
// O(dp), so refining n_plus by one should shrink it by about 1/q.
std::vector<ConvergenceRow> line_limit_check(const Rational& A, int r,
                                             const std::vector<LatticeSpec>& specs);

}  // namespace qudigit
