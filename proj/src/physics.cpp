#include "qudigit/physics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qudigit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double phase_from_d1(const Rational& d1) {
    return -kTwoPi * rat_double(d1);
}

ComplexMatrix twisted_shift(const TwistSpec& twist) {
    const std::int64_t N = twist.base.size();
    const double phi = std::remainder(twist.phi, kTwoPi);
    ComplexMatrix m = shift_operator(twist.base.delta_x(), twist.base);
    m.at(0, N - 1) = (phi == 0.0) ? std::complex<double>{1.0, 0.0} : std::polar(1.0, phi);
    return m;
}

std::complex<double> twisted_eigenvalue(std::int64_t m, const TwistSpec& twist) {
    const double phi = std::remainder(twist.phi, kTwoPi);
    const double N = static_cast<double>(twist.base.size());
    return std::polar(1.0, (kTwoPi * static_cast<double>(m) + phi) / N);
}

std::vector<std::complex<double>> twisted_eigenvector(std::int64_t m, const TwistSpec& twist) {
    const std::int64_t N = twist.base.size();
    const double phi = std::remainder(twist.phi, kTwoPi);
    const double dp = rat_double(twist.base.delta_p());
    const double wavenumber = (kTwoPi * static_cast<double>(m) + phi) * dp;
    const double norm = 1.0 / std::sqrt(static_cast<double>(N));

    std::vector<std::complex<double>> psi(static_cast<std::size_t>(N));
    for (std::int64_t i = 0; i < N; ++i) {
        const double x = rat_double(twist.base.coordinate_value(lattice_index_of_row(i, N)));
        psi[static_cast<std::size_t>(i)] = norm * std::polar(1.0, x * wavenumber);
    }
    return psi;
}

double flux_to_phase(double flux, double flux_quantum) {
    if (!(flux_quantum > 0.0))
        throw std::domain_error("flux_to_phase: flux quantum must be positive");
    return kTwoPi * flux / flux_quantum;
}

double phase_to_flux(double phase, double flux_quantum) {
    if (!(flux_quantum > 0.0))
        throw std::domain_error("phase_to_flux: flux quantum must be positive");
    return flux_quantum * phase / kTwoPi;
}

std::vector<double> ring_momenta(double a, double phi, long n_lo, long n_hi) {
    if (!(a > 0.0)) throw std::domain_error("ring_momenta: ring length must be positive");
    std::vector<double> ks;
    for (long n = n_lo; n <= n_hi; ++n)
        ks.push_back((kTwoPi * static_cast<double>(n) - phi) / a);
    return ks;
}

std::vector<ConvergenceRow> line_limit_check(const Rational& A, int r,
                                             const std::vector<LatticeSpec>& specs) {
    std::vector<ConvergenceRow> rows;
    for (const LatticeSpec& spec : specs) {
        const Rational steps = A / spec.delta_x();
        if (denominator(steps) != 1)
            throw std::domain_error("line_limit_check: shift absent from a lattice in the sequence");
        const std::int64_t t = numerator(steps).convert_to<std::int64_t>();

        const ShiftCoefficients coeffs = digit_shift_coefficients(r, spec);
        const std::complex<double> lattice_value = coeffs.at_step(-t);
        const double a_val = rat_double(A);
        const std::complex<double> line_value{
            0.0, -rat_double(rat_pow(spec.q(), -r)) / (kTwoPi * a_val)};

        ConvergenceRow row;
        row.n_plus = spec.n_plus();
        row.delta_p = rat_double(spec.delta_p());
        row.lattice_coeff = lattice_value;
        row.line_coeff = line_value;
        row.err = std::abs(lattice_value - line_value);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qudigit
