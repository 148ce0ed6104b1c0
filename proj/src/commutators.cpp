#include "qudigit/commutators.hpp"

#include "qudigit/operators.hpp"

#include <cmath>
#include <numbers>

namespace qudigit {

namespace {

// [diag(d), M] has entries (d_i - d_j) M_ij; no matrix product needed.
ComplexMatrix diagonal_commutator(const std::vector<double>& d, const ComplexMatrix& m) {
    const std::int64_t N = m.dim();
    ComplexMatrix c(N);
    for (std::int64_t i = 0; i < N; ++i)
        for (std::int64_t j = 0; j < N; ++j)
            c.at(i, j) = (d[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(j)]) *
                         m.at(i, j);
    return c;
}

std::vector<double> coordinate_diagonal(const LatticeSpec& spec) {
    const std::int64_t N = spec.size();
    std::vector<double> d(static_cast<std::size_t>(N));
    for (std::int64_t i = 0; i < N; ++i)
        d[static_cast<std::size_t>(i)] = rat_double(spec.coordinate_value(lattice_index_of_row(i, N)));
    return d;
}

std::vector<double> coordinate_digit_diagonal(int s, const LatticeSpec& spec) {
    const std::int64_t N = spec.size();
    std::vector<double> d(static_cast<std::size_t>(N));
    for (std::int64_t i = 0; i < N; ++i)
        d[static_cast<std::size_t>(i)] = rat_double(digit_function(
            s, lattice_index_of_row(i, N), spec.q(), spec.n_minus(), spec.n_plus(), spec.d1_x()));
    return d;
}

}  // namespace

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return sub(matmul(a, b), matmul(b, a));
}

bool CommutatorReport::law_holds() const {
    for (const auto& e : pairs)
        if (e.s + e.r <= -2 && !e.commutes) return false;
    return true;
}

CommutatorReport commutation_region(const LatticeSpec& spec, double threshold) {
    CommutatorReport report;
    report.threshold = threshold;
    for (int r = -spec.n_plus(); r <= spec.n_minus() - 1; ++r) {
        const ComplexMatrix pr = momentum_digit_oracle(r, spec);
        for (int s = -spec.n_minus(); s <= spec.n_plus() - 1; ++s) {
            const std::vector<double> xs = coordinate_digit_diagonal(s, spec);
            const double norm = frobenius_norm(diagonal_commutator(xs, pr));
            report.pairs.push_back({s, r, norm, norm < threshold});
        }
    }
    return report;
}

ComplexMatrix coordinate_digit_commutator_closed_form(int r, const LatticeSpec& spec) {
    const ShiftCoefficients coeffs =
        closed_form_coefficients(r, spec, NumeralSystem::shifted, FormulaReading::corrected);
    const std::int64_t N = spec.size();
    const double dx = rat_double(spec.delta_x());
    const std::complex<double> wrap =
        cis_turns(spec.coordinate_period() * spec.momentum_offset());

    ComplexMatrix m(N);
    for (const auto& [a, c] : coeffs.terms()) {
        for (std::int64_t i = 0; i < N; ++i) {
            std::int64_t j = i - a;
            const bool wrapped = j < 0;
            if (wrapped) j += N;
            // x_i - x_j = (j - i) dx; on wrapped rows the displacement runs
            // through the period, Xi - a dx instead of -a dx
            const std::complex<double> factor =
                static_cast<double>(j - i) * dx * (wrapped ? wrap : 1.0);
            m.at(i, j) += c * factor;
        }
    }
    return m;
}

ComplexMatrix coordinate_momentum_commutator(const LatticeSpec& spec) {
    return diagonal_commutator(coordinate_diagonal(spec), momentum_operator(spec));
}

ComplexMatrix coordinate_momentum_commutator_closed_form(const LatticeSpec& spec) {
    ComplexMatrix total(spec.size());
    for (int r = -spec.n_plus(); r <= spec.n_minus() - 1; ++r) {
        const double weight = rat_double(rat_pow(spec.q(), r));
        total = add(total, scale(weight, coordinate_digit_commutator_closed_form(r, spec)));
    }
    return total;
}

double canonical_deviation(const LatticeSpec& spec) {
    const ComplexMatrix c = coordinate_momentum_commutator(spec);
    const std::complex<double> ihbar{0.0, 1.0 / (2.0 * std::numbers::pi)};
    return frobenius_distance(c, scale(ihbar, ComplexMatrix::identity(spec.size())));
}

}  // namespace qudigit
