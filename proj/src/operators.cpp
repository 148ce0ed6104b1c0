#include "qudigit/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qudigit {

namespace {

void check_momentum_digit_index(int r, const LatticeSpec& spec) {
    if (r < -spec.n_plus() || r > spec.n_minus() - 1)
        throw std::domain_error("momentum digit index outside [-n_plus, n_minus - 1]");
}

void check_coordinate_digit_index(int s, const LatticeSpec& spec) {
    if (s < -spec.n_minus() || s > spec.n_plus() - 1)
        throw std::domain_error("coordinate digit index outside [-n_minus, n_plus - 1]");
}

std::int64_t euclid_mod(std::int64_t t, std::int64_t n) {
    const std::int64_t a = t % n;
    return a < 0 ? a + n : a;
}

// root[u] = e^{2 pi i u / N}
std::vector<std::complex<double>> root_table(std::int64_t N) {
    std::vector<std::complex<double>> root(static_cast<std::size_t>(N));
    for (std::int64_t u = 0; u < N; ++u)
        root[static_cast<std::size_t>(u)] = cis_turns(Rational(u, N));
    return root;
}

// Momentum digit of momentum index k: digit scales on the momentum lattice
// run over [-n_plus, n_minus - 1], so the roles of the two ranges swap.
Rational momentum_digit_value(int r, std::int64_t k, const LatticeSpec& spec) {
    return digit_function(r, k, spec.q(), spec.n_plus(), spec.n_minus(), spec.d1_p());
}

Rational coordinate_digit_value(int s, std::int64_t m, const LatticeSpec& spec) {
    return digit_function(s, m, spec.q(), spec.n_minus(), spec.n_plus(), spec.d1_x());
}

}  // namespace

ComplexMatrix shift_operator(const Rational& A, const LatticeSpec& spec) {
    const Rational steps = A / spec.delta_x();
    if (denominator(steps) != 1)
        throw std::domain_error("shift_operator: shift is not a lattice multiple");
    const std::int64_t N = spec.size();
    BigInt t = numerator(steps) % N;
    if (t < 0) t += N;
    const std::int64_t a = t.convert_to<std::int64_t>();

    ComplexMatrix m(N);
    for (std::int64_t i = 0; i < N; ++i) {
        std::int64_t j = i - a;
        if (j < 0) j += N;
        m.at(i, j) = 1.0;
    }
    return m;
}

ComplexMatrix arbitrary_shift(double A, const LatticeSpec& spec) {
    const std::int64_t N = spec.size();
    const std::vector<Rational> ps = momentum_points(spec);
    std::vector<std::complex<double>> f(static_cast<std::size_t>(N));
    for (std::int64_t u = 0; u < N; ++u) {
        const std::int64_t k = lattice_index_of_row(u, N);
        f[static_cast<std::size_t>(k)] =
            std::polar(1.0, 2.0 * std::numbers::pi * A * rat_double(ps[static_cast<std::size_t>(u)]));
    }
    return momentum_function_operator(f, spec);
}

ComplexMatrix momentum_shift_operator(const Rational& B, const LatticeSpec& spec) {
    const std::int64_t N = spec.size();
    ComplexMatrix m(N);
    for (std::int64_t i = 0; i < N; ++i)
        m.at(i, i) = cis_turns(-B * spec.coordinate_value(lattice_index_of_row(i, N)));
    return m;
}

ComplexMatrix coordinate_operator(const LatticeSpec& spec) {
    const std::int64_t N = spec.size();
    ComplexMatrix m(N);
    for (std::int64_t i = 0; i < N; ++i)
        m.at(i, i) = rat_double(spec.coordinate_value(lattice_index_of_row(i, N)));
    return m;
}

ComplexMatrix coordinate_digit(int s, const LatticeSpec& spec) {
    check_coordinate_digit_index(s, spec);
    const std::int64_t N = spec.size();
    ComplexMatrix m(N);
    for (std::int64_t i = 0; i < N; ++i)
        m.at(i, i) = rat_double(coordinate_digit_value(s, lattice_index_of_row(i, N), spec));
    return m;
}

ComplexMatrix momentum_function_operator(const std::vector<std::complex<double>>& f,
                                         const LatticeSpec& spec) {
    const std::int64_t N = spec.size();
    if (static_cast<std::int64_t>(f.size()) != N)
        throw std::invalid_argument("momentum_function_operator: size mismatch");

    // Entry (i, j) depends only on t = j - i:
    //   g(t) = (1/N) sum_k f_k e^{2 pi i t dx p_k},
    // and t dx p_k = t k / N + t dx delta_p-offset splits into a root-of-unity
    // part and a k-independent phase. The accumulator runs in extended
    // precision: f can reach the momentum period, and the digit-sum identities
    // ask for 1e-12 agreement between transforms of different magnitudes.
    const std::vector<std::complex<double>> root = root_table(N);
    const Rational offset_turns = spec.delta_x() * spec.momentum_offset();

    std::vector<std::complex<double>> g(static_cast<std::size_t>(2 * N - 1));
    for (std::int64_t t = -(N - 1); t <= N - 1; ++t) {
        std::complex<long double> acc = 0.0L;
        for (std::int64_t k = 0; k < N; ++k) {
            const auto& fk = f[static_cast<std::size_t>(k)];
            const auto& w = root[static_cast<std::size_t>(euclid_mod(t * k, N))];
            acc += std::complex<long double>(fk.real(), fk.imag()) *
                   std::complex<long double>(w.real(), w.imag());
        }
        const std::complex<double> phase = cis_turns(Rational(t) * offset_turns);
        acc /= static_cast<long double>(N);
        g[static_cast<std::size_t>(t + N - 1)] =
            phase * std::complex<double>(static_cast<double>(acc.real()),
                                         static_cast<double>(acc.imag()));
    }

    ComplexMatrix m(N);
    for (std::int64_t i = 0; i < N; ++i)
        for (std::int64_t j = 0; j < N; ++j)
            m.at(i, j) = g[static_cast<std::size_t>(j - i + N - 1)];
    return m;
}

ComplexMatrix momentum_digit_oracle(int r, const LatticeSpec& spec) {
    check_momentum_digit_index(r, spec);
    const std::int64_t N = spec.size();
    std::vector<std::complex<double>> f(static_cast<std::size_t>(N));
    for (std::int64_t k = 0; k < N; ++k)
        f[static_cast<std::size_t>(k)] = rat_double(momentum_digit_value(r, k, spec));
    return momentum_function_operator(f, spec);
}

ComplexMatrix momentum_operator(const LatticeSpec& spec) {
    const std::int64_t N = spec.size();
    std::vector<std::complex<double>> f(static_cast<std::size_t>(N));
    for (std::int64_t k = 0; k < N; ++k)
        f[static_cast<std::size_t>(k)] = rat_double(spec.momentum_value(k));
    return momentum_function_operator(f, spec);
}

ComplexMatrix projector(const Rational& p, const LatticeSpec& spec) {
    index_of(p, spec, Axis::momentum);  // validates that p is a node
    const std::int64_t N = spec.size();

    // entry (i, j) = e^{2 pi i p (x_i - x_j)} / N depends only on
    // x_i - x_j = (j - i) dx
    std::vector<std::complex<double>> w(static_cast<std::size_t>(2 * N - 1));
    for (std::int64_t t = -(N - 1); t <= N - 1; ++t)
        w[static_cast<std::size_t>(t + N - 1)] =
            cis_turns(p * Rational(t) * spec.delta_x()) / static_cast<double>(N);

    ComplexMatrix m(N);
    for (std::int64_t i = 0; i < N; ++i)
        for (std::int64_t j = 0; j < N; ++j)
            m.at(i, j) = w[static_cast<std::size_t>(j - i + N - 1)];
    return m;
}

// --- ShiftCoefficients -----------------------------------------------------

ShiftCoefficients::ShiftCoefficients(const LatticeSpec& spec, Axis axis)
    : axis_(axis), modulus_(spec.size()) {
    if (axis == Axis::coordinate) {
        step_ = spec.delta_x();
        // c(A + Xi) = c(A) e^{-2 pi i Xi delta_p-offset}
        period_turns_ = -spec.coordinate_period() * spec.momentum_offset();
    } else {
        step_ = spec.delta_p();
        // c(B + Pi) = c(B) e^{+2 pi i Pi delta_x-offset}
        period_turns_ = spec.momentum_period() * spec.coordinate_offset();
    }
}

void ShiftCoefficients::add_step(std::int64_t t, std::complex<double> v) {
    const std::int64_t a = euclid_mod(t, modulus_);
    const std::int64_t w = (t - a) / modulus_;
    if (w != 0) v *= cis_turns(Rational(-w) * period_turns_);
    auto& slot = terms_[a];
    slot += v;
}

void ShiftCoefficients::add_shift(const Rational& shift, std::complex<double> v) {
    const Rational steps = shift / step_;
    if (denominator(steps) != 1)
        throw std::domain_error("shift coefficient: shift is not a lattice multiple");
    const BigInt t = numerator(steps);
    BigInt a = t % modulus_;
    if (a < 0) a += modulus_;
    const BigInt w = (t - a) / modulus_;
    if (w != 0) v *= cis_turns(Rational(-w) * period_turns_);
    terms_[a.convert_to<std::int64_t>()] += v;
}

std::complex<double> ShiftCoefficients::at_step(std::int64_t t) const {
    const std::int64_t a = euclid_mod(t, modulus_);
    const std::int64_t w = (t - a) / modulus_;
    const auto it = terms_.find(a);
    if (it == terms_.end()) return {0.0, 0.0};
    std::complex<double> v = it->second;
    if (w != 0) v *= cis_turns(Rational(w) * period_turns_);
    return v;
}

ShiftCoefficients digit_shift_coefficients(int r, const LatticeSpec& spec) {
    check_momentum_digit_index(r, spec);
    const std::int64_t N = spec.size();
    const std::vector<std::complex<double>> root = root_table(N);
    const Rational offset_turns = spec.delta_x() * spec.momentum_offset();

    std::vector<double> d(static_cast<std::size_t>(N));
    for (std::int64_t k = 0; k < N; ++k)
        d[static_cast<std::size_t>(k)] = rat_double(momentum_digit_value(r, k, spec));

    ShiftCoefficients coeffs(spec, Axis::coordinate);
    for (std::int64_t a = 0; a < N; ++a) {
        // c(a dx) = (1/N) sum_k d_k e^{-2 pi i a dx p_k}
        std::complex<double> acc = 0.0;
        for (std::int64_t k = 0; k < N; ++k)
            acc += d[static_cast<std::size_t>(k)] *
                   std::conj(root[static_cast<std::size_t>(euclid_mod(a * k, N))]);
        const std::complex<double> phase = std::conj(cis_turns(Rational(a) * offset_turns));
        coeffs.add_step(a, phase * acc / static_cast<double>(N));
    }
    return coeffs;
}

ShiftCoefficients coordinate_digit_coefficients(int s, const LatticeSpec& spec) {
    check_coordinate_digit_index(s, spec);
    const std::int64_t N = spec.size();
    const std::vector<std::complex<double>> root = root_table(N);
    const Rational offset_turns = spec.delta_p() * spec.coordinate_offset();

    std::vector<double> d(static_cast<std::size_t>(N));
    for (std::int64_t m = 0; m < N; ++m)
        d[static_cast<std::size_t>(m)] = rat_double(coordinate_digit_value(s, m, spec));

    ShiftCoefficients coeffs(spec, Axis::momentum);
    for (std::int64_t b = 0; b < N; ++b) {
        // c(b dp) = (1/N) sum_m d_m e^{+2 pi i b dp x_m}
        std::complex<double> acc = 0.0;
        for (std::int64_t m = 0; m < N; ++m)
            acc += d[static_cast<std::size_t>(m)] *
                   root[static_cast<std::size_t>(euclid_mod(b * m, N))];
        const std::complex<double> phase = cis_turns(Rational(b) * offset_turns);
        coeffs.add_step(b, phase * acc / static_cast<double>(N));
    }
    return coeffs;
}

ShiftCoefficients closed_form_coefficients(int r, const LatticeSpec& spec,
                                           NumeralSystem system, FormulaReading reading) {
    check_momentum_digit_index(r, spec);
    const int q = spec.q();
    const Rational& d1 = spec.d1_p();

    switch (system) {
        case NumeralSystem::base_q:
            if (d1 != 0)
                throw std::domain_error("base_q closed form needs d1_p = 0");
            break;
        case NumeralSystem::binary:
            if (q != 2 || d1 != 0)
                throw std::domain_error("binary closed form needs q = 2, d1_p = 0");
            break;
        case NumeralSystem::ternary_symmetric:
            if (q != 3 || d1 != -1)
                throw std::domain_error("ternary symmetric closed form needs q = 3, d1_p = -1");
            break;
        case NumeralSystem::shifted:
            break;
    }

    const Rational dp = spec.delta_p();
    const Rational offset = spec.momentum_offset();
    const Rational amplitude = dp * rat_pow(q, -r);  // dp / q^r

    // number of D values: A = q^{-r} (D + sigma/q) runs over shifts below Xi
    std::int64_t d_count = 1;
    for (int i = 0; i < spec.n_plus() + r; ++i) d_count *= q;

    ShiftCoefficients coeffs(spec, Axis::coordinate);

    const bool printed_shifted =
        (system == NumeralSystem::shifted && reading == FormulaReading::as_printed);

    // constant term
    if (printed_shifted)
        coeffs.add_step(0, rat_double((d1 + q - 1) / 2));
    else
        coeffs.add_step(0, rat_double(d1 + Rational(q - 1, 2)));

    const int sigma_lo = printed_shifted ? 0 : 1;
    for (std::int64_t D = 0; D < d_count; ++D) {
        for (int sigma = sigma_lo; sigma <= q - 1; ++sigma) {
            if (D == 0 && sigma == 0) continue;  // the literal sigma = 0 term is singular here
            const Rational A = rat_pow(q, -r) * (D + Rational(sigma, q));
            const Rational unit_turns = dp * A;  // in (0, 1), so never singular

            std::complex<double> v;
            if (system == NumeralSystem::ternary_symmetric) {
                // (-1)^{D+sigma} dp q^{-r} / (2 i sin(pi dp A))
                const double sign = ((D + sigma) % 2 == 0) ? 1.0 : -1.0;
                const double s = std::sin(std::numbers::pi * rat_double(unit_turns));
                v = sign * rat_double(amplitude) / (std::complex<double>{0.0, 2.0} * s);
            } else if (printed_shifted) {
                // literal table form: phase from d1 alone, attached to +A
                const std::complex<double> phase = cis_turns(-unit_turns * d1);
                v = -rat_double(amplitude) * phase /
                    (std::complex<double>{1.0, 0.0} - cis_turns(unit_turns));
            } else {
                // -(dp / q^r) e^{+2 pi i A offset} / (1 - e^{+2 pi i dp A}) at -A
                const std::complex<double> phase = cis_turns(A * offset);
                v = -rat_double(amplitude) * phase /
                    (std::complex<double>{1.0, 0.0} - cis_turns(unit_turns));
            }

            if (printed_shifted)
                coeffs.add_shift(A, v);
            else
                coeffs.add_shift(-A, v);
        }
    }
    return coeffs;
}

ComplexMatrix reconstruct_from_coordinate_shifts(const ShiftCoefficients& coeffs,
                                                 const LatticeSpec& spec) {
    if (coeffs.axis() != Axis::coordinate)
        throw std::invalid_argument("reconstruct_from_coordinate_shifts: wrong axis");
    const std::int64_t N = spec.size();
    if (coeffs.modulus() != N)
        throw std::invalid_argument("reconstruct_from_coordinate_shifts: wrong lattice");

    // Wrapped entries of each shift pick up the boundary phase
    // e^{+2 pi i Xi delta_p-offset}, matching the fold applied on insertion.
    const std::complex<double> wrap =
        cis_turns(spec.coordinate_period() * spec.momentum_offset());

    ComplexMatrix m(N);
    for (const auto& [a, c] : coeffs.terms()) {
        for (std::int64_t i = 0; i < N; ++i) {
            std::int64_t j = i - a;
            if (j < 0) {
                j += N;
                m.at(i, j) += c * wrap;
            } else {
                m.at(i, j) += c;
            }
        }
    }
    return m;
}

ComplexMatrix reconstruct_from_momentum_shifts(const ShiftCoefficients& coeffs,
                                               const LatticeSpec& spec) {
    if (coeffs.axis() != Axis::momentum)
        throw std::invalid_argument("reconstruct_from_momentum_shifts: wrong axis");
    const std::int64_t N = spec.size();
    if (coeffs.modulus() != N)
        throw std::invalid_argument("reconstruct_from_momentum_shifts: wrong lattice");

    const std::vector<std::complex<double>> root = root_table(N);
    const Rational offset_turns = spec.delta_p() * spec.coordinate_offset();

    ComplexMatrix m(N);
    for (const auto& [b, c] : coeffs.terms()) {
        // diag(e^{-2 pi i b dp x}), x = m dx + offset, b dp m dx = b m / N
        const std::complex<double> phase = std::conj(cis_turns(Rational(b) * offset_turns));
        for (std::int64_t i = 0; i < N; ++i) {
            const std::int64_t idx = lattice_index_of_row(i, N);
            m.at(i, i) += c * phase *
                          std::conj(root[static_cast<std::size_t>(euclid_mod(b * idx, N))]);
        }
    }
    return m;
}

}  // namespace qudigit
