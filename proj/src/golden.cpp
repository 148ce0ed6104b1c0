#include "qudigit/golden.hpp"

#include "qudigit/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qudigit {

namespace {

using Complex = std::complex<double>;

// E_n = 1 / (e^{-2 pi i n / 9} - 1)
Complex table_e(int n) {
    return 1.0 / (cis_turns(Rational(-n, 9)) - Complex{1.0, 0.0});
}

// G_n = (-1)^n / (2 sqrt(3) sin((9 - n) pi / 9)); the literal table omits
// the factor pi in the sine argument.
double table_g(int n, bool pi_in_sine) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double arg = pi_in_sine ? std::numbers::pi * (9.0 - n) / 9.0 : (9.0 - n) / 9.0;
    return sign / (2.0 * std::sqrt(3.0) * std::sin(arg));
}

ComplexMatrix diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<std::int64_t>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        m.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(i)) = d[i];
    return m;
}

ComplexMatrix circulant(Complex prefactor, const std::vector<Complex>& first_row) {
    const std::int64_t n = static_cast<std::int64_t>(first_row.size());
    ComplexMatrix m(n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            m.at(i, j) = prefactor * first_row[static_cast<std::size_t>((j - i + n) % n)];
    return m;
}

const Complex kI{0.0, 1.0};

ComplexMatrix nonsymmetric_n1_p_m1(Transcription t) {
    const double s3 = std::sqrt(3.0);
    if (t == Transcription::as_printed)
        return circulant(1.0 / 6.0, {6.0, Complex{1.0, -s3}, Complex{1.0, s3}});
    // regenerated off-diagonals: (-3 -+ sqrt(3) i) / 6
    return circulant(1.0 / 6.0, {6.0, Complex{-3.0, -s3}, Complex{-3.0, s3}});
}

}  // namespace

std::vector<GoldenCase> golden_cases() {
    return {GoldenCase::nonsymmetric_n1, GoldenCase::symmetric_n1, GoldenCase::nonsymmetric_n2,
            GoldenCase::symmetric_n2};
}

std::vector<GoldenMatrix> golden_matrices(GoldenCase c) {
    if (c == GoldenCase::nonsymmetric_n1 || c == GoldenCase::symmetric_n1)
        return {GoldenMatrix::x, GoldenMatrix::x0, GoldenMatrix::p_m1};
    return {GoldenMatrix::x,    GoldenMatrix::x0,   GoldenMatrix::x1,
            GoldenMatrix::p_m1, GoldenMatrix::p_m2, GoldenMatrix::p};
}

LatticeSpec golden_spec(GoldenCase c) {
    switch (c) {
        case GoldenCase::nonsymmetric_n1: return LatticeSpec(3, 0, 1, 0, 0);
        case GoldenCase::symmetric_n1: return LatticeSpec(3, 0, 1, -1, -1);
        case GoldenCase::nonsymmetric_n2: return LatticeSpec(3, 0, 2, 0, 0);
        case GoldenCase::symmetric_n2: return LatticeSpec(3, 0, 2, -1, -1);
    }
    throw std::logic_error("golden_spec: bad case");
}

std::string golden_case_name(GoldenCase c) {
    switch (c) {
        case GoldenCase::nonsymmetric_n1: return "nonsymmetric-n1";
        case GoldenCase::symmetric_n1: return "symmetric-n1";
        case GoldenCase::nonsymmetric_n2: return "nonsymmetric-n2";
        case GoldenCase::symmetric_n2: return "symmetric-n2";
    }
    throw std::logic_error("golden_case_name: bad case");
}

std::string golden_matrix_name(GoldenMatrix m) {
    switch (m) {
        case GoldenMatrix::x: return "x";
        case GoldenMatrix::x0: return "x0";
        case GoldenMatrix::x1: return "x1";
        case GoldenMatrix::p_m1: return "p_m1";
        case GoldenMatrix::p_m2: return "p_m2";
        case GoldenMatrix::p: return "p";
    }
    throw std::logic_error("golden_matrix_name: bad matrix");
}

ComplexMatrix golden_transcription(GoldenCase c, GoldenMatrix m, Transcription t) {
    const double s3 = std::sqrt(3.0);

    switch (c) {
        case GoldenCase::nonsymmetric_n1:
            switch (m) {
                case GoldenMatrix::x:
                case GoldenMatrix::x0: return diagonal({2, 1, 0});
                case GoldenMatrix::p_m1: return nonsymmetric_n1_p_m1(t);
                default: break;
            }
            break;

        case GoldenCase::symmetric_n1:
            switch (m) {
                case GoldenMatrix::x:
                case GoldenMatrix::x0: return diagonal({1, 0, -1});
                case GoldenMatrix::p_m1:
                    return circulant(1.0 / s3, {0.0, kI, -kI});
                default: break;
            }
            break;

        case GoldenCase::nonsymmetric_n2: {
            const Complex e1 = table_e(1), e2 = table_e(2), e3 = table_e(3), e4 = table_e(4);
            const Complex e5 = table_e(5), e6 = table_e(6), e7 = table_e(7), e8 = table_e(8);
            // the literal table scales the period-3 entries of p_m2 (and of p)
            // by an extra factor 3
            const double f = (t == Transcription::as_printed) ? 3.0 : 1.0;
            switch (m) {
                case GoldenMatrix::x: return diagonal({8, 7, 6, 5, 4, 3, 2, 1, 0});
                case GoldenMatrix::x0: return diagonal({2, 1, 0, 2, 1, 0, 2, 1, 0});
                case GoldenMatrix::x1: return diagonal({2, 2, 2, 1, 1, 1, 0, 0, 0});
                case GoldenMatrix::p_m1:
                    return circulant(1.0 / 3.0, {3.0, e8, e7, 0.0, e5, e4, 0.0, e2, e1});
                case GoldenMatrix::p_m2:
                    return circulant(1.0, {1.0, 0.0, 0.0, f * e6, 0.0, 0.0, f * e3, 0.0, 0.0});
                case GoldenMatrix::p:
                    return circulant(1.0 / 9.0,
                                     {4.0, e8, e7, f * e6, e5, e4, f * e3, e2, e1});
                default: break;
            }
            break;
        }

        case GoldenCase::symmetric_n2: {
            const bool printed = (t == Transcription::as_printed);
            // literal prefactor 1/(sqrt(3) i) = -i/sqrt(3); the regenerated
            // operator carries +i/sqrt(3)
            const Complex pref = (printed ? -kI : kI) / s3;
            const bool with_pi = !printed;
            const double g1 = table_g(1, with_pi), g2 = table_g(2, with_pi);
            const double g4 = table_g(4, with_pi), g5 = table_g(5, with_pi);
            const double g7 = table_g(7, with_pi), g8 = table_g(8, with_pi);
            switch (m) {
                case GoldenMatrix::x: return diagonal({4, 3, 2, 1, 0, -1, -2, -3, -4});
                case GoldenMatrix::x0: return diagonal({1, 0, -1, 1, 0, -1, 1, 0, -1});
                case GoldenMatrix::x1: return diagonal({1, 1, 1, 0, 0, 0, -1, -1, -1});
                case GoldenMatrix::p_m1:
                    return circulant(pref, {0.0, g8, g7, 0.0, g5, g4, 0.0, g2, g1});
                case GoldenMatrix::p_m2:
                    return circulant(pref, {0.0, 0.0, 0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 0.0});
                case GoldenMatrix::p:
                    return circulant(pref / 9.0, {0.0, 3 * g8, 3 * g7, 1.0, 3 * g5, 3 * g4,
                                                  -1.0, 3 * g2, 3 * g1});
                default: break;
            }
            break;
        }
    }
    throw std::domain_error("golden_transcription: matrix not part of this case");
}

ComplexMatrix golden_oracle(GoldenCase c, GoldenMatrix m) {
    const LatticeSpec spec = golden_spec(c);
    switch (m) {
        case GoldenMatrix::x: return coordinate_operator(spec);
        case GoldenMatrix::x0: return coordinate_digit(0, spec);
        case GoldenMatrix::x1: return coordinate_digit(1, spec);
        case GoldenMatrix::p_m1: return momentum_digit_oracle(-1, spec);
        case GoldenMatrix::p_m2: return momentum_digit_oracle(-2, spec);
        case GoldenMatrix::p: return momentum_operator(spec);
    }
    throw std::logic_error("golden_oracle: bad matrix");
}

bool golden_diverges_as_printed(GoldenCase c, GoldenMatrix m) {
    switch (c) {
        case GoldenCase::nonsymmetric_n1: return m == GoldenMatrix::p_m1;
        case GoldenCase::symmetric_n1: return false;
        case GoldenCase::nonsymmetric_n2:
            return m == GoldenMatrix::p_m2 || m == GoldenMatrix::p;
        case GoldenCase::symmetric_n2:
            return m == GoldenMatrix::p_m1 || m == GoldenMatrix::p_m2 || m == GoldenMatrix::p;
    }
    throw std::logic_error("golden_diverges_as_printed: bad case");
}

ComplexMatrix golden_symmetric_n2_reading(bool pi_in_sine, bool positive_prefactor) {
    const Complex pref = (positive_prefactor ? kI : -kI) / std::sqrt(3.0);
    const double g1 = table_g(1, pi_in_sine), g2 = table_g(2, pi_in_sine);
    const double g4 = table_g(4, pi_in_sine), g5 = table_g(5, pi_in_sine);
    const double g7 = table_g(7, pi_in_sine), g8 = table_g(8, pi_in_sine);
    return circulant(pref, {0.0, g8, g7, 0.0, g5, g4, 0.0, g2, g1});
}

std::string golden_fixture_path(GoldenCase c, GoldenMatrix m, FixtureKind kind) {
    return std::string(QUDIGIT_DATA_DIR) + "/appendix_a/" + golden_case_name(c) + "/" +
           golden_matrix_name(m) + (kind == FixtureKind::printed ? ".printed" : ".oracle") +
           ".json";
}

}  // namespace qudigit
