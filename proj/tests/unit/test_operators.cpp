#include "qudigit/operators.hpp"

#include "qudigit/dft.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qudigit;
using Complex = std::complex<double>;

namespace {

constexpr double eps = 1e-13;

void check_entry(const ComplexMatrix& m, std::int64_t i, std::int64_t j, Complex want) {
    CHECK(std::abs(m.at(i, j) - want) < eps);
}

}  // namespace

TEST_CASE("two-node fourier matrix") {
    const LatticeSpec spec(2, 0, 1);
    const auto f = dft_matrix(spec);
    const double r = 1.0 / std::sqrt(2.0);
    check_entry(f, 0, 0, -r);
    check_entry(f, 0, 1, r);
    check_entry(f, 1, 0, r);
    check_entry(f, 1, 1, r);
    CHECK(is_unitary(f));
}

TEST_CASE("fourier matrix stays unitary under least-digit shifts") {
    CHECK(is_unitary(dft_matrix(LatticeSpec(2, 1, 1, Rational(-1, 2), Rational(-1, 4)))));
    CHECK(is_unitary(dft_matrix(LatticeSpec(3, 0, 1, -1, -1))));
    CHECK(is_unitary(dft_matrix(LatticeSpec(3, 1, 2))));
}

TEST_CASE("minimum shift is the wraparound permutation") {
    const LatticeSpec spec(3, 0, 1);
    const auto t = shift_operator(1, spec);
    CHECK(is_permutation(t));
    check_entry(t, 0, 2, 1.0);
    check_entry(t, 1, 0, 1.0);
    check_entry(t, 2, 1, 1.0);

    const auto v = apply(t, {Complex(1.0), Complex(2.0), Complex(3.0)});
    CHECK(std::abs(v[0] - 3.0) < eps);
    CHECK(std::abs(v[1] - 1.0) < eps);
    CHECK(std::abs(v[2] - 2.0) < eps);

    // inverse shift is the transpose, a full period is the identity
    CHECK(frobenius_distance(shift_operator(-1, spec), adjoint(t)) < eps);
    CHECK(frobenius_distance(shift_operator(3, spec), ComplexMatrix::identity(3)) < eps);
    CHECK_THROWS_AS(shift_operator(Rational(1, 2), spec), std::domain_error);
}

TEST_CASE("arbitrary shift extends the permutation family") {
    const LatticeSpec spec(3, 0, 1);
    CHECK(frobenius_distance(arbitrary_shift(1.0, spec), shift_operator(1, spec)) < eps);
    const auto half = arbitrary_shift(0.5, spec);
    CHECK(is_unitary(half));
    CHECK_FALSE(is_permutation(half));
}

TEST_CASE("momentum shift is the diagonal boost") {
    const LatticeSpec spec(2, 0, 1);
    const auto b = momentum_shift_operator(Rational(1, 2), spec);
    check_entry(b, 0, 0, -1.0);
    check_entry(b, 1, 1, 1.0);
    check_entry(b, 0, 1, 0.0);

    // moves the p = 0 eigenstate onto the p = 1/2 one
    const auto moved = matmul(matmul(b, projector(0, spec)), adjoint(b));
    CHECK(frobenius_distance(moved, projector(Rational(1, 2), spec)) < eps);
}

TEST_CASE("coordinate observables are diagonal digit readouts") {
    const LatticeSpec spec(2, 1, 1);
    const auto x = coordinate_operator(spec);
    for (int i = 0; i < 4; ++i) check_entry(x, i, i, (3 - i) * 0.5);

    const auto x0 = coordinate_digit(0, spec);
    const auto xm1 = coordinate_digit(-1, spec);
    for (int i = 0; i < 4; ++i) {
        check_entry(x0, i, i, i < 2 ? 1.0 : 0.0);
        check_entry(xm1, i, i, i % 2 == 0 ? 1.0 : 0.0);
    }

    const LatticeSpec shifted(2, 1, 1, Rational(-1, 2), 0);
    const auto s0 = coordinate_digit(0, shifted);
    for (int i = 0; i < 4; ++i) check_entry(s0, i, i, (i < 2 ? 1.0 : 0.0) - 0.5);

    CHECK_THROWS_AS(coordinate_digit(2, spec), std::domain_error);
    CHECK_THROWS_AS(coordinate_digit(-2, spec), std::domain_error);
}

TEST_CASE("momentum operators from the transform") {
    const LatticeSpec spec(2, 0, 1);
    const auto p = momentum_operator(spec);
    check_entry(p, 0, 0, 0.25);
    check_entry(p, 0, 1, -0.25);
    check_entry(p, 1, 0, -0.25);
    check_entry(p, 1, 1, 0.25);

    const auto pm1 = momentum_digit_oracle(-1, spec);
    CHECK(frobenius_distance(pm1, scale(2.0, p)) < eps);

    CHECK(frobenius_distance(momentum_function_operator({1.0, 1.0}, spec),
                             ComplexMatrix::identity(2)) < eps);
    CHECK_THROWS_AS(momentum_function_operator({1.0}, spec), std::invalid_argument);
    CHECK_THROWS_AS(momentum_digit_oracle(1, spec), std::domain_error);
}

TEST_CASE("projectors are rank-1 idempotents") {
    const LatticeSpec spec(2, 0, 1);
    const auto p0 = projector(0, spec);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) check_entry(p0, i, j, 0.5);

    const auto ph = projector(Rational(1, 2), spec);
    check_entry(ph, 0, 0, 0.5);
    check_entry(ph, 0, 1, -0.5);

    for (const auto& m : {p0, ph}) {
        CHECK(std::abs(trace(m) - 1.0) < eps);
        CHECK(frobenius_distance(matmul(m, m), m) < eps);
        CHECK(is_hermitian(m));
    }
    CHECK(frobenius_distance(add(p0, ph), ComplexMatrix::identity(2)) < eps);
}

TEST_CASE("shift coefficients fold through the boundary phase") {
    const LatticeSpec spec(2, 0, 1, 0, Rational(-1, 4));
    CHECK(spec.momentum_offset() == Rational(-1, 8));

    const auto c = digit_shift_coefficients(-1, spec);
    CHECK(c.period_turns() == Rational(1, 4));
    CHECK(c.modulus() == 2);

    const Complex c1 = -0.5 * std::polar(1.0, std::numbers::pi / 4.0);
    CHECK(std::abs(c.at_step(0) - 0.25) < eps);
    CHECK(std::abs(c.at_step(1) - c1) < eps);
    // one full period multiplies by cis(period_turns)
    CHECK(std::abs(c.at_step(3) - c1 * Complex(0.0, 1.0)) < eps);

    ShiftCoefficients own(spec, Axis::coordinate);
    const Complex v(0.3, -0.7);
    own.add_step(-1, v);
    CHECK(std::abs(own.at_step(-1) - v) < eps);
    CHECK(std::abs(own.at_step(1) - v * Complex(0.0, 1.0)) < eps);
    CHECK(own.terms().size() == 1);
    CHECK(own.terms().begin()->first == 1);

    own.add_shift(Rational(-1), v);
    CHECK(std::abs(own.at_step(-1) - 2.0 * v) < eps);
    CHECK_THROWS_AS(own.add_shift(Rational(1, 3), v), std::domain_error);
}

TEST_CASE("two-node digit transform by hand") {
    const LatticeSpec spec(2, 0, 1);
    const auto c = digit_shift_coefficients(-1, spec);
    CHECK(std::abs(c.at_step(0) - 0.5) < eps);
    CHECK(std::abs(c.at_step(1) + 0.5) < eps);
}

TEST_CASE("closed forms match the transform coefficients") {
    struct Case {
        LatticeSpec spec;
        int r;
        NumeralSystem system;
    };
    const std::vector<Case> cases{
        {LatticeSpec(3, 0, 2), -1, NumeralSystem::base_q},
        {LatticeSpec(3, 0, 2), -2, NumeralSystem::base_q},
        {LatticeSpec(2, 1, 2), 0, NumeralSystem::binary},
        {LatticeSpec(2, 1, 2), -2, NumeralSystem::binary},
        {LatticeSpec(3, 1, 1, -1, -1), 0, NumeralSystem::ternary_symmetric},
        {LatticeSpec(2, 0, 2, 0, Rational(-1, 4)), -1, NumeralSystem::shifted},
        {LatticeSpec(5, 1, 1, 0, -2), -1, NumeralSystem::shifted},
    };
    for (const auto& c : cases) {
        const auto transform = digit_shift_coefficients(c.r, c.spec);
        const auto closed = closed_form_coefficients(c.r, c.spec, c.system);
        double worst = 0.0;
        for (std::int64_t t = 0; t < c.spec.size(); ++t)
            worst = std::max(worst, std::abs(transform.at_step(t) - closed.at_step(t)));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("ternary symmetric closed form by hand") {
    const LatticeSpec spec(3, 0, 1, -1, -1);
    const auto c = closed_form_coefficients(-1, spec, NumeralSystem::ternary_symmetric);
    const double amp = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(c.at_step(0)) < eps);
    CHECK(std::abs(c.at_step(-1) - Complex(0.0, amp)) < eps);
    CHECK(std::abs(c.at_step(-2) + Complex(0.0, amp)) < eps);
}

TEST_CASE("literal shifted reading diverges once d1 is nonzero") {
    const LatticeSpec spec(2, 0, 1, 0, Rational(-1, 4));
    const auto printed =
        closed_form_coefficients(-1, spec, NumeralSystem::shifted, FormulaReading::as_printed);
    const auto corrected = closed_form_coefficients(-1, spec, NumeralSystem::shifted);
    CHECK(std::abs(printed.at_step(0) - 0.375) < eps);
    CHECK(std::abs(corrected.at_step(0) - 0.25) < eps);

    // the corrected general form collapses to plain base-q at d1 = 0, while
    // the literal one still mirrors the attachment side and so stays wrong
    const LatticeSpec plain(2, 0, 2);
    const auto general = closed_form_coefficients(-1, plain, NumeralSystem::shifted);
    const auto base = closed_form_coefficients(-1, plain, NumeralSystem::base_q);
    const auto literal = closed_form_coefficients(-1, plain, NumeralSystem::shifted,
                                                  FormulaReading::as_printed);
    double collapse = 0.0, mirror = 0.0;
    for (std::int64_t t = 0; t < plain.size(); ++t) {
        collapse = std::max(collapse, std::abs(general.at_step(t) - base.at_step(t)));
        mirror = std::max(mirror, std::abs(literal.at_step(t) - base.at_step(t)));
    }
    CHECK(collapse < 1e-12);
    CHECK(mirror > 1e-3);
}

TEST_CASE("closed form preconditions") {
    CHECK_THROWS_AS(
        closed_form_coefficients(-1, LatticeSpec(2, 0, 1, 0, Rational(-1, 4)),
                                 NumeralSystem::base_q),
        std::domain_error);
    CHECK_THROWS_AS(
        closed_form_coefficients(-1, LatticeSpec(3, 0, 1), NumeralSystem::binary),
        std::domain_error);
    CHECK_THROWS_AS(
        closed_form_coefficients(-1, LatticeSpec(3, 0, 1), NumeralSystem::ternary_symmetric),
        std::domain_error);
}

TEST_CASE("reconstruction reproduces the oracle for twisted boundaries") {
    const LatticeSpec spec(2, 0, 1, 0, Rational(-1, 4));
    const auto coeffs = digit_shift_coefficients(-1, spec);
    const auto rebuilt = reconstruct_from_coordinate_shifts(coeffs, spec);
    const auto oracle = momentum_digit_oracle(-1, spec);
    CHECK(frobenius_distance(rebuilt, oracle) < eps);

    // wrapped corner entry carries the boundary twist
    const Complex want = -0.5 * std::polar(1.0, -std::numbers::pi / 4.0);
    CHECK(std::abs(rebuilt.at(0, 1) - want) < eps);
    CHECK(std::abs(oracle.at(0, 1) - want) < eps);
}

TEST_CASE("momentum-side reconstruction reproduces the coordinate digit") {
    const LatticeSpec spec(2, 1, 1);
    const auto coeffs = coordinate_digit_coefficients(0, spec);
    const auto rebuilt = reconstruct_from_momentum_shifts(coeffs, spec);
    CHECK(frobenius_distance(rebuilt, coordinate_digit(0, spec)) < eps);

    const LatticeSpec off(3, 1, 1, -1, 0);
    const auto r2 = reconstruct_from_momentum_shifts(coordinate_digit_coefficients(-1, off), off);
    CHECK(frobenius_distance(r2, coordinate_digit(-1, off)) < eps);

    CHECK_THROWS_AS(reconstruct_from_momentum_shifts(coeffs, off), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_from_coordinate_shifts(coeffs, spec), std::invalid_argument);
}
