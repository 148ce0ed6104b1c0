#include "qudigit/matrix.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace qudigit;
using Complex = std::complex<double>;

namespace {

ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m.at(0, 1) = Complex(0.0, -1.0);
    m.at(1, 0) = Complex(0.0, 1.0);
    return m;
}

}  // namespace

TEST_CASE("construction and identity") {
    const ComplexMatrix z(3);
    for (std::int64_t i = 0; i < 3; ++i)
        for (std::int64_t j = 0; j < 3; ++j) CHECK(z.at(i, j) == Complex(0.0));

    const auto id = ComplexMatrix::identity(3);
    CHECK(trace(id) == Complex(3.0));
    CHECK(is_permutation(id));

    CHECK_THROWS_AS(ComplexMatrix(0), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(-2), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(65536), std::invalid_argument);
}

TEST_CASE("arithmetic agrees with hand computation") {
    ComplexMatrix a(2);
    a.at(0, 0) = 1.0;
    a.at(0, 1) = 2.0;
    a.at(1, 0) = 3.0;
    a.at(1, 1) = 4.0;
    ComplexMatrix b(2);
    b.at(0, 0) = Complex(0.0, 1.0);
    b.at(1, 1) = 2.0;

    const auto ab = matmul(a, b);
    CHECK(ab.at(0, 0) == Complex(0.0, 1.0));
    CHECK(ab.at(0, 1) == Complex(4.0));
    CHECK(ab.at(1, 0) == Complex(0.0, 3.0));
    CHECK(ab.at(1, 1) == Complex(8.0));

    const auto s = sub(add(a, a), scale(2.0, a));
    CHECK(frobenius_norm(s) == 0.0);

    const auto y = pauli_y();
    const auto ya = adjoint(y);
    CHECK(ya.at(0, 1) == Complex(0.0, -1.0));
    CHECK(ya.at(1, 0) == Complex(0.0, 1.0));

    CHECK_THROWS_AS(matmul(a, ComplexMatrix(3)), std::invalid_argument);
}

TEST_CASE("apply multiplies a column vector") {
    const auto y = pauli_y();
    const auto v = apply(y, {Complex(1.0), Complex(0.0)});
    REQUIRE(v.size() == 2);
    CHECK(v[0] == Complex(0.0));
    CHECK(v[1] == Complex(0.0, 1.0));
    CHECK_THROWS_AS(apply(y, {Complex(1.0)}), std::invalid_argument);
}

TEST_CASE("norms and distances") {
    ComplexMatrix a(2);
    a.at(0, 1) = Complex(3.0, 4.0);
    CHECK(frobenius_norm(a) == doctest::Approx(5.0));
    CHECK(frobenius_distance(a, ComplexMatrix(2)) == doctest::Approx(5.0));
}

TEST_CASE("structural predicates") {
    const auto y = pauli_y();
    CHECK(is_hermitian(y));
    CHECK(is_unitary(y));
    CHECK_FALSE(is_permutation(y));

    ComplexMatrix shift(3);
    shift.at(0, 2) = 1.0;
    shift.at(1, 0) = 1.0;
    shift.at(2, 1) = 1.0;
    CHECK(is_permutation(shift));
    CHECK(is_unitary(shift));
    CHECK_FALSE(is_hermitian(shift));

    ComplexMatrix bad(2);
    bad.at(0, 0) = 1.0;
    bad.at(0, 1) = 1.0;
    bad.at(1, 0) = 1.0;
    CHECK_FALSE(is_permutation(bad));
    CHECK_FALSE(is_unitary(bad));

    // tolerance is honoured
    ComplexMatrix nearly = ComplexMatrix::identity(2);
    nearly.at(0, 1) = 1e-13;
    nearly.at(1, 0) = 1e-13;
    CHECK(is_hermitian(nearly));
    CHECK(is_unitary(nearly));
    CHECK_FALSE(is_unitary(nearly, 1e-15));
}
