#include "qudigit/lattice.hpp"

#include <doctest.h>

using namespace qudigit;

TEST_CASE("spacings and periods are the dual pair of q powers") {
    const LatticeSpec spec(3, 1, 2);
    CHECK(spec.size() == 27);
    CHECK(spec.delta_x() == Rational(1, 3));
    CHECK(spec.coordinate_period() == 9);
    CHECK(spec.delta_p() == Rational(1, 9));
    CHECK(spec.momentum_period() == 3);
    CHECK(spec.coordinate_period() * spec.delta_p() == 1);
    CHECK(spec.delta_x() * spec.delta_p() == Rational(1, spec.size()));
}

TEST_CASE("basis ordering lists node values in decreasing order") {
    const LatticeSpec spec(2, 0, 1);
    const auto pts = coordinate_points(spec);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == 1);
    CHECK(pts[1] == 0);
}

TEST_CASE("unit digit shifts recentre both axes") {
    const LatticeSpec spec(3, 0, 1, -1, -1);
    CHECK(spec.coordinate_offset() == -1);
    CHECK(spec.momentum_offset() == Rational(-1, 3));

    const auto xs = coordinate_points(spec);
    CHECK(xs == std::vector<Rational>{1, 0, -1});
    const auto ps = momentum_points(spec);
    CHECK(ps == std::vector<Rational>{Rational(1, 3), 0, Rational(-1, 3)});
}

TEST_CASE("fractional momentum shift lands between the integer nodes") {
    const LatticeSpec spec(2, 0, 1, 0, Rational(-1, 4));
    CHECK(spec.momentum_offset() == Rational(-1, 8));
    CHECK(spec.momentum_value(0) == Rational(-1, 8));
    CHECK(spec.momentum_value(1) == Rational(3, 8));
}

TEST_CASE("index_of inverts the node map modulo the axis period") {
    const LatticeSpec spec(2, 1, 1);
    CHECK(index_of(Rational(1, 2), spec, Axis::coordinate).i == 2);
    CHECK(index_of(Rational(3, 2), spec, Axis::coordinate).i == 0);
    // reduction by the coordinate period
    CHECK(index_of(Rational(5, 2), spec, Axis::coordinate).i == 2);
    CHECK(index_of(Rational(-1, 2), spec, Axis::coordinate).i == 0);
    CHECK(index_of(Rational(1, 2), spec, Axis::momentum).i == 2);
    CHECK_THROWS_AS(index_of(Rational(1, 3), spec, Axis::coordinate), std::domain_error);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(LatticeSpec(1, 0, 1), std::domain_error);
    CHECK_THROWS_AS(LatticeSpec(2, -1, 2), std::domain_error);
    CHECK_THROWS_AS(LatticeSpec(2, 0, 0), std::domain_error);
    CHECK_THROWS_AS(LatticeSpec(2, 0, 70), std::domain_error);
}
