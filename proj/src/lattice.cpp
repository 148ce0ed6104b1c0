#include "qudigit/lattice.hpp"

#include <limits>
#include <stdexcept>

namespace qudigit {

LatticeSpec::LatticeSpec(int q, int n_minus, int n_plus, Rational d1_x, Rational d1_p)
    : q_(q), n_minus_(n_minus), n_plus_(n_plus),
      d1_x_(std::move(d1_x)), d1_p_(std::move(d1_p)) {
    if (q_ < 2) throw std::domain_error("lattice: radix must be at least 2");
    if (n_minus_ < 0 || n_plus_ < 0 || n_minus_ + n_plus_ < 1)
        throw std::domain_error("lattice: need n_minus + n_plus >= 1 with both non-negative");
    std::int64_t sz = 1;
    for (int i = 0; i < n(); ++i) {
        if (sz > std::numeric_limits<std::int64_t>::max() / q_)
            throw std::domain_error("lattice: size overflows 64-bit indexing");
        sz *= q_;
    }
    size_ = sz;
    if (coordinate_period() * delta_p() != 1)
        throw std::logic_error("lattice: Xi * dp must be 1");
    if (delta_x() * delta_p() != Rational(1, size_))
        throw std::logic_error("lattice: dx * dp must be 1/N");
}

Rational LatticeSpec::coordinate_offset() const {
    return d1_x_ * (coordinate_period() - delta_x()) / (q_ - 1);
}

Rational LatticeSpec::momentum_offset() const {
    return d1_p_ * (momentum_period() - delta_p()) / (q_ - 1);
}

Rational LatticeSpec::coordinate_value(std::int64_t m) const {
    return Rational(m) * delta_x() + coordinate_offset();
}

Rational LatticeSpec::momentum_value(std::int64_t k) const {
    return Rational(k) * delta_p() + momentum_offset();
}

std::vector<Rational> coordinate_points(const LatticeSpec& spec) {
    std::vector<Rational> pts;
    pts.reserve(static_cast<std::size_t>(spec.size()));
    for (std::int64_t i = 0; i < spec.size(); ++i)
        pts.push_back(spec.coordinate_value(lattice_index_of_row(i, spec.size())));
    return pts;
}

std::vector<Rational> momentum_points(const LatticeSpec& spec) {
    std::vector<Rational> pts;
    pts.reserve(static_cast<std::size_t>(spec.size()));
    for (std::int64_t i = 0; i < spec.size(); ++i)
        pts.push_back(spec.momentum_value(lattice_index_of_row(i, spec.size())));
    return pts;
}

BasisIndex index_of(const Rational& value, const LatticeSpec& spec, Axis axis) {
    const Rational step = (axis == Axis::coordinate) ? spec.delta_x() : spec.delta_p();
    const Rational period =
        (axis == Axis::coordinate) ? spec.coordinate_period() : spec.momentum_period();
    const Rational offset =
        (axis == Axis::coordinate) ? spec.coordinate_offset() : spec.momentum_offset();

    const Rational steps = rat_mod(value - offset, period) / step;
    if (denominator(steps) != 1)
        throw std::domain_error("index_of: value is not a lattice node");
    const std::int64_t m = numerator(steps).convert_to<std::int64_t>();
    return BasisIndex{row_of_lattice_index(m, spec.size())};
}

}  // namespace qudigit
