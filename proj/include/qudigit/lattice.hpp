#pragma once

#include "qudigit/digits.hpp"
#include "qudigit/rational.hpp"

#include <cstdint>
#include <vector>

namespace qudigit {

// Geometry of one q-ary lattice pair: N = q^n coordinate nodes with spacing
// dx = q^{-n_minus} and period Xi = q^{n_plus}, the dual momentum lattice with
// spacing dp = q^{-n_plus} and period Pi = q^{n_minus}, plus the least-digit
// shifts d1 of both alphabets. Node values follow the constructive map
//   value(m) = m * step + d1 * (period - step) / (q - 1),
// which reduces to m * step for d1 = 0.
class LatticeSpec {
public:
    LatticeSpec(int q, int n_minus, int n_plus, Rational d1_x = 0, Rational d1_p = 0);

    int q() const { return q_; }
    int n_minus() const { return n_minus_; }
    int n_plus() const { return n_plus_; }
    int n() const { return n_minus_ + n_plus_; }
    std::int64_t size() const { return size_; }

    Rational delta_x() const { return rat_pow(q_, -n_minus_); }
    Rational coordinate_period() const { return rat_pow(q_, n_plus_); }  // Xi
    Rational delta_p() const { return rat_pow(q_, -n_plus_); }
    Rational momentum_period() const { return rat_pow(q_, n_minus_); }  // Pi

    const Rational& d1_x() const { return d1_x_; }
    const Rational& d1_p() const { return d1_p_; }

    Rational coordinate_offset() const;  // d1_x (Xi - dx) / (q - 1)
    Rational momentum_offset() const;    // d1_p (Pi - dp) / (q - 1)

    Rational coordinate_value(std::int64_t m) const;
    Rational momentum_value(std::int64_t k) const;

private:
    int q_;
    int n_minus_;
    int n_plus_;
    std::int64_t size_;
    Rational d1_x_;
    Rational d1_p_;
};

enum class Axis { coordinate, momentum };

// Row position in the decreasing-value basis ordering: row i carries the
// (N - 1 - i)-th lattice index.
struct BasisIndex {
    std::int64_t i = 0;
};

inline std::int64_t lattice_index_of_row(std::int64_t i, std::int64_t N) { return N - 1 - i; }
inline std::int64_t row_of_lattice_index(std::int64_t m, std::int64_t N) { return N - 1 - m; }

// Node values in basis order (strictly decreasing), length N.
std::vector<Rational> coordinate_points(const LatticeSpec& spec);
std::vector<Rational> momentum_points(const LatticeSpec& spec);

// Inverse point lookup. The value is first reduced modulo the axis period;
// anything that then misses the node set raises std::domain_error.
BasisIndex index_of(const Rational& value, const LatticeSpec& spec, Axis axis);

}  // namespace qudigit
