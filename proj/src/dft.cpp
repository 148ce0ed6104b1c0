#include "qudigit/dft.hpp"

#include <cmath>

namespace qudigit {

ComplexMatrix dft_matrix(const LatticeSpec& spec) {
    const std::int64_t N = spec.size();
    const double root = 1.0 / std::sqrt(static_cast<double>(N));
    const std::vector<Rational> xs = coordinate_points(spec);
    const std::vector<Rational> ps = momentum_points(spec);

    ComplexMatrix f(N);
    for (std::int64_t i = 0; i < N; ++i)
        for (std::int64_t j = 0; j < N; ++j)
            f.at(i, j) = root * cis_turns(xs[static_cast<std::size_t>(i)] *
                                          ps[static_cast<std::size_t>(j)]);
    return f;
}

}  // namespace qudigit
