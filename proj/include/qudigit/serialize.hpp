#pragma once

#include "qudigit/commutators.hpp"
#include "qudigit/matrix.hpp"
#include "qudigit/operators.hpp"
#include "qudigit/physics.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qudigit {

// {n, ordering: "decreasing", re: N x N, im: N x N}. The double values round
// trip bit-exactly through this form.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Grid of "re+imi" cells with a header row; 17 significant digits.
std::string matrix_to_csv(const ComplexMatrix& m);

// Rows (A, re, im) over the canonical shifts.
std::string coefficients_to_csv(const ShiftCoefficients& coeffs);

// Rows (s, r, norm, commutes).
std::string report_to_csv(const CommutatorReport& report);

// Rows (n_plus, delta_p, err).
std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace qudigit
