#pragma once

#include <vector>

#include "mediator/rational.hpp"

namespace mediator {

using Matrix = std::vector<std::vector<Rational>>;  // row-major

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Rational> x;       // primal solution (Optimal)
  Rational objective;            // c.x (Optimal)
  std::vector<Rational> dual;    // y with A^T y <= c and b.y = c.x (Optimal)
  std::vector<Rational> farkas;  // y with A^T y >= 0 and b.y < 0 (Infeasible)
};

// min c.x subject to A x = b, x >= 0, by two-phase tableau simplex with
// Bland's rule in exact arithmetic.
LPResult minimize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace mediator
