#pragma once

#include <vector>

#include "jnorm/rational.hpp"

namespace jnorm {

struct LpSolution {
  Rat value;
  std::vector<Rat> x;
};

// Minimizes c*x subject to A x <= b, x >= 0, by the two-phase primal
// simplex method with Bland's rule, entirely over exact rationals.
// Throws std::runtime_error if the program is infeasible or unbounded.
LpSolution lp_minimize(const std::vector<Rat>& c, const std::vector<std::vector<Rat>>& A,
                       const std::vector<Rat>& b);

}  // namespace jnorm
