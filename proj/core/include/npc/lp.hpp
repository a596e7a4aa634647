#pragma once

#include <cstdint>
#include <vector>

#include "npc/numeric.hpp"

namespace npc {

/// maximize c.x  subject to  A x = b,  x >= 0   (integer data, exact solution).
struct LinearProgram {
  std::vector<std::vector<std::int64_t>> a;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> c;
};

enum class LpStatus { kInfeasible, kOptimal, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  BigRational objective;
  std::vector<BigRational> x;
};

/// Two-phase tableau simplex with Bland's rule, run in 64-bit rationals and
/// repeated in arbitrary precision if anything overflows.
LpSolution solve(const LinearProgram& lp);

}  // namespace npc
