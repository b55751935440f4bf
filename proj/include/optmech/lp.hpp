#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "optmech/rational.hpp"
#include "optmech/types.hpp"

namespace optmech {

// Exact-rational solution of the ex-post revenue-maximization LP: variables
// x_{i,j}(v) in [0,1] per full profile, free payments p_i(v_i); BIC, BIR and
// per-item supply constraints. Ground-truth oracle; independent of every
// closed-form construction.
struct LPSolution {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::optimal;
  Rational objective;
  // allocation[(profile, agent, item)] -> x value (nonzero entries only).
  std::map<std::tuple<unsigned long long, int, int>, Rational> allocation;
  // payments[agent][type].
  std::vector<std::vector<Rational>> payments;
};

// Throws std::length_error when profiles*n*m + sum |types| exceeds guard.
LPSolution lp_optimal_revenue(const TypeSpace& ts,
                              unsigned long long guard = 5000);

// Generic dense exact simplex on max c.x s.t. A x <= b, x >= 0 with b >= 0
// (slack basis is feasible, so phase one is a no-op for this form). Bland's
// anti-cycling rule. Exposed for tests.
struct SimplexResult {
  bool bounded = true;
  Rational objective;
  std::vector<Rational> x;
};

SimplexResult simplex_max(const std::vector<std::vector<Rational>>& rows,
                          const std::vector<Rational>& rhs,
                          const std::vector<Rational>& objective);

}  // namespace optmech
