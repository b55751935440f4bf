#pragma once

#include <optional>
#include <vector>

#include "optmech/flow.hpp"
#include "optmech/hierarchy.hpp"
#include "optmech/verify.hpp"

namespace optmech {

// Objective of the dual at the minimal feasible kappa:
//   sum over full profiles v and items j of Pr[v] * [max_i H_{i,j}(v_i)]+.
// The profile sum is associative and exact, so the parallel kernel returns
// bit-identical results to the serial reference.
Rational dual_objective(const std::vector<FlowGraph>& flows,
                        const TypeSpace& ts,
                        unsigned long long profile_guard = 1ull << 20);
Rational dual_objective_serial(const std::vector<FlowGraph>& flows,
                               const TypeSpace& ts,
                               unsigned long long profile_guard = 1ull << 20);

// Bundled optimality evidence per Theorem 3: feasible flows + BIC-IR
// mechanism + exact revenue/dual-objective equality.
struct OptimalityCertificate {
  bool flow_feasible = false;
  int flow_violation_agent = -1;
  FlowFeasibility flow_detail;
  bool bic_ok = false;
  std::optional<DeviationWitness> bic_witness;
  bool bir_ok = false;
  std::optional<IrWitness> bir_witness;
  bool interim_checked = false;   // pi recomputation ran (within guard)
  bool interim_consistent = true; // recomputed pi equals the stated tables
  Rational dual_objective_value;
  Rational mechanism_revenue;
  bool optimal = false;
};

OptimalityCertificate certify(const std::vector<FlowGraph>& flows,
                              const Mechanism& mech, const TypeSpace& ts,
                              unsigned long long profile_guard = 1ull << 20,
                              unsigned long long interim_guard = 1000000);

}  // namespace optmech
