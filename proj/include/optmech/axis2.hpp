#pragma once

#include <array>
#include <vector>

#include "optmech/flow.hpp"
#include "optmech/hierarchy.hpp"
#include "optmech/setting.hpp"

namespace optmech {

// Partition of the other agents by how their low-coordinate scores compare
// to agent i's; square-root thresholds are evaluated by squaring so all
// comparisons stay rational. Indices refer to sorted agent slots.
struct Axis2Partition {
  std::vector<int> s1;  // q_k^2 >  q_i   (their (a,a) score beats i's (a,b))
  std::vector<int> s2;  // q_i < q_k, q_k^2 <= q_i
  std::vector<int> s3;  // q_i^2 < q_k <= q_i
  std::vector<int> s4;  // q_k <= q_i^2
};

struct Axis2Mechanism {
  Axis2Setting setting;
  std::vector<int> agent_case;  // per sorted slot, in {1,2,3}
  Mechanism mech;
  Rational revenue;
};

Axis2Partition axis2_partition(const Axis2Setting& s, int i);

// Case of agent i: 3 when an a-report can never win (q_i below the score-
// sign threshold, or S1 nonempty), 1 when both low scores are nonnegative
// and nobody in between interferes (S1 = S2 = empty), else 2.
int axis2_case(const Axis2Setting& s, int i);

// Per-agent dual flow (Fig.-2 shape): (b,b) splits (1-q_i)^2/2 to each of
// (b,a),(a,b); both forward (1-q_i^2)/2 into (a,a); mu(a,a) = 1.
FlowGraph axis2_flow(const Axis2Setting& s, int agent);

// Scores: b on high coordinates, a - (1-q_i)/(2 q_i) (b-a) on a low
// coordinate next to a b, a - (1-q_i^2)/(2 q_i^2) (b-a) when both are low.
HierarchyRule axis2_scores(const Axis2Setting& s, const TypeSpace& ts);

// Exact hierarchy-induced interim allocations (tie-aware: equal q_i agents
// share). Reduces to the closed-form case products when all score
// comparisons are strict.
std::vector<std::vector<std::vector<Rational>>> axis2_interim(
    const Axis2Setting& s);

Axis2Mechanism axis2_mechanism(const Axis2Setting& s);

}  // namespace optmech
