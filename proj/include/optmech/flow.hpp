#pragma once

#include <optional>
#include <string>
#include <vector>

#include "optmech/rational.hpp"
#include "optmech/types.hpp"

namespace optmech {

struct FlowEdge {
  int from = 0;
  int to = 0;
  Rational amount;  // lambda(from, to) >= 0
};

// Per-agent dual flow over the agent's type graph: source injects prob[t]
// into every node, lambda carries flow along edges, mu drains to the sink.
struct FlowGraph {
  int agent = 0;
  int node_count = 0;
  std::vector<FlowEdge> edges;
  std::vector<Rational> mu;      // [node]
  std::vector<Rational> source;  // [node], equals Pr[type] when feasible
};

struct FlowFeasibility {
  bool ok = true;
  int violating_node = -1;
  std::string detail;
};

// Conservation at every node against the type space's probabilities, plus
// nonnegativity of lambda and mu. Throws std::invalid_argument if the flow's
// node set does not match the agent's type list.
FlowFeasibility check_flow_feasible(const FlowGraph& f, const AgentTypes& ag);

// A simple source -> nodes... -> sink path (source and sink implicit).
struct FlowPath {
  std::vector<int> nodes;
};

struct FlowDecomposition {
  std::vector<FlowPath> paths;
  std::vector<Rational> xi;  // path flows, > 0
};

// Path-peeling decomposition of an acyclic flow: start nodes in index order,
// successors by lowest index, sink preferred once mu residual is positive.
// Throws std::invalid_argument if the positive-lambda support has a cycle.
FlowDecomposition decompose_flow(const FlowGraph& f);

// H[t][j] = v[t][j] - (1/Pr[t]) * sum_{t'} lambda(t', t) (v[t'][j] - v[t][j]).
std::vector<std::vector<Rational>> virtual_values(const FlowGraph& f,
                                                  const AgentTypes& ag);

// Flow-induced payments along the decomposition paths, given the interim
// allocation table of this agent (path = (s, v^1..v^L, sink), steps 1..L-1):
//   p(t) = (1/Pr[t]) sum_{paths from t} xi * ( sum_j v[t][j] pi[t][j]
//            - sum_z sum_j (v[z][j]-v[z+1][j]) pi[z+1][j] ).
std::vector<Rational> induced_payments(
    const FlowGraph& f, const FlowDecomposition& d, const AgentTypes& ag,
    const std::vector<std::vector<Rational>>& pi_agent);

}  // namespace optmech
