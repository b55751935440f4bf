#include "optmech/flow.hpp"

#include <algorithm>
#include <stdexcept>

namespace optmech {

namespace {

// Outgoing adjacency with edge indices, successors sorted by target node.
std::vector<std::vector<int>> out_edges(const FlowGraph& f) {
  std::vector<std::vector<int>> adj(f.node_count);
  for (int e = 0; e < static_cast<int>(f.edges.size()); ++e)
    adj[f.edges[e].from].push_back(e);
  for (auto& v : adj)
    std::sort(v.begin(), v.end(), [&](int x, int y) {
      return f.edges[x].to < f.edges[y].to;
    });
  return adj;
}

void check_shape(const FlowGraph& f, int expected_nodes) {
  if (f.node_count != expected_nodes ||
      static_cast<int>(f.mu.size()) != f.node_count ||
      static_cast<int>(f.source.size()) != f.node_count)
    throw std::invalid_argument("flow: node set does not match type space");
  for (const FlowEdge& e : f.edges)
    if (e.from < 0 || e.from >= f.node_count || e.to < 0 ||
        e.to >= f.node_count || e.from == e.to)
      throw std::invalid_argument("flow: edge endpoints out of range");
}

}  // namespace

FlowFeasibility check_flow_feasible(const FlowGraph& f, const AgentTypes& ag) {
  check_shape(f, ag.count());
  for (const FlowEdge& e : f.edges)
    if (e.amount.sign() < 0)
      return {false, e.from, "negative edge flow"};
  for (int t = 0; t < f.node_count; ++t) {
    if (f.mu[t].sign() < 0) return {false, t, "negative sink flow"};
    if (!(f.source[t] == ag.prob[t]))
      return {false, t, "source injection differs from type probability"};
  }
  std::vector<Rational> in(f.node_count), out(f.node_count);
  for (const FlowEdge& e : f.edges) {
    in[e.to] += e.amount;
    out[e.from] += e.amount;
  }
  for (int t = 0; t < f.node_count; ++t) {
    if (!(ag.prob[t] + in[t] == out[t] + f.mu[t]))
      return {false, t, "conservation violated"};
  }
  return {};
}

FlowDecomposition decompose_flow(const FlowGraph& f) {
  check_shape(f, f.node_count);
  auto adj = out_edges(f);

  // Cycle check on the positive-lambda support (Kahn).
  {
    std::vector<int> indeg(f.node_count, 0);
    for (const FlowEdge& e : f.edges)
      if (e.amount.sign() > 0) ++indeg[e.to];
    std::vector<int> stack;
    for (int t = 0; t < f.node_count; ++t)
      if (indeg[t] == 0) stack.push_back(t);
    int seen = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++seen;
      for (int e : adj[u])
        if (f.edges[e].amount.sign() > 0 && --indeg[f.edges[e].to] == 0)
          stack.push_back(f.edges[e].to);
    }
    if (seen != f.node_count)
      throw std::invalid_argument("decompose_flow: flow support has a cycle");
  }

  std::vector<Rational> src(f.source);
  std::vector<Rational> mu(f.mu);
  std::vector<Rational> lam;
  lam.reserve(f.edges.size());
  for (const FlowEdge& e : f.edges) lam.push_back(e.amount);

  FlowDecomposition d;
  for (int start = 0; start < f.node_count; ++start) {
    while (src[start].sign() > 0) {
      // Walk to the sink through positive residuals; prefer draining to the
      // sink, otherwise take the lowest-index successor.
      std::vector<int> nodes{start};
      std::vector<int> used_edges;
      Rational bottleneck = src[start];
      int at = start;
      while (mu[at].sign() <= 0) {
        int chosen = -1;
        for (int e : adj[at])
          if (lam[e].sign() > 0) {
            chosen = e;
            break;
          }
        if (chosen < 0)
          throw std::logic_error(
              "decompose_flow: stuck node (flow not conserved?)");
        bottleneck = min(bottleneck, lam[chosen]);
        used_edges.push_back(chosen);
        at = f.edges[chosen].to;
        nodes.push_back(at);
      }
      bottleneck = min(bottleneck, mu[at]);
      src[start] -= bottleneck;
      for (int e : used_edges) lam[e] -= bottleneck;
      mu[at] -= bottleneck;
      d.paths.push_back(FlowPath{std::move(nodes)});
      d.xi.push_back(bottleneck);
    }
  }
  return d;
}

std::vector<std::vector<Rational>> virtual_values(const FlowGraph& f,
                                                  const AgentTypes& ag) {
  check_shape(f, ag.count());
  const int m = ag.value.empty() ? 0 : static_cast<int>(ag.value[0].size());
  std::vector<std::vector<Rational>> h(f.node_count,
                                       std::vector<Rational>(m));
  for (int t = 0; t < f.node_count; ++t)
    for (int j = 0; j < m; ++j) h[t][j] = ag.value[t][j];
  for (const FlowEdge& e : f.edges) {
    if (e.amount.is_zero()) continue;
    const Rational& pr = ag.prob[e.to];
    if (pr.is_zero())
      throw std::domain_error("virtual_values: zero-probability node");
    for (int j = 0; j < m; ++j) {
      Rational diff = ag.value[e.from][j] - ag.value[e.to][j];
      if (!diff.is_zero()) h[e.to][j] -= e.amount * diff / pr;
    }
  }
  return h;
}

std::vector<Rational> induced_payments(
    const FlowGraph& f, const FlowDecomposition& d, const AgentTypes& ag,
    const std::vector<std::vector<Rational>>& pi_agent) {
  check_shape(f, ag.count());
  if (static_cast<int>(pi_agent.size()) != ag.count())
    throw std::invalid_argument("induced_payments: pi table size mismatch");
  const int m = static_cast<int>(ag.value[0].size());
  std::vector<Rational> pay(ag.count());
  for (std::size_t pi_idx = 0; pi_idx < d.paths.size(); ++pi_idx) {
    const auto& nodes = d.paths[pi_idx].nodes;
    const Rational& xi = d.xi[pi_idx];
    const int start = nodes.front();
    Rational term(0);
    for (int j = 0; j < m; ++j)
      term += ag.value[start][j] * pi_agent[start][j];
    for (std::size_t z = 0; z + 1 < nodes.size(); ++z) {
      const int u = nodes[z], w = nodes[z + 1];
      for (int j = 0; j < m; ++j) {
        Rational diff = ag.value[u][j] - ag.value[w][j];
        if (!diff.is_zero()) term -= diff * pi_agent[w][j];
      }
    }
    pay[start] += xi * term;
  }
  for (int t = 0; t < ag.count(); ++t) pay[t] /= ag.prob[t];
  return pay;
}

}  // namespace optmech
