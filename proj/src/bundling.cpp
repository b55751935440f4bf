#include "optmech/bundling.hpp"

#include <sstream>
#include <stdexcept>

namespace optmech {

Rational bundling_threshold(const BundlingSetting& s) {
  return (s.v_max() - s.v_min()) / s.delta_mass.pow(s.items());
}

FlowGraph bundling_flow(const BundlingSetting& s) {
  TypeSpace ts = enumerate_types(s);
  const AgentTypes& ag = ts.agents[0];
  FlowGraph f;
  f.agent = 0;
  f.node_count = ag.count();
  f.source = ag.prob;
  f.mu.assign(ag.count(), Rational(0));
  f.mu[0] = Rational(1);  // the all-minimum type is index 0
  for (int t = 1; t < ag.count(); ++t) f.edges.push_back({t, 0, ag.prob[t]});
  return f;
}

BundlingMechanism bundling_mechanism(const BundlingSetting& s) {
  BundlingMechanism out;
  out.setting = s;
  const int m = s.items();
  out.price = s.c * Rational(m);
  for (int j = 0; j < m; ++j) out.price += s.supports[j].front();
  out.threshold = bundling_threshold(s);
  out.threshold_ok = s.c >= out.threshold;

  Mechanism mech;
  mech.ts = enumerate_types(s);
  const AgentTypes& ag = mech.ts.agents[0];
  // Constant positive score: the agent always receives every item. The flow's
  // virtual values coincide with this behavior exactly when c clears the
  // threshold.
  mech.rule = HierarchyRule::uniform(1, ag.count(), m);
  for (int t = 0; t < ag.count(); ++t)
    for (int j = 0; j < m; ++j) mech.rule.score[0][t][j] = Score{Rational(1)};
  mech.pi.resize(1);
  mech.pi[0].assign(ag.count(), std::vector<Rational>(m, Rational(1)));
  mech.pay.resize(1);
  mech.pay[0].assign(ag.count(), out.price);
  std::ostringstream prov;
  prov << "bundling(m=" << m << ",c=" << s.c << ")";
  mech.provenance = prov.str();
  out.mech = std::move(mech);
  return out;
}

BundlingSetting discretize_uniform(const Rational& c, int m, int grid) {
  if (grid < 1) throw std::invalid_argument("discretize_uniform: grid >= 1");
  if (m < 1) throw std::invalid_argument("discretize_uniform: m >= 1");
  Rational cell(1, grid);
  if (c < cell)
    throw std::invalid_argument("discretize_uniform: need c >= 1/grid");
  std::vector<Rational> sup, pr;
  for (int z = 0; z < grid; ++z) {
    sup.push_back(Rational(z + 1, grid));
    pr.push_back(cell);
  }
  return BundlingSetting::make(
      c - cell, std::vector<std::vector<Rational>>(m, sup),
      std::vector<std::vector<Rational>>(m, pr), cell);
}

}  // namespace optmech
