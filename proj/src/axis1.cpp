#include "optmech/axis1.hpp"

#include <sstream>

#include "optmech/binomial.hpp"

namespace optmech {

// Total flow crossing the cut between layers k+1 and k, divided over the
// (m-k) C(m,k) parallel edges.
Rational axis1_edge_flow(const Axis1Setting& s, int k) {
  Rational total(0);
  Rational hi = Rational(1) - s.p;
  for (int z = k + 1; z <= s.m; ++z)
    total += Rational(binom(s.m, z), mpz_class(1)) * hi.pow(z) *
             s.p.pow(s.m - z);
  Rational cut_edges(mpz_class(s.m - k) * binom(s.m, k), mpz_class(1));
  return total / cut_edges;
}

Rational axis1_f(const Axis1Setting& s, int k) {
  if (k == s.m) return s.values.a;  // empty sum
  Rational layer_prob = (Rational(1) - s.p).pow(k) * s.p.pow(s.m - k);
  return s.values.a -
         axis1_edge_flow(s, k) / layer_prob * (s.values.b - s.values.a);
}

int axis1_kstar(const Axis1Setting& s) {
  for (int k = 0; k <= s.m; ++k)
    if (axis1_f(s, k).sign() > 0) return k;
  return s.m;  // unreachable: f(m) = a > 0
}

Rational axis1_pi_b(const Axis1Setting& s) {
  return partition_sum(s.n, s.p, Rational(1) - s.p);
}

Rational axis1_pi_a(const Axis1Setting& s, int k, int kstar) {
  if (k < kstar) return Rational(0);
  Rational hi = Rational(1) - s.p;
  Rational le = binom_cdf(s.m - 1, hi, k);
  Rational lt = binom_cdf_strict(s.m - 1, hi, k);
  Rational at = binom_pmf(s.m - 1, hi, k);
  return s.p.pow(s.n - 1) * (le.pow(s.n) - lt.pow(s.n)) /
         (Rational(s.n) * at);
}

Axis1Mechanism axis1_mechanism(const Axis1Setting& s) {
  Axis1Mechanism m;
  m.setting = s;
  m.f.reserve(s.m + 1);
  for (int k = 0; k <= s.m; ++k) m.f.push_back(axis1_f(s, k));
  m.kstar = axis1_kstar(s);
  m.pi_b = axis1_pi_b(s);
  m.pi_a.reserve(s.m);
  for (int k = 0; k < s.m; ++k) m.pi_a.push_back(axis1_pi_a(s, k, m.kstar));

  const Rational& a = s.values.a;
  const Rational& b = s.values.b;
  m.pay.reserve(s.m + 1);
  for (int k = 0; k <= s.m; ++k) {
    Rational base = Rational(k) * b * m.pi_b;
    if (k < m.kstar) {
      m.pay.push_back(base);
      continue;
    }
    Rational p = base;
    if (k < s.m) p += Rational(s.m - k) * a * m.pi_a[k];
    Rational trailing(0);
    for (int tau = m.kstar; tau < k; ++tau) trailing += m.pi_a[tau];
    p -= (b - a) * trailing;
    m.pay.push_back(std::move(p));
  }

  // Revenue via the dual objective in closed form: each item contributes b
  // unless all agents are low on it, in which case the best remaining layer
  // score f(k) is collected when nonnegative (k >= kstar).
  Rational hi = Rational(1) - s.p;
  Rational sum(0);
  for (int k = m.kstar; k <= s.m - 1; ++k) {
    Rational le = binom_cdf(s.m - 1, hi, k);
    Rational lt = binom_cdf_strict(s.m - 1, hi, k);
    sum += (le.pow(s.n) - lt.pow(s.n)) * m.f[k];
  }
  m.revenue = Rational(s.m) *
              (b * (Rational(1) - s.p.pow(s.n)) + s.p.pow(s.n) * sum);
  return m;
}

FlowGraph axis1_flow(const Axis1Setting& s, int agent) {
  TypeSpace ts = enumerate_types(s);
  const AgentTypes& ag = ts.agents[0];
  FlowGraph f;
  f.agent = agent;
  f.node_count = ag.count();
  f.source = ag.prob;
  f.mu.assign(ag.count(), Rational(0));
  f.mu.back() = Rational(1);  // the all-low type is last in type order
  std::vector<Rational> edge_by_layer(s.m);
  for (int k = 0; k < s.m; ++k) edge_by_layer[k] = axis1_edge_flow(s, k);
  for (int t = 0; t < ag.count(); ++t) {
    int k = ag.high_count[t];
    if (k == 0) continue;
    for (int j = 0; j < s.m; ++j) {
      bool low = (t >> (s.m - 1 - j)) & 1;
      if (low) continue;
      int child = t | (1 << (s.m - 1 - j));
      f.edges.push_back({t, child, edge_by_layer[k - 1]});
    }
  }
  return f;
}

HierarchyRule axis1_scores(const Axis1Setting& s, const TypeSpace& ts) {
  HierarchyRule rule =
      HierarchyRule::uniform(ts.agent_count(), ts.agents[0].count(), s.m);
  std::vector<Rational> f(s.m + 1);
  for (int k = 0; k <= s.m; ++k) f[k] = axis1_f(s, k);
  for (int i = 0; i < ts.agent_count(); ++i) {
    const AgentTypes& ag = ts.agents[i];
    for (int t = 0; t < ag.count(); ++t) {
      int k = ag.high_count[t];
      for (int j = 0; j < s.m; ++j) {
        bool low = ag.value[t][j] == s.values.a;
        rule.score[i][t][j].value = low ? f[k] : s.values.b;
      }
    }
  }
  return rule;
}

Mechanism axis1_expand(const Axis1Mechanism& m) {
  const Axis1Setting& s = m.setting;
  Mechanism mech;
  mech.ts = enumerate_types(s);
  mech.rule = axis1_scores(s, mech.ts);
  std::ostringstream prov;
  prov << "axis1(n=" << s.n << ",m=" << s.m << ",a=" << s.values.a
       << ",b=" << s.values.b << ",p=" << s.p << ")";
  mech.provenance = prov.str();
  mech.pi.resize(s.n);
  mech.pay.resize(s.n);
  const AgentTypes& ag = mech.ts.agents[0];
  for (int i = 0; i < s.n; ++i) {
    mech.pi[i].assign(ag.count(), std::vector<Rational>(s.m));
    mech.pay[i].resize(ag.count());
    for (int t = 0; t < ag.count(); ++t) {
      int k = ag.high_count[t];
      for (int j = 0; j < s.m; ++j) {
        bool low = ag.value[t][j] == s.values.a;
        mech.pi[i][t][j] = low ? (k < s.m ? m.pi_a[k] : Rational(0)) : m.pi_b;
      }
      mech.pay[i][t] = m.pay[k];
    }
  }
  return mech;
}

}  // namespace optmech
