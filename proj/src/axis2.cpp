#include "optmech/axis2.hpp"

#include <sstream>

#include "optmech/verify.hpp"

namespace optmech {

Axis2Partition axis2_partition(const Axis2Setting& s, int i) {
  Axis2Partition part;
  const Rational& qi = s.q[i];
  Rational qi2 = qi * qi;
  for (int k = 0; k < s.n; ++k) {
    if (k == i) continue;
    const Rational& qk = s.q[k];
    if (qk * qk > qi)
      part.s1.push_back(k);
    else if (qk > qi)
      part.s2.push_back(k);
    else if (qk > qi2)
      part.s3.push_back(k);
    else
      part.s4.push_back(k);
  }
  return part;
}

int axis2_case(const Axis2Setting& s, int i) {
  const Rational& a = s.values.a;
  const Rational& b = s.values.b;
  const Rational& qi = s.q[i];
  Rational threshold = (b - a) / (a + b);  // sign threshold of H(a | other=b)
  Axis2Partition part = axis2_partition(s, i);
  if (qi < threshold || !part.s1.empty()) return 3;
  if (qi * qi >= threshold && part.s2.empty()) return 1;
  return 2;
}

FlowGraph axis2_flow(const Axis2Setting& s, int agent) {
  const Rational& qi = s.q[agent];
  Rational hi = Rational(1) - qi;
  FlowGraph f;
  f.agent = agent;
  f.node_count = 4;
  f.source = {hi * hi, hi * qi, qi * hi, qi * qi};
  f.mu = {Rational(0), Rational(0), Rational(0), Rational(1)};
  Rational top = hi * hi / Rational(2);
  Rational bottom = (Rational(1) - qi * qi) / Rational(2);
  f.edges = {{0, 1, top}, {0, 2, top}, {1, 3, bottom}, {2, 3, bottom}};
  return f;
}

HierarchyRule axis2_scores(const Axis2Setting& s, const TypeSpace& ts) {
  HierarchyRule rule = HierarchyRule::uniform(s.n, 4, 2);
  const Rational& a = s.values.a;
  const Rational& b = s.values.b;
  for (int i = 0; i < s.n; ++i) {
    const Rational& qi = s.q[i];
    Rational near_b = a - (Rational(1) - qi) / (Rational(2) * qi) * (b - a);
    Rational near_a =
        a - (Rational(1) - qi * qi) / (Rational(2) * qi * qi) * (b - a);
    // Types in order (b,b), (b,a), (a,b), (a,a).
    rule.score[i][0] = {Score{b}, Score{b}};
    rule.score[i][1] = {Score{b}, Score{near_b}};
    rule.score[i][2] = {Score{near_b}, Score{b}};
    rule.score[i][3] = {Score{near_a}, Score{near_a}};
  }
  (void)ts;
  return rule;
}

std::vector<std::vector<std::vector<Rational>>> axis2_interim(
    const Axis2Setting& s) {
  TypeSpace ts = enumerate_types(s);
  return interim_from_expost(axis2_scores(s, ts), ts);
}

Axis2Mechanism axis2_mechanism(const Axis2Setting& s) {
  Axis2Mechanism out;
  out.setting = s;
  out.agent_case.reserve(s.n);
  for (int i = 0; i < s.n; ++i) out.agent_case.push_back(axis2_case(s, i));

  Mechanism mech;
  mech.ts = enumerate_types(s);
  mech.rule = axis2_scores(s, mech.ts);
  mech.pi = interim_from_expost(mech.rule, mech.ts);
  std::ostringstream prov;
  prov << "axis2(n=" << s.n << ",a=" << s.values.a << ",b=" << s.values.b
       << ",q=";
  for (int i = 0; i < s.n; ++i) prov << (i ? "," : "") << s.q[i];
  prov << ")";
  mech.provenance = prov.str();

  const Rational& a = s.values.a;
  const Rational& b = s.values.b;
  mech.pay.resize(s.n);
  for (int i = 0; i < s.n; ++i) {
    // pi(b) is report-b's win probability for either item; pi(a|b) the low
    // coordinate next to a b; pi(a|a) the low coordinate of (a,a).
    const Rational& pi_b = mech.pi[i][0][0];
    const Rational& pi_ab = mech.pi[i][2][0];
    const Rational& pi_aa = mech.pi[i][3][0];
    Rational pay_bb = Rational(2) * b * pi_b - (b - a) * (pi_ab + pi_aa);
    Rational pay_mixed = b * pi_b + a * pi_ab - (b - a) * pi_aa;
    Rational pay_aa = Rational(2) * a * pi_aa;
    mech.pay[i] = {pay_bb, pay_mixed, pay_mixed, pay_aa};
  }
  out.revenue = mech.revenue();
  out.mech = std::move(mech);
  return out;
}

}  // namespace optmech
