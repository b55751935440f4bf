#include "doctest.h"
#include "optmech/axis2.hpp"
#include "optmech/dual.hpp"
#include "optmech/lp.hpp"
#include "optmech/verify.hpp"

using namespace optmech;

namespace {
Axis2Setting fix(long bn, long bd, std::vector<Rational> q) {
  const int n = static_cast<int>(q.size());
  return Axis2Setting::make(n, Rational(1), Rational(bn, bd), std::move(q));
}
}  // namespace

TEST_CASE("per-agent flow: conservation and plug-in values") {
  Axis2Setting s = fix(2, 1, {Rational(1, 2), Rational(1, 3)});
  TypeSpace ts = enumerate_types(s);
  for (int i = 0; i < 2; ++i)
    CHECK(check_flow_feasible(axis2_flow(s, i), ts.agents[i]).ok);
  FlowGraph f = axis2_flow(s, 0);  // q = 1/2
  CHECK(f.edges[0].amount == Rational(1, 8));  // (b,b)->(b,a)
  CHECK(f.mu[3] == Rational(1));
}

TEST_CASE("scores at q=1/2, a=1, b=2") {
  Axis2Setting s = fix(2, 1, {Rational(1, 2), Rational(1, 2)});
  TypeSpace ts = enumerate_types(s);
  HierarchyRule rule = axis2_scores(s, ts);
  CHECK(rule.at(0, 2, 0).value == Rational(1, 2));   // low next to b
  CHECK(rule.at(0, 3, 0).value == Rational(-1, 2));  // both low
  CHECK(rule.at(0, 0, 0).value == Rational(2));
}

TEST_CASE("scores are monotone in q") {
  Axis2Setting s = fix(2, 1, {Rational(3, 5), Rational(2, 5)});
  TypeSpace ts = enumerate_types(s);
  HierarchyRule rule = axis2_scores(s, ts);
  CHECK(rule.at(0, 2, 0).value > rule.at(1, 2, 0).value);
  CHECK(rule.at(0, 3, 0).value > rule.at(1, 3, 0).value);
}

TEST_CASE("partition: exact square-root comparisons") {
  // q = (4/5, 3/5, 1/3); for the agent with q_i = 3/5: (4/5)^2 = 16/25 > 3/5
  // puts agent 0 in S1, and 1/3 <= q_i^2 = 9/25 puts the third agent in S4.
  Axis2Setting s =
      fix(2, 1, {Rational(4, 5), Rational(3, 5), Rational(1, 3)});
  Axis2Partition part = axis2_partition(s, 1);
  CHECK(part.s1 == std::vector<int>{0});
  CHECK(part.s2.empty());
  CHECK(part.s3.empty());
  CHECK(part.s4 == std::vector<int>{2});

  // n = 1: every set empty.
  Axis2Setting s1 = fix(2, 1, {Rational(1, 2)});
  Axis2Partition p1 = axis2_partition(s1, 0);
  CHECK((p1.s1.empty() && p1.s2.empty() && p1.s3.empty() && p1.s4.empty()));

  // All equal: S3 holds everyone else.
  Axis2Setting se = fix(2, 1, {Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  Axis2Partition pe = axis2_partition(se, 1);
  CHECK(pe.s1.empty());
  CHECK(pe.s2.empty());
  CHECK(pe.s3 == std::vector<int>{0, 2});
}

TEST_CASE("case classification") {
  // n=1, a=1, b=2: threshold (b-a)/(a+b) = 1/3.
  CHECK(axis2_case(fix(2, 1, {Rational(3, 5)}), 0) == 1);  // 9/25 >= 1/3
  CHECK(axis2_case(fix(2, 1, {Rational(1, 2)}), 0) == 2);  // 1/4 < 1/3 <= 1/2
  CHECK(axis2_case(fix(2, 1, {Rational(1, 4)}), 0) == 3);  // 1/4 < 1/3
  // S1 nonempty forces case 3 regardless of q_i's own range.
  Axis2Setting s = fix(2, 1, {Rational(9, 10), Rational(3, 5)});
  CHECK(axis2_case(s, 1) == 3);  // (9/10)^2 = 81/100 > 3/5
}

TEST_CASE("interim at n=1 collapses to score signs") {
  // Case 1: both scores nonnegative, every product empty.
  auto pi1 = axis2_interim(fix(2, 1, {Rational(3, 5)}));
  CHECK(pi1[0][2][0] == Rational(1));
  CHECK(pi1[0][3][0] == Rational(1));
  // Case 2 at q=1/2: pi(a|b) = 1, pi(a|a) = 0.
  auto pi2 = axis2_interim(fix(2, 1, {Rational(1, 2)}));
  CHECK(pi2[0][2][0] == Rational(1));
  CHECK(pi2[0][3][0] == Rational(0));
}

TEST_CASE("interim matches the closed products in generic position") {
  // Distinct q's away from every threshold: q = (7/10, 2/5), a=1, b=2.
  Axis2Setting s = fix(2, 1, {Rational(7, 10), Rational(2, 5)});
  auto pi = axis2_interim(s);
  // Agent 0 (q=7/10): case 1 (49/100 >= 1/3, S1=S2 empty: (2/5)^2 <= 7/10).
  CHECK(axis2_case(s, 0) == 1);
  // pi(b): z=1 term q_k + z=2 term (1-q_k)/2.
  CHECK(pi[0][0][0] == Rational(2, 5) + Rational(3, 5) / Rational(2));
  // pi(a|b) = prod_{k != i} q_k; the other agent sits in S4 (2/5 <= 49/100),
  // so pi(a|a) = prod_{S4} q_l = 2/5 as well.
  CHECK(pi[0][2][0] == Rational(2, 5));
  Axis2Partition part = axis2_partition(s, 0);
  CHECK(part.s3.empty());
  CHECK(part.s4 == std::vector<int>{1});
  CHECK(pi[0][3][0] == Rational(2, 5));
  // Agent 1 (q=2/5): q_0 = 7/10 > sqrt(2/5)? (7/10)^2 = 49/100 > 2/5: S1.
  CHECK(axis2_case(s, 1) == 3);
  CHECK(pi[1][2][0] == Rational(0));
  CHECK(pi[1][3][0] == Rational(0));
}

TEST_CASE("all-equal q at n=2 matches the tie-aware values") {
  // q = 4/5, a=1, b=2: true interim shares ties between equal agents.
  Axis2Setting s = fix(2, 1, {Rational(4, 5), Rational(4, 5)});
  auto pi = axis2_interim(s);
  CHECK(pi[0][0][0] == Rational(9, 10));   // pi(b)
  CHECK(pi[0][2][0] == Rational(18, 25));  // pi(a|b), not the literal 4/5
  CHECK(pi[0][3][0] == Rational(8, 25));   // pi(a|a), not the literal 16/25
}

TEST_CASE("payment examples") {
  // n=1 case 1: grand bundle at 2a.
  Axis2Mechanism m1 = axis2_mechanism(fix(2, 1, {Rational(3, 5)}));
  for (int t = 0; t < 4; ++t) CHECK(m1.mech.pay[0][t] == Rational(2));
  // n=1 case 2 at q=1/2, a=1, b=2.
  Axis2Mechanism m2 = axis2_mechanism(fix(2, 1, {Rational(1, 2)}));
  CHECK(m2.mech.pay[0][0] == Rational(3));
  CHECK(m2.mech.pay[0][1] == Rational(3));
  CHECK(m2.mech.pay[0][2] == Rational(3));
  CHECK(m2.mech.pay[0][3] == Rational(0));
  // Case 3 agent: p(b,b) = 2b pi(b), p(a,a) = 0.
  Axis2Setting s3 = fix(2, 1, {Rational(9, 10), Rational(3, 5)});
  Axis2Mechanism m3 = axis2_mechanism(s3);
  CHECK(m3.mech.pay[1][0] == Rational(4) * m3.mech.pi[1][0][0]);
  CHECK(m3.mech.pay[1][3] == Rational(0));
}

TEST_CASE("BIC chain pi(a,a) <= pi(a,b) <= pi(b) on a grid") {
  for (long x = 1; x <= 4; ++x)
    for (long y = 1; y <= 4; ++y)
      for (long z = 1; z <= 4; ++z) {
        Axis2Setting s = fix(
            2, 1, {Rational(x, 5), Rational(y, 5), Rational(z, 5)});
        auto pi = axis2_interim(s);
        for (int i = 0; i < 3; ++i) {
          CHECK(pi[i][3][0] <= pi[i][2][0]);
          CHECK(pi[i][2][0] <= pi[i][0][0]);
        }
      }
}

TEST_CASE("BIC-IR and certification on small grids") {
  for (long x = 1; x <= 4; ++x)
    for (long y = x; y <= 4; ++y) {
      Axis2Setting s = fix(2, 1, {Rational(x, 5), Rational(y, 5)});
      Axis2Mechanism m = axis2_mechanism(s);
      CHECK_FALSE(check_bic(m.mech, m.mech.ts).has_value());
      CHECK_FALSE(check_bir(m.mech, m.mech.ts).has_value());
      std::vector<FlowGraph> flows;
      for (int i = 0; i < 2; ++i) flows.push_back(axis2_flow(s, i));
      OptimalityCertificate cert = certify(flows, m.mech, m.mech.ts);
      CHECK(cert.optimal);
      LPSolution lp = lp_optimal_revenue(m.mech.ts);
      CHECK(lp.objective == m.revenue);
    }
}

TEST_CASE("flow-induced payments match the closed forms") {
  Axis2Setting s = fix(2, 1, {Rational(7, 10), Rational(2, 5)});
  Axis2Mechanism m = axis2_mechanism(s);
  for (int i = 0; i < 2; ++i) {
    FlowGraph f = axis2_flow(s, i);
    FlowDecomposition d = decompose_flow(f);
    auto pay = induced_payments(f, d, m.mech.ts.agents[i], m.mech.pi[i]);
    for (int t = 0; t < 4; ++t) CHECK(pay[t] == m.mech.pay[i][t]);
  }
}

TEST_CASE("case and partition are mutually consistent on a grid") {
  for (long x = 1; x <= 4; ++x)
    for (long y = 1; y <= 4; ++y)
      for (long z = 1; z <= 4; ++z) {
        Axis2Setting s =
            fix(2, 1, {Rational(x, 5), Rational(y, 5), Rational(z, 5)});
        Rational threshold =
            (s.values.b - s.values.a) / (s.values.a + s.values.b);
        for (int i = 0; i < 3; ++i) {
          int c = axis2_case(s, i);
          Axis2Partition part = axis2_partition(s, i);
          if (c == 1) {
            CHECK(part.s1.empty());
            CHECK(part.s2.empty());
          }
          bool case3_expected = s.q[i] < threshold || !part.s1.empty();
          CHECK((c == 3) == case3_expected);
        }
      }
}

TEST_CASE("BIC-IR holds for n=4 settings") {
  std::vector<std::vector<Rational>> grids = {
      {Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)},
      {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)},
      {Rational(7, 10), Rational(7, 10), Rational(2, 5), Rational(1, 5)},
      {Rational(4, 5), Rational(3, 4), Rational(2, 3), Rational(3, 5)}};
  for (auto& q : grids) {
    Axis2Setting s = Axis2Setting::make(4, Rational(1), Rational(2), q);
    Axis2Mechanism m = axis2_mechanism(s);
    CHECK_FALSE(check_bic(m.mech, m.mech.ts).has_value());
    CHECK_FALSE(check_bir(m.mech, m.mech.ts).has_value());
    std::vector<FlowGraph> flows;
    for (int i = 0; i < 4; ++i) flows.push_back(axis2_flow(s, i));
    CHECK(certify(flows, m.mech, m.mech.ts).optimal);
  }
}
