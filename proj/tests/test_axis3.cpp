#include "doctest.h"
#include "optmech/axis3.hpp"
#include "optmech/dual.hpp"
#include "optmech/lp.hpp"
#include "optmech/verify.hpp"
#include "test_util.hpp"

using namespace optmech;
using optmech::test::RatGen;

namespace {
Axis3Setting fix(int n, long pn, long pd, long qn, long qd, long bn = 2,
                 long bd = 1) {
  return Axis3Setting::make(n, Rational(1), Rational(bn, bd), Rational(pn, pd),
                            Rational(qn, qd));
}
}  // namespace

TEST_CASE("classification examples (a=1, b=2)") {
  CHECK(axis3_classify(fix(2, 1, 5, 1, 5)).id == Axis3RegionId::R1);
  CHECK(axis3_classify(fix(2, 2, 5, 3, 10)).id == Axis3RegionId::R2);
  CHECK(axis3_classify(fix(2, 4, 5, 4, 5)).id == Axis3RegionId::R7);
  CHECK(axis3_classify(fix(2, 3, 5, 1, 2)).id == Axis3RegionId::R3);
  CHECK(axis3_classify(fix(2, 7, 10, 1, 2)).id == Axis3RegionId::R4);
  CHECK(axis3_classify(fix(2, 3, 5, 3, 5)).id == Axis3RegionId::R5);
  CHECK(axis3_classify(fix(2, 7, 10, 3, 10)).id == Axis3RegionId::R6);
}

TEST_CASE("flow parameter per region") {
  // R3 at p=3/5, q=1/2: x = 1 - p - pq = 1/10.
  Axis3Region r3 = axis3_classify(fix(2, 3, 5, 1, 2));
  CHECK(r3.x == Rational(1, 10));
  // R2 at p=2/5, q=3/10: x = p(1-q) = 7/25.
  Axis3Region r2 = axis3_classify(fix(2, 2, 5, 3, 10));
  CHECK(r2.x == Rational(7, 25));
  // R5 at p=q=3/5: x = pq - p(1-q) = 3/25.
  Axis3Region r5 = axis3_classify(fix(2, 3, 5, 3, 5));
  CHECK(r5.x == Rational(3, 25));
  // R6/R7: x = (1-p)(1-q), the (b,b)->(b,a) edge carries nothing.
  Axis3Region r7 = axis3_classify(fix(2, 4, 5, 4, 5));
  CHECK(r7.x == Rational(1, 25));
  CHECK(r7.variant_two);
  FlowGraph f = axis3_flow(fix(2, 4, 5, 4, 5), r7);
  CHECK(f.edges[0].amount == Rational(0));
}

TEST_CASE("region flows are feasible and score tables are consistent") {
  std::vector<Axis3Setting> fixtures = {
      fix(2, 1, 5, 1, 5),  fix(2, 2, 5, 3, 10), fix(2, 3, 5, 1, 2),
      fix(2, 7, 10, 1, 2), fix(2, 3, 5, 3, 5),  fix(2, 7, 10, 3, 10),
      fix(2, 4, 5, 4, 5)};
  for (const Axis3Setting& s : fixtures) {
    Axis3Region r = axis3_classify(s);
    TypeSpace ts = enumerate_types(s);
    FlowGraph f = axis3_flow(s, r);
    CHECK(check_flow_feasible(f, ts.agents[0]).ok);
    // The numeric part of the hierarchy scores equals the flow's virtual
    // values.
    auto h = virtual_values(f, ts.agents[0]);
    HierarchyRule rule = axis3_scores(s, r);
    for (int t = 0; t < 4; ++t)
      for (int j = 0; j < 2; ++j) CHECK(rule.at(0, t, j).value == h[t][j]);
  }
}

TEST_CASE("virtual value monotonicity within items") {
  RatGen gen(41);
  for (int it = 0; it < 50; ++it) {
    Rational p = gen.interior_prob(30);
    Rational q = gen.interior_prob(30);
    if (q > p) std::swap(p, q);
    Axis3Setting s = Axis3Setting::make(2, Rational(1), Rational(2), p, q);
    Rational top = (Rational(1) - p) * (Rational(1) - q);
    Rational x = top * gen.closed_prob(20);
    auto h = axis3_virtual(s, x);
    CHECK(h[2][0] >= h[3][0]);  // H1(a,b) >= H1(a,a)
    CHECK(h[1][1] >= h[3][1]);  // H2(b,a) >= H2(a,a)
  }
}

TEST_CASE("interim tables per region") {
  // R1: low-coordinate entries all zero.
  Axis3Setting s1 = fix(2, 1, 5, 1, 5);
  auto pi1 = axis3_interim(s1, axis3_classify(s1));
  CHECK(pi1[1][1] == Rational(0));
  CHECK(pi1[2][0] == Rational(0));
  CHECK(pi1[3][0] == Rational(0));
  CHECK(pi1[3][1] == Rational(0));
  // pi1(b,b) = (1-p^n)/(n(1-p)) = (1+p)/2 at n=2.
  CHECK(pi1[0][0] == Rational(3, 5));
  CHECK(pi1[0][1] == Rational(3, 5));
}

TEST_CASE("n=1 interim collapses to 1 on the b side") {
  Axis3Setting s = fix(1, 2, 5, 2, 5);
  auto pi = axis3_interim(s, axis3_classify(s));
  CHECK(pi[0][0] == Rational(1));
  CHECK(pi[0][1] == Rational(1));
}

TEST_CASE("tight identity and coin range on R1-R5 fixtures") {
  std::vector<Axis3Setting> fixtures = {
      fix(2, 1, 5, 1, 5), fix(2, 2, 5, 3, 10), fix(2, 3, 5, 1, 2),
      fix(2, 7, 10, 1, 2), fix(2, 3, 5, 3, 5), fix(3, 3, 5, 1, 2),
      fix(4, 13, 20, 11, 20)};
  for (const Axis3Setting& s : fixtures) {
    Axis3Region r = axis3_classify(s);
    if (r.variant_two) continue;
    auto pi = axis3_interim(s, r);
    // pi2(b,a) - pi1(a,b) + pi1(a,a) - pi2(a,a) = 0.
    CHECK((pi[1][1] - pi[2][0] + pi[3][0] - pi[3][1]).is_zero());
    if (r.coin) {
      CHECK(r.coin->sign() >= 0);
      CHECK(*r.coin <= Rational(1));
    }
  }
}

TEST_CASE("interim tables equal the exact hierarchy-induced interim") {
  std::vector<Axis3Setting> fixtures = {
      fix(2, 1, 5, 1, 5),  fix(2, 2, 5, 3, 10), fix(2, 3, 5, 1, 2),
      fix(2, 7, 10, 1, 2), fix(2, 3, 5, 3, 5),  fix(2, 7, 10, 3, 10),
      fix(2, 4, 5, 4, 5),  fix(3, 3, 5, 1, 2),  fix(3, 7, 10, 3, 10)};
  for (const Axis3Setting& s : fixtures) {
    Axis3Mechanism m = axis3_mechanism(s);
    auto recomputed = interim_from_expost(m.mech.rule, m.mech.ts);
    CHECK(recomputed == m.mech.pi);
  }
}

TEST_CASE("payments: R1 and R7 boxes") {
  Axis3Setting s1 = fix(2, 1, 5, 1, 5);
  Axis3Region r1 = axis3_classify(s1);
  auto pi = axis3_interim(s1, r1);
  auto pay = axis3_payments(s1, r1);
  CHECK(pay[0] == Rational(2) * (pi[0][0] + pi[0][1]));
  CHECK(pay[3] == Rational(0));

  Axis3Setting s7 = fix(2, 4, 5, 4, 5);
  Axis3Region r7 = axis3_classify(s7);
  auto pay7 = axis3_payments(s7, r7);
  // p(a,a) = 2a (pq)^{n-1}/n.
  CHECK(pay7[3] == Rational(2) * (s7.p * s7.q) / Rational(2));
}

TEST_CASE("region mechanisms certify and match the LP oracle") {
  std::vector<Axis3Setting> fixtures = {
      fix(2, 1, 5, 1, 5),  fix(2, 2, 5, 3, 10), fix(2, 3, 5, 1, 2),
      fix(2, 7, 10, 1, 2), fix(2, 3, 5, 3, 5),  fix(2, 7, 10, 3, 10),
      fix(2, 4, 5, 4, 5)};
  for (const Axis3Setting& s : fixtures) {
    Axis3Mechanism m = axis3_mechanism(s);
    std::vector<FlowGraph> flows;
    for (int i = 0; i < s.n; ++i) flows.push_back(axis3_flow(s, m.region, i));
    OptimalityCertificate cert = certify(flows, m.mech, m.mech.ts);
    CHECK(cert.optimal);
    LPSolution lp = lp_optimal_revenue(m.mech.ts);
    CHECK(lp.objective == m.revenue);
  }
}

TEST_CASE("R6/R7 revenue equality with the flow-induced mechanism") {
  for (const Axis3Setting& s : {fix(2, 7, 10, 3, 10), fix(2, 4, 5, 4, 5),
                                fix(3, 7, 10, 3, 10)}) {
    Axis3Mechanism m = axis3_mechanism(s);
    REQUIRE(m.region.variant_two);
    CHECK(axis3_flow_induced_revenue(s) == m.revenue);
    std::vector<FlowGraph> flows;
    for (int i = 0; i < s.n; ++i) flows.push_back(axis3_flow(s, m.region, i));
    CHECK(dual_objective(flows, m.mech.ts) == m.revenue);
  }
}

TEST_CASE("boundary p = (b-a)/b classifies and certifies (R3 tier case)") {
  // p = q = 1/2, a=1, b=2: the R3 flow tops out and both item-1 low scores
  // are exactly zero; the tier keeps (a,b) above (a,a).
  Axis3Setting s = fix(2, 1, 2, 1, 2);
  Axis3Region r = axis3_classify(s);
  CHECK(r.id == Axis3RegionId::R3);
  Axis3Mechanism m = axis3_mechanism(s);
  std::vector<FlowGraph> flows;
  for (int i = 0; i < s.n; ++i) flows.push_back(axis3_flow(s, m.region, i));
  OptimalityCertificate cert = certify(flows, m.mech, m.mech.ts);
  CHECK(cert.optimal);
  LPSolution lp = lp_optimal_revenue(m.mech.ts);
  CHECK(lp.objective == m.revenue);
}

TEST_CASE("swapped-item inputs produce the swapped mechanism") {
  Axis3Setting a = fix(2, 3, 5, 1, 2);
  Axis3Setting b = Axis3Setting::make(2, Rational(1), Rational(2),
                                      Rational(1, 2), Rational(3, 5));
  CHECK(b.items_swapped);
  Axis3Mechanism ma = axis3_mechanism(a);
  Axis3Mechanism mb = axis3_mechanism(b);
  CHECK(ma.revenue == mb.revenue);
  CHECK(ma.region.id == mb.region.id);
  CHECK(ma.mech.pi == mb.mech.pi);
}

TEST_CASE("classifier coverage on a dense grid") {
  for (int n : {1, 2, 3, 5}) {
    for (long pn = 1; pn <= 19; ++pn) {
      for (long qn = 1; qn <= pn; ++qn) {
        Axis3Setting s = fix(n, pn, 20, qn, 20);
        CHECK_NOTHROW(axis3_classify(s));
      }
    }
  }
}

TEST_CASE("flow-induced payments reproduce the region closed forms") {
  std::vector<Axis3Setting> fixtures = {
      fix(2, 1, 5, 1, 5),  fix(2, 2, 5, 3, 10), fix(2, 3, 5, 1, 2),
      fix(2, 7, 10, 1, 2), fix(2, 3, 5, 3, 5),  fix(3, 3, 5, 1, 2)};
  for (const Axis3Setting& s : fixtures) {
    Axis3Mechanism m = axis3_mechanism(s);
    FlowGraph f = axis3_flow(s, m.region);
    FlowDecomposition d = decompose_flow(f);
    auto pay = induced_payments(f, d, m.mech.ts.agents[0], m.mech.pi[0]);
    for (int t = 0; t < 4; ++t) CHECK(pay[t] == m.mech.pay[0][t]);
  }
}

TEST_CASE("complementary slackness along axis3 flow edges") {
  for (const Axis3Setting& s :
       {fix(2, 3, 5, 1, 2), fix(2, 2, 5, 3, 10), fix(3, 3, 5, 3, 5)}) {
    Axis3Mechanism m = axis3_mechanism(s);
    FlowGraph f = axis3_flow(s, m.region);
    const AgentTypes& ag = m.mech.ts.agents[0];
    auto utility = [&](int truth, int report) {
      Rational u(0);
      for (int j = 0; j < 2; ++j)
        u += ag.value[truth][j] * m.mech.pi[0][report][j];
      return u - m.mech.pay[0][report];
    };
    for (const FlowEdge& e : f.edges) {
      if (e.amount.sign() <= 0) continue;
      CHECK(utility(e.from, e.from) == utility(e.from, e.to));
    }
  }
}

TEST_CASE("R1 extracts the full surplus: every truthful utility is zero") {
  Axis3Setting s = fix(2, 1, 5, 1, 5);
  Axis3Mechanism m = axis3_mechanism(s);
  REQUIRE(m.region.id == Axis3RegionId::R1);
  const AgentTypes& ag = m.mech.ts.agents[0];
  for (int t = 0; t < 4; ++t) {
    Rational u(0);
    for (int j = 0; j < 2; ++j) u += ag.value[t][j] * m.mech.pi[0][t][j];
    u -= m.mech.pay[0][t];
    CHECK(u.is_zero());
  }
}

TEST_CASE("coin values at symmetric parameters") {
  // p = q makes pi1(a,b) = pi2(b,a): R2's coin is 1, R3's is 0, and R5's
  // pinned pi2(a,a) needs the full mass, coin 1.
  Axis3Setting r2 = fix(2, 2, 5, 2, 5);
  REQUIRE(axis3_classify(r2).id == Axis3RegionId::R2);
  CHECK(*axis3_classify(r2).coin == Rational(1));

  Axis3Setting r3 = fix(2, 1, 2, 1, 2);
  REQUIRE(axis3_classify(r3).id == Axis3RegionId::R3);
  CHECK(*axis3_classify(r3).coin == Rational(0));

  Axis3Setting r5 = fix(2, 3, 5, 3, 5);
  REQUIRE(axis3_classify(r5).id == Axis3RegionId::R5);
  CHECK(*axis3_classify(r5).coin == Rational(1));
}

TEST_CASE("R6 is unreachable at p = q") {
  for (int n : {1, 2, 3, 4})
    for (long pn = 1; pn <= 9; ++pn) {
      Axis3Setting s = fix(n, pn, 10, pn, 10);
      CHECK(axis3_classify(s).id != Axis3RegionId::R6);
    }
}
