#include "optmech/axis3.hpp"

#include <sstream>
#include <stdexcept>

#include "optmech/binomial.hpp"
#include "optmech/verify.hpp"

namespace optmech {

std::string to_string(Axis3RegionId id) {
  return "R" + std::to_string(static_cast<int>(id));
}

namespace {

// The full interim values of the boxed equations; regions zero or coin-scale
// individual entries.
struct FullInterim {
  Rational pbb, qbb, pab, qba, paa;  // paa doubles as the full qaa
};

FullInterim full_interim(const Axis3Setting& s) {
  FullInterim f;
  f.pbb = partition_sum(s.n, s.p, Rational(1) - s.p);
  f.qbb = partition_sum(s.n, s.q, Rational(1) - s.q);
  f.pab = s.p.pow(s.n - 1) * f.qbb;
  f.qba = s.q.pow(s.n - 1) * f.pbb;
  f.paa = (s.p * s.q).pow(s.n - 1) / Rational(s.n);
  return f;
}

bool variant_one_feasible(const Axis3Setting& s) {
  FullInterim f = full_interim(s);
  return f.pab - f.qba <= f.paa;
}

Rational x_top(const Axis3Setting& s) {
  return (Rational(1) - s.p) * (Rational(1) - s.q);
}

}  // namespace

std::vector<std::pair<std::string, Rational>> axis3_boundary_slacks(
    const Axis3Setting& s) {
  const Rational& a = s.values.a;
  const Rational& b = s.values.b;
  const Rational &p = s.p, &q = s.q;
  Rational one(1);
  FullInterim f = full_interim(s);
  return {
      {"r1", (one - p) * (one - q) * b - a * (one - p * q)},
      {"r2_p", (b - a) - p * b},
      {"cond", f.paa - (f.pab - f.qba)},
      {"r7", a * p * q - (one - q) * (b - a)},
      {"r3_p_lo", p * b - (b - a)},
      {"r3_p_hi", b - p * (a + b)},
      {"r3_pq", (b - a) - p * q * (a + b)},
      {"r4_p", p * (a + b) - b},
      {"r4_q", (b - a) - q * b},
      {"r5_pq", p * q * (a + b) - (b - a)},
      {"r5_q", q * b - (b - a)},
  };
}

Rational axis3_delta(const Axis3Setting& s, Axis3RegionId id) {
  FullInterim f = full_interim(s);
  Rational pq_pow = (s.p * s.q).pow(s.n - 1);
  Rational d;
  switch (id) {
    case Axis3RegionId::R2:
      d = f.qba / f.pab;
      break;
    case Axis3RegionId::R3:
      d = Rational(s.n) * (f.pab - f.qba) / pq_pow;
      break;
    case Axis3RegionId::R4:
      d = (f.pab - f.paa) / f.qba;
      break;
    case Axis3RegionId::R5:
      d = Rational(s.n) * (f.qba - f.pab + f.paa) / pq_pow;
      break;
    default:
      throw std::invalid_argument("axis3_delta: region has no coin");
  }
  if (d.sign() < 0 || d > Rational(1))
    throw std::logic_error("axis3_delta: coin outside [0,1] (misclassified)");
  return d;
}

Axis3Region axis3_classify(const Axis3Setting& s) {
  const Rational& a = s.values.a;
  const Rational& b = s.values.b;
  const Rational &p = s.p, &q = s.q;
  Rational one(1);
  Rational ratio = a / (b - a);  // compare against (1-q)/(pq) etc.

  Axis3Region r;
  // R1: both single-low scores stay negative on a whole x-interval.
  if ((one - p) * (one - q) * b > a * (one - p * q)) {
    r.id = Axis3RegionId::R1;
    Rational lo = ratio * p * (one - q);
    Rational hi = x_top(s) - ratio * (one - p) * q;
    r.x = (lo + hi) / Rational(2);
    return r;
  }
  // R2: pin H1(a,b) = 0; needs x below the top of the range.
  if (p * b < b - a) {
    r.id = Axis3RegionId::R2;
    r.x = ratio * p * (one - q);
    r.zero_score_target = {0, 2};  // item 1, type (a,b)
    r.coin = axis3_delta(s, Axis3RegionId::R2);
    return r;
  }
  bool cond = variant_one_feasible(s);
  bool h2aa_neg_at_top = (one - q) * (b - a) > a * p * q;
  if (!h2aa_neg_at_top) {
    r.id = Axis3RegionId::R7;
    r.x = x_top(s);
    r.variant_two = true;
    return r;
  }
  if (!cond) {
    r.id = Axis3RegionId::R6;
    r.x = x_top(s);
    r.variant_two = true;
    return r;
  }
  if (p * b >= b - a && p * (a + b) <= b && p * q * (a + b) <= b - a) {
    r.id = Axis3RegionId::R3;
    r.x = one - p - ratio * p * q;
    r.zero_score_target = {0, 3};  // item 1, type (a,a)
    r.coin = axis3_delta(s, Axis3RegionId::R3);
    return r;
  }
  if (p * (a + b) >= b && q * b <= b - a) {
    r.id = Axis3RegionId::R4;
    r.x = x_top(s) - ratio * (one - p) * q;
    r.zero_score_target = {1, 1};  // item 2, type (b,a)
    r.coin = axis3_delta(s, Axis3RegionId::R4);
    return r;
  }
  if (p * q * (a + b) >= b - a && q * b >= b - a) {
    r.id = Axis3RegionId::R5;
    r.x = ratio * p * q - p * (one - q);
    r.zero_score_target = {1, 3};  // item 2, type (a,a)
    r.coin = axis3_delta(s, Axis3RegionId::R5);
    return r;
  }
  throw std::logic_error("axis3_classify: parameters matched no region");
}

std::array<std::array<Rational, 2>, 4> axis3_virtual(const Axis3Setting& s,
                                                     const Rational& x) {
  if (x.sign() < 0 || x > x_top(s))
    throw std::logic_error("axis3_virtual: x outside [0, (1-p)(1-q)]");
  const Rational& a = s.values.a;
  const Rational& b = s.values.b;
  const Rational &p = s.p, &q = s.q;
  Rational one(1);
  Rational gap = b - a;
  std::array<std::array<Rational, 2>, 4> h;
  h[0] = {b, b};
  h[1] = {b, a - (x_top(s) - x) / ((one - p) * q) * gap};
  h[2] = {a - x / (p * (one - q)) * gap, b};
  h[3] = {a - (one - p - x) / (p * q) * gap,
          a - (p * (one - q) + x) / (p * q) * gap};
  return h;
}

FlowGraph axis3_flow(const Axis3Setting& s, const Axis3Region& r, int agent) {
  const Rational &p = s.p, &q = s.q;
  Rational one(1);
  FlowGraph f;
  f.agent = agent;
  f.node_count = 4;
  f.source = {(one - p) * (one - q), (one - p) * q, p * (one - q), p * q};
  f.mu = {Rational(0), Rational(0), Rational(0), Rational(1)};
  f.edges = {{0, 1, x_top(s) - r.x},
             {0, 2, r.x},
             {1, 3, one - p - r.x},
             {2, 3, p * (one - q) + r.x}};
  for (const FlowEdge& e : f.edges)
    if (e.amount.sign() < 0)
      throw std::logic_error("axis3_flow: negative edge (x out of range)");
  return f;
}

std::array<std::array<Rational, 2>, 4> axis3_interim(const Axis3Setting& s,
                                                     const Axis3Region& r) {
  FullInterim f = full_interim(s);
  Rational pab = f.pab, qab = f.qba, paa = f.paa, qaa = f.paa;
  switch (r.id) {
    case Axis3RegionId::R1:
      pab = qab = paa = qaa = Rational(0);
      break;
    case Axis3RegionId::R2:
      pab = f.qba;  // coin-scaled down to the tight-identity value
      paa = qaa = Rational(0);
      break;
    case Axis3RegionId::R3:
      paa = f.pab - f.qba;
      qaa = Rational(0);
      break;
    case Axis3RegionId::R4:
      qab = f.pab - f.paa;
      qaa = Rational(0);
      break;
    case Axis3RegionId::R5:
      qaa = f.qba - f.pab + f.paa;
      break;
    case Axis3RegionId::R6:
      qaa = Rational(0);
      break;
    case Axis3RegionId::R7:
      break;
  }
  return {{{f.pbb, f.qbb}, {f.pbb, qab}, {pab, f.qbb}, {paa, qaa}}};
}

std::array<Rational, 4> axis3_payments(const Axis3Setting& s,
                                       const Axis3Region& r) {
  const Rational& a = s.values.a;
  const Rational& b = s.values.b;
  auto pi = axis3_interim(s, r);
  const Rational& pbb = pi[0][0];
  const Rational& qbb = pi[0][1];
  const Rational& qab = pi[1][1];
  const Rational& pab = pi[2][0];
  const Rational& paa = pi[3][0];
  const Rational& qaa = pi[3][1];
  std::array<Rational, 4> pay;
  pay[3] = a * (paa + qaa);
  pay[1] = b * pbb + a * qab - (b - a) * paa;
  pay[2] = a * pab + b * qbb - (b - a) * qaa;
  pay[0] = r.variant_two ? b * (pbb + qbb) - (b - a) * (pab + qaa)
                         : b * (pbb + qbb) - (b - a) * (qab + paa);
  return pay;
}

HierarchyRule axis3_scores(const Axis3Setting& s, const Axis3Region& r) {
  auto h = axis3_virtual(s, r.x);
  HierarchyRule rule = HierarchyRule::uniform(s.n, 4, 2);
  for (int i = 0; i < s.n; ++i) {
    for (int t = 0; t < 4; ++t)
      for (int j = 0; j < 2; ++j) rule.score[i][t][j] = Score{h[t][j]};
    // Strict ranking of the type pairs whose numeric scores can coincide:
    // (a,b) over (a,a) for item 1, (b,a) over (a,a) for item 2.
    rule.score[i][2][0].tier = 1;
    rule.score[i][1][1].tier = 1;
    switch (r.id) {
      case Axis3RegionId::R2:
        rule.coin[i][2][0] = *r.coin;
        break;
      case Axis3RegionId::R3:
        rule.coin[i][3][0] = *r.coin;
        rule.coin[i][3][1] = Rational(0);
        break;
      case Axis3RegionId::R4:
        rule.coin[i][1][1] = *r.coin;
        rule.coin[i][3][1] = Rational(0);
        break;
      case Axis3RegionId::R5:
        rule.coin[i][3][1] = *r.coin;
        break;
      default:
        break;
    }
  }
  return rule;
}

Axis3Mechanism axis3_mechanism(const Axis3Setting& s) {
  Axis3Mechanism out;
  out.setting = s;
  out.region = axis3_classify(s);

  Mechanism mech;
  mech.ts = enumerate_types(s);
  mech.rule = axis3_scores(s, out.region);
  auto pi = axis3_interim(s, out.region);
  auto pay = axis3_payments(s, out.region);
  std::ostringstream prov;
  prov << "axis3(n=" << s.n << ",a=" << s.values.a << ",b=" << s.values.b
       << ",p=" << s.p << ",q=" << s.q << ","
       << to_string(out.region.id) << ")";
  mech.provenance = prov.str();
  mech.pi.resize(s.n);
  mech.pay.resize(s.n);
  for (int i = 0; i < s.n; ++i) {
    mech.pi[i].assign(4, std::vector<Rational>(2));
    for (int t = 0; t < 4; ++t)
      mech.pi[i][t] = {pi[t][0], pi[t][1]};
    mech.pay[i] = {pay[0], pay[1], pay[2], pay[3]};
  }
  out.revenue = mech.revenue();
  out.mech = std::move(mech);
  return out;
}

Rational axis3_flow_induced_revenue(const Axis3Setting& s) {
  Axis3Region top;
  top.id = Axis3RegionId::R7;
  top.x = x_top(s);
  top.variant_two = true;
  FlowGraph flow = axis3_flow(s, top, 0);
  TypeSpace ts = enumerate_types(s);

  // Unmodified rule: plain flow scores, no tiers, coins 1.
  HierarchyRule rule = HierarchyRule::uniform(s.n, 4, 2);
  auto h = axis3_virtual(s, top.x);
  for (int i = 0; i < s.n; ++i)
    for (int t = 0; t < 4; ++t)
      for (int j = 0; j < 2; ++j) rule.score[i][t][j] = Score{h[t][j]};

  auto pi = interim_from_expost(rule, ts);
  FlowDecomposition d = decompose_flow(flow);
  std::vector<Rational> pay = induced_payments(flow, d, ts.agents[0], pi[0]);
  Rational rev(0);
  for (int t = 0; t < 4; ++t) rev += ts.agents[0].prob[t] * pay[t];
  return Rational(s.n) * rev;
}

}  // namespace optmech
