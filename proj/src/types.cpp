#include "optmech/types.hpp"

#include <stdexcept>

namespace optmech {

unsigned long long TypeSpace::profile_count() const {
  unsigned long long p = 1;
  for (const auto& ag : agents) {
    p *= static_cast<unsigned long long>(ag.count());
    if (p > (1ull << 62)) throw std::overflow_error("profile_count overflow");
  }
  return p;
}

// Shared bi-valued enumeration over m coordinates: bit j of the type index
// (item 1 = most significant bit) is 1 when the coordinate is the low value.
static AgentTypes bivalued_types(int m, const ValuePair& vp,
                                 std::span<const Rational> low_prob) {
  AgentTypes ag;
  const long count = 1L << m;
  ag.value.reserve(count);
  ag.prob.reserve(count);
  ag.high_count.reserve(count);
  for (long t = 0; t < count; ++t) {
    std::vector<Rational> v(m);
    Rational pr(1);
    int highs = 0;
    for (int j = 0; j < m; ++j) {
      bool low = (t >> (m - 1 - j)) & 1;
      v[j] = low ? vp.a : vp.b;
      pr *= low ? low_prob[j] : Rational(1) - low_prob[j];
      if (!low) ++highs;
    }
    ag.value.push_back(std::move(v));
    ag.prob.push_back(std::move(pr));
    ag.high_count.push_back(highs);
  }
  return ag;
}

TypeSpace enumerate_types(const Axis1Setting& s) {
  if (s.m > 25) throw std::invalid_argument("axis1: m too large to enumerate");
  std::vector<Rational> low(s.m, s.p);
  AgentTypes ag = bivalued_types(s.m, s.values, low);
  TypeSpace ts;
  ts.items = s.m;
  ts.agents.assign(s.n, ag);
  return ts;
}

TypeSpace enumerate_types(const Axis2Setting& s) {
  TypeSpace ts;
  ts.items = 2;
  ts.agents.reserve(s.n);
  for (int i = 0; i < s.n; ++i) {
    std::vector<Rational> low{s.q[i], s.q[i]};
    ts.agents.push_back(bivalued_types(2, s.values, low));
  }
  return ts;
}

TypeSpace enumerate_types(const Axis3Setting& s) {
  std::vector<Rational> low{s.p, s.q};
  AgentTypes ag = bivalued_types(2, s.values, low);
  TypeSpace ts;
  ts.items = 2;
  ts.agents.assign(s.n, ag);
  return ts;
}

TypeSpace enumerate_types(const BundlingSetting& s) {
  const int m = s.items();
  AgentTypes ag;
  std::vector<std::size_t> idx(m, 0);
  for (;;) {
    std::vector<Rational> v(m);
    Rational pr(1);
    for (int j = 0; j < m; ++j) {
      v[j] = s.c + s.supports[j][idx[j]];
      pr *= s.probs[j][idx[j]];
    }
    ag.value.push_back(std::move(v));
    ag.prob.push_back(std::move(pr));
    // Advance mixed-radix counter, item m least significant (item 1 major).
    int j = m - 1;
    while (j >= 0 && ++idx[j] == s.supports[j].size()) idx[j--] = 0;
    if (j < 0) break;
  }
  TypeSpace ts;
  ts.items = m;
  ts.agents.push_back(std::move(ag));
  return ts;
}

Rational profile_prob(const TypeSpace& ts, std::span<const int> profile) {
  if (profile.size() != ts.agents.size())
    throw std::invalid_argument("profile_prob: wrong profile length");
  Rational p(1);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto& ag = ts.agents[i];
    if (profile[i] < 0 || profile[i] >= ag.count())
      throw std::out_of_range("profile_prob: unknown type index");
    p *= ag.prob[profile[i]];
  }
  return p;
}

void decode_profile(const TypeSpace& ts, unsigned long long idx,
                    std::span<int> out) {
  for (int i = ts.agent_count() - 1; i >= 0; --i) {
    unsigned long long sz = ts.agents[i].count();
    out[i] = static_cast<int>(idx % sz);
    idx /= sz;
  }
}

}  // namespace optmech
