#include "optmech/verify.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>

#include "optmech/axis1.hpp"
#include "optmech/axis2.hpp"
#include "optmech/axis3.hpp"
#include "optmech/lp.hpp"

namespace optmech {

std::optional<DeviationWitness> check_bic(const Mechanism& mech,
                                          const TypeSpace& ts) {
  for (int i = 0; i < ts.agent_count(); ++i) {
    const AgentTypes& ag = ts.agents[i];
    const int m = ts.items;
    for (int t = 0; t < ag.count(); ++t) {
      Rational truthful(0);
      for (int j = 0; j < m; ++j)
        truthful += ag.value[t][j] * mech.pi[i][t][j];
      truthful -= mech.pay[i][t];
      for (int r = 0; r < ag.count(); ++r) {
        if (r == t) continue;
        Rational dev(0);
        for (int j = 0; j < m; ++j) dev += ag.value[t][j] * mech.pi[i][r][j];
        dev -= mech.pay[i][r];
        if (dev > truthful) return DeviationWitness{i, t, r, dev - truthful};
      }
    }
  }
  return std::nullopt;
}

std::optional<IrWitness> check_bir(const Mechanism& mech, const TypeSpace& ts) {
  for (int i = 0; i < ts.agent_count(); ++i) {
    const AgentTypes& ag = ts.agents[i];
    for (int t = 0; t < ag.count(); ++t) {
      Rational u(0);
      for (int j = 0; j < ts.items; ++j)
        u += ag.value[t][j] * mech.pi[i][t][j];
      u -= mech.pay[i][t];
      if (u.sign() < 0) return IrWitness{i, t, u};
    }
  }
  return std::nullopt;
}

// splitmix64; one stream per trial keeps results schedule-independent.
std::uint64_t SplitRng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SplitRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<int> expost_allocate(const HierarchyRule& rule, const TypeSpace& ts,
                                 std::span<const int> profile, SplitRng& rng) {
  const int n = ts.agent_count();
  const int m = ts.items;
  std::vector<int> winners(m, -1);
  std::vector<int> argmax;
  for (int j = 0; j < m; ++j) {
    argmax.clear();
    const Score* best = nullptr;
    for (int i = 0; i < n; ++i) {
      const Score& s = rule.at(i, profile[i], j);
      if (!best || *best < s) {
        best = &s;
        argmax.assign(1, i);
      } else if (*best == s) {
        argmax.push_back(i);
      }
    }
    if (!best || best->value.sign() < 0) continue;
    if (best->value.sign() == 0) {
      int lead = argmax.front();
      double delta = rule.zero_coin(lead, profile[lead], j).to_double();
      if (rng.next_double() >= delta) continue;
    }
    winners[j] = argmax[static_cast<std::size_t>(rng.next_double() *
                                                 argmax.size())];
  }
  return winners;
}

std::vector<std::vector<std::vector<Rational>>> interim_from_expost(
    const HierarchyRule& rule, const TypeSpace& ts,
    unsigned long long term_guard) {
  const int n = ts.agent_count();
  const int m = ts.items;
  unsigned long long terms = 0;
  for (const auto& ag : ts.agents)
    terms += static_cast<unsigned long long>(ag.count());
  terms *= static_cast<unsigned long long>(n) * m;
  if (terms > term_guard)
    throw std::length_error("interim_from_expost: term guard exceeded");

  std::vector<std::vector<std::vector<Rational>>> pi(n);
  for (int i = 0; i < n; ++i) {
    const AgentTypes& ag = ts.agents[i];
    pi[i].assign(ag.count(), std::vector<Rational>(m, Rational(0)));
    for (int t = 0; t < ag.count(); ++t) {
      for (int j = 0; j < m; ++j) {
        const Score& s = rule.at(i, t, j);
        if (s.value.sign() < 0) continue;
        // Tie-count polynomial: coeff[z] = Pr[z opponents tie, none beat].
        std::vector<Rational> coeff{Rational(1)};
        for (int k = 0; k < n; ++k) {
          if (k == i) continue;
          Rational below(0), tie(0);
          const AgentTypes& opp = ts.agents[k];
          for (int u = 0; u < opp.count(); ++u) {
            const Score& os = rule.at(k, u, j);
            if (os < s)
              below += opp.prob[u];
            else if (os == s)
              tie += opp.prob[u];
          }
          std::vector<Rational> next(coeff.size() + 1, Rational(0));
          for (std::size_t z = 0; z < coeff.size(); ++z) {
            if (coeff[z].is_zero()) continue;
            if (!below.is_zero()) next[z] += coeff[z] * below;
            if (!tie.is_zero()) next[z + 1] += coeff[z] * tie;
          }
          coeff = std::move(next);
        }
        Rational total(0);
        for (std::size_t z = 0; z < coeff.size(); ++z)
          if (!coeff[z].is_zero())
            total += coeff[z] / Rational(static_cast<long>(z) + 1);
        if (s.value.sign() == 0) total *= rule.zero_coin(i, t, j);
        pi[i][t][j] = std::move(total);
      }
    }
  }
  return pi;
}

namespace {

struct McAccum {
  std::uint64_t count = 0;
  double rev_sum = 0, rev_sq = 0;
  // Allocation indicator sums per (agent, type, item) with per-type draw
  // counts; pi estimates are conditional on the agent drawing the type.
  std::vector<std::vector<std::uint64_t>> type_draws;
  std::vector<std::vector<std::vector<std::uint64_t>>> alloc;

  void merge(const McAccum& o) {
    count += o.count;
    rev_sum += o.rev_sum;
    rev_sq += o.rev_sq;
    for (std::size_t i = 0; i < alloc.size(); ++i) {
      for (std::size_t t = 0; t < alloc[i].size(); ++t) {
        type_draws[i][t] += o.type_draws[i][t];
        for (std::size_t j = 0; j < alloc[i][t].size(); ++j)
          alloc[i][t][j] += o.alloc[i][t][j];
      }
    }
  }
};

}  // namespace

McReport mc_simulate(const Mechanism& mech, const TypeSpace& ts,
                     std::uint64_t trials, std::uint64_t seed, bool parallel) {
  if (trials < 1) throw std::invalid_argument("mc_simulate: trials >= 1");
  const int n = ts.agent_count();
  const int m = ts.items;

  // Precompute doubles: sampling cdf, payments, score ranks per item.
  std::vector<std::vector<double>> cdf(n);
  std::vector<std::vector<double>> payd(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0;
    for (int t = 0; t < ts.agents[i].count(); ++t) {
      acc += ts.agents[i].prob[t].to_double();
      cdf[i].push_back(acc);
      payd[i].push_back(mech.pay[i][t].to_double());
    }
    cdf[i].back() = 1.0;
  }
  // Dense ranks of scores per item so the hot loop compares integers. Exact
  // comparisons happen here, once.
  std::vector<std::vector<std::vector<int>>> rank(n);
  std::vector<std::vector<std::vector<int>>> zero_sign(n);
  std::vector<std::vector<std::vector<double>>> coin(n);
  {
    for (int i = 0; i < n; ++i) {
      rank[i].assign(ts.agents[i].count(), std::vector<int>(m));
      zero_sign[i] = rank[i];
      coin[i].assign(ts.agents[i].count(), std::vector<double>(m));
    }
    for (int j = 0; j < m; ++j) {
      std::vector<std::pair<Score, std::pair<int, int>>> all;
      for (int i = 0; i < n; ++i)
        for (int t = 0; t < ts.agents[i].count(); ++t)
          all.push_back({mech.rule.at(i, t, j), {i, t}});
      std::sort(all.begin(), all.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      int r = 0;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (k > 0 && all[k - 1].first < all[k].first) ++r;
        auto [i, t] = all[k].second;
        rank[i][t][j] = r;
        zero_sign[i][t][j] = all[k].first.value.sign();
        coin[i][t][j] = mech.rule.zero_coin(i, t, j).to_double();
      }
    }
  }

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
    McAccum acc;
    acc.type_draws.resize(n);
    acc.alloc.resize(n);
    for (int i = 0; i < n; ++i) {
      acc.type_draws[i].assign(ts.agents[i].count(), 0);
      acc.alloc[i].assign(ts.agents[i].count(),
                          std::vector<std::uint64_t>(m, 0));
    }
    std::vector<int> prof(n);
    std::vector<int> argmax;
    for (std::uint64_t trial = lo; trial < hi; ++trial) {
      SplitRng rng(seed ^ (trial * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
      double rev = 0;
      for (int i = 0; i < n; ++i) {
        double u = rng.next_double();
        int t = static_cast<int>(
            std::lower_bound(cdf[i].begin(), cdf[i].end(), u) -
            cdf[i].begin());
        if (t >= ts.agents[i].count()) t = ts.agents[i].count() - 1;
        prof[i] = t;
        rev += payd[i][t];
        ++acc.type_draws[i][t];
      }
      for (int j = 0; j < m; ++j) {
        argmax.clear();
        int best = -1;
        for (int i = 0; i < n; ++i) {
          int r = rank[i][prof[i]][j];
          if (r > best) {
            best = r;
            argmax.assign(1, i);
          } else if (r == best) {
            argmax.push_back(i);
          }
        }
        int lead = argmax.front();
        int sign = zero_sign[lead][prof[lead]][j];
        if (sign < 0) continue;
        if (sign == 0 &&
            rng.next_double() >= coin[lead][prof[lead]][j])
          continue;
        int w = argmax[static_cast<std::size_t>(rng.next_double() *
                                                argmax.size())];
        ++acc.alloc[w][prof[w]][j];
      }
      acc.rev_sum += rev;
      acc.rev_sq += rev * rev;
      ++acc.count;
    }
    return acc;
  };

  // Fixed summation chunks: partial sums are combined in chunk order, so the
  // floating-point result is identical whether chunks run serially or in
  // parallel.
  constexpr std::uint64_t kChunk = 1 << 14;
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<McAccum> parts(chunks);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
    std::uint64_t hi = std::min(trials, lo + kChunk);
    parts[c] = run_range(lo, hi);
  }
  McAccum total;
  total.type_draws.resize(n);
  total.alloc.resize(n);
  for (int i = 0; i < n; ++i) {
    total.type_draws[i].assign(ts.agents[i].count(), 0);
    total.alloc[i].assign(ts.agents[i].count(),
                          std::vector<std::uint64_t>(m, 0));
  }
  for (const auto& p : parts) total.merge(p);

  McReport rep;
  rep.trials = trials;
  double nt = static_cast<double>(trials);
  rep.revenue.mean = total.rev_sum / nt;
  double var = (total.rev_sq - total.rev_sum * total.rev_sum / nt) /
               (nt > 1 ? nt - 1 : 1);
  if (var < 0) var = 0;
  rep.revenue.stderr_ = std::sqrt(var / nt);
  rep.pi.resize(n);
  for (int i = 0; i < n; ++i) {
    rep.pi[i].assign(ts.agents[i].count(), std::vector<McEstimate>(m));
    for (int t = 0; t < ts.agents[i].count(); ++t) {
      double draws = static_cast<double>(total.type_draws[i][t]);
      for (int j = 0; j < m; ++j) {
        if (draws == 0) continue;
        double mean = static_cast<double>(total.alloc[i][t][j]) / draws;
        rep.pi[i][t][j].mean = mean;
        rep.pi[i][t][j].stderr_ =
            std::sqrt(std::max(mean * (1 - mean), 0.0) / draws);
      }
    }
  }
  return rep;
}

CrosscheckReport crosscheck_axes(const Rational& a, const Rational& b,
                                 const Rational& p, int n) {
  CrosscheckReport rep;
  Axis1Mechanism m1 = axis1_mechanism(Axis1Setting::make(n, 2, a, b, p));
  Mechanism mech1 = axis1_expand(m1);
  Axis2Mechanism m2 = axis2_mechanism(
      Axis2Setting::make(n, a, b, std::vector<Rational>(n, p)));
  Axis3Mechanism m3 = axis3_mechanism(Axis3Setting::make(n, a, b, p, p));

  auto fail = [&rep](const std::string& what) {
    rep.ok = false;
    if (!rep.diff.empty()) rep.diff += "; ";
    rep.diff += what;
  };

  rep.revenue = m1.revenue;
  if (!(m1.revenue == m2.mech.revenue()))
    fail("revenue axis1=" + m1.revenue.str() +
         " axis2=" + m2.mech.revenue().str());
  if (!(m1.revenue == m3.mech.revenue()))
    fail("revenue axis1=" + m1.revenue.str() +
         " axis3=" + m3.mech.revenue().str());

  // All three share the same 4-type order (b,b),(b,a),(a,b),(a,a); with all
  // q_i equal, axis2's sorted agent order is the identity.
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < 4; ++t) {
      for (int j = 0; j < 2; ++j) {
        if (!(mech1.pi[i][t][j] == m2.mech.pi[i][t][j]))
          fail("pi mismatch axis1/axis2 at agent " + std::to_string(i) +
               " type " + std::to_string(t) + " item " + std::to_string(j));
        if (!(mech1.pi[i][t][j] == m3.mech.pi[i][t][j]))
          fail("pi mismatch axis1/axis3 at agent " + std::to_string(i) +
               " type " + std::to_string(t) + " item " + std::to_string(j));
      }
      if (!(mech1.pay[i][t] == m2.mech.pay[i][t]))
        fail("payment mismatch axis1/axis2 at type " + std::to_string(t));
      if (!(mech1.pay[i][t] == m3.mech.pay[i][t]))
        fail("payment mismatch axis1/axis3 at type " + std::to_string(t));
    }
  }

  if (n == 1) {
    TypeSpace ts = enumerate_types(m1.setting);
    LPSolution lp = lp_optimal_revenue(ts);
    if (!(lp.objective == m1.revenue))
      fail("LP optimum " + lp.objective.str() + " != axis revenue " +
           m1.revenue.str());
  }
  return rep;
}

}  // namespace optmech
