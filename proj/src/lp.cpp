#include "optmech/lp.hpp"

#include <stdexcept>

namespace optmech {

SimplexResult simplex_max(const std::vector<std::vector<Rational>>& rows,
                          const std::vector<Rational>& rhs,
                          const std::vector<Rational>& objective) {
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(objective.size());
  for (const Rational& b : rhs)
    if (b.sign() < 0)
      throw std::invalid_argument("simplex_max: requires b >= 0");

  const int cols = n + m + 1;  // structural | slack | rhs
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols));
  for (int j = 0; j < n; ++j) t[0][j] = -objective[j];
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i + 1][j] = rows[i][j];
    t[i + 1][n + i] = Rational(1);
    t[i + 1][cols - 1] = rhs[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    // Bland: entering = lowest-index column with negative reduced cost.
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (t[0][j].sign() < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (int i = 1; i <= m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i - 1] < basis[leave - 1])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return {false, Rational(0), {}};
    // Pivot.
    {
      Rational piv = t[leave][enter];
      for (int j = 0; j < cols; ++j)
        if (!t[leave][j].is_zero()) t[leave][j] /= piv;
    }
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      Rational factor = t[i][enter];
      if (factor.is_zero()) continue;
      for (int j = 0; j < cols; ++j)
        if (!t[leave][j].is_zero()) t[i][j] -= factor * t[leave][j];
    }
    basis[leave - 1] = enter;
  }

  SimplexResult res;
  res.objective = t[0][cols - 1];
  res.x.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = t[i + 1][cols - 1];
  return res;
}

LPSolution lp_optimal_revenue(const TypeSpace& ts, unsigned long long guard) {
  const int n = ts.agent_count();
  const int m = ts.items;
  const unsigned long long profiles = ts.profile_count();
  unsigned long long type_total = 0;
  for (const auto& ag : ts.agents) type_total += ag.count();
  if (profiles * n * m + type_total > guard)
    throw std::length_error("lp_optimal_revenue: size guard exceeded");
  const unsigned long long p_count = profiles;

  // Variable layout: x vars, then split payments p+ / p-.
  auto x_var = [&](unsigned long long v, int i, int j) {
    return static_cast<int>((v * n + i) * m + j);
  };
  std::vector<int> pay_base(n + 1, 0);
  for (int i = 0; i < n; ++i)
    pay_base[i + 1] = pay_base[i] + ts.agents[i].count();
  const int x_count = static_cast<int>(p_count) * n * m;
  const int pay_count = pay_base[n];
  auto pp_var = [&](int i, int t) { return x_count + pay_base[i] + t; };
  auto pm_var = [&](int i, int t) {
    return x_count + pay_count + pay_base[i] + t;
  };
  const int n_vars = x_count + 2 * pay_count;

  std::vector<Rational> prof_prob(p_count);
  std::vector<std::vector<int>> prof(p_count, std::vector<int>(n));
  for (unsigned long long v = 0; v < p_count; ++v) {
    decode_profile(ts, v, prof[v]);
    prof_prob[v] = profile_prob(ts, prof[v]);
  }
  // Per agent, the profile indices grouped by that agent's type.
  std::vector<std::vector<std::vector<unsigned long long>>> by_type(n);
  for (int i = 0; i < n; ++i)
    by_type[i].assign(ts.agents[i].count(), {});
  for (unsigned long long v = 0; v < p_count; ++v)
    for (int i = 0; i < n; ++i) by_type[i][prof[v][i]].push_back(v);

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  auto add_row = [&]() -> std::vector<Rational>& {
    rows.emplace_back(n_vars, Rational(0));
    rhs.emplace_back(0);
    return rows.back();
  };

  // Interim expected value of agent i with true type t reporting r, as
  // coefficients on the x variables of profiles where i reports r.
  auto add_report_terms = [&](std::vector<Rational>& row, int i, int t, int r,
                              int sign) {
    const AgentTypes& ag = ts.agents[i];
    for (unsigned long long v : by_type[i][r]) {
      Rational w = prof_prob[v] / ag.prob[r];  // Pr[v_{-i}]
      for (int j = 0; j < m; ++j) {
        Rational c = w * ag.value[t][j];
        if (c.is_zero()) continue;
        row[x_var(v, i, j)] += sign > 0 ? c : -c;
      }
    }
  };

  for (int i = 0; i < n; ++i) {
    const int tc = ts.agents[i].count();
    for (int t = 0; t < tc; ++t) {
      for (int r = 0; r < tc; ++r) {
        if (r == t) continue;
        // E[u(t->r)] - E[u(t->t)] <= 0
        auto& row = add_row();
        add_report_terms(row, i, t, r, +1);
        add_report_terms(row, i, t, t, -1);
        row[pp_var(i, r)] -= Rational(1);
        row[pm_var(i, r)] += Rational(1);
        row[pp_var(i, t)] += Rational(1);
        row[pm_var(i, t)] -= Rational(1);
      }
      // -E[u(t->t)] <= 0
      auto& row = add_row();
      add_report_terms(row, i, t, t, -1);
      row[pp_var(i, t)] += Rational(1);
      row[pm_var(i, t)] -= Rational(1);
    }
  }
  for (unsigned long long v = 0; v < p_count; ++v)
    for (int j = 0; j < m; ++j) {
      auto& row = add_row();
      for (int i = 0; i < n; ++i) row[x_var(v, i, j)] = Rational(1);
      rhs.back() = Rational(1);
    }

  std::vector<Rational> objective(n_vars, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < ts.agents[i].count(); ++t) {
      objective[pp_var(i, t)] = ts.agents[i].prob[t];
      objective[pm_var(i, t)] = -ts.agents[i].prob[t];
    }

  SimplexResult sr = simplex_max(rows, rhs, objective);
  LPSolution sol;
  if (!sr.bounded) {
    sol.status = LPSolution::Status::unbounded;
    return sol;
  }
  sol.status = LPSolution::Status::optimal;
  sol.objective = sr.objective;
  sol.payments.resize(n);
  for (int i = 0; i < n; ++i) {
    sol.payments[i].resize(ts.agents[i].count());
    for (int t = 0; t < ts.agents[i].count(); ++t)
      sol.payments[i][t] = sr.x[pp_var(i, t)] - sr.x[pm_var(i, t)];
  }
  for (unsigned long long v = 0; v < p_count; ++v)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        const Rational& x = sr.x[x_var(v, i, j)];
        if (!x.is_zero()) sol.allocation[{v, i, j}] = x;
      }

  // Oracle self-check: the returned point satisfies every constraint exactly
  // and reproduces the objective.
  Rational obj(0);
  for (int j = 0; j < n_vars; ++j)
    if (!sr.x[j].is_zero()) obj += objective[j] * sr.x[j];
  if (!(obj == sr.objective))
    throw std::logic_error("lp oracle: objective self-check failed");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational lhs(0);
    for (int j = 0; j < n_vars; ++j)
      if (!sr.x[j].is_zero() && !rows[r][j].is_zero())
        lhs += rows[r][j] * sr.x[j];
    if (lhs > rhs[r])
      throw std::logic_error("lp oracle: constraint self-check failed");
  }
  return sol;
}

}  // namespace optmech
