#include "optmech/setting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace optmech {

void ValuePair::validate() const {
  if (!(Rational(0) < a && a < b))
    throw std::invalid_argument("values: need 0 < a < b");
}

static void check_interior(const Rational& p, const char* name) {
  // Degenerate probabilities are rejected: the closed forms divide by p and
  // 1-p (and q, 1-q).
  if (!(Rational(0) < p && p < Rational(1)))
    throw std::invalid_argument(std::string(name) +
                                ": probability must be strictly inside (0,1)");
}

Axis1Setting Axis1Setting::make(int n, int m, const Rational& a,
                                const Rational& b, const Rational& p) {
  if (n < 1 || m < 1) throw std::invalid_argument("axis1: need n,m >= 1");
  Axis1Setting s{n, m, ValuePair{a, b}, p};
  s.values.validate();
  check_interior(p, "axis1 p");
  return s;
}

Axis2Setting Axis2Setting::make(int n, const Rational& a, const Rational& b,
                                std::vector<Rational> q_original) {
  if (n < 1) throw std::invalid_argument("axis2: need n >= 1");
  if (static_cast<int>(q_original.size()) != n)
    throw std::invalid_argument("axis2: need one q per agent");
  for (const Rational& qi : q_original) check_interior(qi, "axis2 q");
  Axis2Setting s;
  s.n = n;
  s.values = ValuePair{a, b};
  s.values.validate();
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    return q_original[x] > q_original[y];
  });
  s.q.reserve(n);
  for (int slot = 0; slot < n; ++slot) s.q.push_back(q_original[s.order[slot]]);
  return s;
}

Axis3Setting Axis3Setting::make(int n, const Rational& a, const Rational& b,
                                const Rational& p, const Rational& q) {
  if (n < 1) throw std::invalid_argument("axis3: need n >= 1");
  check_interior(p, "axis3 p");
  check_interior(q, "axis3 q");
  Axis3Setting s;
  s.n = n;
  s.values = ValuePair{a, b};
  s.values.validate();
  if (q > p) {
    s.p = q;
    s.q = p;
    s.items_swapped = true;
  } else {
    s.p = p;
    s.q = q;
  }
  return s;
}

Rational BundlingSetting::v_min() const {
  Rational r = supports.front().front();
  for (const auto& sup : supports) r = min(r, sup.front());
  return r;
}

Rational BundlingSetting::v_max() const {
  Rational r = supports.front().back();
  for (const auto& sup : supports) r = max(r, sup.back());
  return r;
}

BundlingSetting BundlingSetting::make(
    const Rational& c, std::vector<std::vector<Rational>> supports,
    std::vector<std::vector<Rational>> probs, const Rational& delta_mass) {
  if (c.sign() < 0) throw std::invalid_argument("bundling: need c >= 0");
  if (supports.empty() || supports.size() != probs.size())
    throw std::invalid_argument("bundling: supports/probs shape mismatch");
  if (!(Rational(0) < delta_mass && delta_mass <= Rational(1)))
    throw std::invalid_argument("bundling: delta_mass must be in (0,1]");
  for (std::size_t j = 0; j < supports.size(); ++j) {
    const auto& sup = supports[j];
    const auto& pr = probs[j];
    if (sup.empty() || sup.size() != pr.size())
      throw std::invalid_argument("bundling: item support/prob mismatch");
    if (sup.front().sign() <= 0)
      throw std::invalid_argument("bundling: support values must be > 0");
    for (std::size_t z = 1; z < sup.size(); ++z)
      if (!(sup[z - 1] < sup[z]))
        throw std::invalid_argument("bundling: support not strictly increasing");
    Rational total(0);
    for (const Rational& m : pr) {
      if (m.sign() <= 0)
        throw std::invalid_argument("bundling: probabilities must be > 0");
      total += m;
    }
    if (!(total == Rational(1)))
      throw std::invalid_argument("bundling: item probabilities must sum to 1");
    if (pr.front() < delta_mass)
      throw std::invalid_argument(
          "bundling: lowest-value mass below delta_mass");
  }
  return BundlingSetting{c, std::move(supports), std::move(probs), delta_mass};
}

}  // namespace optmech
