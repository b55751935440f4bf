#pragma once

#include <vector>

#include "optmech/rational.hpp"

namespace optmech {

// Low/high per-item values shared by the bi-valued settings; 0 < a < b.
struct ValuePair {
  Rational a;
  Rational b;
  void validate() const;
};

// n i.i.d. agents, m i.i.d. items; each item is worth a with probability p
// and b with probability 1-p, independently.
struct Axis1Setting {
  int n = 1;
  int m = 1;
  ValuePair values;
  Rational p;  // interior: 0 < p < 1

  static Axis1Setting make(int n, int m, const Rational& a, const Rational& b,
                           const Rational& p);
};

// n non-identical agents, 2 i.i.d. items; agent i values each item at a with
// probability q_i. Stored sorted descending (q[0] >= q[1] >= ...); order maps
// sorted slot -> original agent index.
struct Axis2Setting {
  int n = 1;
  ValuePair values;
  std::vector<Rational> q;
  std::vector<int> order;
  static constexpr int m = 2;

  static Axis2Setting make(int n, const Rational& a, const Rational& b,
                           std::vector<Rational> q_original);
};

// n i.i.d. agents, 2 non-identical items; item 1 is low with probability p,
// item 2 with probability q. Canonicalized so that p >= q; items_swapped
// records whether the input items were exchanged.
struct Axis3Setting {
  int n = 1;
  ValuePair values;
  Rational p;
  Rational q;
  bool items_swapped = false;

  static Axis3Setting make(int n, const Rational& a, const Rational& b,
                           const Rational& p, const Rational& q);
};

// Single agent, m items with arbitrary finite supports shifted by a common
// c >= 0. supports[j] holds the strictly increasing pre-shift values (> 0),
// probs[j] the matching masses (> 0, summing to 1, lowest mass >= delta_mass).
struct BundlingSetting {
  Rational c;
  std::vector<std::vector<Rational>> supports;
  std::vector<std::vector<Rational>> probs;
  Rational delta_mass;

  int items() const { return static_cast<int>(supports.size()); }
  Rational v_min() const;  // min_j supports[j].front()
  Rational v_max() const;  // max_j supports[j].back()

  static BundlingSetting make(const Rational& c,
                              std::vector<std::vector<Rational>> supports,
                              std::vector<std::vector<Rational>> probs,
                              const Rational& delta_mass);
};

}  // namespace optmech
