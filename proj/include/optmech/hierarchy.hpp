#pragma once

#include <compare>
#include <string>
#include <vector>

#include "optmech/rational.hpp"
#include "optmech/types.hpp"

namespace optmech {

// Hierarchy score of one (agent, item, type). Ordering is lexicographic on
// (value, tier); the tier breaks ranking ties between types whose numeric
// scores coincide (used by the axis-3 modified mechanisms) without changing
// the value, which alone decides allocate/zero/unallocated.
struct Score {
  Rational value;
  int tier = 0;

  friend bool operator==(const Score&, const Score&) = default;
  friend std::strong_ordering operator<=>(const Score& x, const Score& y) {
    auto c = x.value <=> y.value;
    if (c != std::strong_ordering::equal) return c;
    return x.tier <=> y.tier;
  }
};

// Score table H plus the zero-score coins delta. When the maximum score for
// an item has value exactly 0, the item is allocated with probability delta
// (uniformly among the argmax set) and otherwise withheld. All members of a
// zero-score argmax class are constructed with equal coins; the allocator
// uses the coin of the lowest-indexed member.
struct HierarchyRule {
  std::vector<std::vector<std::vector<Score>>> score;    // [agent][type][item]
  std::vector<std::vector<std::vector<Rational>>> coin;  // [agent][type][item]

  const Score& at(int agent, int type, int item) const {
    return score[agent][type][item];
  }
  const Rational& zero_coin(int agent, int type, int item) const {
    return coin[agent][type][item];
  }

  static HierarchyRule uniform(int agents, int types, int items) {
    HierarchyRule r;
    r.score.assign(agents, std::vector<std::vector<Score>>(
                               types, std::vector<Score>(items)));
    r.coin.assign(agents,
                  std::vector<std::vector<Rational>>(
                      types, std::vector<Rational>(items, Rational(1))));
    return r;
  }
};

// Interim mechanism: per agent and type, the interim allocation vector pi and
// the interim payment, together with the hierarchy rule and type space that
// generated them.
struct Mechanism {
  TypeSpace ts;
  HierarchyRule rule;
  std::vector<std::vector<std::vector<Rational>>> pi;  // [agent][type][item]
  std::vector<std::vector<Rational>> pay;              // [agent][type]
  std::string provenance;

  Rational revenue() const {
    Rational r(0);
    for (int i = 0; i < ts.agent_count(); ++i)
      for (int t = 0; t < ts.agents[i].count(); ++t)
        r += ts.agents[i].prob[t] * pay[i][t];
    return r;
  }
};

}  // namespace optmech
