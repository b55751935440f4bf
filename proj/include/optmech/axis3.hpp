#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "optmech/flow.hpp"
#include "optmech/hierarchy.hpp"
#include "optmech/setting.hpp"

namespace optmech {

enum class Axis3RegionId { R1 = 1, R2, R3, R4, R5, R6, R7 };

std::string to_string(Axis3RegionId id);

// One classified region: the flow parameter x, the payment variant
// (variant II iff x = (1-p)(1-q)), and the pinned zero-score class with its
// coin when the region uses one.
struct Axis3Region {
  Axis3RegionId id = Axis3RegionId::R1;
  Rational x;
  bool variant_two = false;
  // (item, type) whose score is pinned to zero, with the coin that scales it.
  std::optional<std::pair<int, int>> zero_score_target;
  std::optional<Rational> coin;
};

// Named boundary slack values (exact rationals), for reproducing the region
// partition on a grid; positive slack means the named condition holds.
std::vector<std::pair<std::string, Rational>> axis3_boundary_slacks(
    const Axis3Setting& s);

// Region classification. Evaluated in order R1, R2, {R6, R7}, R3, R4, R5;
// throws std::logic_error if no region matches (guarded by the coverage
// test; cannot happen for interior p >= q).
Axis3Region axis3_classify(const Axis3Setting& s);

// The four-type virtual value table at flow parameter x, canonical item
// order; rows indexed by type (b,b),(b,a),(a,b),(a,a).
std::array<std::array<Rational, 2>, 4> axis3_virtual(const Axis3Setting& s,
                                                     const Rational& x);

// The shared single-agent flow at the region's x.
FlowGraph axis3_flow(const Axis3Setting& s, const Axis3Region& r,
                     int agent = 0);

// The coin that makes the Variant-I tight identity hold exactly for the
// region's pinned class; must land in [0,1] when the classifier emits the
// region (throws std::logic_error otherwise).
Rational axis3_delta(const Axis3Setting& s, Axis3RegionId id);

// Per-region interim tables ([type][item]) and payments ([type]).
std::array<std::array<Rational, 2>, 4> axis3_interim(const Axis3Setting& s,
                                                     const Axis3Region& r);
std::array<Rational, 4> axis3_payments(const Axis3Setting& s,
                                       const Axis3Region& r);

// Hierarchy rule realizing the region: scores from the flow, tier +1 for
// (a,b) on item 1 and (b,a) on item 2 (the modified strict ordering; inert
// whenever the numeric scores differ), coins on the pinned classes.
HierarchyRule axis3_scores(const Axis3Setting& s, const Axis3Region& r);

struct Axis3Mechanism {
  Axis3Setting setting;
  Axis3Region region;
  Mechanism mech;
  Rational revenue;
};

Axis3Mechanism axis3_mechanism(const Axis3Setting& s);

// Revenue of the unmodified flow-induced mechanism at x = (1-p)(1-q)
// (regions 6 and 7 only), for the revenue-equality check.
Rational axis3_flow_induced_revenue(const Axis3Setting& s);

}  // namespace optmech
