#pragma once

#include "optmech/flow.hpp"
#include "optmech/hierarchy.hpp"
#include "optmech/setting.hpp"

namespace optmech {

// Single-agent grand bundling: always allocate everything at the constant
// price c*m + sum_j v_{j,1}; optimal once c clears the threshold.
struct BundlingMechanism {
  BundlingSetting setting;
  Rational price;
  Rational threshold;  // (v_max - v_min) / delta_mass^m
  bool threshold_ok = false;
  Mechanism mech;
};

Rational bundling_threshold(const BundlingSetting& s);

// Every non-minimum type sends its whole injection to the all-minimum type,
// which drains the full unit to the sink.
FlowGraph bundling_flow(const BundlingSetting& s);

BundlingMechanism bundling_mechanism(const BundlingSetting& s);

// Uniform discretization of per-item values on [c, c+1) into G equal cells
// snapped to left endpoints. The whole shift is folded into c (stored
// support (z+1)/G with c reduced by 1/G) so support values stay positive.
BundlingSetting discretize_uniform(const Rational& c, int m, int grid);

}  // namespace optmech
