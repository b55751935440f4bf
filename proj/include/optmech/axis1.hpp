#pragma once

#include <vector>

#include "optmech/flow.hpp"
#include "optmech/hierarchy.hpp"
#include "optmech/setting.hpp"

namespace optmech {

// Closed-form optimal mechanism for n i.i.d. agents and m i.i.d. bi-valued
// items. Everything is keyed by k = number of high-valued items in a type;
// the full per-type expansion is only materialized on demand (2^m types).
struct Axis1Mechanism {
  Axis1Setting setting;
  int kstar = 0;
  std::vector<Rational> f;     // layer scores, k = 0..m; f[m] = a
  Rational pi_b;               // interim win probability of a high coordinate
  std::vector<Rational> pi_a;  // [k], k = 0..m-1; zero below kstar
  std::vector<Rational> pay;   // [k], payment of a type with k highs, k=0..m
  Rational revenue;            // closed form; equals the payment sum exactly
};

// Flow per edge from layer k+1 to layer k (same for every edge in the cut).
Rational axis1_edge_flow(const Axis1Setting& s, int k);

// Layer-k score of a low coordinate; f(m) = a by the empty-sum convention.
Rational axis1_f(const Axis1Setting& s, int k);

// Least k in [0, m] with f(k) > 0 (strict); exists since f(m) = a > 0.
int axis1_kstar(const Axis1Setting& s);

Rational axis1_pi_b(const Axis1Setting& s);
Rational axis1_pi_a(const Axis1Setting& s, int k, int kstar);

Axis1Mechanism axis1_mechanism(const Axis1Setting& s);

// Layered dual flow over the 2^m types of one agent: each node splits its
// total inflow equally among its children one layer down; only the all-low
// type drains to the sink.
FlowGraph axis1_flow(const Axis1Setting& s, int agent = 0);

// Hierarchy rule over the enumerated types: b on high coordinates, f(k) on
// low ones; zero-score coin fixed to 1.
HierarchyRule axis1_scores(const Axis1Setting& s, const TypeSpace& ts);

// Full per-type interim mechanism (guarded upstream by m).
Mechanism axis1_expand(const Axis1Mechanism& m);

}  // namespace optmech
