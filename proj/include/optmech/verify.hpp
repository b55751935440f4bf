#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "optmech/hierarchy.hpp"
#include "optmech/rational.hpp"
#include "optmech/types.hpp"

namespace optmech {

// A strictly profitable misreport: gain = E[u(true->report)] - E[u(true->true)].
struct DeviationWitness {
  int agent = -1;
  int true_type = -1;
  int report = -1;
  Rational gain;
};

// A type with negative truthful utility.
struct IrWitness {
  int agent = -1;
  int type = -1;
  Rational utility;
};

// Exhaustive BIC check over all agents and ordered type pairs; nullopt if no
// strictly positive gain exists.
std::optional<DeviationWitness> check_bic(const Mechanism& mech,
                                          const TypeSpace& ts);

// BIR check: truthful expected utility nonnegative for every type.
std::optional<IrWitness> check_bir(const Mechanism& mech, const TypeSpace& ts);

// Draws a uniform double in [0,1) deterministically from (seed, salt values);
// used for schedule-independent Monte Carlo.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed) {}
  double next_double();
  std::uint64_t next_u64();

 private:
  std::uint64_t state_;
};

// Ex-post hierarchy allocation for one report profile: winners[j] is the
// winning agent for item j or -1. Randomness (tie-breaking, zero-score coins)
// is drawn from rng. At a zero-value maximum the coin of the lowest-indexed
// argmax member is flipped once for the whole tie set.
std::vector<int> expost_allocate(const HierarchyRule& rule, const TypeSpace& ts,
                                 std::span<const int> profile, SplitRng& rng);

// Exact interim allocation induced by a hierarchy rule under truthful
// bidding, via per-opponent beat/tie/below classification and a tie-count
// polynomial (agents are independent, so no profile enumeration is needed).
// Throws std::length_error past the term guard.
std::vector<std::vector<std::vector<Rational>>> interim_from_expost(
    const HierarchyRule& rule, const TypeSpace& ts,
    unsigned long long term_guard = 1000000);

struct McEstimate {
  double mean = 0;
  double stderr_ = 0;
};

struct McReport {
  std::uint64_t trials = 0;
  McEstimate revenue;
  // [agent][type][item]; conditional on the agent drawing that type.
  std::vector<std::vector<std::vector<McEstimate>>> pi;
};

// Monte Carlo simulation of the mechanism: i.i.d. sampled profiles, ex-post
// allocation, sample means and standard errors. This is the one place in the
// library where floating point is used. Deterministic under a fixed seed and
// independent of the parallel schedule (per-trial RNG streams).
McReport mc_simulate(const Mechanism& mech, const TypeSpace& ts,
                     std::uint64_t trials, std::uint64_t seed,
                     bool parallel = true);

// Builds the three axis mechanisms on the shared parameters (axis1 with m=2,
// axis2 with all q_i = p, axis3 with q = p) and diffs revenue, interim tables
// and payments; for n = 1 also checks the LP oracle. ok=false comes with a
// human-readable diff.
struct CrosscheckReport {
  bool ok = true;
  Rational revenue;
  std::string diff;
};

CrosscheckReport crosscheck_axes(const Rational& a, const Rational& b,
                                 const Rational& p, int n);

}  // namespace optmech
