#pragma once

#include <span>
#include <vector>

#include "optmech/rational.hpp"
#include "optmech/setting.hpp"

namespace optmech {

// One agent's enumerated type list in the fixed documented order:
//   - bi-valued axes: lexicographic with b < a per coordinate, so the all-b
//     type is index 0 and the all-a type is last;
//   - bundling: lexicographic over ascending support order, item 1 major.
struct AgentTypes {
  std::vector<std::vector<Rational>> value;  // [type][item]
  std::vector<Rational> prob;                // [type]
  std::vector<int> high_count;               // [type]; empty if not bi-valued

  int count() const { return static_cast<int>(prob.size()); }
};

struct TypeSpace {
  std::vector<AgentTypes> agents;
  int items = 0;

  int agent_count() const { return static_cast<int>(agents.size()); }
  // Number of full type profiles, product over agents.
  unsigned long long profile_count() const;
};

TypeSpace enumerate_types(const Axis1Setting& s);
TypeSpace enumerate_types(const Axis2Setting& s);
TypeSpace enumerate_types(const Axis3Setting& s);
TypeSpace enumerate_types(const BundlingSetting& s);

// Joint probability of a full profile (one type index per agent).
Rational profile_prob(const TypeSpace& ts, std::span<const int> profile);

// Decodes profile index `idx` (mixed radix, agent 0 most significant) into
// per-agent type indices. Inverse of idx = ((t0*|V1|)+t1)*|V2|+...
void decode_profile(const TypeSpace& ts, unsigned long long idx,
                    std::span<int> out);

}  // namespace optmech
