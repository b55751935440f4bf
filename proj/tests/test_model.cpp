#include "doctest.h"
#include "optmech/setting.hpp"
#include "optmech/types.hpp"

using namespace optmech;

TEST_CASE("setting validation") {
  CHECK_THROWS(Axis1Setting::make(1, 1, Rational(2), Rational(1), Rational(1, 2)));
  CHECK_THROWS(Axis1Setting::make(1, 1, Rational(0), Rational(1), Rational(1, 2)));
  CHECK_THROWS(Axis1Setting::make(1, 1, Rational(1), Rational(2), Rational(0)));
  CHECK_THROWS(Axis1Setting::make(1, 1, Rational(1), Rational(2), Rational(1)));
  CHECK_THROWS(Axis1Setting::make(0, 1, Rational(1), Rational(2), Rational(1, 2)));
  CHECK_THROWS(Axis2Setting::make(2, Rational(1), Rational(2), {Rational(1, 2)}));
}

TEST_CASE("axis2 canonical sort keeps the original agent order") {
  Axis2Setting s = Axis2Setting::make(
      3, Rational(1), Rational(2),
      {Rational(1, 3), Rational(4, 5), Rational(3, 5)});
  CHECK(s.q == std::vector<Rational>{Rational(4, 5), Rational(3, 5),
                                     Rational(1, 3)});
  CHECK(s.order == std::vector<int>{1, 2, 0});
}

TEST_CASE("axis3 canonicalization swaps items so p >= q") {
  Axis3Setting s =
      Axis3Setting::make(2, Rational(1), Rational(2), Rational(1, 3),
                         Rational(1, 2));
  CHECK(s.p == Rational(1, 2));
  CHECK(s.q == Rational(1, 3));
  CHECK(s.items_swapped);
}

TEST_CASE("axis1 type enumeration: order, probabilities, high counts") {
  Axis1Setting s = Axis1Setting::make(1, 2, Rational(1), Rational(2),
                                      Rational(1, 2));
  TypeSpace ts = enumerate_types(s);
  REQUIRE(ts.agents.size() == 1);
  const AgentTypes& ag = ts.agents[0];
  REQUIRE(ag.count() == 4);
  // (b,b), (b,a), (a,b), (a,a)
  CHECK(ag.value[0] == std::vector<Rational>{Rational(2), Rational(2)});
  CHECK(ag.value[1] == std::vector<Rational>{Rational(2), Rational(1)});
  CHECK(ag.value[2] == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(ag.value[3] == std::vector<Rational>{Rational(1), Rational(1)});
  for (int t = 0; t < 4; ++t) CHECK(ag.prob[t] == Rational(1, 4));
  CHECK(ag.high_count == std::vector<int>{2, 1, 1, 0});
}

TEST_CASE("axis3 product measure") {
  Axis3Setting s = Axis3Setting::make(1, Rational(1), Rational(2),
                                      Rational(1, 2), Rational(1, 3));
  TypeSpace ts = enumerate_types(s);
  // Pr[(a,b)] = p (1-q) = 1/2 * 2/3
  CHECK(ts.agents[0].prob[2] == Rational(1, 3));
}

TEST_CASE("bundling enumeration and profile probability") {
  BundlingSetting s = BundlingSetting::make(
      Rational(4),
      {{Rational(1), Rational(2)}, {Rational(1), Rational(2)}},
      {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}},
      Rational(1, 2));
  TypeSpace ts = enumerate_types(s);
  const AgentTypes& ag = ts.agents[0];
  REQUIRE(ag.count() == 4);
  CHECK(ag.value[0] == std::vector<Rational>{Rational(5), Rational(5)});
  CHECK(ag.value[1] == std::vector<Rational>{Rational(5), Rational(6)});
  CHECK(ag.value[2] == std::vector<Rational>{Rational(6), Rational(5)});
  CHECK(ag.value[3] == std::vector<Rational>{Rational(6), Rational(6)});
  CHECK(ag.prob[3] == Rational(1, 4));
}

TEST_CASE("profile_prob is the product measure") {
  Axis1Setting s1 = Axis1Setting::make(2, 2, Rational(1), Rational(2),
                                       Rational(1, 2));
  TypeSpace ts = enumerate_types(s1);
  std::vector<int> prof{0, 3};
  CHECK(profile_prob(ts, prof) == Rational(1, 16));

  Axis2Setting s2 = Axis2Setting::make(
      2, Rational(1), Rational(2), {Rational(2, 3), Rational(1, 3)});
  TypeSpace ts2 = enumerate_types(s2);
  // Sorted agent 0 has q = 2/3: type (a,a) prob (2/3)^2; sorted agent 1 has
  // q = 1/3: type (b,b) prob (2/3)^2.
  std::vector<int> prof2{3, 0};
  CHECK(profile_prob(ts2, prof2) == Rational(16, 81));

  std::vector<int> bad{0, 7};
  CHECK_THROWS_AS(profile_prob(ts2, bad), std::out_of_range);
}

TEST_CASE("per-agent probabilities sum to one") {
  Axis3Setting s = Axis3Setting::make(3, Rational(1), Rational(2),
                                      Rational(7, 10), Rational(2, 10));
  TypeSpace ts = enumerate_types(s);
  for (const auto& ag : ts.agents) {
    Rational sum(0);
    for (const auto& p : ag.prob) sum += p;
    CHECK(sum == Rational(1));
  }
}

TEST_CASE("enumeration is deterministic") {
  Axis1Setting s = Axis1Setting::make(2, 3, Rational(1), Rational(2),
                                      Rational(2, 5));
  TypeSpace t1 = enumerate_types(s);
  TypeSpace t2 = enumerate_types(s);
  for (int i = 0; i < 2; ++i) {
    CHECK(t1.agents[i].value == t2.agents[i].value);
    CHECK(t1.agents[i].prob == t2.agents[i].prob);
  }
}
