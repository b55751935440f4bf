#include "doctest.h"
#include "optmech/axis1.hpp"
#include "optmech/axis2.hpp"
#include "optmech/axis3.hpp"
#include "optmech/json_io.hpp"

using namespace optmech;

TEST_CASE("setting JSON round-trips byte-stably") {
  SettingVariant settings[] = {
      Axis1Setting::make(2, 3, Rational(1), Rational(2), Rational(2, 5)),
      Axis2Setting::make(3, Rational(1), Rational(2),
                         {Rational(1, 3), Rational(4, 5), Rational(3, 5)}),
      Axis3Setting::make(2, Rational(1), Rational(2), Rational(1, 3),
                         Rational(1, 2)),
      BundlingSetting::make(
          Rational(4), {{Rational(1), Rational(2)}, {Rational(1), Rational(2)}},
          {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}},
          Rational(1, 2)),
  };
  for (const SettingVariant& s : settings) {
    std::string once = dump_canonical(setting_to_json(s));
    SettingVariant back = setting_from_json(nlohmann::json::parse(once));
    std::string twice = dump_canonical(setting_to_json(back));
    CHECK(once == twice);
  }
}

TEST_CASE("unknown fields and wrong schemas are rejected") {
  SettingVariant s =
      Axis1Setting::make(1, 1, Rational(1), Rational(2), Rational(1, 2));
  nlohmann::json j = setting_to_json(s);
  j["extra"] = 1;
  CHECK_THROWS_AS(setting_from_json(j), std::invalid_argument);
  nlohmann::json j2 = setting_to_json(s);
  j2["schema"] = "optmech/setting/v2";
  CHECK_THROWS_AS(setting_from_json(j2), std::invalid_argument);
  nlohmann::json j3 = setting_to_json(s);
  j3.erase("p");
  CHECK_THROWS_AS(setting_from_json(j3), std::invalid_argument);
  // Decimal probabilities are rejected, only exact "num/den" strings parse.
  nlohmann::json j4 = setting_to_json(s);
  j4["p"] = 0.5;
  CHECK_THROWS_AS(setting_from_json(j4), std::invalid_argument);
  nlohmann::json j5 = setting_to_json(s);
  j5["p"] = "0.5";
  CHECK_THROWS(setting_from_json(j5));
}

TEST_CASE("flow JSON round-trips") {
  Axis1Setting s =
      Axis1Setting::make(2, 2, Rational(1), Rational(2), Rational(1, 2));
  std::vector<FlowGraph> flows{axis1_flow(s, 0), axis1_flow(s, 1)};
  std::string once = dump_canonical(flows_to_json(flows));
  auto back = flows_from_json(nlohmann::json::parse(once));
  std::string twice = dump_canonical(flows_to_json(back));
  CHECK(once == twice);
  TypeSpace ts = enumerate_types(s);
  for (int i = 0; i < 2; ++i)
    CHECK(check_flow_feasible(back[i], ts.agents[i]).ok);
}

TEST_CASE("mechanism JSON round-trips and revenue survives") {
  Axis3Setting s = Axis3Setting::make(2, Rational(1), Rational(2),
                                      Rational(3, 5), Rational(1, 2));
  Axis3Mechanism m = axis3_mechanism(s);
  std::string once = dump_canonical(mechanism_to_json(m.mech, s));
  auto [mech, setting] = mechanism_from_json(nlohmann::json::parse(once));
  std::string twice = dump_canonical(mechanism_to_json(mech, setting));
  CHECK(once == twice);
  CHECK(mech.revenue() == m.revenue);
  CHECK(mech.pi == m.mech.pi);
}

TEST_CASE("certificate JSON carries exact strings plus approximations") {
  OptimalityCertificate cert;
  cert.flow_feasible = true;
  cert.bic_ok = true;
  cert.bir_ok = true;
  cert.interim_checked = true;
  cert.dual_objective_value = Rational(9, 4);
  cert.mechanism_revenue = Rational(9, 4);
  cert.optimal = true;
  nlohmann::json j = certificate_to_json(cert);
  CHECK(j.at("dual_objective") == "9/4");
  CHECK(j.at("dual_objective_approx") == 2.25);
  CHECK(j.at("optimal") == true);
}
