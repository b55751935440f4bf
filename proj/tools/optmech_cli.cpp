// Command-line front end: builds the closed-form mechanisms, certifies them
// against their dual flows, runs the LP oracle and the simulator, and emits
// the versioned JSON artifacts.
//
// Exit codes: 0 success, 1 input error, 2 certification failure (artifact
// still emitted), 3 guard/size refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "optmech/axis1.hpp"
#include "optmech/axis2.hpp"
#include "optmech/axis3.hpp"
#include "optmech/bundling.hpp"
#include "optmech/dual.hpp"
#include "optmech/json_io.hpp"
#include "optmech/lp.hpp"
#include "optmech/verify.hpp"

using namespace optmech;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotOptimal = 2;
constexpr int kExitGuard = 3;

struct OutputOptions {
  std::string format = "table";
  std::string out_path;  // empty = stdout
};

bool guard_override() {
  const char* v = std::getenv("OPTMECH_GUARD_OVERRIDE");
  return v != nullptr && *v != '\0';
}

unsigned long long profile_guard() {
  return guard_override() ? ~0ull : (1ull << 20);
}
unsigned long long lp_guard() { return guard_override() ? ~0ull : 5000ull; }
unsigned long long interim_guard() {
  return guard_override() ? ~0ull : 1000000ull;
}

json rational_field(const Rational& r) { return r.str(); }

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
              rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void write_text(const OutputOptions& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opts.out_path);
    if (!f) throw std::runtime_error("cannot write " + opts.out_path);
    f << text;
  }
}

void emit(const OutputOptions& opts, const json& doc) {
  if (opts.format == "json") {
    write_text(opts, dump_canonical(doc));
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::ostringstream os;
  if (opts.format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) {
      std::string quoted = v;
      if (quoted.find(',') != std::string::npos) quoted = "\"" + quoted + "\"";
      os << k << "," << quoted << "\n";
    }
  } else {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows)
      os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  }
  write_text(opts, os.str());
}

void save_json(const std::string& path, const json& doc) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << dump_canonical(doc);
}

json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read " + path);
  return json::parse(f);
}

// Exact value plus a decimal rendering marked approximate.
void put_value(json& doc, const std::string& key, const Rational& r) {
  doc[key] = rational_field(r);
  doc[key + "_approx"] = r.to_double();
}

struct CommonFlags {
  OutputOptions out;
  bool certify = false;
  std::string emit_mech;
  std::string emit_flow;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_certify = true) {
  cmd->add_option("--format", flags.out.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--out", flags.out.out_path, "write the result here");
  if (with_certify)
    cmd->add_flag("--certify", flags.certify,
                  "build the dual flows and verify optimality");
  cmd->add_option("--emit-mech", flags.emit_mech,
                  "write the mechanism JSON (optmech/mech/v1)");
  cmd->add_option("--emit-flow", flags.emit_flow,
                  "write the dual-flow JSON (optmech/flow/v1)");
}

// Shared tail: optionally certify, emit artifacts, choose the exit code.
int finish(const CommonFlags& flags, json doc, const Mechanism& mech,
           const SettingVariant& setting,
           const std::vector<FlowGraph>& flows) {
  save_json(flags.emit_mech, mechanism_to_json(mech, setting));
  save_json(flags.emit_flow, flows_to_json(flows));
  int code = kExitOk;
  if (flags.certify) {
    OptimalityCertificate cert =
        certify(flows, mech, mech.ts, profile_guard(), interim_guard());
    doc["certificate"] = certificate_to_json(cert);
    if (!cert.optimal) code = kExitNotOptimal;
  }
  emit(flags.out, doc);
  return code;
}

Rational parse_rational(const std::string& text, const char* field) {
  try {
    return Rational::from_string(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string(field) + ": " + e.what());
  }
}

int run_axis1(int n, int m, const std::string& a, const std::string& b,
              const std::string& p, const CommonFlags& flags) {
  Axis1Setting s =
      Axis1Setting::make(n, m, parse_rational(a, "--a"),
                         parse_rational(b, "--b"), parse_rational(p, "--p"));
  Axis1Mechanism mech = axis1_mechanism(s);
  json doc;
  doc["command"] = "axis1";
  doc["setting"] = setting_to_json(s);
  doc["kstar"] = mech.kstar;
  json f = json::array(), pia = json::array(), pay = json::array();
  for (const Rational& v : mech.f) f.push_back(rational_field(v));
  for (const Rational& v : mech.pi_a) pia.push_back(rational_field(v));
  for (const Rational& v : mech.pay) pay.push_back(rational_field(v));
  doc["f_by_k"] = f;
  doc["pi_a_by_k"] = pia;
  doc["payment_by_k"] = pay;
  doc["pi_b"] = rational_field(mech.pi_b);
  put_value(doc, "revenue", mech.revenue);

  bool need_expansion =
      flags.certify || !flags.emit_mech.empty() || !flags.emit_flow.empty();
  if (!need_expansion) {
    emit(flags.out, doc);
    return kExitOk;
  }
  if (!guard_override() && s.m > 12)
    throw std::length_error("axis1: m > 12 needs OPTMECH_GUARD_OVERRIDE");
  Mechanism full = axis1_expand(mech);
  std::vector<FlowGraph> flows;
  for (int i = 0; i < s.n; ++i) flows.push_back(axis1_flow(s, i));
  return finish(flags, std::move(doc), full, s, flows);
}

int run_axis2(int n, const std::string& a, const std::string& b,
              const std::string& q_csv, const CommonFlags& flags) {
  std::vector<Rational> q;
  std::stringstream ss(q_csv);
  std::string part;
  while (std::getline(ss, part, ',')) q.push_back(parse_rational(part, "--q"));
  if (static_cast<int>(q.size()) != n)
    throw std::invalid_argument("--q: need exactly n comma-separated values");
  Axis2Setting s = Axis2Setting::make(n, parse_rational(a, "--a"),
                                      parse_rational(b, "--b"), q);
  Axis2Mechanism mech = axis2_mechanism(s);

  json doc;
  doc["command"] = "axis2";
  doc["setting"] = setting_to_json(s);
  // Report agents under their original indices.
  std::vector<int> slot_of(n);
  for (int slot = 0; slot < n; ++slot) slot_of[s.order[slot]] = slot;
  json agents = json::array();
  for (int orig = 0; orig < n; ++orig) {
    int slot = slot_of[orig];
    Axis2Partition part2 = axis2_partition(s, slot);
    auto originals = [&](const std::vector<int>& slots) {
      json arr = json::array();
      for (int k : slots) arr.push_back(s.order[k]);
      return arr;
    };
    json ag;
    ag["agent"] = orig;
    ag["q"] = rational_field(s.q[slot]);
    ag["case"] = mech.agent_case[slot];
    ag["partition"] = json{{"s1", originals(part2.s1)},
                           {"s2", originals(part2.s2)},
                           {"s3", originals(part2.s3)},
                           {"s4", originals(part2.s4)}};
    ag["pi_b"] = rational_field(mech.mech.pi[slot][0][0]);
    ag["pi_a_next_to_b"] = rational_field(mech.mech.pi[slot][2][0]);
    ag["pi_a_both_low"] = rational_field(mech.mech.pi[slot][3][0]);
    ag["pay_bb"] = rational_field(mech.mech.pay[slot][0]);
    ag["pay_mixed"] = rational_field(mech.mech.pay[slot][1]);
    ag["pay_aa"] = rational_field(mech.mech.pay[slot][3]);
    agents.push_back(ag);
  }
  doc["agents"] = agents;
  put_value(doc, "revenue", mech.revenue);

  std::vector<FlowGraph> flows;
  for (int i = 0; i < n; ++i) flows.push_back(axis2_flow(s, i));
  return finish(flags, std::move(doc), mech.mech, s, flows);
}

json region_to_json(const Axis3Region& r) {
  json reg;
  reg["id"] = to_string(r.id);
  reg["x"] = rational_field(r.x);
  reg["variant"] = r.variant_two ? "II" : "I";
  if (r.zero_score_target) {
    reg["zero_score_item"] = r.zero_score_target->first + 1;
    reg["zero_score_type"] = r.zero_score_target->second;
  }
  if (r.coin) reg["coin"] = rational_field(*r.coin);
  return reg;
}

int run_axis3(int n, const std::string& a, const std::string& b,
              const std::string& p, const std::string& q, bool region_only,
              const CommonFlags& flags) {
  Axis3Setting s =
      Axis3Setting::make(n, parse_rational(a, "--a"), parse_rational(b, "--b"),
                         parse_rational(p, "--p"), parse_rational(q, "--q"));
  Axis3Region region = axis3_classify(s);
  json doc;
  doc["command"] = region_only ? "region" : "axis3";
  doc["setting"] = setting_to_json(s);
  doc["region"] = region_to_json(region);
  if (region_only) {
    json slacks;
    for (const auto& [name, value] : axis3_boundary_slacks(s))
      slacks[name] = rational_field(value);
    doc["boundary_slacks"] = slacks;
    emit(flags.out, doc);
    return kExitOk;
  }
  Axis3Mechanism mech = axis3_mechanism(s);
  const char* type_names[4] = {"bb", "ba", "ab", "aa"};
  json pi, pay;
  for (int t = 0; t < 4; ++t) {
    pi[type_names[t]] = json::array({rational_field(mech.mech.pi[0][t][0]),
                                     rational_field(mech.mech.pi[0][t][1])});
    pay[type_names[t]] = rational_field(mech.mech.pay[0][t]);
  }
  doc["interim"] = pi;
  doc["payments"] = pay;
  put_value(doc, "revenue", mech.revenue);

  std::vector<FlowGraph> flows;
  for (int i = 0; i < n; ++i) flows.push_back(axis3_flow(s, region, i));
  return finish(flags, std::move(doc), mech.mech, s, flows);
}

BundlingSetting bundling_from_flags(const std::string& c_text,
                                    const std::string& supports_path) {
  json j = load_json(supports_path);
  Rational c = parse_rational(c_text, "--c");
  if (j.contains("schema")) {
    SettingVariant sv = setting_from_json(j);
    const auto* base = std::get_if<BundlingSetting>(&sv);
    if (!base)
      throw std::invalid_argument("--supports: setting file is not bundling");
    return BundlingSetting::make(c, base->supports, base->probs,
                                 base->delta_mass);
  }
  std::vector<std::vector<Rational>> sup, pr;
  for (const auto& v : j.at("supports")) {
    std::vector<Rational> row;
    for (const auto& e : v)
      row.push_back(parse_rational(e.get<std::string>(), "supports"));
    sup.push_back(std::move(row));
  }
  for (const auto& v : j.at("probs")) {
    std::vector<Rational> row;
    for (const auto& e : v)
      row.push_back(parse_rational(e.get<std::string>(), "probs"));
    pr.push_back(std::move(row));
  }
  Rational delta =
      parse_rational(j.at("delta_mass").get<std::string>(), "delta_mass");
  return BundlingSetting::make(c, std::move(sup), std::move(pr), delta);
}

int run_bundle(const std::string& c_text, const std::string& supports_path,
               const CommonFlags& flags) {
  BundlingSetting s = bundling_from_flags(c_text, supports_path);
  BundlingMechanism mech = bundling_mechanism(s);
  json doc;
  doc["command"] = "bundle";
  doc["setting"] = setting_to_json(s);
  put_value(doc, "price", mech.price);
  put_value(doc, "threshold", mech.threshold);
  doc["threshold_ok"] = mech.threshold_ok;
  return finish(flags, std::move(doc), mech.mech, s, {bundling_flow(s)});
}

int run_bundle_discretize(const std::string& c_text, int m, int grid,
                          const OutputOptions& out) {
  BundlingSetting s =
      discretize_uniform(parse_rational(c_text, "--c"), m, grid);
  emit(out, setting_to_json(s));
  return kExitOk;
}

int run_verify(const std::string& mech_path, const std::string& flow_path,
               const OutputOptions& out) {
  auto [mech, setting] = mechanism_from_json(load_json(mech_path));
  std::vector<FlowGraph> flows = flows_from_json(load_json(flow_path));
  if (static_cast<int>(flows.size()) != mech.ts.agent_count())
    throw std::invalid_argument("verify: one flow per agent required");
  OptimalityCertificate cert =
      certify(flows, mech, mech.ts, profile_guard(), interim_guard());
  emit(out, certificate_to_json(cert));
  return cert.optimal ? kExitOk : kExitNotOptimal;
}

int run_lp_opt(const std::string& setting_path, const OutputOptions& out) {
  SettingVariant setting = setting_from_json(load_json(setting_path));
  TypeSpace ts = enumerate_types(setting);
  LPSolution sol = lp_optimal_revenue(ts, lp_guard());
  json doc;
  doc["command"] = "lp-opt";
  doc["status"] = sol.status == LPSolution::Status::optimal ? "optimal"
                  : sol.status == LPSolution::Status::unbounded ? "unbounded"
                                                                : "infeasible";
  put_value(doc, "objective", sol.objective);
  json pays = json::array();
  for (const auto& per_agent : sol.payments) {
    json row = json::array();
    for (const Rational& p : per_agent) row.push_back(rational_field(p));
    pays.push_back(row);
  }
  doc["payments"] = pays;
  doc["allocation_support"] = sol.allocation.size();
  emit(out, doc);
  return kExitOk;
}

int run_simulate(const std::string& mech_path, std::uint64_t trials,
                 std::uint64_t seed, const OutputOptions& out) {
  auto [mech, setting] = mechanism_from_json(load_json(mech_path));
  McReport rep = mc_simulate(mech, mech.ts, trials, seed);
  json doc;
  doc["command"] = "simulate";
  doc["trials"] = rep.trials;
  doc["seed"] = seed;
  doc["revenue"] = json{{"mean", rep.revenue.mean},
                        {"stderr", rep.revenue.stderr_},
                        {"approximate", true}};
  json pi = json::array();
  for (int i = 0; i < mech.ts.agent_count(); ++i) {
    json per_type = json::array();
    for (int t = 0; t < mech.ts.agents[i].count(); ++t) {
      json per_item = json::array();
      for (int j = 0; j < mech.ts.items; ++j)
        per_item.push_back(json{{"mean", rep.pi[i][t][j].mean},
                                {"stderr", rep.pi[i][t][j].stderr_}});
      per_type.push_back(per_item);
    }
    pi.push_back(per_type);
  }
  doc["pi_estimates"] = pi;
  doc["exact_revenue"] = rational_field(mech.revenue());
  emit(out, doc);
  return kExitOk;
}

int run_crosscheck(const std::string& a, const std::string& b,
                   const std::string& p, int n, const OutputOptions& out) {
  CrosscheckReport rep =
      crosscheck_axes(parse_rational(a, "--a"), parse_rational(b, "--b"),
                      parse_rational(p, "--p"), n);
  json doc;
  doc["command"] = "crosscheck";
  doc["ok"] = rep.ok;
  put_value(doc, "revenue", rep.revenue);
  if (!rep.ok) doc["diff"] = rep.diff;
  emit(out, doc);
  return rep.ok ? kExitOk : kExitNotOptimal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form revenue-optimal auctions for bi-valued settings, "
               "with exact dual-flow certificates"};
  app.require_subcommand(1);

  // axis1
  int a1_n = 1, a1_m = 1;
  std::string a1_a = "1", a1_b = "2", a1_p;
  CommonFlags a1_flags;
  CLI::App* axis1 = app.add_subcommand(
      "axis1", "n iid agents, m iid bi-valued items");
  axis1->add_option("--n", a1_n, "agents")->required();
  axis1->add_option("--m", a1_m, "items")->required();
  axis1->add_option("--a", a1_a, "low value (rational)");
  axis1->add_option("--b", a1_b, "high value (rational)");
  axis1->add_option("--p", a1_p, "probability of the low value")->required();
  std::string a1_json;
  axis1->add_option("--json", a1_json, "shorthand for --format json --out");
  add_common(axis1, a1_flags);

  // axis2
  int a2_n = 1;
  std::string a2_a = "1", a2_b = "2", a2_q;
  CommonFlags a2_flags;
  CLI::App* axis2 = app.add_subcommand(
      "axis2", "n non-identical agents, 2 iid items");
  axis2->add_option("--n", a2_n, "agents")->required();
  axis2->add_option("--a", a2_a, "low value");
  axis2->add_option("--b", a2_b, "high value");
  axis2->add_option("--q", a2_q, "comma-separated low-value probabilities")
      ->required();
  add_common(axis2, a2_flags);

  // axis3 / region
  int a3_n = 1;
  std::string a3_a = "1", a3_b = "2", a3_p, a3_q;
  bool a3_region_only = false;
  CommonFlags a3_flags;
  CLI::App* axis3 = app.add_subcommand(
      "axis3", "n iid agents, 2 non-identical items");
  axis3->add_option("--n", a3_n, "agents")->required();
  axis3->add_option("--a", a3_a, "low value");
  axis3->add_option("--b", a3_b, "high value");
  axis3->add_option("--p", a3_p, "item-1 low-value probability")->required();
  axis3->add_option("--q", a3_q, "item-2 low-value probability")->required();
  axis3->add_flag("--region-only", a3_region_only,
                  "print the region id and boundary slacks only");
  add_common(axis3, a3_flags);

  int rg_n = 1;
  std::string rg_a = "1", rg_b = "2", rg_p, rg_q;
  OutputOptions rg_out;
  CLI::App* region = app.add_subcommand(
      "region", "classify an axis3 setting (alias of axis3 --region-only)");
  region->add_option("--n", rg_n, "agents")->required();
  region->add_option("--a", rg_a, "low value");
  region->add_option("--b", rg_b, "high value");
  region->add_option("--p", rg_p, "item-1 low-value probability")->required();
  region->add_option("--q", rg_q, "item-2 low-value probability")->required();
  region->add_option("--format", rg_out.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  region->add_option("--out", rg_out.out_path, "write the result here");

  // bundle (+ discretize)
  std::string bu_c, bu_supports;
  CommonFlags bu_flags;
  CLI::App* bundle = app.add_subcommand(
      "bundle", "single-agent grand bundling");
  bundle->add_option("--c", bu_c, "common value shift (rational)");
  bundle->add_option("--supports", bu_supports,
                     "JSON file with supports/probs/delta_mass");
  add_common(bundle, bu_flags);
  std::string bd_c;
  int bd_m = 1, bd_grid = 1;
  OutputOptions bd_out;
  CLI::App* discretize = bundle->add_subcommand(
      "discretize", "uniform [c, c+1) grid discretization");
  discretize->add_option("--c", bd_c, "left endpoint")->required();
  discretize->add_option("--m", bd_m, "items")->required();
  discretize->add_option("--grid", bd_grid, "cells per item")->required();
  discretize->add_option("--format", bd_out.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  discretize->add_option("--out", bd_out.out_path, "write the setting here");

  // verify
  std::string vf_mech, vf_flow;
  OutputOptions vf_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "certify a mechanism against its dual flow");
  verify->add_option("--mechanism", vf_mech, "optmech/mech/v1 file")
      ->required();
  verify->add_option("--flow", vf_flow, "optmech/flow/v1 file")->required();
  verify->add_option("--format", vf_out.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  verify->add_option("--out", vf_out.out_path, "write the certificate here");

  // lp-opt
  std::string lp_setting;
  OutputOptions lp_out;
  CLI::App* lp_opt = app.add_subcommand(
      "lp-opt", "exact-rational LP oracle for a setting");
  lp_opt->add_option("--setting", lp_setting, "optmech/setting/v1 file")
      ->required();
  lp_opt->add_option("--format", lp_out.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  lp_opt->add_option("--out", lp_out.out_path, "write the solution here");

  // simulate
  std::string sm_mech;
  std::uint64_t sm_trials = 1, sm_seed = 0;
  OutputOptions sm_out;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo simulation of a mechanism");
  simulate->add_option("--mechanism", sm_mech, "optmech/mech/v1 file")
      ->required();
  simulate->add_option("--trials", sm_trials, "trial count")->required();
  simulate->add_option("--seed", sm_seed, "RNG seed")->required();
  simulate->add_option("--format", sm_out.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  simulate->add_option("--out", sm_out.out_path, "write the report here");

  // crosscheck
  std::string cc_a = "1", cc_b = "2", cc_p;
  int cc_n = 1;
  OutputOptions cc_out;
  CLI::App* crosscheck = app.add_subcommand(
      "crosscheck", "agreement of the three axes on shared parameters");
  crosscheck->add_option("--a", cc_a, "low value");
  crosscheck->add_option("--b", cc_b, "high value");
  crosscheck->add_option("--p", cc_p, "shared low-value probability")
      ->required();
  crosscheck->add_option("--n", cc_n, "agents")->required();
  crosscheck->add_option("--format", cc_out.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  crosscheck->add_option("--out", cc_out.out_path, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (axis1->parsed()) {
      if (!a1_json.empty()) {
        a1_flags.out.format = "json";
        a1_flags.out.out_path = a1_json;
      }
      return run_axis1(a1_n, a1_m, a1_a, a1_b, a1_p, a1_flags);
    }
    if (axis2->parsed()) return run_axis2(a2_n, a2_a, a2_b, a2_q, a2_flags);
    if (axis3->parsed())
      return run_axis3(a3_n, a3_a, a3_b, a3_p, a3_q, a3_region_only, a3_flags);
    if (region->parsed()) {
      CommonFlags flags;
      flags.out = rg_out;
      return run_axis3(rg_n, rg_a, rg_b, rg_p, rg_q, true, flags);
    }
    if (bundle->parsed()) {
      if (discretize->parsed())
        return run_bundle_discretize(bd_c, bd_m, bd_grid, bd_out);
      if (bu_c.empty() || bu_supports.empty())
        throw std::invalid_argument("bundle: --c and --supports are required");
      return run_bundle(bu_c, bu_supports, bu_flags);
    }
    if (verify->parsed()) return run_verify(vf_mech, vf_flow, vf_out);
    if (lp_opt->parsed()) return run_lp_opt(lp_setting, lp_out);
    if (simulate->parsed())
      return run_simulate(sm_mech, sm_trials, sm_seed, sm_out);
    if (crosscheck->parsed())
      return run_crosscheck(cc_a, cc_b, cc_p, cc_n, cc_out);
  } catch (const std::length_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
