#include "optmech/json_io.hpp"

#include <set>
#include <stdexcept>

namespace optmech {

using nlohmann::json;

namespace {

constexpr const char* kSettingSchema = "optmech/setting/v1";
constexpr const char* kFlowSchema = "optmech/flow/v1";
constexpr const char* kMechSchema = "optmech/mech/v1";
constexpr const char* kCertSchema = "optmech/cert/v1";

void require_fields(const json& j, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw std::invalid_argument("json: object expected");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument("json: unknown field '" + it.key() + "'");
  for (const std::string& f : allowed)
    if (!j.contains(f))
      throw std::invalid_argument("json: missing field '" + f + "'");
}

void require_schema(const json& j, const char* schema) {
  if (!j.contains("schema") || j.at("schema") != schema)
    throw std::invalid_argument(std::string("json: expected schema ") +
                                schema);
}

Rational rat(const json& j) {
  if (!j.is_string())
    throw std::invalid_argument("json: rational must be a \"num/den\" string");
  return Rational::from_string(j.get<std::string>());
}

json rat_json(const Rational& r) { return r.str(); }

std::vector<Rational> rat_vec(const json& j) {
  std::vector<Rational> v;
  for (const auto& e : j) v.push_back(rat(e));
  return v;
}

json rat_vec_json(const std::vector<Rational>& v) {
  json j = json::array();
  for (const Rational& r : v) j.push_back(rat_json(r));
  return j;
}

}  // namespace

TypeSpace enumerate_types(const SettingVariant& s) {
  return std::visit([](const auto& st) { return enumerate_types(st); }, s);
}

std::string setting_kind(const SettingVariant& s) {
  switch (s.index()) {
    case 0: return "axis1";
    case 1: return "axis2";
    case 2: return "axis3";
    default: return "bundling";
  }
}

json setting_to_json(const SettingVariant& s) {
  json j;
  j["schema"] = kSettingSchema;
  j["kind"] = setting_kind(s);
  if (const auto* a1 = std::get_if<Axis1Setting>(&s)) {
    j["n"] = a1->n;
    j["m"] = a1->m;
    j["a"] = rat_json(a1->values.a);
    j["b"] = rat_json(a1->values.b);
    j["p"] = rat_json(a1->p);
  } else if (const auto* a2 = std::get_if<Axis2Setting>(&s)) {
    j["n"] = a2->n;
    j["a"] = rat_json(a2->values.a);
    j["b"] = rat_json(a2->values.b);
    // Sorted probabilities plus the sorted-slot -> original-agent map.
    j["q"] = rat_vec_json(a2->q);
    j["order"] = a2->order;
  } else if (const auto* a3 = std::get_if<Axis3Setting>(&s)) {
    j["n"] = a3->n;
    j["a"] = rat_json(a3->values.a);
    j["b"] = rat_json(a3->values.b);
    j["p"] = rat_json(a3->p);
    j["q"] = rat_json(a3->q);
    j["items_swapped"] = a3->items_swapped;
  } else {
    const auto& bu = std::get<BundlingSetting>(s);
    j["c"] = rat_json(bu.c);
    j["delta_mass"] = rat_json(bu.delta_mass);
    json sup = json::array(), pr = json::array();
    for (const auto& v : bu.supports) sup.push_back(rat_vec_json(v));
    for (const auto& v : bu.probs) pr.push_back(rat_vec_json(v));
    j["supports"] = sup;
    j["probs"] = pr;
  }
  return j;
}

SettingVariant setting_from_json(const json& j) {
  require_schema(j, kSettingSchema);
  if (!j.contains("kind"))
    throw std::invalid_argument("setting: missing kind");
  std::string kind = j.at("kind");
  if (kind == "axis1") {
    require_fields(j, {"schema", "kind", "n", "m", "a", "b", "p"});
    return Axis1Setting::make(j.at("n"), j.at("m"), rat(j.at("a")),
                              rat(j.at("b")), rat(j.at("p")));
  }
  if (kind == "axis2") {
    require_fields(j, {"schema", "kind", "n", "a", "b", "q", "order"});
    std::vector<int> order = j.at("order");
    std::vector<Rational> sorted_q = rat_vec(j.at("q"));
    int n = j.at("n");
    if (static_cast<int>(order.size()) != n ||
        static_cast<int>(sorted_q.size()) != n)
      throw std::invalid_argument("setting: axis2 shape mismatch");
    std::vector<Rational> original(n);
    for (int slot = 0; slot < n; ++slot) {
      if (order[slot] < 0 || order[slot] >= n)
        throw std::invalid_argument("setting: axis2 order out of range");
      original[order[slot]] = sorted_q[slot];
    }
    Axis2Setting s =
        Axis2Setting::make(n, rat(j.at("a")), rat(j.at("b")), original);
    if (s.q != sorted_q)
      throw std::invalid_argument("setting: axis2 q not sorted descending");
    s.order = order;  // keep the emitter's (stable) permutation verbatim
    return s;
  }
  if (kind == "axis3") {
    require_fields(j, {"schema", "kind", "n", "a", "b", "p", "q",
                       "items_swapped"});
    Axis3Setting s = Axis3Setting::make(j.at("n"), rat(j.at("a")),
                                        rat(j.at("b")), rat(j.at("p")),
                                        rat(j.at("q")));
    if (s.items_swapped)
      throw std::invalid_argument("setting: axis3 p < q in canonical form");
    s.items_swapped = j.at("items_swapped");
    return s;
  }
  if (kind == "bundling") {
    require_fields(j,
                   {"schema", "kind", "c", "delta_mass", "supports", "probs"});
    std::vector<std::vector<Rational>> sup, pr;
    for (const auto& v : j.at("supports")) sup.push_back(rat_vec(v));
    for (const auto& v : j.at("probs")) pr.push_back(rat_vec(v));
    return BundlingSetting::make(rat(j.at("c")), std::move(sup), std::move(pr),
                                 rat(j.at("delta_mass")));
  }
  throw std::invalid_argument("setting: unknown kind '" + kind + "'");
}

json flows_to_json(const std::vector<FlowGraph>& flows) {
  json j;
  j["schema"] = kFlowSchema;
  json arr = json::array();
  for (const FlowGraph& f : flows) {
    json g;
    g["agent"] = f.agent;
    g["nodes"] = f.node_count;
    g["source"] = rat_vec_json(f.source);
    g["mu"] = rat_vec_json(f.mu);
    json edges = json::array();
    for (const FlowEdge& e : f.edges) {
      json ej;
      ej["from"] = e.from;
      ej["to"] = e.to;
      ej["amount"] = rat_json(e.amount);
      edges.push_back(ej);
    }
    g["lambda"] = edges;
    arr.push_back(g);
  }
  j["flows"] = arr;
  return j;
}

std::vector<FlowGraph> flows_from_json(const json& j) {
  require_fields(j, {"schema", "flows"});
  require_schema(j, kFlowSchema);
  std::vector<FlowGraph> flows;
  for (const auto& g : j.at("flows")) {
    require_fields(g, {"agent", "nodes", "source", "mu", "lambda"});
    FlowGraph f;
    f.agent = g.at("agent");
    f.node_count = g.at("nodes");
    f.source = rat_vec(g.at("source"));
    f.mu = rat_vec(g.at("mu"));
    for (const auto& ej : g.at("lambda")) {
      require_fields(ej, {"from", "to", "amount"});
      f.edges.push_back({ej.at("from"), ej.at("to"), rat(ej.at("amount"))});
    }
    flows.push_back(std::move(f));
  }
  return flows;
}

json mechanism_to_json(const Mechanism& mech, const SettingVariant& setting) {
  json j;
  j["schema"] = kMechSchema;
  j["setting"] = setting_to_json(setting);
  j["provenance"] = mech.provenance;
  json score = json::array(), coin = json::array();
  for (int i = 0; i < mech.ts.agent_count(); ++i) {
    json si = json::array(), ci = json::array();
    for (int t = 0; t < mech.ts.agents[i].count(); ++t) {
      json st = json::array(), ct = json::array();
      for (int jt = 0; jt < mech.ts.items; ++jt) {
        json e;
        e["value"] = rat_json(mech.rule.score[i][t][jt].value);
        e["tier"] = mech.rule.score[i][t][jt].tier;
        st.push_back(e);
        ct.push_back(rat_json(mech.rule.coin[i][t][jt]));
      }
      si.push_back(st);
      ci.push_back(ct);
    }
    score.push_back(si);
    coin.push_back(ci);
  }
  j["hierarchy"] = json{{"score", score}, {"coin", coin}};
  json pi = json::array(), pay = json::array();
  for (int i = 0; i < mech.ts.agent_count(); ++i) {
    json pii = json::array();
    for (const auto& row : mech.pi[i]) pii.push_back(rat_vec_json(row));
    pi.push_back(pii);
    pay.push_back(rat_vec_json(mech.pay[i]));
  }
  j["pi"] = pi;
  j["pay"] = pay;
  return j;
}

std::pair<Mechanism, SettingVariant> mechanism_from_json(const json& j) {
  require_fields(j, {"schema", "setting", "provenance", "hierarchy", "pi",
                     "pay"});
  require_schema(j, kMechSchema);
  SettingVariant setting = setting_from_json(j.at("setting"));
  Mechanism mech;
  mech.ts = enumerate_types(setting);
  mech.provenance = j.at("provenance");
  const json& h = j.at("hierarchy");
  require_fields(h, {"score", "coin"});
  const int n = mech.ts.agent_count();
  mech.rule = HierarchyRule::uniform(n, 0, 0);
  mech.rule.score.assign(n, {});
  mech.rule.coin.assign(n, {});
  for (int i = 0; i < n; ++i) {
    const int tc = mech.ts.agents[i].count();
    if (static_cast<int>(h.at("score").at(i).size()) != tc)
      throw std::invalid_argument("mechanism: score table shape mismatch");
    mech.rule.score[i].resize(tc);
    mech.rule.coin[i].resize(tc);
    for (int t = 0; t < tc; ++t) {
      for (int jt = 0; jt < mech.ts.items; ++jt) {
        const json& e = h.at("score").at(i).at(t).at(jt);
        require_fields(e, {"value", "tier"});
        mech.rule.score[i][t].push_back(
            Score{rat(e.at("value")), e.at("tier")});
        mech.rule.coin[i][t].push_back(rat(h.at("coin").at(i).at(t).at(jt)));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const int tc = mech.ts.agents[i].count();
    std::vector<std::vector<Rational>> pii;
    for (const auto& row : j.at("pi").at(i)) pii.push_back(rat_vec(row));
    if (static_cast<int>(pii.size()) != tc)
      throw std::invalid_argument("mechanism: pi table shape mismatch");
    for (const auto& row : pii)
      for (const Rational& v : row)
        if (v.sign() < 0 || v > Rational(1))
          throw std::invalid_argument("mechanism: pi outside [0,1]");
    mech.pi.push_back(std::move(pii));
    mech.pay.push_back(rat_vec(j.at("pay").at(i)));
    if (static_cast<int>(mech.pay.back().size()) != tc)
      throw std::invalid_argument("mechanism: payment table shape mismatch");
  }
  return {std::move(mech), std::move(setting)};
}

json certificate_to_json(const OptimalityCertificate& cert) {
  json j;
  j["schema"] = kCertSchema;
  j["flow_feasible"] = cert.flow_feasible;
  if (!cert.flow_feasible) {
    j["flow_violation"] = json{{"agent", cert.flow_violation_agent},
                               {"node", cert.flow_detail.violating_node},
                               {"detail", cert.flow_detail.detail}};
  }
  j["bic_ok"] = cert.bic_ok;
  if (cert.bic_witness) {
    j["bic_witness"] = json{{"agent", cert.bic_witness->agent},
                            {"true_type", cert.bic_witness->true_type},
                            {"report", cert.bic_witness->report},
                            {"gain", rat_json(cert.bic_witness->gain)}};
  }
  j["bir_ok"] = cert.bir_ok;
  if (cert.bir_witness) {
    j["bir_witness"] = json{{"agent", cert.bir_witness->agent},
                            {"type", cert.bir_witness->type},
                            {"utility", rat_json(cert.bir_witness->utility)}};
  }
  j["interim_checked"] = cert.interim_checked;
  j["interim_consistent"] = cert.interim_consistent;
  j["dual_objective"] = rat_json(cert.dual_objective_value);
  j["dual_objective_approx"] = cert.dual_objective_value.to_double();
  j["mechanism_revenue"] = rat_json(cert.mechanism_revenue);
  j["mechanism_revenue_approx"] = cert.mechanism_revenue.to_double();
  j["optimal"] = cert.optimal;
  return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace optmech
