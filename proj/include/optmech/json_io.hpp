#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "optmech/dual.hpp"
#include "optmech/flow.hpp"
#include "optmech/hierarchy.hpp"
#include "optmech/setting.hpp"

namespace optmech {

using SettingVariant =
    std::variant<Axis1Setting, Axis2Setting, Axis3Setting, BundlingSetting>;

TypeSpace enumerate_types(const SettingVariant& s);
std::string setting_kind(const SettingVariant& s);

// Versioned schemas ("optmech/setting/v1", "optmech/flow/v1",
// "optmech/mech/v1", "optmech/cert/v1"). Readers reject unknown fields and
// wrong schema tags; all rationals travel as canonical "num/den" strings, so
// emit(parse(emit(x))) is byte-identical to emit(x).
nlohmann::json setting_to_json(const SettingVariant& s);
SettingVariant setting_from_json(const nlohmann::json& j);

nlohmann::json flows_to_json(const std::vector<FlowGraph>& flows);
std::vector<FlowGraph> flows_from_json(const nlohmann::json& j);

nlohmann::json mechanism_to_json(const Mechanism& mech,
                                 const SettingVariant& setting);
std::pair<Mechanism, SettingVariant> mechanism_from_json(
    const nlohmann::json& j);

// Certificates are outputs only; they carry decimal approximations next to
// the exact values, marked by the _approx suffix.
nlohmann::json certificate_to_json(const OptimalityCertificate& cert);

// Sorted keys, fixed indentation: identical inputs give identical bytes.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace optmech
