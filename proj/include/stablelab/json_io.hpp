#pragma once

#include <string>

#include "json.hpp"
#include "stablelab/cohomology.hpp"
#include "stablelab/cyclotomic.hpp"
#include "stablelab/scenarios.hpp"
#include "stablelab/stability.hpp"
#include "stablelab/verifier.hpp"

namespace stablelab::io {

using json = nlohmann::json;

/// {"num": n, "den": d}. Values beyond 64 bits are written as decimal strings.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"name", "order", "labels", "table"}.
json to_json(const FiniteGroup& g);
/// Accepts a preset name string, {"preset": name}, or {"table": [[...]], "labels"?, "name"?}.
GroupPtr group_from_json(const json& j);

/// Elements are written by label. Readers accept labels or indices.
Element element_from_json(const GroupPtr& g, const json& j);

/// {"members": [labels]}.
json to_json(const Subgroup& h);
/// {"members": [...]} or {"generators": [...]}; a bare array is read as members,
/// and the strings "whole" and "trivial" name those subgroups.
Subgroup subgroup_from_json(const GroupPtr& g, const json& j);

/// {"classes": [indices], "representatives": [labels], "label"}.
json to_json(const ClassSet& s);
/// {"classes": [indices]} or {"elements": [labels]} (closed under conjugacy);
/// a bare array is read as elements.
ClassSet class_set_from_json(const GroupPtr& g, const json& j);

/// {"group", "orders", "action": {generator label: matrix}, "label"}.
json to_json(const GModule& a);
/// Over group g: {"orders", "action"?} (action omitted = trivial),
/// {"preset": "multiplication", "n"}, {"preset": "regular", "p"}.
ModulePtr module_from_json(const GroupPtr& g, const json& j);
/// Same, reading the group from j["group"].
ModulePtr module_from_json(const json& j);

/// {"values": [[...] per element in index order]}.
json to_json(const Cocycle& f);
Cocycle cocycle_from_json(const ModulePtr& a, const json& j);

/// {"factors", "generators": [cocycle values], "order"}.
json to_json(const H1Result& r);
/// Factors and generators over the given module.
H1Result h1_result_from_json(const ModulePtr& a, const json& j);
json to_json(const AbelianGroupValue& v);

json to_json(const StabilityWitness& w);
json to_json(const PersistenceVerdict& v);
json to_json(const OrbitReport& r, const Subgroup& n);

json to_json(const Finding& f);
Finding finding_from_json(const json& j);
/// {"catalog_hash", "claims", "checked", "vacuous", "violations", "sharp", "per_claim"}.
json to_json(const SweepReport& r);
SweepReport report_from_json(const json& j);

json to_json(const EmpiricalEstimate& e);
json to_json(const CompareReport& r);
json to_json(const Scenario& s);

/// Sorted keys, two-space indentation, trailing newline.
std::string dump(const json& j);

}  // namespace stablelab::io
