#include "stablelab/json_io.hpp"

#include <limits>

#include "stablelab/error.hpp"

namespace stablelab::io {

namespace {

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  fail(ErrorKind::InvalidInput, "expected an integer, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorKind::InvalidInput,
          std::string("missing field \"") + key + "\" in " + j.dump());
  return j.at(key);
}

json matrix_json(const zmod::Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
  return rows;
}

zmod::Mat matrix_from_json(const json& j, std::size_t k) {
  require(j.is_array() && j.size() == k, ErrorKind::InvalidInput, "action matrix must have one row per factor");
  zmod::Mat m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    require(j[i].is_array() && j[i].size() == k, ErrorKind::InvalidInput, "action matrix must be square");
    for (std::size_t c = 0; c < k; ++c) m.at(i, c) = j[i][c].get<std::int64_t>();
  }
  return m;
}

std::vector<std::string> labels_of(const GroupPtr& g, const std::vector<Element>& es) {
  std::vector<std::string> out;
  for (auto e : es) out.push_back(g->label(e));
  return out;
}

}  // namespace

json to_json(const Rational& r) { return {{"num", big_json(num(r))}, {"den", big_json(den(r))}}; }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  BigInt d = big_from_json(field(j, "den"));
  require(d != 0, ErrorKind::InvalidInput, "zero denominator");
  return Rational(big_from_json(field(j, "num")), d);
}

json to_json(const FiniteGroup& g) {
  const auto n = g.order();
  json table = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(g.mul(static_cast<Element>(a), static_cast<Element>(b)));
    table.push_back(std::move(row));
  }
  return {{"name", g.name()}, {"order", n}, {"labels", g.labels()}, {"table", table}};
}

GroupPtr group_from_json(const json& j) {
  if (j.is_string()) return make_preset(j.get<std::string>());
  if (j.is_object() && j.contains("preset")) return make_preset(j.at("preset").get<std::string>());
  const auto& t = field(j, "table");
  require(t.is_array(), ErrorKind::InvalidInput, "table must be an array of rows");
  std::vector<std::vector<Element>> table;
  for (const auto& row : t) {
    require(row.is_array(), ErrorKind::InvalidInput, "table rows must be arrays");
    std::vector<Element> r;
    for (const auto& x : row) {
      require(x.is_number_integer() && x.get<std::int64_t>() >= 0, ErrorKind::InvalidInput,
              "table entries must be nonnegative integers");
      r.push_back(x.get<Element>());
    }
    table.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  std::string name = j.value("name", std::string{});
  return FiniteGroup::from_table(std::move(table), std::move(labels), std::move(name));
}

Element element_from_json(const GroupPtr& g, const json& j) {
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    require(v >= 0 && static_cast<std::size_t>(v) < g->order(), ErrorKind::InvalidInput,
            "element index out of range: " + j.dump());
    return static_cast<Element>(v);
  }
  require(j.is_string(), ErrorKind::InvalidInput, "element must be a label or an index: " + j.dump());
  return g->element_by_label(j.get<std::string>());
}

json to_json(const Subgroup& h) { return {{"members", labels_of(h.parent(), h.members())}}; }

Subgroup subgroup_from_json(const GroupPtr& g, const json& j) {
  auto read = [&](const json& arr) {
    require(arr.is_array(), ErrorKind::InvalidInput, "expected an array of elements");
    std::vector<Element> es;
    for (const auto& x : arr) es.push_back(element_from_json(g, x));
    return es;
  };
  if (j.is_string() && j.get<std::string>() == "whole") return whole_group(g);
  if (j.is_string() && j.get<std::string>() == "trivial") return trivial_subgroup(g);
  if (j.is_array()) return Subgroup(g, read(j));
  if (j.is_object() && j.contains("generators")) {
    auto gens = read(j.at("generators"));
    return subgroup_generated(g, gens);
  }
  try {
    return Subgroup(g, read(field(j, "members")));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInput) fail(ErrorKind::NotSubgroup, e.what());
    throw;
  }
}

json to_json(const ClassSet& s) {
  const auto& g = s.ambient();
  std::vector<std::string> reps;
  for (auto c : s.classes()) reps.push_back(g->label(g->classes()[c].representative));
  return {{"classes", s.classes()}, {"representatives", reps}, {"label", s.label()}};
}

ClassSet class_set_from_json(const GroupPtr& g, const json& j) {
  auto from_elements = [&](const json& arr, std::string label) {
    require(arr.is_array(), ErrorKind::InvalidInput, "elements must be an array");
    std::vector<Element> es;
    std::vector<std::size_t> classes;
    for (const auto& x : arr) {
      auto e = element_from_json(g, x);
      es.push_back(e);
      classes.push_back(g->class_of(e));
    }
    ClassSet s(g, classes, std::move(label));
    require(s.elements().size() == [&] {
      std::sort(es.begin(), es.end());
      es.erase(std::unique(es.begin(), es.end()), es.end());
      return es.size();
    }(), ErrorKind::InvalidInput, "element list is not a union of conjugacy classes");
    return s;
  };
  if (j.is_array()) return from_elements(j, {});
  std::string label = j.is_object() ? j.value("label", std::string{}) : std::string{};
  if (j.is_object() && j.contains("elements")) return from_elements(j.at("elements"), label);
  const auto& cls = field(j, "classes");
  require(cls.is_array(), ErrorKind::InvalidInput, "classes must be an array");
  std::vector<std::size_t> classes;
  for (const auto& c : cls) {
    require(c.is_number_integer() && c.get<std::int64_t>() >= 0 &&
                static_cast<std::size_t>(c.get<std::int64_t>()) < g->classes().size(),
            ErrorKind::InvalidInput, "class index out of range: " + c.dump());
    classes.push_back(c.get<std::size_t>());
  }
  return ClassSet(g, std::move(classes), std::move(label));
}

json to_json(const GModule& a) {
  json action = json::object();
  for (const auto& [g, m] : a.generator_action()) action[a.group()->label(g)] = matrix_json(m);
  return {{"group", to_json(*a.group())}, {"orders", a.orders()}, {"action", action}, {"label", a.label()}};
}

ModulePtr module_from_json(const GroupPtr& g, const json& j) {
  require(j.is_object(), ErrorKind::InvalidInput, "module must be an object");
  if (j.contains("preset")) {
    const auto preset = j.at("preset").get<std::string>();
    if (preset == "regular") return GModule::regular(g, field(j, "p").get<std::int64_t>());
    if (preset == "multiplication") {
      auto m = GModule::multiplication(field(j, "n").get<std::int64_t>());
      const auto& h = *m->group();
      require(h.order() == g->order() && std::equal(h.table().begin(), h.table().end(), g->table().begin()),
              ErrorKind::InvalidInput, "multiplication module needs the unit group (Z/n)*");
      return m;
    }
    if (preset == "trivial") return GModule::trivial(g, field(j, "orders").get<std::vector<std::int64_t>>());
    fail(ErrorKind::UnknownName, "unknown module preset: " + preset);
  }
  auto orders = field(j, "orders").get<std::vector<std::int64_t>>();
  if (!j.contains("action") || j.at("action").empty()) return GModule::trivial(g, orders);
  const auto& act = j.at("action");
  require(act.is_object(), ErrorKind::InvalidInput, "action must map generator labels to matrices");
  std::map<Element, zmod::Mat> gens;
  for (const auto& [key, m] : act.items()) gens[g->element_by_label(key)] = matrix_from_json(m, orders.size());
  return GModule::build(g, orders, gens, j.value("label", std::string{}));
}

ModulePtr module_from_json(const json& j) {
  if (j.is_object() && j.value("preset", std::string{}) == "multiplication")
    return GModule::multiplication(field(j, "n").get<std::int64_t>());
  return module_from_json(group_from_json(field(j, "group")), j);
}

json to_json(const Cocycle& f) { return {{"values", f.values}}; }

Cocycle cocycle_from_json(const ModulePtr& a, const json& j) {
  const auto& vals = j.is_array() ? j : field(j, "values");
  require(vals.is_array() && vals.size() == a->group()->order(), ErrorKind::InvalidInput,
          "a cochain needs one value per group element");
  Cocycle f{a, {}};
  for (const auto& v : vals) {
    auto vec = v.get<zmod::Vec>();
    require(vec.size() == a->rank(), ErrorKind::InvalidInput, "cochain value has the wrong rank");
    f.values.push_back(a->reduce(vec));
  }
  return f;
}

json to_json(const H1Result& r) {
  json gens = json::array();
  for (const auto& f : r.generators) gens.push_back(f.values);
  return {{"factors", r.factors}, {"generators", gens}, {"order", r.order()}};
}

H1Result h1_result_from_json(const ModulePtr& a, const json& j) {
  H1Result r;
  r.factors = field(j, "factors").get<std::vector<std::int64_t>>();
  if (j.contains("generators"))
    for (const auto& g : j.at("generators")) r.generators.push_back(cocycle_from_json(a, g));
  r.space = h1_space(a);
  return r;
}

json to_json(const AbelianGroupValue& v) {
  return {{"factors", v.factors}, {"basis", v.basis}, {"order", v.order()}};
}

json to_json(const StabilityWitness& w) {
  return {{"subset", to_json(w.subset)},
          {"stabilizing_layer", to_json(w.stabilizing_layer)},
          {"a", to_json(w.bound_a)},
          {"lambda", to_json(w.lambda)}};
}

json to_json(const PersistenceVerdict& v) {
  return {{"persistent", v.persistent},
          {"density", to_json(v.constant_density)},
          {"witness_subgroup", to_json(v.witness_subgroup)}};
}

json to_json(const OrbitReport& r, const Subgroup& n) {
  auto cls = subgroup_classes(n);
  std::vector<std::string> reps;
  for (auto c : r.orbit) reps.push_back(n.parent()->label(cls[c].representative));
  return {{"orbit", r.orbit},
          {"orbit_representatives", reps},
          {"stabilizer_size", r.stabilizer_size},
          {"coset_count", r.coset_count},
          {"nontrivial_orbit", r.nontrivial_orbit}};
}

json to_json(const Finding& f) {
  return {{"id", f.id}, {"claim", f.claim}, {"instance", f.instance}, {"detail", f.detail}};
}

Finding finding_from_json(const json& j) {
  return Finding{field(j, "id").get<std::string>(), field(j, "claim").get<std::string>(),
                 field(j, "instance").get<std::string>(), field(j, "detail").get<std::string>()};
}

json to_json(const SweepReport& r) {
  json viol = json::array(), sharp = json::array(), per = json::object();
  for (const auto& f : r.violations) viol.push_back(to_json(f));
  for (const auto& f : r.sharp) sharp.push_back(to_json(f));
  for (const auto& [claim, st] : r.per_claim)
    per[claim] = {{"checked", st.checked}, {"vacuous", st.vacuous}, {"violations", st.violations}, {"sharp", st.sharp}};
  return {{"catalog_hash", r.catalog_hash}, {"claims", r.claims}, {"checked", r.checked}, {"vacuous", r.vacuous},
          {"violations", viol}, {"sharp", sharp}, {"per_claim", per}};
}

SweepReport report_from_json(const json& j) {
  SweepReport r;
  r.catalog_hash = field(j, "catalog_hash").get<std::string>();
  r.claims = field(j, "claims").get<std::vector<std::string>>();
  r.checked = field(j, "checked").get<std::size_t>();
  r.vacuous = field(j, "vacuous").get<std::size_t>();
  for (const auto& f : field(j, "violations")) r.violations.push_back(finding_from_json(f));
  if (j.contains("sharp"))
    for (const auto& f : j.at("sharp")) r.sharp.push_back(finding_from_json(f));
  if (j.contains("per_claim"))
    for (const auto& [claim, st] : j.at("per_claim").items())
      r.per_claim[claim] = ClaimStats{st.at("checked").get<std::size_t>(), st.at("vacuous").get<std::size_t>(),
                                      st.at("violations").get<std::size_t>(), st.at("sharp").get<std::size_t>()};
  return r;
}

json to_json(const EmpiricalEstimate& e) {
  json counts = json::object(), freq = json::object();
  for (const auto& [r, c] : e.counts) counts[std::to_string(r)] = c;
  for (const auto& [r, f] : e.frequencies) freq[std::to_string(r)] = f;
  return {{"modulus", e.modulus}, {"bound", e.bound},     {"counts", counts},
          {"total", e.total},     {"frequencies", freq}, {"estimate", e.estimate}};
}

json to_json(const CompareReport& r) {
  json pm_exact = json::object(), pm_emp = json::object();
  for (const auto& [m, d] : r.pm_exact) pm_exact[std::to_string(m)] = to_json(d);
  for (const auto& [m, d] : r.pm_empirical) pm_emp[std::to_string(m)] = d;
  return {{"exact", to_json(r.exact)},   {"empirical", r.empirical},   {"abs_error", r.abs_error},
          {"pm_exact", pm_exact},        {"pm_empirical", pm_emp},     {"estimate", to_json(r.estimate)}};
}

json to_json(const Scenario& s) {
  json checks = json::array();
  for (const auto& c : s.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return {{"name", s.name},         {"summary", s.summary}, {"assumptions", s.assumptions},
          {"bindings", s.bindings}, {"checks", checks},     {"pass", s.pass()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace stablelab::io
