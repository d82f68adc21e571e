#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stablelab/cli.hpp"
#include "stablelab/error.hpp"
#include "stablelab/json_io.hpp"

namespace py = pybind11;
using namespace stablelab;
using io::json;

namespace {

// Values cross the boundary as JSON text through the stdlib json module.
json from_py(const py::handle& obj) {
  auto dumps = py::module_::import("json").attr("dumps");
  return json::parse(dumps(obj).cast<std::string>());
}

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(to_string(r)); }

py::object group_info(const std::string& name) {
  auto g = make_preset(name);
  json j = io::to_json(*g);
  json classes = json::array();
  for (const auto& c : g->classes()) {
    json members = json::array();
    for (auto x : c.members) members.push_back(g->label(x));
    classes.push_back(members);
  }
  j["classes"] = classes;
  return to_py(j);
}

py::object basechange(const std::string& name, const py::object& sigma, const py::object& w) {
  auto g = make_preset(name);
  return fraction(basechange_density(g, io::element_from_json(g, from_py(sigma)), io::subgroup_from_json(g, from_py(w))));
}

py::object verdict(const std::string& name, const py::object& sigma, const py::object& w) {
  auto g = make_preset(name);
  auto v = persistence_verdict(g, io::element_from_json(g, from_py(sigma)), io::subgroup_from_json(g, from_py(w)));
  py::dict d;
  d["persistent"] = v.persistent;
  d["density"] = fraction(v.constant_density);
  d["witness_subgroup"] = to_py(io::to_json(v.witness_subgroup));
  return d;
}

py::object h1_of(const py::object& module) { return to_py(io::to_json(h1(io::module_from_json(from_py(module))))); }

std::int64_t h1_star_of(const py::object& module) { return h1_star(io::module_from_json(from_py(module))).order(); }

py::object scenario_of(const std::string& name, std::uint64_t bound) {
  ScenarioOptions opts;
  opts.bound = bound;
  return to_py(io::to_json(run_scenario(name, opts)));
}

py::tuple cli(const std::vector<std::string>& args) {
  std::vector<std::string> full{"stablelab"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "stablelab native core";

  py::register_exception<Error>(m, "StablelabError", PyExc_ValueError);

  m.def("group", &group_info, py::arg("name"), "Preset group: order, labels, table and conjugacy classes.");
  m.def("basechange_density", &basechange, py::arg("group"), py::arg("sigma"), py::arg("w"),
        "Density of the pullback of C(sigma) over the subgroup W, as a Fraction.");
  m.def("persistence_verdict", &verdict, py::arg("group"), py::arg("sigma"), py::arg("w"));
  m.def("h1", &h1_of, py::arg("module"), "H^1 of a module given in its JSON form.");
  m.def("h1_star_order", &h1_star_of, py::arg("module"));
  m.def("prime_pi", [](std::uint64_t x) { return prime_pi(x); }, py::arg("x"));
  m.def("scenario_names", &scenario_names);
  m.def("scenario", &scenario_of, py::arg("name"), py::arg("bound") = 1'000'000);
  m.def("run_cli", &cli, py::arg("args"), "Runs the command-line tool in process; returns (code, stdout, stderr).");
}
