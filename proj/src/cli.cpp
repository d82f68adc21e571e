#include "stablelab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stablelab/error.hpp"
#include "stablelab/json_io.hpp"

namespace stablelab {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";

struct Options {
  // global
  std::string out_path;
  std::string format = "json";
  unsigned jobs = 1;
  std::optional<std::string> seed;
  // inputs
  std::string group, group_file;
  std::string subgroup, subgroup_file;
  std::string normal, normal_file;
  std::string sigma;
  std::string classes, elements, set_file;
  std::string module_file, orders, module_preset;
  std::int64_t n = 0, p = 0;
  std::string local = "from-set", local_file;
  std::string lambda, family = "all", top, layer;
  std::string kind;
  bool oracle = false;
  // verify
  std::string claims = "all";
  std::size_t max_order = 16;
  std::string policy = "all-subgroups";
  // cyclo
  std::int64_t modulus = 0;
  std::string residues, unit_subgroup, scenario;
  std::uint64_t bound = 1'000'000;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::InvalidInput, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

/// Splits on commas outside parentheses, so product labels such as "(1,2)" survive.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  for (auto& s : out) {
    auto b = s.find_first_not_of(' ');
    auto e = s.find_last_not_of(' ');
    s = b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  }
  return out;
}

std::vector<std::int64_t> split_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& s : split_list(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(s, &used));
      require(used == s.size(), ErrorKind::InvalidInput, "not an integer: " + s);
    } catch (const std::logic_error&) {
      fail(ErrorKind::InvalidInput, "not an integer: " + s);
    }
  }
  return out;
}

/// Labels first; a bare integer that is not a label is an element index.
json element_token(const GroupPtr& g, const std::string& s) {
  for (const auto& l : g->labels())
    if (l == s) return json(s);
  try {
    std::size_t used = 0;
    auto v = std::stoll(s, &used);
    if (used == s.size()) return json(v);
  } catch (const std::logic_error&) {
  }
  return json(s);
}

json element_list(const GroupPtr& g, const std::string& text) {
  json arr = json::array();
  for (const auto& s : split_list(text)) arr.push_back(element_token(g, s));
  return arr;
}

GroupPtr load_group(const Options& o) {
  if (!o.group_file.empty()) return io::group_from_json(read_json_file(o.group_file));
  require(!o.group.empty(), ErrorKind::InvalidInput, "--group or --group-file is required");
  return make_preset(o.group);
}

Subgroup load_subgroup(const GroupPtr& g, const std::string& list, const std::string& file, const char* what) {
  if (!file.empty()) return io::subgroup_from_json(g, read_json_file(file));
  require(!list.empty(), ErrorKind::InvalidInput, std::string("--") + what + " or --" + what + "-file is required");
  if (list == "whole") return whole_group(g);
  if (list == "trivial") return trivial_subgroup(g);
  return io::subgroup_from_json(g, element_list(g, list));
}

Element load_sigma(const GroupPtr& g, const Options& o) {
  require(!o.sigma.empty(), ErrorKind::InvalidInput, "--sigma is required");
  return io::element_from_json(g, element_token(g, o.sigma));
}

ClassSet load_set(const GroupPtr& g, const Options& o) {
  if (!o.set_file.empty()) return io::class_set_from_json(g, read_json_file(o.set_file));
  if (!o.classes.empty()) return io::class_set_from_json(g, json{{"classes", split_ints(o.classes)}});
  require(!o.elements.empty(), ErrorKind::InvalidInput, "--classes, --elements or --set-file is required");
  return io::class_set_from_json(g, element_list(g, o.elements));
}

ModulePtr load_module(const GroupPtr& g, const Options& o) {
  if (!o.module_file.empty()) return io::module_from_json(g, read_json_file(o.module_file));
  if (o.module_preset == "multiplication") return io::module_from_json(g, {{"preset", "multiplication"}, {"n", o.n}});
  if (o.module_preset == "regular") return GModule::regular(g, o.p);
  require(o.module_preset.empty(), ErrorKind::UnknownName, "unknown module preset: " + o.module_preset);
  require(!o.orders.empty(), ErrorKind::InvalidInput, "--module-file, --module-preset or --orders is required");
  return GModule::trivial(g, split_ints(o.orders));
}

/// The multiplication module carries its own group, so --group may be omitted.
std::pair<GroupPtr, ModulePtr> load_group_and_module(const Options& o) {
  if (o.group.empty() && o.group_file.empty()) {
    if (o.module_preset == "multiplication") {
      auto a = GModule::multiplication(o.n);
      return {a->group(), a};
    }
    require(!o.module_file.empty(), ErrorKind::InvalidInput, "--group is required");
    auto a = io::module_from_json(read_json_file(o.module_file));
    return {a->group(), a};
  }
  auto g = load_group(o);
  return {g, load_module(g, o)};
}

LocalFamily load_local(const GroupPtr& g, const Options& o) {
  if (!o.local_file.empty()) {
    auto j = read_json_file(o.local_file);
    require(j.is_array(), ErrorKind::InvalidInput, "local family file must be an array");
    LocalFamily fam{g, {}};
    for (const auto& item : j) {
      auto h = io::subgroup_from_json(g, item.contains("subgroup") ? item.at("subgroup") : item);
      const auto mult = item.is_object() ? item.value("multiplicity", std::size_t{1}) : std::size_t{1};
      fam.members.emplace_back(std::move(h), mult);
    }
    return fam;
  }
  if (o.local == "all-cyclic") return LocalFamily::all_cyclic(g);
  require(o.local == "from-set", ErrorKind::UnknownName, "unknown local family: " + o.local);
  return LocalFamily::cyclic_from_classes(load_set(g, o));
}

TowerFamily load_family(const GroupPtr& g, const Options& o) {
  if (o.family == "all") return TowerFamily::all_subgroups(g);
  require(o.family == "overgroups", ErrorKind::UnknownName, "unknown tower family: " + o.family);
  return TowerFamily::overgroups(load_subgroup(g, o.top, "", "top"));
}

json cache_lookup(const std::string& key) {
  const char* dir = std::getenv("STABLELAB_CACHE_DIR");
  if (!dir || !*dir) return nullptr;
  fs::path p = fs::path(dir) / (key + ".json");
  if (!fs::exists(p)) return nullptr;
  try {
    return read_json_file(p.string());
  } catch (const Error&) {
    return nullptr;
  }
}

void cache_store(const std::string& key, const json& value) {
  const char* dir = std::getenv("STABLELAB_CACHE_DIR");
  if (!dir || !*dir) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path p = fs::path(dir) / (key + ".json");
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream f(tmp);
    if (!f) return;
    f << value.dump();
  }
  fs::rename(tmp, p, ec);
}

json images_json(const std::vector<zmod::Vec>& cols) {
  json arr = json::array();
  for (const auto& c : cols) arr.push_back(c);
  return arr;
}

// ---- subcommands ----------------------------------------------------------

json cmd_group(const Options& o) {
  auto g = load_group(o);
  json classes = json::array();
  for (const auto& c : g->classes())
    classes.push_back({{"representative", g->label(c.representative)},
                       {"size", c.members.size()},
                       {"element_order", g->element_order(c.representative)}});
  json out = io::to_json(*g);
  out["classes"] = classes;
  out["abelian"] = g->is_abelian();
  if (g->order() <= kDefaultSubgroupCap) {
    out["subgroup_count"] = subgroups(g).size();
    out["normal_subgroup_count"] = normal_subgroups(g).size();
  }
  return out;
}

json cmd_density(const std::string& which, const Options& o) {
  auto g = load_group(o);
  if (which == "mh") {
    auto h = load_subgroup(g, o.subgroup, o.subgroup_file, "subgroup");
    auto m = induced_character(h);
    json values = json::array();
    for (std::size_t c = 0; c < g->classes().size(); ++c)
      values.push_back({{"class", c}, {"representative", g->label(g->classes()[c].representative)},
                        {"m", m.values[c]}});
    return {{"subgroup", io::to_json(h)}, {"values", values}};
  }
  if (which == "pm") {
    auto h = load_subgroup(g, o.subgroup, o.subgroup_file, "subgroup");
    json parts = json::object();
    for (const auto& [m, d] : pm_partition(h)) parts[std::to_string(m)] = io::to_json(d);
    return {{"subgroup", io::to_json(h)}, {"partition", parts}};
  }
  if (which == "pullback") {
    auto s = load_set(g, o);
    auto h = load_subgroup(g, o.subgroup, o.subgroup_file, "subgroup");
    return io::to_json(pullback_density(s, h));
  }
  auto w = load_subgroup(g, o.subgroup, o.subgroup_file, "subgroup");
  return io::to_json(basechange_density(g, load_sigma(g, o), w));
}

json cmd_stability(const std::string& which, const Options& o) {
  auto g = load_group(o);
  if (which == "persistent")
    return io::to_json(persistence_verdict(g, load_sigma(g, o), load_subgroup(g, o.subgroup, o.subgroup_file, "subgroup")));
  if (which == "dagger") {
    auto sigma = load_sigma(g, o);
    auto w = load_subgroup(g, o.subgroup, o.subgroup_file, "subgroup");
    return {{"member", dagger_membership(g, sigma, w)}, {"density", io::to_json(basechange_density(g, sigma, w))}};
  }
  if (which == "orbit") {
    auto n = load_subgroup(g, o.normal, o.normal_file, "normal");
    return io::to_json(orbit_set_scenario(n, load_sigma(g, o)), n);
  }
  auto s = load_set(g, o);
  auto family = load_family(g, o);
  if (which == "bound") {
    auto b = uniform_lower_bound(s, family);
    return {{"bound", b ? io::to_json(*b) : json(nullptr)}};
  }
  std::optional<StabilityWitness> w;
  if (o.lambda.empty()) {
    w = stable_for_some_lambda(s, family);
  } else if (!o.layer.empty()) {
    w = stability_witness_at(s, family, parse_rational(o.lambda), load_subgroup(g, o.layer, "", "layer"));
  } else {
    w = stability_witness(s, family, parse_rational(o.lambda));
  }
  if (w) require(w->verify(family), ErrorKind::InvalidInput, "internal error: witness failed re-verification");
  return {{"witness", w ? io::to_json(*w) : json(nullptr)}};
}

json cmd_cohom(const std::string& which, const Options& o) {
  auto [g, a] = load_group_and_module(o);
  if (which == "h0") return io::to_json(h0(a));
  if (which == "h2") return io::to_json(h2(a));
  if (which == "h1") {
    if (o.oracle) return io::to_json(h1_oracle(a));
    const std::string key = "h1-" + a->fingerprint();
    if (auto hit = cache_lookup(key); !hit.is_null()) return hit;
    auto j = io::to_json(h1(a));
    cache_store(key, j);
    return j;
  }
  if (which == "h1star") return io::to_json(h1_star(a));
  if (which == "sha1") return io::to_json(sha1(a, load_local(g, o)));
  if (which == "coker1") return io::to_json(coker1(a, load_local(g, o)));

  // map
  const auto& glob = h1_space(a);
  if (o.kind == "res" || o.kind == "cores") {
    auto h = load_subgroup(g, o.subgroup, o.subgroup_file, "subgroup");
    auto rm = restrict_module(a, h);
    auto loc = h1_space(rm.module);
    std::vector<zmod::Vec> images;
    if (o.kind == "res") {
      for (std::size_t i = 0; i < glob->dimension(); ++i)
        images.push_back(loc->coords(restrict_cocycle(glob->generator(i), rm)));
    } else {
      for (std::size_t i = 0; i < loc->dimension(); ++i)
        images.push_back(glob->coords(corestrict_cocycle(loc->generator(i), rm, a)));
    }
    const auto& src = o.kind == "res" ? glob->factors() : loc->factors();
    const auto& dst = o.kind == "res" ? loc->factors() : glob->factors();
    return {{"kind", o.kind}, {"source_factors", src}, {"target_factors", dst}, {"images", images_json(images)}};
  }
  require(o.kind == "inf", ErrorKind::InvalidInput, "--kind must be res, cores or inf");
  auto n = load_subgroup(g, o.normal, o.normal_file, "normal");
  auto q = quotient(g, n);
  auto down = descend_module(a, q);
  auto quo = h1_space(down);
  std::vector<zmod::Vec> images;
  for (std::size_t i = 0; i < quo->dimension(); ++i)
    images.push_back(glob->coords(inflate_cocycle(quo->generator(i), q, a)));
  return {{"kind", "inf"}, {"source_factors", quo->factors()}, {"target_factors", glob->factors()},
          {"images", images_json(images)}};
}

std::vector<std::string> parse_claims(const std::string& text) {
  std::vector<std::string> out;
  for (auto& c : split_list(text))
    if (!c.empty()) out.push_back(c);
  require(!out.empty(), ErrorKind::InvalidInput, "--claims is empty");
  return out;
}

SweepReport cmd_verify(const Options& o) {
  auto cat = SweepCatalog::default_catalog(o.max_order);
  if (o.policy == "chain") {
    cat.family_policy = SweepCatalog::FamilyPolicy::Chain;
  } else {
    require(o.policy == "all-subgroups", ErrorKind::UnknownName, "unknown family policy: " + o.policy);
  }
  return sweep(cat, parse_claims(o.claims), o.jobs);
}

std::string csv_report(const SweepReport& r) {
  std::ostringstream os;
  os << "claim,checked,vacuous,violations,sharp\n";
  for (const auto& [c, st] : r.per_claim)
    os << c << ',' << st.checked << ',' << st.vacuous << ',' << st.violations << ',' << st.sharp << '\n';
  os << "total," << r.checked << ',' << r.vacuous << ',' << r.violations.size() << ',' << r.sharp.size() << '\n';
  return os.str();
}

std::string csv_estimate(const EmpiricalEstimate& e, const std::optional<Rational>& exact,
                         const std::vector<std::int64_t>& target) {
  std::ostringstream os;
  os.precision(8);
  os << "residue,count,frequency,in_target\n";
  for (const auto& [r, c] : e.counts) {
    const bool in = std::find(target.begin(), target.end(), r) != target.end();
    os << r << ',' << c << ',' << e.frequencies.at(r) << ',' << (in ? 1 : 0) << '\n';
  }
  os << "quantity,exact,empirical\n";
  os << "density," << (exact ? to_string(*exact) : std::string{}) << ',' << e.estimate << '\n';
  return os.str();
}

std::string csv_compare(const CompareReport& r) {
  std::ostringstream os;
  os.precision(8);
  os << "quantity,exact,empirical,abs_error\n";
  os << "density," << to_string(r.exact) << ',' << r.empirical << ',' << r.abs_error << '\n';
  for (const auto& [m, d] : r.pm_exact) {
    const double emp = r.pm_empirical.at(m);
    os << "P_" << m << ',' << to_string(d) << ',' << emp << ',' << std::abs(emp - to_double(d)) << '\n';
  }
  return os.str();
}

std::vector<std::int64_t> normalized_residues(const CyclotomicContext& ctx, const std::string& text) {
  std::vector<std::int64_t> out;
  for (auto r : split_ints(text)) out.push_back(ctx.residues[ctx.element_of(r)]);
  return out;
}

struct Output {
  std::string body;
  int code = kExitOk;
};

Output run_cyclo(const std::string& which, const Options& o) {
  const bool csv = o.format == "csv";
  if (which == "scenario") {
    auto s = run_scenario(o.scenario, ScenarioOptions{o.bound, o.jobs});
    require(!csv, ErrorKind::InvalidInput, "csv output is not available for scenarios");
    return {io::dump(io::to_json(s)), s.pass() ? kExitOk : kExitViolations};
  }
  require(o.modulus >= 3, ErrorKind::InvalidInput, "--modulus must be >= 3");
  auto ctx = CyclotomicContext::make(o.modulus);
  SieveOptions sieve;
  sieve.jobs = o.jobs;
  auto target = normalized_residues(ctx, o.residues);
  if (which == "estimate") {
    auto w = o.unit_subgroup.empty() ? Weighting::uniform()
                                     : Weighting::induced(ctx.subgroup_of(split_ints(o.unit_subgroup)));
    auto e = empirical_density(ctx, target, o.bound, w, sieve);
    std::optional<Rational> exact;
    auto s = ctx.class_set_of(target);
    exact = w.subgroup ? pullback_density(s, *w.subgroup) : class_set_density(s);
    if (csv) return {csv_estimate(e, exact, target)};
    auto j = io::to_json(e);
    j["exact"] = io::to_json(*exact);
    j["target"] = target;
    return {io::dump(j)};
  }
  auto u = o.unit_subgroup.empty() ? whole_group(ctx.unit_group) : ctx.subgroup_of(split_ints(o.unit_subgroup));
  auto r = compare_theoretical(ctx, u, ctx.class_set_of(target), o.bound, sieve);
  if (csv) return {csv_compare(r)};
  return {io::dump(io::to_json(r))};
}

void add_group_opts(CLI::App* c, Options& o) {
  c->add_option("--group", o.group, "Preset group name");
  c->add_option("--group-file", o.group_file, "Group JSON file");
}
void add_subgroup_opts(CLI::App* c, Options& o) {
  c->add_option("--subgroup", o.subgroup, "Subgroup members (labels or indices), 'whole' or 'trivial'");
  c->add_option("--subgroup-file", o.subgroup_file, "Subgroup JSON file");
}
void add_set_opts(CLI::App* c, Options& o) {
  c->add_option("--classes", o.classes, "Class indices");
  c->add_option("--elements", o.elements, "Elements of a union of classes");
  c->add_option("--set-file", o.set_file, "Class set JSON file");
}
void add_module_opts(CLI::App* c, Options& o) {
  c->add_option("--module-file", o.module_file, "Module JSON file");
  c->add_option("--orders", o.orders, "Invariant factors of a trivial module");
  c->add_option("--module-preset", o.module_preset, "multiplication | regular");
  c->add_option("--n", o.n, "Modulus for the multiplication preset");
  c->add_option("--p", o.p, "Prime for the regular preset");
}

void write_meta(const std::string& path, const std::vector<std::string>& args, const Options& o, double seconds) {
  json meta = {{"argv", args},
               {"seed", o.seed ? json(*o.seed) : json(nullptr)},
               {"jobs", o.jobs},
               {"seconds", seconds},
               {"version", kVersion}};
  if (const char* dir = std::getenv("STABLELAB_CACHE_DIR")) meta["cache_dir"] = dir;
  std::ofstream f(path + ".meta.json");
  if (f) f << io::dump(meta);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Densities, stability and cohomology of class-union prime sets", "stablelab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "Write the result to this file (a .meta.json sidecar is written next to it)");
  app.add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps and sieving")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", o.seed, "Accepted and recorded; all computations are deterministic");

  auto* group = app.add_subcommand("group", "Describe a group");
  add_group_opts(group, o);

  auto* density = app.add_subcommand("density", "Density computations");
  density->require_subcommand(1);
  std::map<std::string, CLI::App*> dens;
  for (const char* name : {"mh", "pm", "pullback", "basechange"}) {
    auto* c = density->add_subcommand(name);
    add_group_opts(c, o);
    add_subgroup_opts(c, o);
    if (std::string(name) == "pullback") add_set_opts(c, o);
    if (std::string(name) == "basechange") c->add_option("--sigma", o.sigma, "Element of the group");
    dens[name] = c;
  }

  auto* stability = app.add_subcommand("stability", "Stability and persistence");
  stability->require_subcommand(1);
  std::map<std::string, CLI::App*> stab;
  for (const char* name : {"persistent", "witness", "bound", "dagger", "orbit"}) {
    auto* c = stability->add_subcommand(name);
    add_group_opts(c, o);
    const std::string nm = name;
    if (nm == "persistent" || nm == "dagger") {
      add_subgroup_opts(c, o);
      c->add_option("--sigma", o.sigma, "Element of the group");
    } else if (nm == "orbit") {
      c->add_option("--normal", o.normal, "Normal subgroup members");
      c->add_option("--normal-file", o.normal_file, "Normal subgroup JSON file");
      c->add_option("--sigma", o.sigma, "Element of the normal subgroup");
    } else {
      add_set_opts(c, o);
      c->add_option("--family", o.family, "all | overgroups");
      c->add_option("--top", o.top, "Top subgroup for the overgroups family");
      if (nm == "witness") {
        c->add_option("--lambda", o.lambda, "Window ratio (omit to search for any lambda > 1)");
        c->add_option("--layer", o.layer, "Fix the stabilizing layer");
      }
    }
    stab[nm] = c;
  }

  auto* cohom = app.add_subcommand("cohom", "Group cohomology");
  cohom->require_subcommand(1);
  std::map<std::string, CLI::App*> coh;
  for (const char* name : {"h0", "h1", "h2", "h1star", "sha1", "coker1", "map"}) {
    auto* c = cohom->add_subcommand(name);
    add_group_opts(c, o);
    add_module_opts(c, o);
    const std::string nm = name;
    if (nm == "h1") c->add_flag("--oracle", o.oracle, "Use exhaustive enumeration");
    if (nm == "sha1" || nm == "coker1") {
      add_set_opts(c, o);
      c->add_option("--local", o.local, "from-set | all-cyclic");
      c->add_option("--local-file", o.local_file, "JSON array of {subgroup, multiplicity}");
    }
    if (nm == "map") {
      c->add_option("--kind", o.kind, "res | cores | inf")->required();
      add_subgroup_opts(c, o);
      c->add_option("--normal", o.normal, "Normal subgroup for inflation");
      c->add_option("--normal-file", o.normal_file, "Normal subgroup JSON file");
    }
    coh[nm] = c;
  }

  auto* verify = app.add_subcommand("verify", "Sweep the claims over the instance catalog");
  verify->add_option("--claims", o.claims, "Comma-separated claims or 'all'");
  verify->add_option("--max-order", o.max_order, "Largest group order in the catalog");
  verify->add_option("--policy", o.policy, "all-subgroups | chain");

  auto* cyclo = app.add_subcommand("cyclo", "Cyclotomic arithmetic");
  cyclo->require_subcommand(1);
  std::map<std::string, CLI::App*> cyc;
  for (const char* name : {"estimate", "compare"}) {
    auto* c = cyclo->add_subcommand(name);
    c->add_option("--modulus", o.modulus, "n for Q(mu_n)")->required();
    c->add_option("--residues", o.residues, "Target residues")->required();
    c->add_option("--bound", o.bound, "Sieve bound X");
    c->add_option("--subgroup", o.unit_subgroup, "Subgroup U of (Z/n)* as residues");
    cyc[name] = c;
  }
  auto* scen = cyclo->add_subcommand("scenario");
  scen->add_option("name", o.scenario, "Scenario name")->required();
  scen->add_option("--bound", o.bound, "Sieve bound X");
  cyc["scenario"] = scen;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  auto t0 = std::chrono::steady_clock::now();
  Output result;
  try {
    auto emit_json = [&](const json& j) { result.body = io::dump(j); };
    auto selected = [](const std::map<std::string, CLI::App*>& m) {
      for (const auto& [k, c] : m)
        if (c->parsed()) return k;
      return std::string{};
    };
    const bool csv = o.format == "csv";
    if (group->parsed()) {
      require(!csv, ErrorKind::InvalidInput, "csv output is not available for this command");
      emit_json(cmd_group(o));
    } else if (density->parsed()) {
      require(!csv, ErrorKind::InvalidInput, "csv output is not available for this command");
      emit_json(cmd_density(selected(dens), o));
    } else if (stability->parsed()) {
      require(!csv, ErrorKind::InvalidInput, "csv output is not available for this command");
      emit_json(cmd_stability(selected(stab), o));
    } else if (cohom->parsed()) {
      require(!csv, ErrorKind::InvalidInput, "csv output is not available for this command");
      emit_json(cmd_cohom(selected(coh), o));
    } else if (verify->parsed()) {
      auto rep = cmd_verify(o);
      result.body = csv ? csv_report(rep) : io::dump(io::to_json(rep));
      result.code = rep.pass() ? kExitOk : kExitViolations;
    } else {
      result = run_cyclo(selected(cyc), o);
    }
  } catch (const Error& e) {
    json j = {{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}};
    err << j.dump() << "\n";
    return e.kind() == ErrorKind::CapExceeded ? kExitCap : kExitUsage;
  } catch (const json::exception& e) {
    err << json{{"error", {{"kind", "invalid-input"}, {"message", e.what()}}}}.dump() << "\n";
    return kExitUsage;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (o.out_path.empty()) {
    out << result.body;
  } else {
    std::ofstream f(o.out_path);
    if (!f || !(f << result.body)) {
      err << json{{"error", {{"kind", "invalid-input"}, {"message", "cannot write " + o.out_path}}}}.dump() << "\n";
      return kExitUsage;
    }
    write_meta(o.out_path, std::vector<std::string>(argv, argv + argc), o, seconds);
  }
  return result.code;
}

}  // namespace stablelab
