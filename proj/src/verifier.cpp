#include "stablelab/verifier.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <optional>
#include <set>
#include <thread>

#include "json.hpp"
#include "stablelab/error.hpp"

namespace stablelab {

using json = nlohmann::json;

std::string fnv_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void SweepReport::merge(const SweepReport& other) {
  checked += other.checked;
  vacuous += other.vacuous;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  sharp.insert(sharp.end(), other.sharp.begin(), other.sharp.end());
  for (const auto& [k, v] : other.per_claim) {
    auto& s = per_claim[k];
    s.checked += v.checked;
    s.vacuous += v.vacuous;
    s.violations += v.violations;
    s.sharp += v.sharp;
  }
}

SweepCatalog SweepCatalog::default_catalog(std::size_t max_order) {
  SweepCatalog c;
  c.groups = preset_catalog(max_order);
  c.modules = {{{2}}, {{3}}, {{4}}, {{2, 2}}, {{8}}, {{2, 4}}, {{2, 2, 2}}, {{9}}, {{3, 3}}};
  return c;
}

std::string SweepCatalog::canonical() const {
  json j;
  j["groups"] = groups;
  json mods = json::array();
  for (const auto& m : modules) mods.push_back({{"orders", m.orders}, {"nontrivial_actions", m.nontrivial_actions}});
  j["modules"] = mods;
  j["family_policy"] = family_policy == FamilyPolicy::AllSubgroups ? "all-subgroups" : "chain";
  j["primes"] = primes;
  j["max_m"] = max_m;
  j["max_actions"] = max_actions;
  j["max_t_classes"] = max_t_classes;
  j["subgroup_cap"] = subgroup_cap;
  return j.dump();
}

std::string SweepCatalog::hash() const { return fnv_hex(canonical()); }

namespace {

using zmod::Mat;
using zmod::Vec;

unsigned smallest_prime(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return static_cast<unsigned>(p);
  return static_cast<unsigned>(n);
}

json class_json(const ClassSet& t) { return json(t.classes()); }

json module_json(const ModulePtr& a) {
  return {{"orders", a->orders()}, {"action", a->label()}, {"fingerprint", a->fingerprint()}};
}

struct Recorder {
  SweepReport& r;
  void checked(const std::string& claim) {
    ++r.checked;
    ++r.per_claim[claim].checked;
  }
  void vacuous(const std::string& claim) {
    ++r.vacuous;
    ++r.per_claim[claim].vacuous;
  }
  Finding finding(const std::string& claim, const json& inst, const std::string& detail) {
    std::string text = inst.dump();
    return Finding{fnv_hex(claim + "|" + text), claim, text, detail};
  }
  void violation(const std::string& claim, const json& inst, const std::string& detail) {
    r.violations.push_back(finding(claim, inst, detail));
    ++r.per_claim[claim].violations;
  }
  void sharp(const std::string& claim, const json& inst, const std::string& detail) {
    r.sharp.push_back(finding(claim, inst, detail));
    ++r.per_claim[claim].sharp;
  }
};

std::string to_text(const Rational& r) { return to_string(r); }

// Per-module cached data for the containment claim.
struct ModuleCtx {
  explicit ModuleCtx(ModulePtr m) : a(std::move(m)), an(a) {}

  ModulePtr a;
  LocalAnalyzer an;
  std::optional<std::vector<Vec>> star;
  std::map<std::vector<std::size_t>, bool> contained;

  const std::vector<Vec>& star_span() {
    if (!star) {
      const auto& g = a->group();
      auto q = quotient(g, a->action_kernel());
      auto abar = descend_module(a, q);
      auto st = h1_star(abar);
      std::vector<Vec> span;
      for (const auto& gen : st.generators) span.push_back(an.global()->coords(inflate_cocycle(gen, q, a)));
      star = std::move(span);
    }
    return *star;
  }

  // (sha1 order, contained in the inflated H1*)
  std::pair<std::int64_t, bool> containment(const ClassSet& t) {
    auto sha = an.sha1(LocalFamily::cyclic_from_classes(t));
    std::vector<Vec> coords;
    for (const auto& gen : sha.generators) coords.push_back(an.global()->coords(gen));
    return {sha.order(), within_span(an.global()->factors(), star_span(), coords)};
  }
};

bool cyclic_decomposition_holds(const GroupPtr& g, const ClassSet& t, unsigned p, std::string* missing) {
  std::set<std::vector<Element>> generated;
  for (Element x : t.elements()) generated.insert(cyclic_subgroup(g, x).members());
  for (const auto& c : subgroups(g, SubgroupFilter::cyclic_p(p))) {
    if (!generated.count(c.members())) {
      if (missing) {
        *missing = "cyclic " + std::to_string(p) + "-subgroup of order " + std::to_string(c.order()) +
                   " not generated by an element of T";
      }
      return false;
    }
  }
  return true;
}

// Order of the finite-level Sha of Z/p^r (trivial action) at layer L for the
// cyclic subgroups generated by elements of T lying in L.
class ShaLayerCache {
 public:
  std::int64_t order(const Subgroup& layer, const ClassSet& t, std::int64_t pr) {
    std::vector<Element> inside;
    for (Element x : t.elements())
      if (layer.contains(x)) inside.push_back(x);
    auto key = std::make_tuple(layer.members(), pr, inside);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto emb = as_group(layer);
    auto a = GModule::trivial(emb.group, {pr});
    LocalFamily fam{emb.group, {}};
    std::set<std::vector<Element>> seen;
    for (Element x : inside) {
      auto c = cyclic_subgroup(emb.group, static_cast<Element>(emb.from_parent[x]));
      if (seen.insert(c.members()).second) fam.members.emplace_back(std::move(c), 1);
    }
    std::int64_t n = sha1(a, fam).order();
    cache_.emplace(std::move(key), n);
    return n;
  }

 private:
  std::map<std::tuple<std::vector<Element>, std::int64_t, std::vector<Element>>, std::int64_t> cache_;
};

void run_sha_bound(const TowerFamily& family, const ClassSet& t, unsigned p, unsigned m, ShaLayerCache& cache,
                   Recorder& rec, const json& base) {
  std::int64_t pm = 1;
  for (unsigned i = 0; i < m; ++i) pm *= p;
  json inst = base;
  inst["T"] = class_json(t);
  inst["p"] = p;
  inst["m"] = m;
  rec.checked("sha-bound");
  auto ok = witness_layers(t, family, make_rational(pm), {});
  if (std::none_of(ok.begin(), ok.end(), [](bool b) { return b; })) {
    rec.vacuous("sha-bound");
    return;
  }
  std::set<std::size_t> layers;
  for (std::size_t i = 0; i < ok.size(); ++i)
    if (ok[i])
      for (auto j : family.below(i)) layers.insert(j);
  for (auto j : layers)
    for (std::int64_t r = 1, pr = p; r <= 2; ++r, pr *= p) {
      std::int64_t n = cache.order(family.layers()[j], t, pr);
      if (n >= pm) {
        json v = inst;
        v["layer_order"] = family.layers()[j].order();
        v["r"] = r;
        rec.violation("sha-bound", v, "|Sha1| = " + std::to_string(n) + " >= p^m = " + std::to_string(pm));
      }
    }
}

// One chain step: cores(res(x)) = [G:H] x, and cores = 0 when A is killed by
// p, p divides the index and res is an isomorphism.
void run_res_cores_step(const ModulePtr& a, const Subgroup& sub, unsigned p, Recorder& rec, const json& base) {
  rec.checked("res-cores");
  auto rm = restrict_module(a, sub);
  auto global = h1_space(a);
  auto local = h1_space(rm.module);
  const std::int64_t index = static_cast<std::int64_t>(sub.index());
  json inst = base;
  inst["subgroup_order"] = sub.order();
  inst["index"] = index;
  for (std::size_t i = 0; i < global->dimension(); ++i) {
    auto x = global->generator(i);
    auto z = corestrict_cocycle(restrict_cocycle(x, rm), rm, a);
    auto diff = scaled_sum(z, 1, x, -index);
    if (!global->is_coboundary(diff)) {
      rec.violation("res-cores", inst, "cores(res(x)) != [G:H] x on generator " + std::to_string(i));
      return;
    }
  }
  if (a->exponent() != static_cast<std::int64_t>(p) || index % p != 0) return;
  if (global->order() != local->order()) return;
  LocalFamily fam{a->group(), {{sub, 1}}};
  if (LocalAnalyzer(a).sha1(fam).order() != 1) return;
  for (std::size_t i = 0; i < local->dimension(); ++i) {
    auto y = local->generator(i);
    if (!global->is_coboundary(corestrict_cocycle(y, rm, a))) {
      rec.violation("res-cores", inst, "res is an isomorphism and p | index but cores is nonzero");
      return;
    }
  }
}

std::vector<Subgroup> maximal_chain(const GroupPtr& g, std::size_t cap) {
  auto subs = subgroups(g, SubgroupFilter::all(), cap);
  std::vector<Subgroup> chain{whole_group(g)};
  while (!chain.back().is_trivial()) {
    const Subgroup* best = nullptr;
    for (const auto& s : subs)
      if (s.order() < chain.back().order() && s.is_subset_of(chain.back()) &&
          (best == nullptr || s.order() > best->order()))
        best = &s;
    chain.push_back(*best);
  }
  return chain;
}

SweepReport run_group(const std::string& name, const SweepCatalog& cat, const std::set<std::string>& claims) {
  SweepReport rep;
  Recorder rec{rep};
  auto g = make_preset(name);
  const json base = {{"group", name}};
  auto family = TowerFamily::all_subgroups(g, cat.subgroup_cap);
  const auto& subs = family.layers();
  auto ts = catalog_class_sets(g, cat.max_t_classes);

  if (claims.count("density")) {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      rec.checked("density");
      json inst = base;
      inst["subgroup"] = subs[i].members();
      const auto& m = family.character(i);
      std::string bad;
      if (family.density(ClassSet::all(g), i) != 1) bad += "<m_H,1> != 1; ";
      auto pm = pm_partition(subs[i]);
      Rational total = 0, weighted = 0;
      for (const auto& [k, d] : pm) {
        total += d;
        weighted += d * k;
      }
      if (total != 1) bad += "sum of P_m densities != 1; ";
      if (weighted != 1) bad += "sum of m * P_m densities != 1; ";
      if (m.at(g->identity()) != static_cast<std::int64_t>(subs[i].index())) bad += "m_H(e) != [G:H]; ";
      if (!bad.empty()) rec.violation("density", inst, bad);
    }
  }

  if (claims.count("basechange") || claims.count("persistence")) {
    for (const auto& v : normal_subgroups(g, cat.subgroup_cap)) {
      auto q = quotient(g, v);
      const auto& gbar = q.target;
      if (claims.count("basechange")) {
        for (Element sb = 0; sb < gbar->order(); ++sb) {
          auto s = pullback_classes(q, ClassSet::of_element(gbar, sb));
          for (std::size_t i = 0; i < subs.size(); ++i) {
            rec.checked("basechange");
            Rational closed = basechange_density(gbar, sb, image(q, subs[i]));
            Rational pulled = family.density(s, i);
            if (closed != pulled) {
              json inst = base;
              inst["normal"] = v.members();
              inst["sigma"] = sb;
              inst["subgroup"] = subs[i].members();
              rec.violation("basechange", inst, "closed form " + to_text(closed) + " != pullback " + to_text(pulled));
            }
          }
        }
      }
      if (claims.count("persistence")) {
        for (const auto& u0 : subs) {
          auto tower = TowerFamily::overgroups(u0, cat.subgroup_cap);
          auto w = image(q, u0);
          for (const auto& cls : gbar->classes()) {
            rec.checked("persistence");
            Element sb = cls.representative;
            auto s = pullback_classes(q, ClassSet::of_element(gbar, sb));
            auto verdict = persistence_verdict(gbar, sb, w);
            bool bound = uniform_lower_bound(s, tower).has_value();
            bool stable = stable_for_some_lambda(s, tower).has_value();
            auto idx = tower.index_of(u0);
            bool consistent = verdict.constant_density == tower.density(s, *idx);
            if (verdict.persistent != bound || bound != stable || !consistent) {
              json inst = base;
              inst["normal"] = v.members();
              inst["sigma"] = sb;
              inst["top"] = u0.members();
              rec.violation("persistence", inst,
                            std::string("persistent=") + (verdict.persistent ? "1" : "0") +
                                " bound=" + (bound ? "1" : "0") + " stable=" + (stable ? "1" : "0") +
                                (consistent ? "" : " constant density mismatch"));
            }
          }
        }
      }
    }
  }

  std::map<std::pair<std::vector<std::size_t>, unsigned>, bool> hyp;
  auto hypothesis = [&](const ClassSet& t, unsigned p) {
    auto key = std::make_pair(t.classes(), p);
    auto it = hyp.find(key);
    if (it != hyp.end()) return it->second;
    bool h = stabilizes_at_base(t, family, p);
    hyp.emplace(key, h);
    return h;
  };

  if (claims.count("cyclic-decomposition")) {
    for (const auto& t : ts)
      for (unsigned p : cat.primes) {
        rec.checked("cyclic-decomposition");
        json inst = base;
        inst["T"] = class_json(t);
        inst["p"] = p;
        std::string missing;
        bool concl = cyclic_decomposition_holds(g, t, p, &missing);
        if (!hypothesis(t, p)) {
          rec.vacuous("cyclic-decomposition");
          if (!concl) rec.sharp("cyclic-decomposition", inst, missing);
        } else if (!concl) {
          rec.violation("cyclic-decomposition", inst, missing);
        }
      }
  }

  if (claims.count("sha-bound")) {
    ShaLayerCache cache;
    std::optional<TowerFamily> chain_family;
    if (cat.family_policy == SweepCatalog::FamilyPolicy::Chain)
      chain_family.emplace(g, maximal_chain(g, cat.subgroup_cap));
    const TowerFamily& fam = chain_family ? *chain_family : family;
    for (const auto& t : ts)
      for (unsigned p : cat.primes)
        for (unsigned m = 1; m <= cat.max_m; ++m) run_sha_bound(fam, t, p, m, cache, rec, base);
  }

  if (claims.count("containment") || claims.count("res-cores")) {
    for (const auto& recipe : cat.modules) {
      for (const auto& a : catalog_modules(g, recipe, cat.max_actions)) {
        json mbase = base;
        mbase["module"] = module_json(a);
        const unsigned p = smallest_prime(a->cardinality());
        if (claims.count("containment")) {
          ModuleCtx ctx(a);
          for (const auto& t : ts) {
            rec.checked("containment");
            json inst = mbase;
            inst["T"] = class_json(t);
            auto [order, inside] = ctx.containment(t);
            if (!hypothesis(t, p)) {
              rec.vacuous("containment");
              if (!inside) rec.sharp("containment", inst, "|Sha1| = " + std::to_string(order) + " not inside inflated H1*");
            } else if (!inside) {
              rec.violation("containment", inst,
                            "|Sha1| = " + std::to_string(order) + " not inside inflated H1*");
            }
          }
        }
        if (claims.count("res-cores")) {
          if (cat.family_policy == SweepCatalog::FamilyPolicy::Chain) {
            auto chain = maximal_chain(g, cat.subgroup_cap);
            rep.merge(verify_res_cores(chain, a, p));
          } else {
            for (const auto& h : subs)
              if (!h.is_whole()) run_res_cores_step(a, h, p, rec, mbase);
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace

std::vector<ModulePtr> catalog_modules(const GroupPtr& g, const ModuleRecipe& recipe, std::size_t max_actions) {
  std::vector<ModulePtr> out{GModule::trivial(g, recipe.orders)};
  if (!recipe.nontrivial_actions || max_actions == 0) return out;
  const auto& d = recipe.orders;
  std::vector<Mat> choices;
  std::string tag;
  if (d.size() == 1) {
    for (std::int64_t u = 2; u < d[0]; ++u)
      if (zmod::gcd(u, d[0]) == 1) {
        Mat m(1, 1);
        m.at(0, 0) = u;
        choices.push_back(m);
      }
    tag = "Z/" + std::to_string(d[0]);
  } else if (d == std::vector<std::int64_t>{2, 2}) {
    for (auto v : std::vector<std::array<std::int64_t, 4>>{{0, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1},
                                                           {0, 1, 1, 1}, {1, 1, 1, 0}}) {
      Mat m(2, 2);
      m.a.assign(v.begin(), v.end());
      choices.push_back(m);
    }
    tag = "(Z/2)^2";
  } else {
    return out;
  }
  Mat id = Mat::identity(d.size());
  choices.insert(choices.begin(), id);
  auto gens = generating_set(*g);
  if (gens.empty()) return out;
  std::set<std::string> seen{out[0]->fingerprint()};
  std::vector<std::size_t> digit(gens.size(), 0);
  for (;;) {
    std::size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == choices.size()) digit[pos++] = 0;
    if (pos == digit.size()) break;
    std::map<Element, Mat> act;
    std::string label = tag + "{";
    for (std::size_t j = 0; j < gens.size(); ++j) {
      act.emplace(gens[j], choices[digit[j]]);
      label += (j ? "," : "") + std::to_string(digit[j]);
    }
    try {
      auto a = GModule::build(g, d, act, label + "}");
      if (seen.insert(a->fingerprint()).second) out.push_back(std::move(a));
    } catch (const Error&) {
      continue;
    }
    if (out.size() > max_actions) break;
  }
  return out;
}

std::vector<ClassSet> catalog_class_sets(const GroupPtr& g, std::size_t max_t_classes) {
  const std::size_t c = g->classes().size();
  std::vector<ClassSet> out;
  if (c <= max_t_classes) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
      std::vector<std::size_t> pick;
      for (std::size_t i = 0; i < c; ++i)
        if (mask >> i & 1) pick.push_back(i);
      out.emplace_back(g, std::move(pick), "T");
    }
    return out;
  }
  std::set<std::vector<std::size_t>> seen;
  auto push = [&](std::vector<std::size_t> cls) {
    ClassSet s(g, std::move(cls), "T");
    if (seen.insert(s.classes()).second) out.push_back(std::move(s));
  };
  const std::size_t id = g->class_of(g->identity());
  std::vector<std::size_t> all(c);
  for (std::size_t i = 0; i < c; ++i) all[i] = i;
  push(all);
  for (std::size_t i = 0; i < c; ++i) {
    push({i});
    push({id, i});
    auto rest = all;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    push(rest);
  }
  for (std::size_t p : {2u, 3u}) {
    std::vector<std::size_t> pp;
    for (std::size_t i = 0; i < c; ++i) {
      std::size_t o = g->element_order(g->classes()[i].representative);
      while (o % p == 0) o /= p;
      if (o == 1) pp.push_back(i);
    }
    push(pp);
  }
  return out;
}

bool stabilizes_at_base(const ClassSet& t, const TowerFamily& family, unsigned p) {
  return stability_witness_at(t, family, make_rational(p), family.layers()[family.whole_index()]).has_value();
}

SweepReport verify_cyclic_decomposition(const GroupPtr& g, const ClassSet& t, unsigned p) {
  SweepReport rep;
  Recorder rec{rep};
  rep.claims = {"cyclic-decomposition"};
  json inst = {{"group", g->name()}, {"T", class_json(t)}, {"p", p}};
  rec.checked("cyclic-decomposition");
  auto family = TowerFamily::all_subgroups(g);
  std::string missing;
  bool concl = cyclic_decomposition_holds(g, t, p, &missing);
  if (!stabilizes_at_base(t, family, p)) {
    rec.vacuous("cyclic-decomposition");
    if (!concl) rec.sharp("cyclic-decomposition", inst, missing);
  } else if (!concl) {
    rec.violation("cyclic-decomposition", inst, missing);
  }
  return rep;
}

SweepReport verify_containment(const ModulePtr& a, const ClassSet& t) {
  SweepReport rep;
  Recorder rec{rep};
  rep.claims = {"containment"};
  require(t.ambient() == a->group(), ErrorKind::InvalidInput, "T is over a different group than the module");
  json inst = {{"group", a->group()->name()}, {"module", module_json(a)}, {"T", class_json(t)}};
  rec.checked("containment");
  ModuleCtx ctx(a);
  auto [order, inside] = ctx.containment(t);
  auto family = TowerFamily::all_subgroups(a->group());
  const std::string detail = "|Sha1| = " + std::to_string(order) + " not inside inflated H1*";
  if (a->cardinality() == 1 || !stabilizes_at_base(t, family, smallest_prime(a->cardinality()))) {
    rec.vacuous("containment");
    if (!inside) rec.sharp("containment", inst, detail);
  } else if (!inside) {
    rec.violation("containment", inst, detail);
  }
  return rep;
}

SweepReport verify_sha_bound(const TowerFamily& family, const ClassSet& t, unsigned p, unsigned m) {
  SweepReport rep;
  Recorder rec{rep};
  rep.claims = {"sha-bound"};
  ShaLayerCache cache;
  run_sha_bound(family, t, p, m, cache, rec, {{"group", family.ambient()->name()}});
  return rep;
}

SweepReport verify_res_cores(const std::vector<Subgroup>& chain, const ModulePtr& a, unsigned p) {
  SweepReport rep;
  Recorder rec{rep};
  rep.claims = {"res-cores"};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    require(chain[i + 1].is_subset_of(chain[i]), ErrorKind::InvalidInput, "chain is not nested");
    require(chain[i].parent() == a->group(), ErrorKind::InvalidInput, "chain is not in the module's group");
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    json inst = {{"group", a->group()->name()}, {"module", module_json(a)}, {"step", i}};
    if (chain[i].is_whole()) {
      run_res_cores_step(a, chain[i + 1], p, rec, inst);
      continue;
    }
    auto top = restrict_module(a, chain[i]);
    std::vector<Element> mem;
    for (Element x : chain[i + 1].members()) mem.push_back(static_cast<Element>(top.embedding.from_parent[x]));
    std::sort(mem.begin(), mem.end());
    run_res_cores_step(top.module, Subgroup(top.module->group(), mem), p, rec, inst);
  }
  return rep;
}

SweepReport sweep(const SweepCatalog& catalog, const std::vector<std::string>& claims, unsigned jobs) {
  auto t0 = std::chrono::steady_clock::now();
  std::set<std::string> selected;
  for (const auto& c : claims) {
    if (c == "all") {
      selected.insert(kAllClaims.begin(), kAllClaims.end());
      continue;
    }
    require(std::find(kAllClaims.begin(), kAllClaims.end(), c) != kAllClaims.end(), ErrorKind::UnknownName,
            "unknown claim '" + c + "'");
    selected.insert(c);
  }
  for (const auto& name : catalog.groups) {
    auto g = make_preset(name);
    require(g->order() <= catalog.subgroup_cap, ErrorKind::CapExceeded,
            "group " + name + " exceeds the subgroup enumeration cap");
  }
  std::vector<SweepReport> parts(catalog.groups.size());
  std::vector<std::string> errors(catalog.groups.size());
  std::vector<ErrorKind> kinds(catalog.groups.size(), ErrorKind::InvalidInput);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < catalog.groups.size();) {
      try {
        parts[i] = run_group(catalog.groups[i], catalog, selected);
      } catch (const Error& e) {
        errors[i] = e.what();
        kinds[i] = e.kind();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(catalog.groups.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty()) fail(kinds[i], catalog.groups[i] + ": " + errors[i]);

  SweepReport rep;
  rep.catalog_hash = catalog.hash();
  rep.claims.assign(selected.begin(), selected.end());
  for (const auto& c : rep.claims) rep.per_claim[c];
  for (const auto& p : parts) rep.merge(p);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace stablelab
