#include "stablelab/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include "stablelab/cohomology.hpp"
#include "stablelab/cyclotomic.hpp"
#include "stablelab/error.hpp"
#include "stablelab/json_io.hpp"
#include "stablelab/stability.hpp"
#include "stablelab/verifier.hpp"

namespace stablelab {

namespace {

using json = nlohmann::json;

std::string yes_no(bool b) { return b ? "true" : "false"; }

void check(Scenario& s, std::string name, const std::string& expected, const std::string& actual) {
  s.checks.push_back({std::move(name), expected, actual, expected == actual});
}

void check_verdict(Scenario& s, const std::string& name, const PersistenceVerdict& v, const Rational& density) {
  check(s, name + ": persistent", "true", yes_no(v.persistent));
  check(s, name + ": density", to_string(density), to_string(v.constant_density));
}

Element first_of_order(const GroupPtr& g, std::size_t order) {
  for (Element a = 0; a < g->order(); ++a)
    if (g->element_order(a) == order) return a;
  fail(ErrorKind::InvalidInput, "no element of order " + std::to_string(order));
}

Scenario example_3_8() {
  constexpr std::size_t d = 5;
  constexpr unsigned p = 3;
  Scenario s;
  s.name = "example-3.8";
  s.summary = "M/K cyclic of degree d = 5 > p = 3, S ~ P(sigma): persistent with density 1/d at every layer, "
              "but not p-stable at the base over a tower containing M.";
  s.assumptions = {"M/K is totally ramified at a prime above p",
                   "Ram(M/K) minus S is that single prime, so M meets K_S only in K (W = Gal(M/K))",
                   "M lies inside K_{S u S_p u S_inf}"};
  auto g = cyclic_group(d);
  auto w = whole_group(g);
  const Element tau = 1;
  s.bindings = {{"group", g->name()}, {"d", d}, {"p", p}, {"W", io::to_json(w)},
                {"sigma", json::array({g->label(g->identity()), g->label(tau)})}};

  auto expected = make_rational(1, static_cast<std::int64_t>(d));
  check_verdict(s, "sigma = 1", persistence_verdict(g, g->identity(), w), expected);
  check_verdict(s, "sigma != 1", persistence_verdict(g, tau, w), expected);

  // The tower through M sees every subgroup of Gal(M/K).
  auto tower = TowerFamily::all_subgroups(g);
  auto cs = ClassSet::of_element(g, g->identity(), "cs(M/K)");
  check(s, "sigma = 1: lambda = p window at K", "false", yes_no(stabilizes_at_base(cs, tower, p)));
  check(s, "sigma = 1: lambda = d + 1 window at K", "true",
        yes_no(stability_witness_at(cs, tower, make_rational(d + 1), w).has_value()));
  auto moved = ClassSet::of_element(g, tau, "P(sigma)");
  check(s, "sigma != 1: positive lower bound over the tower", "false",
        yes_no(uniform_lower_bound(moved, tower).has_value()));
  s.bindings["density_at_M"] = io::to_json(tower.density(cs, *tower.index_of(trivial_subgroup(g))));
  return s;
}

Scenario example_3_9() {
  Scenario s;
  s.name = "example-3.9";
  s.summary = "M/K with group S3, sigma a transposition: M meets K_S in K, so S ~ P(sigma) is persistent "
              "with density 1/2, and K is p-stabilizing for every p.";
  s.assumptions = {"M/K is totally ramified at two primes with different residue characteristics, both outside S",
                   "hence M meets K_S and every K_{S u S_p u S_inf} only in K (W = W_p = Gal(M/K))"};
  auto g = symmetric_group(3);
  auto w = whole_group(g);
  const Element sigma = first_of_order(g, 2);
  s.bindings = {{"group", g->name()}, {"sigma", g->label(sigma)}, {"W", io::to_json(w)}};
  check_verdict(s, "verdict", persistence_verdict(g, sigma, w), make_rational(1, 2));

  // Only the base layer of Gal(M/K) is visible from K_{S u S_p u S_inf}.
  TowerFamily seen(g, {w});
  auto set = ClassSet::of_element(g, sigma, "P(sigma)");
  for (unsigned p : {2u, 3u, 5u}) {
    const auto tag = "p = " + std::to_string(p);
    check(s, tag + ": lambda = p window at K", "true", yes_no(stabilizes_at_base(set, seen, p)));
    check(s, tag + ": dagger membership", "true", yes_no(dagger_membership(g, sigma, w)));
  }
  return s;
}

Scenario example_3_10() {
  Scenario s;
  s.name = "example-3.10";
  s.summary = "S contains P(sigma_1) u P(sigma_2) for M_1/K of degree 2 and M_2/K of degree 3; in the compositum "
              "the union of preimages is persistent at K.";
  s.assumptions = {"M_i/K is totally ramified at a prime p_i outside S, with distinct residue characteristics",
                   "hence each M_i meets K_S in K and W_i = Gal(M_i/K)"};
  auto g1 = cyclic_group(2);
  auto g2 = cyclic_group(3);
  auto g = direct_product(g1, g2);
  const Element s1 = 1, s2 = 1;  // the generators
  s.bindings = {{"groups", json::array({g1->name(), g2->name(), g->name()})},
                {"sigma", json::array({g1->label(s1), g2->label(s2)})}};
  check_verdict(s, "M_1", persistence_verdict(g1, s1, whole_group(g1)), make_rational(1, 2));
  check_verdict(s, "M_2", persistence_verdict(g2, s2, whole_group(g2)), make_rational(1, 3));

  // Preimages of sigma_1 and sigma_2 under the two projections of G = Gal(M_1 M_2 / K).
  auto n2 = [&] {  // kernel of G -> Gal(M_1/K)
    for (const auto& h : normal_subgroups(g))
      if (h.order() == 3) return h;
    fail(ErrorKind::InvalidInput, "missing normal subgroup of order 3");
  }();
  auto n1 = [&] {  // kernel of G -> Gal(M_2/K)
    for (const auto& h : normal_subgroups(g))
      if (h.order() == 2) return h;
    fail(ErrorKind::InvalidInput, "missing normal subgroup of order 2");
  }();
  auto q1 = quotient(g, n2);
  auto q2 = quotient(g, n1);
  auto p1 = pullback_classes(q1, ClassSet::of_element(q1.target, q1.projection[first_of_order(g, 2)]));
  auto p2 = pullback_classes(q2, ClassSet::of_element(q2.target, q2.projection[first_of_order(g, 3)]));
  auto uni = p1.united(p2);
  s.bindings["S"] = io::to_json(uni);

  auto tower = TowerFamily(g, {whole_group(g)});
  auto bound = uniform_lower_bound(uni, tower);
  check(s, "union: density at K", "2/3", to_string(class_set_density(uni)));
  check(s, "union: positive lower bound", "true", yes_no(bound.has_value()));
  check(s, "union: stable for some lambda", "true", yes_no(stable_for_some_lambda(uni, tower).has_value()));
  return s;
}

Scenario section_3_4() {
  Scenario s;
  s.name = "section-3.4";
  s.summary = "M/Q with group S3 and K the quadratic subfield: the outer action of Gal(K/Q) moves the class of a "
              "3-cycle in Gal(M/K) = A3, with trivial stabilizer.";
  s.assumptions = {"M/K is totally ramified at a fixed prime outside S, so M meets K_S in K"};
  auto g = symmetric_group(3);
  auto n = [&] {
    for (const auto& h : normal_subgroups(g))
      if (h.order() == 3) return h;
    fail(ErrorKind::InvalidInput, "missing A3");
  }();
  const Element sigma = first_of_order(g, 3);
  auto rep = orbit_set_scenario(n, sigma);
  s.bindings = {{"group", g->name()}, {"N", io::to_json(n)}, {"sigma", g->label(sigma)},
                {"orbit", io::to_json(rep, n)}};
  check(s, "orbit length", "2", std::to_string(rep.orbit.size()));
  check(s, "stabilizer size", "1", std::to_string(rep.stabilizer_size));
  check(s, "nontrivial orbit", "true", yes_no(rep.nontrivial_orbit));

  auto ng = as_group(n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < ng.to_parent.size(); ++i)
    if (ng.to_parent[i] == sigma) idx = i;
  auto v = persistence_verdict(ng.group, static_cast<Element>(idx), whole_group(ng.group));
  check_verdict(s, "P(sigma) over K", v, make_rational(1, 3));
  return s;
}

Scenario section_5_2(const ScenarioOptions& opts) {
  constexpr unsigned p = 3;
  Scenario s;
  s.name = "section-5.2";
  s.summary = "K = Q(mu_3), M = Q(mu_9), S = cs(M/K): persistent at K, not p-stable at K, and the finite-level "
              "Sha^1(Z/3, {1}, Z/3) is Z/3, carrying the class phi_M.";
  s.assumptions = {"Ram(M/K) lies in T, so M meets K_S in K (W = Gal(M/K))"};

  auto ctx = CyclotomicContext::make(9);
  auto gal = ctx.subgroup_of({1, 4, 7});  // Gal(M/K) inside (Z/9)^*
  auto emb = as_group(gal);
  auto g = emb.group;
  auto w = whole_group(g);

  auto v = persistence_verdict(g, g->identity(), w);
  check_verdict(s, "cs(M/K)", v, make_rational(1, 3));
  auto tower = TowerFamily::all_subgroups(g);
  auto cs = ClassSet::of_element(g, g->identity(), "cs(M/K)");
  check(s, "lambda = p window at K", "false", yes_no(stabilizes_at_base(cs, tower, p)));

  auto a = GModule::trivial(g, {static_cast<std::int64_t>(p)});
  LocalFamily split{g, {{trivial_subgroup(g), 1}}};
  auto sha = sha1(a, split);
  check(s, "Sha^1 order", "3", std::to_string(sha.order()));
  bool kernel_is_m = false;
  if (!sha.generators.empty()) {
    const auto& phi = sha.generators.front();
    std::size_t zeros = 0;
    for (const auto& val : phi.values) zeros += a->is_zero(val) ? 1 : 0;
    kernel_is_m = zeros == 1;
  }
  check(s, "phi_M has kernel Gal(L/M)", "true", yes_no(kernel_is_m));
  auto everywhere = sha1(a, LocalFamily::all_cyclic(g));
  check(s, "Sha^1 with all decomposition groups", "1", std::to_string(everywhere.order()));

  auto counts = count_primes_by_residue({9}, opts.bound, SieveOptions{std::uint64_t{1} << 18, opts.jobs});
  auto est = estimate_from_counts(ctx, counts[0], {1, 4, 7}, Weighting::uniform());
  const auto in_m = est.counts.at(1);
  const auto in_k = est.counts.at(1) + est.counts.at(4) + est.counts.at(7);
  const double frac = in_k ? static_cast<double>(in_m) / static_cast<double>(in_k) : 0.0;
  const double err = std::abs(frac - 1.0 / 3.0);
  check(s, "empirical share of p = 1 mod 9 among p = 1 mod 3 within 0.02", "true", yes_no(err < 0.02));

  std::vector<std::string> labels;
  for (auto e : gal.members()) labels.push_back(ctx.unit_group->label(e));
  s.bindings = {{"modulus", ctx.modulus},
                {"gal_M_over_K", labels},
                {"p", p},
                {"sha1", io::to_json(sha)},
                {"persistence", io::to_json(v)},
                {"empirical",
                 {{"bound", opts.bound},
                  {"primes_1_mod_3", in_k},
                  {"primes_1_mod_9", in_m},
                  {"share", frac},
                  {"expected", io::to_json(make_rational(1, 3))},
                  {"abs_error", err}}}};
  return s;
}

}  // namespace

bool Scenario::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ScenarioCheck& c) { return c.pass; });
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"example-3.8", "example-3.9", "example-3.10", "section-3.4",
                                                 "section-5.2"};
  return names;
}

Scenario run_scenario(const std::string& name, const ScenarioOptions& opts) {
  if (name == "example-3.8") return example_3_8();
  if (name == "example-3.9") return example_3_9();
  if (name == "example-3.10") return example_3_10();
  if (name == "section-3.4") return section_3_4();
  if (name == "section-5.2") return section_5_2(opts);
  fail(ErrorKind::UnknownName, "unknown scenario: " + name);
}

}  // namespace stablelab
