// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "stablelab/cli.hpp"
#include "stablelab/cyclotomic.hpp"
#include "stablelab/json_io.hpp"
#include "stablelab/verifier.hpp"

using namespace stablelab;
using io::json;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome density_identities() {
  auto t0 = Clock::now();
  std::size_t checked = 0, bad = 0;
  for (const auto& name : preset_catalog(24)) {
    auto g = make_preset(name);
    const auto n = static_cast<std::int64_t>(g->order());
    for (const auto& h : subgroups(g)) {
      auto m = induced_character(h);
      Rational inner = 0;
      for (std::size_t c = 0; c < g->classes().size(); ++c)
        inner += make_rational(m.values[c] * static_cast<std::int64_t>(g->classes()[c].members.size()), n);
      Rational total = 0, weighted = 0;
      for (const auto& [mv, d] : pm_partition(h)) {
        total += d;
        weighted += d * mv;
      }
      const bool ok = inner == 1 && total == 1 && weighted == 1 &&
                      m.at(g->identity()) == static_cast<std::int64_t>(h.index());
      ++checked;
      bad += !ok;
    }
  }
  const double s = since(t0);
  return {bad == 0 && s < 10, std::to_string(checked) + " subgroups, " + std::to_string(bad) + " violations, " +
                                  fmt("%.2f s", s)};
}

Outcome basechange_vs_pullback() {
  auto t0 = Clock::now();
  std::size_t checked = 0, bad = 0;
  for (const auto& name : preset_catalog(24)) {
    auto g = make_preset(name);
    auto subs = subgroups(g);
    std::vector<std::vector<std::int64_t>> fps;
    for (const auto& u : subs) fps.push_back(oracle::fixed_point_character(*g, u.members()));
    for (const auto& v : normal_subgroups(g)) {
      auto q = quotient(g, v);
      for (Element sb = 0; sb < q.target->order(); ++sb) {
        auto pre = pullback_classes(q, ClassSet::of_element(q.target, sb));
        for (std::size_t i = 0; i < subs.size(); ++i) {
          Rational brute = 0;
          for (auto e : pre.elements()) brute += make_rational(fps[i][e], static_cast<std::int64_t>(g->order()));
          ++checked;
          bad += basechange_density(q.target, sb, image(q, subs[i])) != brute;
        }
      }
    }
  }
  const double s = since(t0);
  return {bad == 0 && s < 60, std::to_string(checked) + " instances, " + std::to_string(bad) + " violations, " +
                                  fmt("%.2f s", s)};
}

Outcome sweep_claims(const std::vector<std::string>& claims, double limit = 0) {
  auto t0 = Clock::now();
  auto rep = sweep(SweepCatalog::default_catalog(16), claims);
  const double s = since(t0);
  std::ostringstream d;
  d << rep.checked << " checked, " << rep.vacuous << " vacuous, " << rep.violations.size() << " violations, "
    << fmt("%.2f s", s);
  return {rep.pass() && rep.checked > 0 && (limit == 0 || s < limit), d.str()};
}

Outcome h1_oracles() {
  std::size_t oracle_checked = 0, herbrand_checked = 0, bad = 0;
  auto catalog = SweepCatalog::default_catalog(16);
  for (const auto& name : catalog.groups) {
    auto g = make_preset(name);
    for (const auto& recipe : catalog.modules)
      for (const auto& a : catalog_modules(g, recipe, catalog.max_actions)) {
        std::int64_t cost = 1;
        for (std::size_t i = 1; i < g->order() && cost <= kOracleCap; ++i) cost *= a->cardinality();
        if (cost > kOracleCap) continue;
        ++oracle_checked;
        bad += h1(a).factors != h1_oracle(a).factors;
      }
  }
  for (std::size_t n = 1; n <= 12; ++n) {
    auto g = make_preset("Z/" + std::to_string(n));
    for (std::vector<std::int64_t> orders :
         {std::vector<std::int64_t>{2}, {3}, {4}, {5}, {7}, {8}, {9}, {11}, {13}, {16}, {2, 2}, {2, 4}, {2, 8}, {4, 4},
          {2, 2, 2}, {2, 2, 4}, {2, 2, 2, 2}})
      for (const auto& a : catalog_modules(g, ModuleRecipe{orders}, 16)) {
        ++herbrand_checked;
        bad += h1(a).factors != oracle::herbrand_h1(a, n == 1 ? 0 : 1);
      }
  }
  return {bad == 0, std::to_string(oracle_checked) + " enumeration, " + std::to_string(herbrand_checked) +
                        " cyclic, " + std::to_string(bad) + " violations"};
}

Outcome containment_with_sharp() {
  auto rep = sweep(SweepCatalog::default_catalog(16), {"containment", "cyclic-decomposition"});
  bool found = false;
  for (const auto& f : rep.sharp) {
    if (f.claim != "containment") continue;
    auto j = json::parse(f.instance);
    if (j["group"] == "Z/3" && j["T"] == json::array({0}) && j["module"]["orders"] == json::array({3})) found = true;
  }
  std::ostringstream d;
  d << rep.checked << " checked, " << rep.vacuous << " vacuous, " << rep.violations.size() << " violations, "
    << rep.sharp.size() << " sharp, Z/3 instance " << (found ? "present" : "missing");
  return {rep.pass() && found, d.str()};
}

Outcome mu8_special_case() {
  auto a = GModule::multiplication(8);
  const auto pipeline = h1_star(a).order();
  const auto enumerated = oracle::h1_star_order(a);
  return {pipeline == 2 && enumerated == 2,
          "pipeline " + std::to_string(pipeline) + ", oracle " + std::to_string(enumerated)};
}

Outcome cyclotomic_convergence() {
  auto t0 = Clock::now();
  auto c8 = CyclotomicContext::make(8);
  const double e8 = std::abs(empirical_density(c8, {1}, 1'000'000, Weighting::uniform()).estimate - 0.25);
  const double s8 = since(t0);

  auto c7 = CyclotomicContext::make(7);
  const double e7 =
      std::abs(empirical_density(c7, {6}, 1'000'000, Weighting::induced(c7.subgroup_of({1, 6}))).estimate - 0.5);

  std::vector<std::int64_t> moduli;
  for (std::int64_t n = 3; n <= 24; ++n) moduli.push_back(n);
  double worst = 0;
  for (const auto& c : count_primes_by_residue(moduli, 1'000'000)) {
    auto ctx = CyclotomicContext::make(c.modulus);
    const double expected = 1.0 / static_cast<double>(ctx.unit_group->order());
    for (auto r : ctx.residues)
      worst = std::max(worst, std::abs(estimate_from_counts(ctx, c, {r}, Weighting::uniform()).estimate - expected));
  }
  return {e8 < 0.01 && s8 < 10 && e7 < 0.02 && worst < 0.01,
          "mod 8 err " + fmt("%.5f", e8) + fmt(" (%.2f s)", s8) + ", mod 7 weighted err " + fmt("%.5f", e7) +
              ", worst n<=24 err " + fmt("%.5f", worst)};
}

Outcome mod9_scenario() {
  const char* argv[] = {"stablelab", "cyclo", "scenario", "section-5.2"};
  std::ostringstream out, err;
  const int code = run_cli(4, argv, out, err);
  if (code != kExitOk) return {false, "exit code " + std::to_string(code) + ": " + err.str()};
  auto j = json::parse(out.str());
  const auto order = j["bindings"]["sha1"]["order"].get<std::int64_t>();
  const double share = j["bindings"]["empirical"]["share"].get<double>();
  return {order == 3 && std::abs(share - 1.0 / 3) < 0.02,
          "Sha1 order " + std::to_string(order) + ", share " + fmt("%.5f", share)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"density identities", density_identities},
      {"basechange closed form vs pullback", basechange_vs_pullback},
      {"persistence equivalence sweep", [] { return sweep_claims({"persistence"}, 60); }},
      {"H1 oracle equivalence", h1_oracles},
      {"containment and cyclic decomposition", containment_with_sharp},
      {"Sha1 order bound", [] { return sweep_claims({"sha-bound"}); }},
      {"cores after res", [] { return sweep_claims({"res-cores"}); }},
      {"H1* of (Z/8)* on Z/8", mu8_special_case},
      {"cyclotomic convergence", cyclotomic_convergence},
      {"mod 9 obstruction scenario", mod9_scenario},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
