#include "doctest.h"
#include "stablelab/error.hpp"
#include "stablelab/stability.hpp"

using namespace stablelab;

namespace {

Element first_of_order(const GroupPtr& g, std::size_t k) {
  for (Element a = 0; a < g->order(); ++a)
    if (g->element_order(a) == k) return a;
  return 0;
}

TowerFamily two_layers(const GroupPtr& g) { return TowerFamily(g, {whole_group(g), trivial_subgroup(g)}); }

}  // namespace

TEST_CASE("persistence verdict") {
  auto s3 = make_preset("S3");
  for (const auto& w : subgroups(s3)) {
    auto v = persistence_verdict(s3, s3->identity(), w);
    CHECK(v.persistent);
    CHECK(v.constant_density == make_rational(1, static_cast<std::int64_t>(w.order())));
  }
  auto t = first_of_order(s3, 2);
  auto full = persistence_verdict(s3, t, whole_group(s3));
  CHECK(full.persistent);
  CHECK(full.constant_density == make_rational(1, 2));
  auto a3 = cyclic_subgroup(s3, first_of_order(s3, 3));
  auto none = persistence_verdict(s3, t, a3);
  CHECK_FALSE(none.persistent);
  CHECK(none.constant_density == 0);
}

TEST_CASE("stability witness on Z/2") {
  auto g = make_preset("Z/2");
  auto fam = two_layers(g);
  auto both = ClassSet::all(g);
  auto w = stability_witness(both, fam, 2);
  REQUIRE(w.has_value());
  CHECK(w->subset == both);
  CHECK(w->stabilizing_layer.is_whole());
  CHECK(w->bound_a == 1);
  CHECK(w->verify(fam));

  auto id = ClassSet::of_element(g, g->identity());
  CHECK_FALSE(stability_witness_at(id, fam, 2, whole_group(g)).has_value());
  auto low = stability_witness(id, fam, 2);
  REQUIRE(low.has_value());
  CHECK(low->stabilizing_layer.is_trivial());
  CHECK(low->bound_a == 1);
  CHECK(low->verify(fam));
}

TEST_CASE("no witness when the density vanishes below every layer") {
  auto s3 = make_preset("S3");
  auto fam = TowerFamily::all_subgroups(s3);
  auto cyc = ClassSet::of_element(s3, first_of_order(s3, 3));
  for (auto lambda : {2, 3, 100}) CHECK_FALSE(stability_witness(cyc, fam, lambda).has_value());
  CHECK_FALSE(stable_for_some_lambda(cyc, fam).has_value());
}

TEST_CASE("uniform lower bound") {
  auto s3 = make_preset("S3");
  auto fam = TowerFamily::all_subgroups(s3);
  auto all = uniform_lower_bound(ClassSet::all(s3), fam);
  REQUIRE(all.has_value());
  CHECK(*all == 1);
  CHECK_FALSE(uniform_lower_bound(ClassSet::of_element(s3, first_of_order(s3, 3)), fam).has_value());

  auto z3 = make_preset("Z/3");
  auto b = uniform_lower_bound(ClassSet::of_element(z3, z3->identity()), two_layers(z3));
  REQUIRE(b.has_value());
  CHECK(*b == make_rational(1, 3));
}

TEST_CASE("dagger membership") {
  auto s3 = make_preset("S3");
  for (const auto& w : subgroups(s3)) CHECK(dagger_membership(s3, s3->identity(), w));
  for (Element s = 0; s < 6; ++s) CHECK(dagger_membership(s3, s, whole_group(s3)));
  auto t = cyclic_subgroup(s3, first_of_order(s3, 2));
  CHECK_FALSE(dagger_membership(s3, first_of_order(s3, 3), t));
}

TEST_CASE("orbit scenario") {
  auto s3 = make_preset("S3");
  auto a3 = cyclic_subgroup(s3, first_of_order(s3, 3));
  auto r = orbit_set_scenario(a3, first_of_order(s3, 3));
  CHECK(r.orbit.size() == 2);
  CHECK(r.coset_count / r.stabilizer_size == 2);
  CHECK(r.nontrivial_orbit);

  auto id = orbit_set_scenario(a3, s3->identity());
  CHECK(id.orbit.size() == 1);

  auto z6 = make_preset("Z/6");
  auto sub = cyclic_subgroup(z6, 2);
  for (auto s : sub.members()) CHECK(orbit_set_scenario(sub, s).orbit.size() == 1);

  try {
    orbit_set_scenario(a3, first_of_order(s3, 2));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("witnesses persist for larger lambda") {
  for (const char* name : {"Z/4", "S3", "Z/2 x Z/2", "D4", "Q8"}) {
    auto g = make_preset(name);
    auto fam = TowerFamily::all_subgroups(g);
    const auto k = g->classes().size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<std::size_t> cls;
      for (std::size_t c = 0; c < k; ++c)
        if (mask >> c & 1) cls.push_back(c);
      ClassSet s(g, cls);
      for (auto lambda : {2, 3}) {
        auto w = stability_witness(s, fam, lambda);
        if (!w) continue;
        CHECK(w->verify(fam));
        for (auto bigger : {lambda + 1, lambda + 5}) {
          StabilityWitness wider = *w;
          wider.lambda = bigger;
          CHECK(wider.verify(fam));
          CHECK(stability_witness(s, fam, bigger).has_value());
        }
        // the same (layer, a, lambda) certifies every superset with S0 unchanged
        auto super = s.united(ClassSet(g, {k - 1}));
        CHECK(w->subset.is_subset_of(super));
        CHECK(stability_witness(super, fam, lambda, {WitnessSearch::Space::Powerset}).has_value());
      }
    }
  }
}

TEST_CASE("persistence verdict matches the lower bound and the witness search") {
  for (const auto& name : preset_catalog(8)) {
    auto g = make_preset(name);
    for (const auto& v : normal_subgroups(g)) {
      auto q = quotient(g, v);
      for (Element sb = 0; sb < q.target->order(); ++sb) {
        auto s = pullback_classes(q, ClassSet::of_element(q.target, sb));
        auto fam = TowerFamily::all_subgroups(g);
        const bool bound = uniform_lower_bound(s, fam).has_value();
        const bool witness = stable_for_some_lambda(s, fam).has_value();
        CHECK(bound == witness);
        // with every subgroup as a layer the tower reaches M, so W is trivial
        CHECK(bound == persistence_verdict(q.target, sb, trivial_subgroup(q.target)).persistent);
      }
    }
  }
}

TEST_CASE("tower family validation") {
  auto s3 = make_preset("S3");
  auto t = cyclic_subgroup(s3, first_of_order(s3, 2));
  CHECK_THROWS_AS(TowerFamily(s3, {t}), Error);
  auto over = TowerFamily::overgroups(t);
  CHECK(over.layers().size() == 2);
}
