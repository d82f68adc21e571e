#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "stablelab/cohomology.hpp"
#include "stablelab/error.hpp"
#include "stablelab/verifier.hpp"

using namespace stablelab;
using zmod::Mat;
using zmod::Vec;

namespace {

Mat scalar(std::int64_t x) {
  Mat m(1, 1);
  m.at(0, 0) = x;
  return m;
}

ModulePtr negation_on_z4() { return GModule::build(make_preset("Z/2"), {4}, {{1, scalar(3)}}); }

std::int64_t order_of(const std::vector<std::int64_t>& factors) {
  std::int64_t n = 1;
  for (auto f : factors) n *= f;
  return n;
}

// Every element of H^1 as a coordinate vector.
std::vector<Vec> all_coords(const std::vector<std::int64_t>& factors) {
  std::vector<Vec> out{Vec(factors.size(), 0)};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (std::int64_t c = 0; c < factors[i]; ++c) {
        auto w = v;
        w[i] = c;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<ModulePtr> small_catalog(const GroupPtr& g) {
  std::vector<ModulePtr> out;
  for (std::vector<std::int64_t> orders : {std::vector<std::int64_t>{2}, {3}, {4}, {2, 2}})
    for (auto& a : catalog_modules(g, ModuleRecipe{orders}, 3)) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("module construction") {
  auto z2 = make_preset("Z/2");
  auto triv = GModule::trivial(z2, {3});
  CHECK(triv->is_trivial_action());
  CHECK(triv->cardinality() == 3);

  auto neg = negation_on_z4();
  CHECK(neg->apply(1, {1}) == Vec{3});
  CHECK_FALSE(neg->is_trivial_action());

  // 2 has order 4 mod 5, so it cannot be the image of an involution
  CHECK_THROWS_AS(GModule::build(z2, {5}, {{1, scalar(2)}}), Error);
  // orders must form a divisibility chain
  CHECK_THROWS_AS(GModule::trivial(z2, {2, 3}), Error);
}

TEST_CASE("h0") {
  auto z2 = make_preset("Z/2");
  CHECK(h0(GModule::trivial(z2, {2, 4})).order() == 8);
  CHECK(h0(negation_on_z4()).order() == 2);
  auto z3 = make_preset("Z/3");
  auto twist = GModule::build(z3, {7}, {{1, scalar(2)}});
  CHECK(h0(twist).order() == 1);
}

TEST_CASE("h1 examples") {
  auto z2 = make_preset("Z/2");
  CHECK(h1(GModule::trivial(z2, {2})).factors == std::vector<std::int64_t>{2});
  CHECK(h1(negation_on_z4()).factors == std::vector<std::int64_t>{2});
  CHECK(h1(GModule::trivial(make_preset("Z/3"), {2})).factors.empty());

  CHECK(h1_oracle(GModule::trivial(z2, {2})).factors == std::vector<std::int64_t>{2});
  CHECK(h1_oracle(negation_on_z4()).factors == std::vector<std::int64_t>{2});

  auto big = GModule::trivial(make_preset("S4"), {2});
  CHECK_THROWS_AS(h1_oracle(big), Error);
}

TEST_CASE("h1 generators are cocycles and not coboundaries") {
  for (const char* name : {"Z/4", "S3", "Z/2 x Z/2", "D4"}) {
    auto g = make_preset(name);
    for (const auto& a : small_catalog(g)) {
      auto r = h1(a);
      REQUIRE(r.generators.size() == r.factors.size());
      for (std::size_t i = 0; i < r.generators.size(); ++i) {
        CHECK(is_cocycle(r.generators[i]));
        CHECK_FALSE(r.is_coboundary(r.generators[i]));
        auto twice = scaled_sum(r.generators[i], r.factors[i], zero_cocycle(a), 0);
        CHECK(r.is_coboundary(twice));
      }
      for (std::int64_t code = 0; code < a->cardinality(); ++code)
        CHECK(r.is_coboundary(coboundary(a, a->decode(code))));
    }
  }
}

TEST_CASE("h1 agrees with the enumeration oracle") {
  for (const auto& name : preset_catalog(8)) {
    auto g = make_preset(name);
    for (const auto& a : small_catalog(g)) {
      std::int64_t cost = 1;
      for (std::size_t i = 1; i < g->order() && cost <= kOracleCap; ++i) cost *= a->cardinality();
      if (cost > kOracleCap) continue;
      CHECK(h1(a).factors == h1_oracle(a).factors);
    }
  }
}

TEST_CASE("cyclic groups match the periodic resolution") {
  for (std::size_t n = 1; n <= 12; ++n) {
    auto g = make_preset("Z/" + std::to_string(n));
    const Element s = n == 1 ? 0 : 1;
    for (std::vector<std::int64_t> orders : {std::vector<std::int64_t>{2}, {3}, {4}, {2, 2}, {8}, {9}, {16}})
      for (auto& a : catalog_modules(g, ModuleRecipe{orders}, 4)) {
        CHECK(h1(a).factors == oracle::herbrand_h1(a, s));
        if (a->cardinality() <= 4 && n <= 8) CHECK(h2(a).factors == oracle::herbrand_h2(a, s));
      }
  }
}

TEST_CASE("h2 examples") {
  auto z2 = make_preset("Z/2");
  CHECK(h2(GModule::trivial(z2, {2})).order() == 2);
  CHECK(h2(GModule::trivial(make_preset("Z/3"), {2})).order() == 1);
  for (std::int64_t p : {2, 3}) {
    auto g = make_preset("Z/" + std::to_string(p));
    CHECK(h2(GModule::regular(g, p), H2Caps{16, 64}).order() == 1);
  }
  CHECK_THROWS_AS(h2(GModule::trivial(make_preset("S4"), {2})), Error);
}

TEST_CASE("h1 star") {
  for (std::size_t n : {2, 4, 6}) {
    auto g = make_preset("Z/" + std::to_string(n));
    for (auto& a : small_catalog(g)) CHECK(h1_star(a).order() == 1);
  }
  auto v4 = make_preset("Z/2 x Z/2");
  CHECK(h1_star(GModule::trivial(v4, {2})).order() == 1);

  auto mult = GModule::multiplication(8);
  CHECK(h1_star(mult).order() == 2);
  CHECK(oracle::h1_star_order(mult) == 2);
}

TEST_CASE("h1 star agrees with the oracle") {
  for (const char* name : {"Z/2 x Z/2", "S3", "Q8", "D4", "Z/2 x Z/4"}) {
    auto g = make_preset(name);
    for (const auto& a : small_catalog(g)) CHECK(h1_star(a).order() == oracle::h1_star_order(a));
  }
  for (std::int64_t n : {8, 12, 15, 16}) {
    auto a = GModule::multiplication(n);
    CHECK(h1_star(a).order() == oracle::h1_star_order(a));
  }
}

TEST_CASE("sha1") {
  auto z3 = make_preset("Z/3");
  auto a = GModule::trivial(z3, {3});
  LocalFamily whole{z3, {{whole_group(z3), 1}}};
  CHECK(sha1(a, whole).order() == 1);
  LocalFamily triv{z3, {{trivial_subgroup(z3), 1}}};
  auto s = sha1(a, triv);
  CHECK(s.order() == 3);
  CHECK(s.factors == std::vector<std::int64_t>{3});

  for (const char* name : {"S3", "Z/2 x Z/2", "Q8"}) {
    auto g = make_preset(name);
    for (const auto& m : small_catalog(g))
      CHECK(sha1(m, LocalFamily::all_cyclic(g)).factors == h1_star(m).factors);
  }
}

TEST_CASE("coker1") {
  auto z2 = make_preset("Z/2");
  auto a = GModule::trivial(z2, {2});
  auto gen = whole_group(z2);
  CHECK(coker1(a, LocalFamily{z2, {{gen, 1}, {gen, 1}}}).order() == 2);
  CHECK(coker1(a, LocalFamily{z2, {{gen, 2}}}).order() == 2);
  CHECK(coker1(a, LocalFamily{z2, {}}).order() == 1);
  auto z3 = make_preset("Z/3");
  CHECK(coker1(GModule::trivial(z3, {3}), LocalFamily{z3, {{whole_group(z3), 1}}}).order() == 1);
}

TEST_CASE("restriction to the whole group is the identity") {
  for (const char* name : {"S3", "Z/4", "D4"}) {
    auto g = make_preset(name);
    for (const auto& a : small_catalog(g)) {
      auto space = h1_space(a);
      auto rm = restrict_module(a, whole_group(g));
      auto loc = h1_space(rm.module);
      for (std::size_t i = 0; i < space->dimension(); ++i) {
        Vec e(space->dimension(), 0);
        e[i] = 1;
        CHECK(loc->coords(restrict_cocycle(space->generator(i), rm)) == e);
      }
    }
  }
}

TEST_CASE("corestriction after restriction is multiplication by the index") {
  for (const auto& name : preset_catalog(8)) {
    auto g = make_preset(name);
    for (const auto& a : small_catalog(g)) {
      auto space = h1_space(a);
      for (const auto& h : subgroups(g)) {
        auto rm = restrict_module(a, h);
        for (std::size_t i = 0; i < space->dimension(); ++i) {
          auto back = corestrict_cocycle(restrict_cocycle(space->generator(i), rm), rm, a);
          Vec e(space->dimension(), 0);
          e[i] = static_cast<std::int64_t>(h.index()) % space->factors()[i];
          CHECK(space->coords(back) == e);
        }
      }
    }
  }
}

TEST_CASE("inflation-restriction is exact") {
  for (const auto& name : preset_catalog(8)) {
    auto g = make_preset(name);
    for (const auto& a : small_catalog(g)) {
      auto glob = h1_space(a);
      auto kernel = a->action_kernel();
      for (const auto& n : normal_subgroups(g)) {
        if (!n.is_subset_of(kernel)) continue;
        auto q = quotient(g, n);
        auto down = descend_module(a, q);
        auto quo = h1_space(down);
        std::set<Vec> image;
        for (const auto& c : all_coords(quo->factors()))
          image.insert(glob->coords(inflate_cocycle(quo->combine(c), q, a)));
        CHECK(static_cast<std::int64_t>(image.size()) == quo->order());

        auto rm = restrict_module(a, n);
        auto loc = h1_space(rm.module);
        std::set<Vec> kernel_res;
        for (const auto& c : all_coords(glob->factors()))
          if (loc->is_coboundary(restrict_cocycle(glob->combine(c), rm))) kernel_res.insert(c);
        CHECK(image == kernel_res);
      }
    }
  }
}

TEST_CASE("h1 is annihilated by the group order and the exponent") {
  for (const auto& name : preset_catalog(12)) {
    auto g = make_preset(name);
    for (const auto& a : small_catalog(g))
      for (auto f : h1(a).factors) {
        CHECK(static_cast<std::int64_t>(g->order()) % f == 0);
        CHECK(a->exponent() % f == 0);
      }
  }
}

TEST_CASE("h1 cache is keyed by content") {
  clear_h1_cache();
  auto z2 = make_preset("Z/2");
  auto a = GModule::trivial(z2, {2});
  auto b = GModule::trivial(make_preset("Z/2"), {2});
  auto sa = h1_space(a);
  auto sb = h1_space(b);
  CHECK(h1_cache_size() == 1);
  CHECK(sa.get() == sb.get());
  CHECK(sb->coords(sb->generator(0)) == Vec{1});
  CHECK(order_of(sa->factors()) == 2);
}
