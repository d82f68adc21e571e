#include "doctest.h"
#include "oracles.hpp"
#include "stablelab/density.hpp"

using namespace stablelab;

namespace {

Element first_of_order(const GroupPtr& g, std::size_t k) {
  for (Element a = 0; a < g->order(); ++a)
    if (g->element_order(a) == k) return a;
  return 0;
}

std::size_t class_with_order(const GroupPtr& g, std::size_t k) { return g->class_of(first_of_order(g, k)); }

}  // namespace

TEST_CASE("induced character") {
  auto s3 = make_preset("S3");
  auto whole = induced_character(whole_group(s3));
  for (auto v : whole.values) CHECK(v == 1);

  auto triv = induced_character(trivial_subgroup(s3));
  CHECK(triv.at(s3->identity()) == 6);
  CHECK(triv.at(first_of_order(s3, 2)) == 0);
  CHECK(triv.at(first_of_order(s3, 3)) == 0);

  auto h = cyclic_subgroup(s3, first_of_order(s3, 2));
  auto m = induced_character(h);
  CHECK(m.at(s3->identity()) == 3);
  CHECK(m.at(first_of_order(s3, 2)) == 1);
  CHECK(m.at(first_of_order(s3, 3)) == 0);
}

TEST_CASE("induced character agrees with the coset and centralizer oracles") {
  for (const auto& name : preset_catalog(24)) {
    auto g = make_preset(name);
    for (const auto& h : subgroups(g)) {
      auto m = induced_character(h);
      auto fp = oracle::fixed_point_character(*g, h.members());
      auto cz = oracle::centralizer_character(*g, h.members());
      for (Element a = 0; a < g->order(); ++a) {
        CHECK(m.at(a) == fp[a]);
        CHECK(m.at(a) == cz[a]);
      }
    }
  }
}

TEST_CASE("pm partition") {
  auto s3 = make_preset("S3");
  auto h = cyclic_subgroup(s3, first_of_order(s3, 2));
  auto pm = pm_partition(h);
  CHECK(pm.size() == 3);
  CHECK(pm.at(3) == make_rational(1, 6));
  CHECK(pm.at(1) == make_rational(1, 2));
  CHECK(pm.at(0) == make_rational(1, 3));

  auto pg = pm_partition(whole_group(s3));
  CHECK(pg.size() == 1);
  CHECK(pg.at(1) == 1);
}

TEST_CASE("class set density") {
  auto s3 = make_preset("S3");
  CHECK(class_set_density(ClassSet::all(s3)) == 1);
  CHECK(class_set_density(ClassSet::of_element(s3, s3->identity())) == make_rational(1, 6));
  CHECK(class_set_density(ClassSet::empty(s3)) == 0);
}

TEST_CASE("pullback density") {
  auto s3 = make_preset("S3");
  for (const auto& h : subgroups(s3)) CHECK(pullback_density(ClassSet::all(s3), h) == 1);
  auto h = cyclic_subgroup(s3, first_of_order(s3, 2));
  CHECK(pullback_density(ClassSet(s3, {class_with_order(s3, 3)}), h) == 0);
  CHECK(pullback_density(ClassSet(s3, {class_with_order(s3, 2)}), h) == make_rational(1, 2));
}

TEST_CASE("basechange density") {
  auto s3 = make_preset("S3");
  auto a3 = cyclic_subgroup(s3, first_of_order(s3, 3));
  for (const auto& w : subgroups(s3))
    CHECK(basechange_density(s3, s3->identity(), w) == make_rational(1, static_cast<std::int64_t>(w.order())));
  for (Element s = 0; s < 6; ++s) {
    const auto size = static_cast<std::int64_t>(s3->classes()[s3->class_of(s)].members.size());
    CHECK(basechange_density(s3, s, whole_group(s3)) == make_rational(size, 6));
  }
  CHECK(basechange_density(s3, first_of_order(s3, 2), a3) == 0);
}

TEST_CASE("density identities over the preset catalog") {
  for (const auto& name : preset_catalog(24)) {
    auto g = make_preset(name);
    for (const auto& h : subgroups(g)) {
      auto m = induced_character(h);
      Rational inner = 0;
      for (std::size_t c = 0; c < g->classes().size(); ++c)
        inner += make_rational(m.values[c] * static_cast<std::int64_t>(g->classes()[c].members.size()),
                               static_cast<std::int64_t>(g->order()));
      CHECK(inner == 1);
      Rational total = 0, weighted = 0;
      for (const auto& [mv, d] : pm_partition(h)) {
        total += d;
        weighted += d * mv;
      }
      CHECK(total == 1);
      CHECK(weighted == 1);
      CHECK(m.at(g->identity()) == static_cast<std::int64_t>(h.index()));
    }
  }
}

TEST_CASE("additivity of class set densities") {
  for (const auto& name : preset_catalog(16)) {
    auto g = make_preset(name);
    const auto k = g->classes().size();
    for (std::size_t split = 0; split <= k; ++split) {
      std::vector<std::size_t> left, right;
      for (std::size_t c = 0; c < k; ++c) (c < split ? left : right).push_back(c);
      ClassSet a(g, left), b(g, right);
      CHECK(class_set_density(a.united(b)) == class_set_density(a) + class_set_density(b));
    }
  }
}

TEST_CASE("basechange closed form equals brute-force pullback") {
  for (const auto& name : preset_catalog(12)) {
    auto g = make_preset(name);
    for (const auto& v : normal_subgroups(g)) {
      auto q = quotient(g, v);
      for (Element sb = 0; sb < q.target->order(); ++sb) {
        auto pre = pullback_classes(q, ClassSet::of_element(q.target, sb));
        for (const auto& u : subgroups(g)) {
          auto fp = oracle::fixed_point_character(*g, u.members());
          Rational brute = 0;
          for (auto e : pre.elements()) brute += make_rational(fp[e], static_cast<std::int64_t>(g->order()));
          CHECK(basechange_density(q.target, sb, image(q, u)) == brute);
        }
      }
    }
  }
}
