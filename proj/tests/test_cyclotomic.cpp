#include <cmath>
#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "stablelab/cyclotomic.hpp"
#include "stablelab/error.hpp"
#include "stablelab/scenarios.hpp"

using namespace stablelab;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("frobenius in cyclotomic fields") {
  CHECK(frobenius_cyclotomic(8, 3) == 3);
  CHECK(frobenius_cyclotomic(8, 17) == 1);
  CHECK(frobenius_cyclotomic(9, 19) == 1);
  CHECK(kind_of([] { frobenius_cyclotomic(8, 2); }) == ErrorKind::Ramified);
  CHECK(kind_of([] { frobenius_cyclotomic(9, 15); }) == ErrorKind::InvalidInput);
}

TEST_CASE("cyclotomic context") {
  auto ctx = CyclotomicContext::make(9);
  CHECK(ctx.unit_group->order() == 6);
  CHECK(ctx.residues[ctx.element_of(4)] == 4);
  CHECK(ctx.subgroup_of({1, 4, 7}).order() == 3);
  CHECK(kind_of([&] { ctx.element_of(3); }) == ErrorKind::InvalidInput);
}

TEST_CASE("sieve agrees with trial division") {
  for (std::uint64_t x : {0, 1, 2, 10, 97, 1000, 10000}) CHECK(prime_pi(x) == oracle::trial_division_pi(x));
  // small segments force many segment boundaries
  SieveOptions tiny{64, 3};
  auto counts = count_primes_by_residue({3, 8, 10}, 10000, tiny);
  REQUIRE(counts.size() == 3);
  for (const auto& c : counts) {
    std::vector<std::uint64_t> brute(static_cast<std::size_t>(c.modulus), 0);
    std::uint64_t ram = 0;
    for (std::uint64_t p = 2; p <= 10000; ++p) {
      if (!oracle::is_prime(p)) continue;
      if (c.modulus % static_cast<std::int64_t>(p) == 0) ++ram;
      ++brute[p % static_cast<std::uint64_t>(c.modulus)];
    }
    CHECK(c.per_residue == brute);
    CHECK(c.ramified == ram);
    CHECK(c.total + c.ramified == oracle::trial_division_pi(10000));
  }
}

TEST_CASE("prime counting to one million") {
  CHECK(prime_pi(1'000'000, {std::uint64_t{1} << 16, 2}) == 78498);
  auto c = count_primes_by_residue({8}, 1'000'000);
  CHECK(c[0].total == 78497);
  CHECK(c[0].ramified == 1);
}

TEST_CASE("equidistribution in residue classes") {
  std::vector<std::int64_t> moduli;
  for (std::int64_t n = 3; n <= 24; ++n) moduli.push_back(n);
  auto all = count_primes_by_residue(moduli, 1'000'000);
  for (const auto& c : all) {
    auto ctx = CyclotomicContext::make(c.modulus);
    const double expected = 1.0 / static_cast<double>(ctx.unit_group->order());
    for (std::int64_t r : ctx.residues) {
      auto est = estimate_from_counts(ctx, c, {r}, Weighting::uniform());
      CHECK(std::abs(est.estimate - expected) < 0.01);
    }
    auto units = estimate_from_counts(ctx, c, ctx.residues, Weighting::uniform());
    CHECK(units.estimate == doctest::Approx(1.0));
  }
}

TEST_CASE("weighted estimates") {
  auto c7 = CyclotomicContext::make(7);
  auto w = Weighting::induced(c7.subgroup_of({1, 6}));
  auto est = empirical_density(c7, {6}, 1'000'000, w);
  CHECK(std::abs(est.estimate - 0.5) < 0.02);

  auto c8 = CyclotomicContext::make(8);
  auto one = empirical_density(c8, {1}, 1'000'000, Weighting::uniform());
  CHECK(std::abs(one.estimate - 0.25) < 0.01);
  double share = 0;
  for (const auto& [r, f] : one.frequencies) share += f;
  CHECK(std::abs(share - 1.0) < 1e-12);

  CHECK(kind_of([&] { empirical_density(c8, {2}, 10000, Weighting::uniform()); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { empirical_density(c8, {1}, 999, Weighting::uniform()); }) == ErrorKind::InvalidInput);
}

TEST_CASE("empirical error shrinks with the bound") {
  auto c7 = CyclotomicContext::make(7);
  auto u = c7.subgroup_of({1, 6});
  auto c8 = CyclotomicContext::make(8);
  std::vector<double> err7, err8;
  for (std::uint64_t x : {10'000, 100'000, 1'000'000}) {
    err7.push_back(std::abs(empirical_density(c7, {6}, x, Weighting::induced(u)).estimate - 0.5));
    err8.push_back(std::abs(empirical_density(c8, {1}, x, Weighting::uniform()).estimate - 0.25));
  }
  CHECK(err7.back() < err7.front());
  CHECK(err8.back() < err8.front());
}

TEST_CASE("compare against the exact density") {
  auto c7 = CyclotomicContext::make(7);
  auto u = c7.subgroup_of({1, 6});
  auto rep = compare_theoretical(c7, u, c7.class_set_of({6}), 1'000'000);
  CHECK(rep.exact == make_rational(1, 2));
  CHECK(rep.abs_error < 0.02);
  CHECK(rep.abs_error == doctest::Approx(std::abs(rep.empirical - 0.5)));
  Rational total = 0;
  for (const auto& [m, d] : rep.pm_exact) total += d;
  CHECK(total == 1);
  CHECK(rep.pm_exact.at(3) == make_rational(1, 3));
  CHECK(std::abs(rep.pm_empirical.at(3) - 1.0 / 3) < 0.01);
}

TEST_CASE("scenarios") {
  CHECK(kind_of([] { run_scenario("no-such-scenario"); }) == ErrorKind::UnknownName);
  for (const auto& name : scenario_names()) {
    auto s = run_scenario(name);
    INFO(name);
    CHECK(s.pass());
    CHECK_FALSE(s.checks.empty());
  }
}
