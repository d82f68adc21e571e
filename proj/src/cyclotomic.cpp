#include "stablelab/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "stablelab/error.hpp"

namespace stablelab {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_n(std::int64_t r, std::int64_t n) { return ((r % n) + n) % n; }

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

struct SegmentCounts {
  std::vector<std::vector<std::uint64_t>> per_modulus;
};

void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& primes,
                   const std::vector<std::int64_t>& moduli, SegmentCounts& out, std::vector<char>& buf) {
  buf.assign(hi - lo, 1);
  for (auto p : primes) {
    const std::uint64_t pp = std::uint64_t{p} * p;
    if (pp >= hi) break;
    std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j < hi; j += p) buf[j - lo] = 0;
  }
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i < hi; ++i) {
    if (!buf[i - lo]) continue;
    for (std::size_t k = 0; k < moduli.size(); ++k)
      ++out.per_modulus[k][i % static_cast<std::uint64_t>(moduli[k])];
  }
}

}  // namespace

CyclotomicContext CyclotomicContext::make(std::int64_t n) {
  require(n >= 3, ErrorKind::InvalidInput, "cyclotomic modulus must be >= 3");
  CyclotomicContext ctx;
  ctx.modulus = n;
  ctx.unit_group = stablelab::unit_group(static_cast<std::size_t>(n));
  for (const auto& l : ctx.unit_group->labels()) ctx.residues.push_back(std::stoll(l));
  return ctx;
}

Element CyclotomicContext::element_of(std::int64_t residue) const {
  const auto r = mod_n(residue, modulus);
  auto it = std::lower_bound(residues.begin(), residues.end(), r);
  require(it != residues.end() && *it == r, ErrorKind::InvalidInput,
          std::to_string(residue) + " is not a unit mod " + std::to_string(modulus));
  return static_cast<Element>(it - residues.begin());
}

Subgroup CyclotomicContext::subgroup_of(const std::vector<std::int64_t>& rs) const {
  std::vector<Element> members;
  for (auto r : rs) members.push_back(element_of(r));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Subgroup(unit_group, std::move(members));
}

ClassSet CyclotomicContext::class_set_of(const std::vector<std::int64_t>& rs, std::string label) const {
  std::vector<std::size_t> classes;
  for (auto r : rs) classes.push_back(unit_group->class_of(element_of(r)));
  return ClassSet(unit_group, std::move(classes), std::move(label));
}

std::int64_t frobenius_cyclotomic(std::int64_t n, std::int64_t p) {
  require(n >= 1, ErrorKind::InvalidInput, "modulus must be positive");
  require(is_prime(p), ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  if (n % p == 0) fail(ErrorKind::Ramified, std::to_string(p) + " ramifies in Q(mu_" + std::to_string(n) + ")");
  return p % n;
}

std::vector<PrimeCounts> count_primes_by_residue(const std::vector<std::int64_t>& moduli, std::uint64_t x,
                                                 const SieveOptions& opts) {
  for (auto n : moduli) require(n >= 1, ErrorKind::InvalidInput, "modulus must be positive");
  require(opts.segment >= 64, ErrorKind::InvalidInput, "segment size must be >= 64");
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x))) + 1;
  const auto primes = base_primes(root);

  const std::uint64_t span = x + 1;
  const std::size_t segments = static_cast<std::size_t>((span + opts.segment - 1) / opts.segment);
  std::vector<SegmentCounts> parts(segments);
  for (auto& part : parts) {
    part.per_modulus.resize(moduli.size());
    for (std::size_t k = 0; k < moduli.size(); ++k)
      part.per_modulus[k].assign(static_cast<std::size_t>(moduli[k]), 0);
  }

  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(segments)));
  auto worker = [&](unsigned w) {
    std::vector<char> buf;
    for (std::size_t s = w; s < segments; s += jobs) {
      const std::uint64_t lo = s * opts.segment;
      const std::uint64_t hi = std::min(span, lo + opts.segment);
      sieve_segment(lo, hi, primes, moduli, parts[s], buf);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  std::vector<PrimeCounts> out;
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    const auto n = moduli[k];
    PrimeCounts pc{n, x, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
    for (const auto& part : parts)
      for (std::size_t r = 0; r < pc.per_residue.size(); ++r) pc.per_residue[r] += part.per_modulus[k][r];
    for (std::size_t r = 0; r < pc.per_residue.size(); ++r) {
      if (std::gcd(static_cast<std::int64_t>(r), n) == 1)
        pc.total += pc.per_residue[r];
      else
        pc.ramified += pc.per_residue[r];
    }
    out.push_back(std::move(pc));
  }
  return out;
}

std::uint64_t prime_pi(std::uint64_t x, const SieveOptions& opts) {
  auto c = count_primes_by_residue({1}, x, opts);
  return c[0].total + c[0].ramified;
}

EmpiricalEstimate estimate_from_counts(const CyclotomicContext& ctx, const PrimeCounts& counts,
                                       const std::vector<std::int64_t>& target, const Weighting& w) {
  require(counts.modulus == ctx.modulus, ErrorKind::InvalidInput, "counts were sieved for another modulus");
  std::vector<bool> in_target(ctx.residues.size(), false);
  for (auto r : target) in_target[ctx.element_of(r)] = true;

  std::vector<std::int64_t> weight(ctx.residues.size(), 1);
  if (w.kind == Weighting::Kind::Induced) {
    require(w.subgroup.has_value(), ErrorKind::InvalidInput, "induced weighting needs a subgroup");
    require(w.subgroup->parent()->order() == ctx.unit_group->order(), ErrorKind::InvalidInput,
            "weighting subgroup is not a subgroup of the unit group");
    const Subgroup u(ctx.unit_group, w.subgroup->members());
    auto m = induced_character(u);
    for (std::size_t i = 0; i < weight.size(); ++i) weight[i] = m.at(static_cast<Element>(i));
  }

  EmpiricalEstimate est;
  est.modulus = ctx.modulus;
  est.bound = counts.bound;
  est.total = counts.total;
  std::uint64_t weighted = 0;
  for (std::size_t i = 0; i < ctx.residues.size(); ++i) {
    const auto c = counts.per_residue[static_cast<std::size_t>(ctx.residues[i])];
    est.counts[ctx.residues[i]] = c;
    est.frequencies[ctx.residues[i]] = est.total ? static_cast<double>(c) / static_cast<double>(est.total) : 0.0;
    if (in_target[i]) weighted += c * static_cast<std::uint64_t>(weight[i]);
  }
  est.estimate = est.total ? static_cast<double>(weighted) / static_cast<double>(est.total) : 0.0;
  return est;
}

EmpiricalEstimate empirical_density(const CyclotomicContext& ctx, const std::vector<std::int64_t>& target,
                                    std::uint64_t x, const Weighting& w, const SieveOptions& opts) {
  require(x >= 1000, ErrorKind::InvalidInput, "bound must be >= 1000");
  for (auto r : target) ctx.element_of(r);
  auto counts = count_primes_by_residue({ctx.modulus}, x, opts);
  return estimate_from_counts(ctx, counts[0], target, w);
}

CompareReport compare_theoretical(const CyclotomicContext& ctx, const Subgroup& u, const ClassSet& s,
                                  std::uint64_t x, const SieveOptions& opts) {
  require(s.ambient() == ctx.unit_group, ErrorKind::InvalidInput, "class set is not over the unit group");
  const Subgroup uu(ctx.unit_group, u.members());
  std::vector<std::int64_t> target;
  for (auto e : s.elements()) target.push_back(ctx.residues[e]);

  CompareReport rep;
  rep.exact = pullback_density(s, uu);
  rep.estimate = empirical_density(ctx, target, x, Weighting::induced(uu), opts);
  rep.empirical = rep.estimate.estimate;
  rep.abs_error = std::abs(rep.empirical - to_double(rep.exact));
  rep.pm_exact = pm_partition(uu);
  auto m = induced_character(uu);
  for (const auto& [mv, _] : rep.pm_exact) rep.pm_empirical[mv] = 0.0;
  for (std::size_t i = 0; i < ctx.residues.size(); ++i)
    rep.pm_empirical[m.at(static_cast<Element>(i))] += rep.estimate.frequencies.at(ctx.residues[i]);
  return rep;
}

}  // namespace stablelab
