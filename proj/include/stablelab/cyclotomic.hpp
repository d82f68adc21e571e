#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "stablelab/density.hpp"

namespace stablelab {

/// Gal(Q(mu_n)/Q) as (Z/n)^*, with the residue of each element.
struct CyclotomicContext {
  std::int64_t modulus;
  GroupPtr unit_group;
  std::vector<std::int64_t> residues;  // element -> residue

  static CyclotomicContext make(std::int64_t n);
  /// Throws Error(InvalidInput) unless r is a unit mod n.
  Element element_of(std::int64_t residue) const;
  Subgroup subgroup_of(const std::vector<std::int64_t>& residues) const;
  /// Union of the classes (singletons) of the given residues.
  ClassSet class_set_of(const std::vector<std::int64_t>& residues, std::string label = {}) const;
};

/// Frobenius of an unramified prime p in Q(mu_n): the residue p mod n.
/// Throws Error(Ramified) when p | n and Error(InvalidInput) when p is not prime.
std::int64_t frobenius_cyclotomic(std::int64_t n, std::int64_t p);

struct SieveOptions {
  std::uint64_t segment = std::uint64_t{1} << 18;
  unsigned jobs = 1;
};

struct PrimeCounts {
  std::int64_t modulus;
  std::uint64_t bound;
  std::vector<std::uint64_t> per_residue;  // index = residue mod n, ramified primes included
  std::uint64_t total = 0;                 // primes <= bound not dividing n
  std::uint64_t ramified = 0;              // primes dividing n
};

/// Segmented sieve up to x, counting primes by residue for each modulus in
/// one pass. Segments are distributed over threads and merged in order.
std::vector<PrimeCounts> count_primes_by_residue(const std::vector<std::int64_t>& moduli, std::uint64_t x,
                                                 const SieveOptions& opts = {});
std::uint64_t prime_pi(std::uint64_t x, const SieveOptions& opts = {});

struct Weighting {
  enum class Kind { Uniform, Induced };
  Kind kind = Kind::Uniform;
  std::optional<Subgroup> subgroup;  // U for Induced

  static Weighting uniform() { return {}; }
  static Weighting induced(Subgroup u) { return {Kind::Induced, std::move(u)}; }
};

struct EmpiricalEstimate {
  std::int64_t modulus;
  std::uint64_t bound;
  std::map<std::int64_t, std::uint64_t> counts;  // unit residue -> primes
  std::uint64_t total = 0;
  std::map<std::int64_t, double> frequencies;    // unit residue -> share
  /// Uniform: share of primes with Frobenius in the target. Induced(U):
  /// sum of m_U(Frob p) over primes with Frobenius in the target, per prime.
  double estimate = 0;
};

/// Throws Error(InvalidInput) for non-unit residues or bound below 1000.
EmpiricalEstimate empirical_density(const CyclotomicContext& ctx, const std::vector<std::int64_t>& target,
                                    std::uint64_t x, const Weighting& w, const SieveOptions& opts = {});
/// Same estimate from counts already sieved.
EmpiricalEstimate estimate_from_counts(const CyclotomicContext& ctx, const PrimeCounts& counts,
                                       const std::vector<std::int64_t>& target, const Weighting& w);

struct CompareReport {
  Rational exact;
  double empirical = 0;
  double abs_error = 0;
  std::map<std::int64_t, Rational> pm_exact;
  std::map<std::int64_t, double> pm_empirical;
  EmpiricalEstimate estimate;
};

CompareReport compare_theoretical(const CyclotomicContext& ctx, const Subgroup& u, const ClassSet& s,
                                  std::uint64_t x, const SieveOptions& opts = {});

}  // namespace stablelab
