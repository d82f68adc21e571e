#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "stablelab/density.hpp"
#include "stablelab/gmodule.hpp"

namespace stablelab {

/// A finite abelian group given by invariant factors, with a basis in some
/// ambient coordinate space described by the producing operation.
struct AbelianGroupValue {
  std::vector<std::int64_t> factors;
  std::vector<zmod::Vec> basis;

  /// Product of the factors.
  std::int64_t order() const;
};

/// H^1(G, A) computed from the values of cocycles on a generating set of G:
/// the cocycle identity along a spanning tree of the Cayley graph fixes a
/// cocycle from its generator values, and the remaining Cayley edges give
/// linear congruences. Coboundaries and factor orders are the relations.
class H1Space {
 public:
  explicit H1Space(ModulePtr a);

  const ModulePtr& module() const noexcept { return a_; }
  const std::vector<std::int64_t>& factors() const { return sq_->factors(); }
  std::size_t dimension() const { return sq_->factors().size(); }
  std::int64_t order() const;

  Cocycle generator(std::size_t i) const;
  /// Coordinates of the class of f; throws Error(InvalidInput) when f is not a cocycle.
  zmod::Vec coords(const Cocycle& f) const;
  bool is_coboundary(const Cocycle& f) const;
  Cocycle combine(const zmod::Vec& coeffs) const;

 private:
  Cocycle from_generator_values(const zmod::Vec& x) const;

  ModulePtr a_;
  std::vector<Element> gens_;
  std::vector<zmod::Mat> transport_;
  std::unique_ptr<zmod::Subquotient> sq_;
};

using H1SpacePtr = std::shared_ptr<const H1Space>;

/// H^1 computation results are cached process-wide by module fingerprint.
H1SpacePtr h1_space(const ModulePtr& a);
void clear_h1_cache();
std::size_t h1_cache_size();

/// A subgroup of H^1(G, A), or H^1 itself.
struct H1Result {
  std::vector<std::int64_t> factors;
  std::vector<Cocycle> generators;
  H1SpacePtr space;  // the ambient H^1(G, A); null for oracle results

  std::int64_t order() const;
  bool is_coboundary(const Cocycle& f) const { return space->is_coboundary(f); }
};

H1Result h1(const ModulePtr& a);

/// Cap on |A|^(|G|-1) for the enumeration oracle.
inline constexpr std::int64_t kOracleCap = 1'000'000;

/// Exhaustive enumeration of Z^1 and B^1. Returns invariant factors only.
/// Throws Error(CapExceeded) beyond kOracleCap.
H1Result h1_oracle(const ModulePtr& a);

/// A^G with a basis of fixed vectors.
AbelianGroupValue h0(const ModulePtr& a);

struct H2Caps {
  std::size_t max_group = 16;
  std::int64_t max_module = 16;
};
/// Z^2/B^2 on normalized bar cochains.
AbelianGroupValue h2(const ModulePtr& a, const H2Caps& caps = {});

/// Restriction of a cocycle on G to a subgroup H, as a cocycle of the
/// restricted module over the standalone group of H.
Cocycle restrict_cocycle(const Cocycle& f, const RestrictedModule& target);
/// Transfer from H to G over the minimal left coset representatives.
Cocycle corestrict_cocycle(const Cocycle& f, const RestrictedModule& source, const ModulePtr& a);
/// Inflation from G/N to G.
Cocycle inflate_cocycle(const Cocycle& f, const QuotientMap& q, const ModulePtr& a);

/// Decomposition-group model: subgroups with multiplicities.
struct LocalFamily {
  GroupPtr ambient;
  std::vector<std::pair<Subgroup, std::size_t>> members;

  /// Cyclic subgroups generated by the elements of the classes in t, each once.
  static LocalFamily cyclic_from_classes(const ClassSet& t);
  /// Cyclic subgroups <g> for g in t that lie in layer, as subgroups of G.
  static LocalFamily cyclic_from_classes_in(const ClassSet& t, const Subgroup& layer);
  static LocalFamily all_cyclic(const GroupPtr& g);
};

/// H^1(G, A) together with cached restriction data to subgroups.
class LocalAnalyzer {
 public:
  explicit LocalAnalyzer(ModulePtr a);

  const H1SpacePtr& global() const noexcept { return global_; }
  /// Kernel of restriction to every member.
  H1Result sha1(const LocalFamily& t) const;
  /// Cokernel of H^1(G,A) -> sum over members (with multiplicity) of H^1(H,A).
  AbelianGroupValue coker1(const LocalFamily& t) const;
  /// Coordinates of res_H on the global generators: one row per factor of H^1(H, A).
  const zmod::Mat& restriction_matrix(const Subgroup& h) const;
  const std::vector<std::int64_t>& local_factors(const Subgroup& h) const;

 private:
  struct Block {
    H1SpacePtr local;
    zmod::Mat phi;
  };
  const Block& block(const Subgroup& h) const;

  ModulePtr a_;
  H1SpacePtr global_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<Element>, std::shared_ptr<Block>> blocks_;
};

H1Result sha1(const ModulePtr& a, const LocalFamily& t);
H1Result h1_star(const ModulePtr& a);
AbelianGroupValue coker1(const ModulePtr& a, const LocalFamily& t);

/// Whether every vector of `vs` (coordinates in a group with the given
/// factors) lies in the span of `span`.
bool within_span(const std::vector<std::int64_t>& factors, const std::vector<zmod::Vec>& span,
                 const std::vector<zmod::Vec>& vs);

}  // namespace stablelab
