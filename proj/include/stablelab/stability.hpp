#pragma once

#include <optional>
#include <vector>

#include "stablelab/density.hpp"

namespace stablelab {

/// Finite stand-in for an extension tower: each layer H is the subextension
/// fixed by H. The whole group (the base field) is always a layer.
class TowerFamily {
 public:
  TowerFamily(GroupPtr ambient, std::vector<Subgroup> layers, std::optional<Subgroup> top = std::nullopt);

  /// Every subgroup of the ambient group.
  static TowerFamily all_subgroups(const GroupPtr& g, std::size_t cap = kDefaultSubgroupCap);
  /// Subgroups containing `top`: the finite layers below the field fixed by `top`.
  static TowerFamily overgroups(const Subgroup& top, std::size_t cap = kDefaultSubgroupCap);

  const GroupPtr& ambient() const noexcept { return ambient_; }
  const std::vector<Subgroup>& layers() const noexcept { return layers_; }
  const std::optional<Subgroup>& top() const noexcept { return top_; }
  /// Indices of the layers contained in layer i (including i).
  const std::vector<std::size_t>& below(std::size_t i) const { return below_[i]; }
  std::size_t whole_index() const noexcept { return whole_; }
  std::optional<std::size_t> index_of(const Subgroup& h) const;
  /// Induced character m_H of layer i, computed once at construction.
  const ClassFunction& character(std::size_t i) const { return chars_[i]; }
  /// Pullback density of s at layer i.
  Rational density(const ClassSet& s, std::size_t i) const;

 private:
  GroupPtr ambient_;
  std::vector<Subgroup> layers_;
  std::optional<Subgroup> top_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<ClassFunction> chars_;
  std::size_t whole_ = 0;
};

struct StabilityWitness {
  ClassSet subset;
  Subgroup stabilizing_layer;
  Rational bound_a;
  Rational lambda;

  /// Re-checks a <= density < lambda*a on every family layer inside the
  /// stabilizing layer, independently of the search that produced it.
  bool verify(const TowerFamily& family) const;
};

struct PersistenceVerdict {
  bool persistent;
  Rational constant_density;
  Subgroup witness_subgroup;
};

struct WitnessSearch {
  enum class Space { Components, Powerset };
  Space space = Space::Components;
  std::size_t powerset_cap = std::size_t{1} << 12;
};

PersistenceVerdict persistence_verdict(const GroupPtr& gbar, Element sigma, const Subgroup& w);

/// Exhaustive search over (stabilizing layer, S0). Prefers the largest bound
/// a, then the largest layer, then the lexicographically smallest S0.
std::optional<StabilityWitness> stability_witness(const ClassSet& s, const TowerFamily& family,
                                                  const Rational& lambda, const WitnessSearch& opts = {});

/// Same search restricted to one stabilizing layer.
std::optional<StabilityWitness> stability_witness_at(const ClassSet& s, const TowerFamily& family,
                                                     const Rational& lambda, const Subgroup& layer,
                                                     const WitnessSearch& opts = {});

/// Whether some lambda > 1 admits a witness; returns one using the smallest
/// window that works for the best candidate.
std::optional<StabilityWitness> stable_for_some_lambda(const ClassSet& s, const TowerFamily& family,
                                                       const WitnessSearch& opts = {});

/// For each layer, whether some S0 in the search space has a lambda-window
/// witness with that stabilizing layer.
std::vector<bool> witness_layers(const ClassSet& s, const TowerFamily& family, const Rational& lambda,
                                 const WitnessSearch& opts = {});

/// Minimum pullback density over all layers when positive.
std::optional<Rational> uniform_lower_bound(const ClassSet& s, const TowerFamily& family);

bool dagger_membership(const GroupPtr& gbar, Element sigma, const Subgroup& w_p);

struct OrbitReport {
  std::vector<std::size_t> orbit;  // N-class indices, sorted
  std::size_t stabilizer_size;     // number of coset representatives fixing the class
  std::size_t coset_count;
  bool nontrivial_orbit;
};

/// Orbit of the N-class of sigma under conjugation by coset representatives of G/N.
OrbitReport orbit_set_scenario(const Subgroup& n, Element sigma);

}  // namespace stablelab
