#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stablelab/cohomology.hpp"
#include "stablelab/stability.hpp"

namespace stablelab {

/// Claim identifiers accepted by sweep().
inline const std::vector<std::string> kAllClaims = {
    "density", "basechange", "persistence", "cyclic-decomposition", "containment", "sha-bound", "res-cores"};

struct Finding {
  std::string id;        // hash of the canonical instance description
  std::string claim;
  std::string instance;  // canonical instance description (JSON text)
  std::string detail;
};

struct ClaimStats {
  std::size_t checked = 0;
  std::size_t vacuous = 0;
  std::size_t violations = 0;
  std::size_t sharp = 0;
};

struct SweepReport {
  std::string catalog_hash;
  std::vector<std::string> claims;
  std::size_t checked = 0;
  std::size_t vacuous = 0;
  std::vector<Finding> violations;
  /// Instances whose hypothesis fails and whose conclusion fails as well.
  std::vector<Finding> sharp;
  std::map<std::string, ClaimStats> per_claim;
  double seconds = 0;  // runtime metadata, not part of the report body

  bool pass() const { return violations.empty(); }
  void merge(const SweepReport& other);
};

struct ModuleRecipe {
  std::vector<std::int64_t> orders;
  /// Also enumerate nontrivial actions (cyclic A and (Z/2)^2 only).
  bool nontrivial_actions = true;
};

struct SweepCatalog {
  std::vector<std::string> groups;
  std::vector<ModuleRecipe> modules;
  enum class FamilyPolicy { AllSubgroups, Chain };
  FamilyPolicy family_policy = FamilyPolicy::AllSubgroups;
  std::vector<unsigned> primes = {2, 3};
  unsigned max_m = 2;
  /// Nontrivial actions kept per (group, recipe).
  std::size_t max_actions = 4;
  /// Groups with at most this many classes get every class union as T.
  std::size_t max_t_classes = 8;
  std::size_t subgroup_cap = kDefaultSubgroupCap;

  /// Presets of order <= max_order with |A| in {2, 3, 4, 8, 9}.
  static SweepCatalog default_catalog(std::size_t max_order = 16);
  /// Canonical JSON text of the catalog.
  std::string canonical() const;
  std::string hash() const;
};

/// Modules of the catalog over g: trivial action first, then up to
/// max_actions nontrivial actions in enumeration order.
std::vector<ModulePtr> catalog_modules(const GroupPtr& g, const ModuleRecipe& recipe, std::size_t max_actions);
/// Class unions used as T: all unions for small class counts, else a structured family.
std::vector<ClassSet> catalog_class_sets(const GroupPtr& g, std::size_t max_t_classes);

/// Finite-level hypothesis "p-stabilizing at the base": a lambda = p witness
/// with stabilizing layer the whole group over the all-subgroups family.
bool stabilizes_at_base(const ClassSet& t, const TowerFamily& family, unsigned p);

SweepReport verify_cyclic_decomposition(const GroupPtr& g, const ClassSet& t, unsigned p);
SweepReport verify_containment(const ModulePtr& a, const ClassSet& t);
SweepReport verify_sha_bound(const TowerFamily& family, const ClassSet& t, unsigned p, unsigned m);
SweepReport verify_res_cores(const std::vector<Subgroup>& chain, const ModulePtr& a, unsigned p);

/// Runs the selected claims over the catalog. Instances are processed per
/// group on up to `jobs` threads and merged in catalog order.
SweepReport sweep(const SweepCatalog& catalog, const std::vector<std::string>& claims, unsigned jobs = 1);

/// FNV-1a 64-bit hash as 16 hex digits.
std::string fnv_hex(const std::string& text);

}  // namespace stablelab
