#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stablelab {

/// Dense element index into a group's multiplication table.
using Element = std::uint32_t;

struct ConjClass {
  Element representative;        // minimal member
  std::vector<Element> members;  // sorted
};

/// A finite group given by its complete multiplication table.
///
/// Immutable after construction. Conjugacy classes, element orders and
/// inverses are computed once and cached. Element labels are metadata only.
class FiniteGroup {
 public:
  /// Validates the table (Latin square, identity, associativity) and throws
  /// Error(InvalidInput) on failure.
  static std::shared_ptr<const FiniteGroup> from_table(std::vector<std::vector<Element>> table,
                                                       std::vector<std::string> labels = {},
                                                       std::string name = {});

  std::size_t order() const noexcept { return n_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element inv(Element a) const noexcept { return inverses_[a]; }
  Element identity() const noexcept { return identity_; }
  /// g^{-1} x g
  Element conj(Element x, Element g) const noexcept { return mul(mul(inverses_[g], x), g); }
  Element power(Element a, long long k) const;
  std::size_t element_order(Element a) const noexcept { return orders_[a]; }

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Preset name when built from the catalog, otherwise empty.
  const std::string& name() const noexcept { return name_; }

  /// Classes ordered by minimal member.
  const std::vector<ConjClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(Element a) const noexcept { return class_of_[a]; }
  bool is_abelian() const noexcept { return abelian_; }

  std::span<const Element> table() const noexcept { return table_; }
  /// Finds an element by label; throws Error(InvalidInput) when absent.
  Element element_by_label(std::string_view label) const;

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::size_t> orders_;
  Element identity_ = 0;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;
  bool abelian_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class Subgroup {
 public:
  /// Validates closure; members need not be sorted on input.
  Subgroup(GroupPtr parent, std::vector<Element> members);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_->order() / members_.size(); }
  bool contains(Element a) const noexcept { return mask_[a]; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_->order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

/// Deterministic ordering: by order, then lexicographically by members.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

struct QuotientMap {
  GroupPtr source;
  Subgroup kernel;
  GroupPtr target;
  std::vector<Element> projection;  // source element -> target element
  std::vector<Element> section;     // target element -> minimal coset member
};

struct SubgroupFilter {
  enum class Kind { All, Cyclic, CyclicP };
  Kind kind = Kind::All;
  unsigned p = 0;

  static SubgroupFilter all() { return {Kind::All, 0}; }
  static SubgroupFilter cyclic() { return {Kind::Cyclic, 0}; }
  static SubgroupFilter cyclic_p(unsigned p) { return {Kind::CyclicP, p}; }
};

inline constexpr std::size_t kDefaultSubgroupCap = 48;

const std::vector<ConjClass>& conjugacy_classes(const FiniteGroup& g);

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup subgroup_generated(const GroupPtr& g, std::span<const Element> gens);
Subgroup cyclic_subgroup(const GroupPtr& g, Element a);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

/// Complete, deduplicated, deterministically ordered subgroup list.
/// Throws Error(CapExceeded) when filter is All and |G| > cap.
std::vector<Subgroup> subgroups(const GroupPtr& g, SubgroupFilter filter = SubgroupFilter::all(),
                                std::size_t cap = kDefaultSubgroupCap);

bool is_normal(const Subgroup& n);
std::vector<Subgroup> normal_subgroups(const GroupPtr& g, std::size_t cap = kDefaultSubgroupCap);

/// Minimal member of each left coset gH, in increasing order.
std::vector<Element> left_coset_representatives(const Subgroup& h);

/// Throws Error(NotNormal) unless n is normal.
QuotientMap quotient(const GroupPtr& g, const Subgroup& n);

/// Pulls a subgroup of the quotient back to the source group.
Subgroup preimage(const QuotientMap& q, const Subgroup& target_subgroup);
/// Image of a subgroup of the source in the quotient.
Subgroup image(const QuotientMap& q, const Subgroup& source_subgroup);

/// A subgroup promoted to a standalone group; element i of `group` is
/// `to_parent[i]` in the ambient group.
struct EmbeddedGroup {
  GroupPtr group;
  std::vector<Element> to_parent;
  std::vector<std::int64_t> from_parent;  // -1 outside the subgroup
};
EmbeddedGroup as_group(const Subgroup& h);

/// N-conjugacy classes of a subgroup N, ordered by minimal member.
std::vector<ConjClass> subgroup_classes(const Subgroup& n);

/// Permutation of the N-classes of a normal subgroup induced by conjugation
/// with g: class i goes to the class containing g rep_i g^{-1}, so that
/// act(g) after act(h) equals act(gh).
std::vector<std::size_t> outer_class_action(const Subgroup& n, Element g);

/// Greedy generating set preferring elements of large order.
std::vector<Element> generating_set(const FiniteGroup& g);
std::vector<Element> generating_set(const Subgroup& h);

// ---- construction -------------------------------------------------------

GroupPtr cyclic_group(std::size_t n);
GroupPtr unit_group(std::size_t n);  // (Z/n)^*, elements are sorted residues
GroupPtr symmetric_group(std::size_t degree);
GroupPtr alternating_group(std::size_t degree);
GroupPtr dihedral_group(std::size_t n);  // order 2n
GroupPtr quaternion_group();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

/// Closure of permutation generators on {0..degree-1}; images are 0-based.
GroupPtr group_from_permutations(std::size_t degree, const std::vector<std::vector<std::size_t>>& gens,
                                 std::string name = {});

/// Preset names: "Z/n", "(Z/n)*", "S3", "S4", "A4", "D4", "Dn", "Q8",
/// and direct products written "A x B".
GroupPtr make_preset(std::string_view name);

/// Distinct catalog presets of order <= max_order, sorted by (order, name).
std::vector<std::string> preset_catalog(std::size_t max_order);

}  // namespace stablelab
