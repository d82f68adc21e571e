#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stablelab/group.hpp"
#include "stablelab/zmod_linalg.hpp"

namespace stablelab {

class GModule;
using ModulePtr = std::shared_ptr<const GModule>;

/// A finite abelian group A = Z/d_1 + ... + Z/d_k (d_1 | ... | d_k, each > 1)
/// with a left action of a finite group by integer matrices. Row i of every
/// matrix is reduced mod d_i.
class GModule {
 public:
  /// Extends the action given on generators to all elements and validates it
  /// as a homomorphism. Throws Error(InvalidInput) when the generators do not
  /// generate, a matrix is not well defined or not invertible, or the
  /// extension is inconsistent with the multiplication table.
  static ModulePtr build(GroupPtr group, std::vector<std::int64_t> orders,
                         const std::map<Element, zmod::Mat>& generator_action, std::string label = {});

  static ModulePtr trivial(GroupPtr group, std::vector<std::int64_t> orders);
  /// Cyclic Z/n with g acting as multiplication by chi[g]; chi must be a
  /// homomorphism into (Z/n)^*.
  static ModulePtr scalar(GroupPtr group, std::int64_t n, const std::vector<std::int64_t>& chi);
  /// (Z/n)^* acting on Z/n by multiplication.
  static ModulePtr multiplication(std::int64_t n);
  /// The regular module Z/p[G].
  static ModulePtr regular(GroupPtr group, std::int64_t p);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<std::int64_t>& orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  /// Exponent of A (1 for the zero module).
  std::int64_t exponent() const noexcept { return orders_.empty() ? 1 : orders_.back(); }
  /// |A|, or 0 when it does not fit in 62 bits.
  std::int64_t cardinality() const noexcept { return card_; }
  const zmod::Mat& action(Element g) const { return action_[g]; }
  const std::string& label() const noexcept { return label_; }
  /// Stable content hash of (group table, orders, action).
  const std::string& fingerprint() const noexcept { return fingerprint_; }

  zmod::Vec reduce(zmod::Vec v) const;
  zmod::Vec apply(Element g, const zmod::Vec& v) const;
  zmod::Vec add(const zmod::Vec& a, const zmod::Vec& b) const;
  zmod::Vec sub(const zmod::Vec& a, const zmod::Vec& b) const;
  zmod::Vec zero() const { return zmod::Vec(rank(), 0); }
  bool is_zero(const zmod::Vec& v) const;

  /// Mixed-radix encoding of elements of A, 0 <= code < |A|.
  std::int64_t encode(const zmod::Vec& v) const;
  zmod::Vec decode(std::int64_t code) const;

  /// Elements acting as the identity (a normal subgroup).
  Subgroup action_kernel() const;
  bool is_trivial_action() const;
  /// Generator images as given to build(), for serialization.
  std::map<Element, zmod::Mat> generator_action() const;

 private:
  GModule() = default;
  void finish();

  GroupPtr group_;
  std::vector<std::int64_t> orders_;
  std::vector<zmod::Mat> action_;
  std::vector<Element> gens_;
  std::string label_;
  std::string fingerprint_;
  std::int64_t card_ = 1;
};

/// A restricted to a subgroup H, as a module over the standalone group of H.
struct RestrictedModule {
  EmbeddedGroup embedding;
  ModulePtr module;
};
RestrictedModule restrict_module(const ModulePtr& a, const Subgroup& h);

/// A as a module over G/N. Throws Error(InvalidInput) unless N acts trivially.
ModulePtr descend_module(const ModulePtr& a, const QuotientMap& q);

/// A function G -> A, indexed by element.
struct Cocycle {
  ModulePtr module;
  std::vector<zmod::Vec> values;
};

bool is_cocycle(const Cocycle& f);
Cocycle zero_cocycle(const ModulePtr& a);
Cocycle coboundary(const ModulePtr& a, const zmod::Vec& x);
Cocycle scaled_sum(const Cocycle& f, std::int64_t cf, const Cocycle& g, std::int64_t cg);

}  // namespace stablelab
