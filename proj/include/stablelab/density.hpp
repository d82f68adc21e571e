#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stablelab/group.hpp"
#include "stablelab/rational.hpp"

namespace stablelab {

/// A union of conjugacy classes of one ambient group: the finite-level model
/// of a set of primes whose Frobenius classes lie in the union.
class ClassSet {
 public:
  ClassSet(GroupPtr ambient, std::vector<std::size_t> classes, std::string label = {});

  static ClassSet all(GroupPtr ambient, std::string label = "all");
  static ClassSet empty(GroupPtr ambient, std::string label = "empty");
  /// The class of a single element.
  static ClassSet of_element(GroupPtr ambient, Element sigma, std::string label = {});

  const GroupPtr& ambient() const noexcept { return ambient_; }
  const std::vector<std::size_t>& classes() const noexcept { return classes_; }
  const std::string& label() const noexcept { return label_; }
  bool contains_class(std::size_t c) const;
  bool contains_element(Element a) const { return contains_class(ambient_->class_of(a)); }
  bool is_subset_of(const ClassSet& other) const;
  /// All elements lying in the union, sorted.
  std::vector<Element> elements() const;

  ClassSet united(const ClassSet& other) const;

  friend bool operator==(const ClassSet& a, const ClassSet& b) {
    return a.ambient_ == b.ambient_ && a.classes_ == b.classes_;
  }

 private:
  GroupPtr ambient_;
  std::vector<std::size_t> classes_;
  std::string label_;
};

/// Per-class nonnegative integer values.
struct ClassFunction {
  GroupPtr ambient;
  std::vector<std::int64_t> values;

  std::int64_t at(Element a) const { return values[ambient->class_of(a)]; }
};

/// m_H: the permutation character of G acting on the left cosets of H,
/// evaluated by counting double cosets <s> g H with g^{-1} s g in H.
ClassFunction induced_character(const Subgroup& h);

/// m -> density of the classes on which m_H takes the value m.
std::map<std::int64_t, Rational> pm_partition(const Subgroup& h);

Rational class_set_density(const ClassSet& s);

/// Density of S after base change to the fixed field of H:
/// sum over classes C in S of m_H(C) |C| / |G|.
Rational pullback_density(const ClassSet& s, const Subgroup& h);

/// |C(sigma; Gbar) ∩ W| / |W|.
Rational basechange_density(const GroupPtr& gbar, Element sigma, const Subgroup& w);

/// Moves a class set on the target of a quotient map to the source by
/// taking full preimages.
ClassSet pullback_classes(const QuotientMap& q, const ClassSet& s);

}  // namespace stablelab
