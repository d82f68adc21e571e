#include "stablelab/density.hpp"

#include <algorithm>

#include "stablelab/error.hpp"

namespace stablelab {

ClassSet::ClassSet(GroupPtr ambient, std::vector<std::size_t> classes, std::string label)
    : ambient_(std::move(ambient)), classes_(std::move(classes)), label_(std::move(label)) {
  require(ambient_ != nullptr, ErrorKind::InvalidInput, "class set without ambient group");
  std::sort(classes_.begin(), classes_.end());
  classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
  for (auto c : classes_)
    require(c < ambient_->classes().size(), ErrorKind::InvalidInput,
            "class index " + std::to_string(c) + " out of range");
}

ClassSet ClassSet::all(GroupPtr ambient, std::string label) {
  std::vector<std::size_t> cls(ambient->classes().size());
  for (std::size_t i = 0; i < cls.size(); ++i) cls[i] = i;
  return ClassSet(std::move(ambient), std::move(cls), std::move(label));
}

ClassSet ClassSet::empty(GroupPtr ambient, std::string label) {
  return ClassSet(std::move(ambient), {}, std::move(label));
}

ClassSet ClassSet::of_element(GroupPtr ambient, Element sigma, std::string label) {
  require(sigma < ambient->order(), ErrorKind::InvalidInput, "element index out of range");
  if (label.empty()) label = "C(" + ambient->label(sigma) + ")";
  auto c = ambient->class_of(sigma);
  return ClassSet(std::move(ambient), {c}, std::move(label));
}

bool ClassSet::contains_class(std::size_t c) const {
  return std::binary_search(classes_.begin(), classes_.end(), c);
}

bool ClassSet::is_subset_of(const ClassSet& other) const {
  return ambient_ == other.ambient_ &&
         std::includes(other.classes_.begin(), other.classes_.end(), classes_.begin(), classes_.end());
}

std::vector<Element> ClassSet::elements() const {
  std::vector<Element> out;
  for (auto c : classes_) {
    const auto& m = ambient_->classes()[c].members;
    out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassSet ClassSet::united(const ClassSet& other) const {
  require(ambient_ == other.ambient_, ErrorKind::InvalidInput, "class sets over different ambient groups");
  auto cls = classes_;
  cls.insert(cls.end(), other.classes_.begin(), other.classes_.end());
  return ClassSet(ambient_, std::move(cls), label_ + "+" + other.label_);
}

ClassFunction induced_character(const Subgroup& h) {
  const auto& g = *h.parent();
  ClassFunction f{h.parent(), {}};
  for (const auto& cls : g.classes()) {
    const Element sigma = cls.representative;
    std::vector<Element> powers{g.identity()};
    for (Element x = sigma; x != g.identity(); x = g.mul(x, sigma)) powers.push_back(x);
    std::vector<bool> covered(g.order(), false);
    std::int64_t count = 0;
    for (Element x = 0; x < g.order(); ++x) {
      if (covered[x]) continue;
      for (Element c : powers)
        for (Element m : h.members()) covered[g.mul(g.mul(c, x), m)] = true;
      // <sigma>^x ⊆ H exactly when x^{-1} sigma x lies in H
      if (h.contains(g.conj(sigma, x))) ++count;
    }
    f.values.push_back(count);
  }
  return f;
}

std::map<std::int64_t, Rational> pm_partition(const Subgroup& h) {
  const auto& g = *h.parent();
  auto m = induced_character(h);
  std::map<std::int64_t, Rational> out;
  const auto order = static_cast<std::int64_t>(g.order());
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    out[m.values[c]] += make_rational(static_cast<std::int64_t>(g.classes()[c].members.size()), order);
  return out;
}

Rational class_set_density(const ClassSet& s) {
  const auto& g = *s.ambient();
  std::int64_t total = 0;
  for (auto c : s.classes()) total += static_cast<std::int64_t>(g.classes()[c].members.size());
  return make_rational(total, static_cast<std::int64_t>(g.order()));
}

Rational pullback_density(const ClassSet& s, const Subgroup& h) {
  require(h.parent() == s.ambient(), ErrorKind::InvalidInput, "subgroup is not in the class set's ambient group");
  const auto& g = *s.ambient();
  auto m = induced_character(h);
  std::int64_t total = 0;
  for (auto c : s.classes()) total += m.values[c] * static_cast<std::int64_t>(g.classes()[c].members.size());
  return make_rational(total, static_cast<std::int64_t>(g.order()));
}

Rational basechange_density(const GroupPtr& gbar, Element sigma, const Subgroup& w) {
  require(w.parent() == gbar, ErrorKind::InvalidInput, "W is not a subgroup of the given group");
  require(sigma < gbar->order(), ErrorKind::InvalidInput, "element index out of range");
  const auto& cls = gbar->classes()[gbar->class_of(sigma)];
  std::int64_t hits = 0;
  for (Element x : cls.members)
    if (w.contains(x)) ++hits;
  return make_rational(hits, static_cast<std::int64_t>(w.order()));
}

ClassSet pullback_classes(const QuotientMap& q, const ClassSet& s) {
  require(s.ambient() == q.target, ErrorKind::InvalidInput, "class set is not over the quotient target");
  std::vector<std::size_t> cls;
  for (std::size_t c = 0; c < q.source->classes().size(); ++c)
    if (s.contains_element(q.projection[q.source->classes()[c].representative])) cls.push_back(c);
  return ClassSet(q.source, std::move(cls), s.label());
}

}  // namespace stablelab
