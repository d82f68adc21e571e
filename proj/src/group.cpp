#include "stablelab/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "stablelab/error.hpp"

namespace stablelab {

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(std::vector<std::vector<Element>> table,
                                                           std::vector<std::string> labels,
                                                           std::string name) {
  const std::size_t n = table.size();
  require(n > 0, ErrorKind::InvalidInput, "empty Cayley table");
  for (const auto& row : table)
    require(row.size() == n, ErrorKind::InvalidInput, "Cayley table is not square");

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->n_ = n;
  g->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      Element v = table[a][b];
      require(v < n, ErrorKind::InvalidInput, "Cayley table entry out of range");
      require(!seen[v], ErrorKind::InvalidInput, "Cayley table row is not a permutation");
      seen[v] = true;
      g->table_[a * n + b] = v;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      Element v = g->table_[a * n + b];
      require(!seen[v], ErrorKind::InvalidInput, "Cayley table column is not a permutation");
      seen[v] = true;
    }
  }

  // identity: the unique e with e*e = e in a Latin square that is a group
  std::optional<Element> ident;
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = g->mul(e, a) == a && g->mul(a, e) == a;
    if (ok) {
      ident = e;
      break;
    }
  }
  require(ident.has_value(), ErrorKind::InvalidInput, "Cayley table has no identity");
  g->identity_ = *ident;

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = g->mul(a, b);
      for (Element c = 0; c < n; ++c)
        if (g->mul(ab, c) != g->mul(a, g->mul(b, c)))
          fail(ErrorKind::InvalidInput, "Cayley table is not associative at (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");
    }

  g->inverses_.resize(n);
  g->orders_.resize(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b)
      if (g->mul(a, b) == g->identity_) g->inverses_[a] = b;
    std::size_t k = 1;
    for (Element x = a; x != g->identity_; x = g->mul(x, a)) ++k;
    g->orders_[a] = k;
  }

  g->abelian_ = true;
  for (Element a = 0; a < n && g->abelian_; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (g->mul(a, b) != g->mul(b, a)) {
        g->abelian_ = false;
        break;
      }

  g->class_of_.assign(n, n);
  for (Element a = 0; a < n; ++a) {
    if (g->class_of_[a] != n) continue;
    ConjClass c{a, {}};
    std::vector<bool> in(n, false);
    for (Element x = 0; x < n; ++x) {
      Element y = g->conj(a, x);
      if (!in[y]) {
        in[y] = true;
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    for (Element y : c.members) g->class_of_[y] = g->classes_.size();
    g->classes_.push_back(std::move(c));
  }

  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t a = 0; a < n; ++a) labels[a] = std::to_string(a);
  }
  require(labels.size() == n, ErrorKind::InvalidInput, "label count does not match group order");
  g->labels_ = std::move(labels);
  g->name_ = std::move(name);
  return g;
}

Element FiniteGroup::power(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  k %= static_cast<long long>(orders_[a]);
  Element r = identity_;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Element FiniteGroup::element_by_label(std::string_view label) const {
  for (Element a = 0; a < n_; ++a)
    if (labels_[a] == label) return a;
  fail(ErrorKind::InvalidInput, "no element labelled '" + std::string(label) + "'");
}

// ---- Subgroup -------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  require(parent_ != nullptr, ErrorKind::InvalidInput, "subgroup without parent group");
  const std::size_t n = parent_->order();
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(n, false);
  for (Element a : members_) {
    require(a < n, ErrorKind::InvalidInput, "subgroup member out of range");
    mask_[a] = true;
  }
  require(mask_[parent_->identity()], ErrorKind::NotSubgroup, "subset does not contain the identity");
  for (Element a : members_) {
    require(mask_[parent_->inv(a)], ErrorKind::NotSubgroup, "subset not closed under inverses");
    for (Element b : members_)
      require(mask_[parent_->mul(a, b)], ErrorKind::NotSubgroup, "subset not closed under multiplication");
  }
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (members_.size() > other.members_.size()) return false;
  return std::all_of(members_.begin(), members_.end(), [&](Element a) { return other.contains(a); });
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members() < b.members();
}

const std::vector<ConjClass>& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

namespace {

std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens) {
  const std::size_t n = g.order();
  std::vector<bool> in(n, false);
  std::vector<Element> out{g.identity()};
  in[g.identity()] = true;
  std::vector<Element> gs;
  for (Element s : gens) {
    require(s < n, ErrorKind::InvalidInput, "generator index out of range");
    gs.push_back(s);
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Element s : gs) {
      Element y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

}  // namespace

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {g->identity()}); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(g, std::move(all));
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Element> gens) {
  return Subgroup(g, closure(*g, gens));
}

Subgroup cyclic_subgroup(const GroupPtr& g, Element a) {
  const Element gens[] = {a};
  return subgroup_generated(g, gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> m;
  for (Element x : a.members())
    if (b.contains(x)) m.push_back(x);
  return Subgroup(a.parent(), std::move(m));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> gens = generating_set(a);
  auto gb = generating_set(b);
  gens.insert(gens.end(), gb.begin(), gb.end());
  return subgroup_generated(a.parent(), gens);
}

namespace {

bool is_power_of(std::size_t n, unsigned p) {
  if (p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::vector<Subgroup> subgroups(const GroupPtr& g, SubgroupFilter filter, std::size_t cap) {
  if (filter.kind == SubgroupFilter::Kind::All && g->order() > cap)
    fail(ErrorKind::CapExceeded, "subgroup enumeration cap exceeded: |G| = " + std::to_string(g->order()) +
                                     " > " + std::to_string(cap));
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> cyclic;
  for (Element a = 0; a < g->order(); ++a) {
    if (filter.kind == SubgroupFilter::Kind::CyclicP && !is_power_of(g->element_order(a), filter.p) &&
        g->element_order(a) != 1)
      continue;
    Subgroup c = cyclic_subgroup(g, a);
    if (seen.insert(c.members()).second) cyclic.push_back(std::move(c));
  }
  std::vector<Subgroup> result = cyclic;
  if (filter.kind == SubgroupFilter::Kind::All) {
    std::vector<Subgroup> frontier = cyclic;
    while (!frontier.empty()) {
      std::vector<Subgroup> next;
      for (const auto& h : frontier)
        for (const auto& c : cyclic) {
          if (c.is_subset_of(h)) continue;
          Subgroup j = join(h, c);
          if (seen.insert(j.members()).second) {
            result.push_back(j);
            next.push_back(std::move(j));
          }
        }
      frontier = std::move(next);
    }
  }
  std::sort(result.begin(), result.end(), subgroup_less);
  return result;
}

bool is_normal(const Subgroup& n) {
  const auto& g = *n.parent();
  for (Element x = 0; x < g.order(); ++x)
    for (Element a : n.members())
      if (!n.contains(g.conj(a, x))) return false;
  return true;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g, std::size_t cap) {
  std::vector<Subgroup> out;
  for (auto& h : subgroups(g, SubgroupFilter::all(), cap))
    if (is_normal(h)) out.push_back(std::move(h));
  return out;
}

std::vector<Element> left_coset_representatives(const Subgroup& h) {
  const auto& g = *h.parent();
  std::vector<bool> covered(g.order(), false);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Element m : h.members()) covered[g.mul(x, m)] = true;
  }
  return reps;
}

QuotientMap quotient(const GroupPtr& g, const Subgroup& n) {
  require(n.parent() == g, ErrorKind::InvalidInput, "kernel is not a subgroup of the source group");
  require(is_normal(n), ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  auto reps = left_coset_representatives(n);
  const std::size_t m = reps.size();
  std::vector<Element> proj(g->order());
  for (std::size_t i = 0; i < m; ++i)
    for (Element k : n.members()) proj[g->mul(reps[i], k)] = static_cast<Element>(i);
  std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = "[" + g->label(reps[i]) + "]";
    for (std::size_t j = 0; j < m; ++j) table[i][j] = proj[g->mul(reps[i], reps[j])];
  }
  std::string name = g->name().empty() ? std::string{} : g->name() + "/N";
  auto target = FiniteGroup::from_table(std::move(table), std::move(labels), std::move(name));
  return QuotientMap{g, n, target, std::move(proj), std::move(reps)};
}

Subgroup preimage(const QuotientMap& q, const Subgroup& target_subgroup) {
  std::vector<Element> m;
  for (Element x = 0; x < q.source->order(); ++x)
    if (target_subgroup.contains(q.projection[x])) m.push_back(x);
  return Subgroup(q.source, std::move(m));
}

Subgroup image(const QuotientMap& q, const Subgroup& source_subgroup) {
  std::vector<Element> m;
  for (Element x : source_subgroup.members()) m.push_back(q.projection[x]);
  return Subgroup(q.target, std::move(m));
}

EmbeddedGroup as_group(const Subgroup& h) {
  const auto& g = *h.parent();
  const auto& mem = h.members();
  std::vector<std::int64_t> from(g.order(), -1);
  for (std::size_t i = 0; i < mem.size(); ++i) from[mem[i]] = static_cast<std::int64_t>(i);
  std::vector<std::vector<Element>> table(mem.size(), std::vector<Element>(mem.size()));
  std::vector<std::string> labels(mem.size());
  for (std::size_t i = 0; i < mem.size(); ++i) {
    labels[i] = g.label(mem[i]);
    for (std::size_t j = 0; j < mem.size(); ++j)
      table[i][j] = static_cast<Element>(from[g.mul(mem[i], mem[j])]);
  }
  auto grp = FiniteGroup::from_table(std::move(table), std::move(labels));
  return EmbeddedGroup{std::move(grp), mem, std::move(from)};
}

std::vector<ConjClass> subgroup_classes(const Subgroup& n) {
  const auto& g = *n.parent();
  std::vector<bool> done(g.order(), false);
  std::vector<ConjClass> out;
  for (Element a : n.members()) {
    if (done[a]) continue;
    ConjClass c{a, {}};
    for (Element x : n.members()) {
      Element y = g.conj(a, x);
      if (!done[y]) {
        done[y] = true;
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> outer_class_action(const Subgroup& n, Element g) {
  require(is_normal(n), ErrorKind::NotNormal, "outer action requires a normal subgroup");
  const auto& grp = *n.parent();
  auto cls = subgroup_classes(n);
  std::vector<std::size_t> which(grp.order(), 0);
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (Element y : cls[i].members) which[y] = i;
  std::vector<std::size_t> perm(cls.size());
  const Element ginv = grp.inv(g);
  for (std::size_t i = 0; i < cls.size(); ++i) perm[i] = which[grp.conj(cls[i].representative, ginv)];
  return perm;
}

namespace {

std::vector<Element> greedy_generators(const FiniteGroup& g, std::vector<Element> pool) {
  std::stable_sort(pool.begin(), pool.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Element> gens;
  std::vector<bool> span(g.order(), false);
  span[g.identity()] = true;
  std::size_t covered = 1;
  for (Element a : pool) {
    if (covered == pool.size()) break;
    if (span[a]) continue;
    gens.push_back(a);
    auto c = closure(g, gens);
    std::fill(span.begin(), span.end(), false);
    for (Element x : c) span[x] = true;
    covered = c.size();
  }
  return gens;
}

}  // namespace

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> pool(g.order());
  std::iota(pool.begin(), pool.end(), Element{0});
  return greedy_generators(g, std::move(pool));
}

std::vector<Element> generating_set(const Subgroup& h) { return greedy_generators(*h.parent(), h.members()); }

}  // namespace stablelab
