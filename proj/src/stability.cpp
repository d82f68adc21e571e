#include "stablelab/stability.hpp"

#include <algorithm>
#include <set>

#include "stablelab/error.hpp"

namespace stablelab {

TowerFamily::TowerFamily(GroupPtr ambient, std::vector<Subgroup> layers, std::optional<Subgroup> top)
    : ambient_(std::move(ambient)), layers_(std::move(layers)), top_(std::move(top)) {
  require(ambient_ != nullptr, ErrorKind::InvalidInput, "tower family without ambient group");
  bool has_whole = false;
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> dedup;
  for (auto& l : layers_) {
    require(l.parent() == ambient_, ErrorKind::InvalidInput, "tower layer outside the ambient group");
    if (seen.insert(l.members()).second) dedup.push_back(l);
  }
  layers_ = std::move(dedup);
  std::sort(layers_.begin(), layers_.end(), subgroup_less);
  for (std::size_t i = 0; i < layers_.size(); ++i)
    if (layers_[i].is_whole()) {
      has_whole = true;
      whole_ = i;
    }
  require(has_whole, ErrorKind::InvalidInput, "tower family must contain the whole group");
  if (top_) require(top_->parent() == ambient_, ErrorKind::InvalidInput, "tower top outside the ambient group");
  below_.resize(layers_.size());
  for (std::size_t i = 0; i < layers_.size(); ++i)
    for (std::size_t j = 0; j < layers_.size(); ++j)
      if (layers_[j].is_subset_of(layers_[i])) below_[i].push_back(j);
  for (const auto& l : layers_) chars_.push_back(induced_character(l));
}

Rational TowerFamily::density(const ClassSet& s, std::size_t i) const {
  require(s.ambient() == ambient_, ErrorKind::InvalidInput, "class set and family use different groups");
  const auto& g = *ambient_;
  std::int64_t total = 0;
  for (auto c : s.classes())
    total += chars_[i].values[c] * static_cast<std::int64_t>(g.classes()[c].members.size());
  return make_rational(total, static_cast<std::int64_t>(g.order()));
}

TowerFamily TowerFamily::all_subgroups(const GroupPtr& g, std::size_t cap) {
  return TowerFamily(g, subgroups(g, SubgroupFilter::all(), cap));
}

TowerFamily TowerFamily::overgroups(const Subgroup& top, std::size_t cap) {
  std::vector<Subgroup> layers;
  for (auto& h : subgroups(top.parent(), SubgroupFilter::all(), cap))
    if (top.is_subset_of(h)) layers.push_back(std::move(h));
  return TowerFamily(top.parent(), std::move(layers), top);
}

std::optional<std::size_t> TowerFamily::index_of(const Subgroup& h) const {
  for (std::size_t i = 0; i < layers_.size(); ++i)
    if (layers_[i] == h) return i;
  return std::nullopt;
}

bool StabilityWitness::verify(const TowerFamily& family) const {
  if (bound_a <= 0 || lambda <= 1) return false;
  if (!subset.ambient() || subset.ambient() != family.ambient()) return false;
  for (std::size_t i = 0; i < family.layers().size(); ++i) {
    if (!family.layers()[i].is_subset_of(stabilizing_layer)) continue;
    Rational d = family.density(subset, i);
    if (d < bound_a || d >= lambda * bound_a) return false;
  }
  return true;
}

PersistenceVerdict persistence_verdict(const GroupPtr& gbar, Element sigma, const Subgroup& w) {
  Rational d = basechange_density(gbar, sigma, w);
  return PersistenceVerdict{d > 0, d, w};
}

namespace {

std::vector<ClassSet> candidate_subsets(const ClassSet& s, const WitnessSearch& opts) {
  std::vector<ClassSet> out;
  const auto& cls = s.classes();
  if (opts.space == WitnessSearch::Space::Components) {
    out.push_back(s);
    if (cls.size() > 1)
      for (auto c : cls) out.emplace_back(s.ambient(), std::vector<std::size_t>{c}, s.label());
  } else {
    require(cls.size() < 63 && (std::size_t{1} << cls.size()) <= opts.powerset_cap, ErrorKind::CapExceeded,
            "powerset search space exceeds cap");
    for (std::size_t mask = 1; mask < (std::size_t{1} << cls.size()); ++mask) {
      std::vector<std::size_t> pick;
      for (std::size_t i = 0; i < cls.size(); ++i)
        if (mask >> i & 1) pick.push_back(cls[i]);
      out.emplace_back(s.ambient(), std::move(pick), s.label());
    }
    if (cls.empty()) out.push_back(s);
  }
  return out;
}

struct Candidate {
  std::size_t layer;
  std::size_t subset;
  Rational a;
  Rational max;
};

// Densities of each candidate subset at each layer of the family.
std::vector<std::vector<Rational>> density_grid(const std::vector<ClassSet>& subsets, const TowerFamily& family) {
  std::vector<std::vector<Rational>> grid(subsets.size(), std::vector<Rational>(family.layers().size()));
  for (std::size_t j = 0; j < family.layers().size(); ++j)
    for (std::size_t i = 0; i < subsets.size(); ++i) grid[i][j] = family.density(subsets[i], j);
  return grid;
}

std::vector<Candidate> window_candidates(const std::vector<std::vector<Rational>>& grid, const TowerFamily& family,
                                         std::optional<std::size_t> only_layer) {
  std::vector<Candidate> out;
  for (std::size_t l = 0; l < family.layers().size(); ++l) {
    if (only_layer && *only_layer != l) continue;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Rational lo = grid[i][l], hi = grid[i][l];
      for (auto j : family.below(l)) {
        lo = std::min(lo, grid[i][j]);
        hi = std::max(hi, grid[i][j]);
      }
      if (lo > 0) out.push_back({l, i, lo, hi});
    }
  }
  return out;
}

std::optional<StabilityWitness> search(const ClassSet& s, const TowerFamily& family, const Rational& lambda,
                                       std::optional<std::size_t> only_layer, const WitnessSearch& opts) {
  require(lambda > 1, ErrorKind::InvalidInput, "lambda must exceed 1");
  require(s.ambient() == family.ambient(), ErrorKind::InvalidInput, "class set and family use different groups");
  auto subsets = candidate_subsets(s, opts);
  auto grid = density_grid(subsets, family);
  const Candidate* best = nullptr;
  auto cands = window_candidates(grid, family, only_layer);
  for (const auto& c : cands) {
    if (!(c.max < lambda * c.a)) continue;
    if (best == nullptr) {
      best = &c;
      continue;
    }
    const auto& lb = family.layers()[best->layer];
    const auto& lc = family.layers()[c.layer];
    bool better = false;
    if (c.a != best->a) {
      better = c.a > best->a;
    } else if (lc.order() != lb.order()) {
      better = lc.order() > lb.order();
    } else if (lc.members() != lb.members()) {
      better = lc.members() < lb.members();
    } else {
      better = subsets[c.subset].classes() < subsets[best->subset].classes();
    }
    if (better) best = &c;
  }
  if (best == nullptr) return std::nullopt;
  StabilityWitness w{subsets[best->subset], family.layers()[best->layer], best->a, lambda};
  if (!w.verify(family)) fail(ErrorKind::InvalidInput, "internal error: stability witness failed re-verification");
  return w;
}

}  // namespace

std::optional<StabilityWitness> stability_witness(const ClassSet& s, const TowerFamily& family,
                                                  const Rational& lambda, const WitnessSearch& opts) {
  return search(s, family, lambda, std::nullopt, opts);
}

std::optional<StabilityWitness> stability_witness_at(const ClassSet& s, const TowerFamily& family,
                                                     const Rational& lambda, const Subgroup& layer,
                                                     const WitnessSearch& opts) {
  auto idx = family.index_of(layer);
  require(idx.has_value(), ErrorKind::InvalidInput, "stabilizing layer is not in the family");
  return search(s, family, lambda, idx, opts);
}

std::optional<StabilityWitness> stable_for_some_lambda(const ClassSet& s, const TowerFamily& family,
                                                       const WitnessSearch& opts) {
  require(s.ambient() == family.ambient(), ErrorKind::InvalidInput, "class set and family use different groups");
  auto subsets = candidate_subsets(s, opts);
  auto grid = density_grid(subsets, family);
  std::optional<Rational> best_ratio;
  for (const auto& c : window_candidates(grid, family, std::nullopt)) {
    Rational r = c.max / c.a;
    if (!best_ratio || r < *best_ratio) best_ratio = r;
  }
  if (!best_ratio) return std::nullopt;
  return search(s, family, *best_ratio + 1, std::nullopt, opts);
}

std::vector<bool> witness_layers(const ClassSet& s, const TowerFamily& family, const Rational& lambda,
                                 const WitnessSearch& opts) {
  require(lambda > 1, ErrorKind::InvalidInput, "lambda must exceed 1");
  require(s.ambient() == family.ambient(), ErrorKind::InvalidInput, "class set and family use different groups");
  auto subsets = candidate_subsets(s, opts);
  auto grid = density_grid(subsets, family);
  std::vector<bool> out(family.layers().size(), false);
  for (const auto& c : window_candidates(grid, family, std::nullopt))
    if (c.max < lambda * c.a) out[c.layer] = true;
  return out;
}

std::optional<Rational> uniform_lower_bound(const ClassSet& s, const TowerFamily& family) {
  require(s.ambient() == family.ambient(), ErrorKind::InvalidInput, "class set and family use different groups");
  std::optional<Rational> lo;
  for (std::size_t i = 0; i < family.layers().size(); ++i) {
    Rational d = family.density(s, i);
    if (!lo || d < *lo) lo = d;
  }
  if (!lo || *lo <= 0) return std::nullopt;
  return lo;
}

bool dagger_membership(const GroupPtr& gbar, Element sigma, const Subgroup& w_p) {
  return basechange_density(gbar, sigma, w_p) > 0;
}

OrbitReport orbit_set_scenario(const Subgroup& n, Element sigma) {
  require(is_normal(n), ErrorKind::NotNormal, "orbit scenario requires a normal subgroup");
  require(n.contains(sigma), ErrorKind::InvalidInput, "sigma is not an element of N");
  auto cls = subgroup_classes(n);
  std::size_t start = 0;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (std::binary_search(cls[i].members.begin(), cls[i].members.end(), sigma)) start = i;
  auto reps = left_coset_representatives(n);
  std::set<std::size_t> orbit;
  std::size_t fixing = 0;
  for (Element g : reps) {
    auto perm = outer_class_action(n, g);
    orbit.insert(perm[start]);
    if (perm[start] == start) ++fixing;
  }
  OrbitReport r{std::vector<std::size_t>(orbit.begin(), orbit.end()), fixing, reps.size(), orbit.size() > 1};
  return r;
}

}  // namespace stablelab
