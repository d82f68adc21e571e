#include "stablelab/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>

#include "stablelab/error.hpp"

namespace stablelab {

using zmod::Mat;
using zmod::Vec;

std::int64_t AbelianGroupValue::order() const {
  std::int64_t n = 1;
  for (auto f : factors) n *= f;
  return n;
}

std::int64_t H1Result::order() const {
  std::int64_t n = 1;
  for (auto f : factors) n *= f;
  return n;
}

H1Space::H1Space(ModulePtr a) : a_(std::move(a)) {
  const auto& g = *a_->group();
  const auto& d = a_->orders();
  const std::size_t k = a_->rank();
  const std::int64_t e = a_->exponent();
  gens_ = generating_set(g);
  const std::size_t r = gens_.size(), n = r * k;

  transport_.assign(g.order(), Mat());
  std::vector<bool> seen(g.order(), false);
  transport_[g.identity()] = Mat(k, n);
  seen[g.identity()] = true;
  zmod::RowSpan span(e, n);
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    const auto& rho = a_->action(x);
    for (std::size_t j = 0; j < r; ++j) {
      Element y = g.mul(x, gens_[j]);
      Mat cand = transport_[x];
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < k; ++c) {
          auto& v = cand.at(i, j * k + c);
          v = (v + rho.at(i, c)) % d[i];
        }
      if (!seen[y]) {
        seen[y] = true;
        transport_[y] = std::move(cand);
        queue.push_back(y);
        continue;
      }
      for (std::size_t i = 0; i < k; ++i) {
        Vec row(n);
        for (std::size_t c = 0; c < n; ++c)
          row[c] = zmod::mod(cand.at(i, c) - transport_[y].at(i, c), d[i]) * (e / d[i]);
        span.add(std::move(row));
      }
    }
  }

  std::vector<Vec> rels;
  for (std::size_t c = 0; c < k; ++c) {
    Vec x(n, 0);
    for (std::size_t j = 0; j < r; ++j) {
      const auto& rho = a_->action(gens_[j]);
      for (std::size_t i = 0; i < k; ++i) x[j * k + i] = zmod::mod(rho.at(i, c) - (i == c ? 1 : 0), d[i]);
    }
    rels.push_back(std::move(x));
  }
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t c = 0; c < k; ++c)
      if (d[c] < e) {
        Vec x(n, 0);
        x[j * k + c] = d[c];
        rels.push_back(std::move(x));
      }
  sq_ = std::make_unique<zmod::Subquotient>(e, n, span.matrix(), rels);
}

std::int64_t H1Space::order() const {
  std::int64_t n = 1;
  for (auto f : factors()) n *= f;
  return n;
}

Cocycle H1Space::from_generator_values(const Vec& x) const {
  const auto& d = a_->orders();
  Cocycle f{a_, {}};
  f.values.reserve(transport_.size());
  for (const auto& t : transport_) {
    Vec v(a_->rank(), 0);
    for (std::size_t i = 0; i < a_->rank(); ++i) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < x.size(); ++c) acc = (acc + t.at(i, c) * zmod::mod(x[c], d[i])) % d[i];
      v[i] = acc;
    }
    f.values.push_back(std::move(v));
  }
  return f;
}

Cocycle H1Space::generator(std::size_t i) const { return from_generator_values(sq_->generator(i)); }

Vec H1Space::coords(const Cocycle& f) const {
  require(f.module && f.module->fingerprint() == a_->fingerprint(), ErrorKind::InvalidInput,
          "cocycle belongs to a different module");
  require(is_cocycle(f), ErrorKind::InvalidInput, "values do not satisfy the cocycle identity");
  Vec x;
  for (Element s : gens_) x.insert(x.end(), f.values[s].begin(), f.values[s].end());
  return sq_->coords(x);
}

bool H1Space::is_coboundary(const Cocycle& f) const {
  for (auto c : coords(f))
    if (c != 0) return false;
  return true;
}

Cocycle H1Space::combine(const Vec& coeffs) const { return from_generator_values(sq_->combine(coeffs)); }

namespace {

struct H1Cache {
  std::mutex mu;
  std::unordered_map<std::string, H1SpacePtr> map;
};

H1Cache& cache() {
  static H1Cache c;
  return c;
}

}  // namespace

H1SpacePtr h1_space(const ModulePtr& a) {
  auto& c = cache();
  {
    std::lock_guard lock(c.mu);
    auto it = c.map.find(a->fingerprint());
    if (it != c.map.end()) return it->second;
  }
  auto s = std::make_shared<const H1Space>(a);
  std::lock_guard lock(c.mu);
  c.map.insert_or_assign(a->fingerprint(), s);
  return s;
}

void clear_h1_cache() {
  std::lock_guard lock(cache().mu);
  cache().map.clear();
}

std::size_t h1_cache_size() {
  std::lock_guard lock(cache().mu);
  return cache().map.size();
}

H1Result h1(const ModulePtr& a) {
  auto s = h1_space(a);
  H1Result r{s->factors(), {}, s};
  for (std::size_t i = 0; i < s->dimension(); ++i) r.generators.push_back(s->generator(i));
  return r;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Invariant factors of a finite abelian group from its elementary-divisor
// exponents per prime.
std::vector<std::int64_t> assemble_factors(const std::map<std::int64_t, std::vector<int>>& exps) {
  std::size_t len = 0;
  for (const auto& [p, v] : exps) len = std::max(len, v.size());
  std::vector<std::int64_t> out(len, 1);
  for (const auto& [p, v] : exps) {
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    // align the largest exponents with the last (largest) factors
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      std::int64_t pk = 1;
      for (int t = 0; t < sorted[i]; ++t) pk *= p;
      out[len - sorted.size() + i] *= pk;
    }
  }
  return out;
}

}  // namespace

H1Result h1_oracle(const ModulePtr& a) {
  const auto& g = *a->group();
  const std::int64_t card = a->cardinality();
  require(card > 0, ErrorKind::CapExceeded, "module too large for the enumeration oracle");
  std::int64_t bound = 1;
  for (std::size_t i = 1; i < g.order(); ++i) {
    bound *= card;
    require(bound <= kOracleCap, ErrorKind::CapExceeded, "|A|^(|G|-1) exceeds the enumeration oracle cap");
  }
  const std::size_t n = g.order();
  auto gens = generating_set(g);

  // BFS tree: each non-identity element as parent * generator
  std::vector<std::pair<Element, std::size_t>> tree(n, {g.identity(), 0});
  std::vector<Element> order{g.identity()};
  std::vector<bool> seen(n, false);
  seen[g.identity()] = true;
  for (std::size_t q = 0; q < order.size(); ++q)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Element y = g.mul(order[q], gens[j]);
      if (!seen[y]) {
        seen[y] = true;
        tree[y] = {order[q], j};
        order.push_back(y);
      }
    }

  std::vector<std::vector<std::int64_t>> z1;
  std::vector<std::int64_t> digits(gens.size(), 0);
  std::vector<Vec> f(n);
  for (;;) {
    std::vector<Vec> gv(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) gv[j] = a->decode(digits[j]);
    f[g.identity()] = a->zero();
    for (std::size_t q = 1; q < order.size(); ++q) {
      auto [x, j] = tree[order[q]];
      f[order[q]] = a->add(f[x], a->apply(x, gv[j]));
    }
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (std::size_t j = 0; j < gens.size() && ok; ++j)
        ok = f[g.mul(x, gens[j])] == a->add(f[x], a->apply(x, gv[j]));
    if (ok) {
      for (Element x = 0; x < n && ok; ++x)
        for (Element y = 0; y < n && ok; ++y) ok = f[g.mul(x, y)] == a->add(f[x], a->apply(x, f[y]));
      require(ok, ErrorKind::InvalidInput, "internal error: generator-edge check accepted a non-cocycle");
      std::vector<std::int64_t> code(n);
      for (Element x = 0; x < n; ++x) code[x] = a->encode(f[x]);
      z1.push_back(std::move(code));
    }
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == card) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }

  std::set<std::vector<std::int64_t>> b1;
  for (std::int64_t c = 0; c < card; ++c) {
    auto cb = coboundary(a, a->decode(c));
    std::vector<std::int64_t> code(n);
    for (Element x = 0; x < n; ++x) code[x] = a->encode(cb.values[x]);
    b1.insert(std::move(code));
  }
  require(z1.size() % b1.size() == 0, ErrorKind::InvalidInput, "internal error: |B1| does not divide |Z1|");
  const std::int64_t h_order = static_cast<std::int64_t>(z1.size() / b1.size());

  auto scaled = [&](const std::vector<std::int64_t>& code, std::int64_t m) {
    std::vector<std::int64_t> out(n);
    for (Element x = 0; x < n; ++x) {
      Vec v = a->decode(code[x]);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] * m % a->orders()[i];
      out[x] = a->encode(v);
    }
    return out;
  };

  std::map<std::int64_t, std::vector<int>> exps;
  for (auto p : prime_factors(h_order)) {
    std::int64_t part = 1;
    for (std::int64_t t = h_order; t % p == 0; t /= p) part *= p;
    std::vector<std::int64_t> torsion{1};  // |H[p^k]| for k = 0, 1, ...
    std::int64_t pk = 1;
    while (torsion.back() < part) {
      pk *= p;
      std::int64_t cnt = 0;
      for (const auto& code : z1)
        if (b1.count(scaled(code, pk))) ++cnt;
      torsion.push_back(cnt / static_cast<std::int64_t>(b1.size()));
    }
    // r_k = number of cyclic factors of order >= p^k
    std::vector<int> ranks;
    for (std::size_t kk = 1; kk < torsion.size(); ++kk) {
      int rk = 0;
      for (std::int64_t q = torsion[kk] / torsion[kk - 1]; q > 1; q /= p) ++rk;
      ranks.push_back(rk);
    }
    std::vector<int> v;
    for (std::size_t kk = 0; kk < ranks.size(); ++kk) {
      int next = kk + 1 < ranks.size() ? ranks[kk + 1] : 0;
      for (int c = 0; c < ranks[kk] - next; ++c) v.push_back(static_cast<int>(kk + 1));
    }
    exps[p] = v;
  }
  return H1Result{assemble_factors(exps), {}, nullptr};
}

AbelianGroupValue h0(const ModulePtr& a) {
  const auto& d = a->orders();
  const std::size_t k = a->rank();
  const std::int64_t e = a->exponent();
  auto gens = generating_set(*a->group());
  Mat w(gens.size() * k, k);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto& rho = a->action(gens[j]);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < k; ++c)
        w.at(j * k + i, c) = zmod::mod(rho.at(i, c) - (i == c ? 1 : 0), d[i]) * (e / d[i]);
  }
  std::vector<Vec> rels;
  for (std::size_t c = 0; c < k; ++c)
    if (d[c] < e) {
      Vec x(k, 0);
      x[c] = d[c];
      rels.push_back(std::move(x));
    }
  zmod::Subquotient sq(e, k, w, rels);
  AbelianGroupValue out{sq.factors(), {}};
  for (std::size_t i = 0; i < sq.factors().size(); ++i) out.basis.push_back(a->reduce(sq.generator(i)));
  return out;
}

AbelianGroupValue h2(const ModulePtr& a, const H2Caps& caps) {
  const auto& g = *a->group();
  const auto& d = a->orders();
  const std::size_t n = g.order(), k = a->rank();
  const std::int64_t e = a->exponent();
  require(n <= caps.max_group, ErrorKind::CapExceeded, "group too large for H^2");
  require(a->cardinality() > 0 && a->cardinality() <= caps.max_module, ErrorKind::CapExceeded,
          "module too large for H^2");
  std::vector<std::int64_t> pos(n, -1);
  std::size_t m = 0;
  for (Element x = 0; x < n; ++x)
    if (x != g.identity()) pos[x] = static_cast<std::int64_t>(m++);
  const std::size_t unknowns = m * m * k;
  auto var = [&](Element x, Element y, std::size_t c) {
    return (static_cast<std::size_t>(pos[x]) * m + static_cast<std::size_t>(pos[y])) * k + c;
  };
  const Element id = g.identity();

  // cocycle identity: x f(y,z) - f(xy,z) + f(x,yz) - f(x,y) = 0
  zmod::RowSpan span(e, unknowns);
  for (Element x = 0; x < n; ++x) {
    if (x == id) continue;
    const auto& rho = a->action(x);
    for (Element y = 0; y < n; ++y) {
      if (y == id) continue;
      for (Element z = 0; z < n; ++z) {
        if (z == id) continue;
        for (std::size_t i = 0; i < k; ++i) {
          Vec row(unknowns, 0);
          const std::int64_t s = e / d[i];
          for (std::size_t c = 0; c < k; ++c) row[var(y, z, c)] += rho.at(i, c) * s;
          if (g.mul(x, y) != id) row[var(g.mul(x, y), z, i)] -= s;
          if (g.mul(y, z) != id) row[var(x, g.mul(y, z), i)] += s;
          row[var(x, y, i)] -= s;
          span.add(std::move(row));
        }
      }
    }
  }
  // coboundaries of normalized 1-cochains: (dc)(x,y) = x c(y) - c(xy) + c(x)
  std::vector<Vec> rels;
  for (Element t = 0; t < n; ++t) {
    if (t == id) continue;
    for (std::size_t c = 0; c < k; ++c) {
      Vec r(unknowns, 0);
      for (Element x = 0; x < n; ++x) {
        if (x == id) continue;
        const auto& rho = a->action(x);
        for (std::size_t i = 0; i < k; ++i) r[var(x, t, i)] += rho.at(i, c);
        for (Element y = 0; y < n; ++y) {
          if (y == id) continue;
          if (g.mul(x, y) == t) r[var(x, y, c)] -= 1;
        }
        if (x == t)
          for (Element y = 0; y < n; ++y)
            if (y != id) r[var(x, y, c)] += 1;
      }
      for (std::size_t u = 0; u < unknowns; ++u) r[u] = zmod::mod(r[u], d[u % k]);
      rels.push_back(std::move(r));
    }
  }
  for (std::size_t u = 0; u < unknowns; ++u)
    if (d[u % k] < e) {
      Vec r(unknowns, 0);
      r[u] = d[u % k];
      rels.push_back(std::move(r));
    }
  zmod::Subquotient sq(e, unknowns, span.matrix(), rels);
  AbelianGroupValue out{sq.factors(), {}};
  for (std::size_t i = 0; i < sq.factors().size(); ++i) out.basis.push_back(sq.generator(i));
  return out;
}

Cocycle restrict_cocycle(const Cocycle& f, const RestrictedModule& target) {
  require(f.values.size() == target.embedding.from_parent.size(), ErrorKind::NotSubgroup,
          "restriction target is not a subgroup of the cocycle's group");
  Cocycle out{target.module, {}};
  for (Element h : target.embedding.to_parent) out.values.push_back(f.values[h]);
  return out;
}

Cocycle corestrict_cocycle(const Cocycle& f, const RestrictedModule& source, const ModulePtr& a) {
  const auto& g = *a->group();
  const auto& emb = source.embedding;
  require(emb.from_parent.size() == g.order(), ErrorKind::NotSubgroup, "subgroup is not in the module's group");
  require(f.values.size() == emb.to_parent.size(), ErrorKind::InvalidInput, "cocycle is not on the subgroup");
  Subgroup h(a->group(), emb.to_parent);
  auto reps = left_coset_representatives(h);
  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t j = 0; j < reps.size(); ++j)
    for (Element m : h.members()) coset_of[g.mul(reps[j], m)] = j;
  Cocycle out = zero_cocycle(a);
  for (Element x = 0; x < g.order(); ++x)
    for (Element t : reps) {
      Element y = g.mul(x, t);
      Element tj = reps[coset_of[y]];
      Element hh = g.mul(g.inv(tj), y);
      out.values[x] = a->add(out.values[x], a->apply(tj, f.values[static_cast<std::size_t>(emb.from_parent[hh])]));
    }
  return out;
}

Cocycle inflate_cocycle(const Cocycle& f, const QuotientMap& q, const ModulePtr& a) {
  require(q.source == a->group(), ErrorKind::InvalidInput, "quotient map is not on the module's group");
  require(f.values.size() == q.target->order(), ErrorKind::InvalidInput, "cocycle is not on the quotient");
  require(q.kernel.is_subset_of(a->action_kernel()), ErrorKind::InvalidInput,
          "module does not descend: the kernel acts nontrivially");
  Cocycle out{a, {}};
  for (Element x = 0; x < a->group()->order(); ++x) out.values.push_back(f.values[q.projection[x]]);
  return out;
}

namespace {

LocalFamily cyclic_family(const GroupPtr& g, const std::vector<Element>& elems) {
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> subs;
  for (Element x : elems) {
    auto c = cyclic_subgroup(g, x);
    if (seen.insert(c.members()).second) subs.push_back(std::move(c));
  }
  std::sort(subs.begin(), subs.end(), subgroup_less);
  LocalFamily out{g, {}};
  for (auto& s : subs) out.members.emplace_back(std::move(s), 1);
  return out;
}

}  // namespace

LocalFamily LocalFamily::cyclic_from_classes(const ClassSet& t) { return cyclic_family(t.ambient(), t.elements()); }

LocalFamily LocalFamily::cyclic_from_classes_in(const ClassSet& t, const Subgroup& layer) {
  require(layer.parent() == t.ambient(), ErrorKind::InvalidInput, "layer is not in the class set's group");
  std::vector<Element> elems;
  for (Element x : t.elements())
    if (layer.contains(x)) elems.push_back(x);
  return cyclic_family(t.ambient(), elems);
}

LocalFamily LocalFamily::all_cyclic(const GroupPtr& g) {
  LocalFamily out{g, {}};
  for (auto& s : subgroups(g, SubgroupFilter::cyclic())) out.members.emplace_back(std::move(s), 1);
  return out;
}

LocalAnalyzer::LocalAnalyzer(ModulePtr a) : a_(std::move(a)), global_(h1_space(a_)) {}

const LocalAnalyzer::Block& LocalAnalyzer::block(const Subgroup& h) const {
  require(h.parent() == a_->group(), ErrorKind::NotSubgroup, "subgroup is not in the module's group");
  {
    std::lock_guard lock(mu_);
    auto it = blocks_.find(h.members());
    if (it != blocks_.end()) return *it->second;
  }
  auto rm = restrict_module(a_, h);
  auto b = std::make_shared<Block>();
  b->local = h1_space(rm.module);
  b->phi = Mat(b->local->dimension(), global_->dimension());
  for (std::size_t i = 0; i < global_->dimension(); ++i) {
    auto c = b->local->coords(restrict_cocycle(global_->generator(i), RestrictedModule{rm.embedding, b->local->module()}));
    for (std::size_t l = 0; l < c.size(); ++l) b->phi.at(l, i) = c[l];
  }
  std::lock_guard lock(mu_);
  auto [it, inserted] = blocks_.emplace(h.members(), std::move(b));
  return *it->second;
}

const zmod::Mat& LocalAnalyzer::restriction_matrix(const Subgroup& h) const { return block(h).phi; }

const std::vector<std::int64_t>& LocalAnalyzer::local_factors(const Subgroup& h) const {
  return block(h).local->factors();
}

H1Result LocalAnalyzer::sha1(const LocalFamily& t) const {
  require(t.ambient == a_->group(), ErrorKind::InvalidInput, "local family is over a different group");
  const std::size_t m = global_->dimension();
  const std::int64_t e = a_->exponent();
  const auto& h = global_->factors();
  std::vector<Vec> rows;
  for (const auto& [sub, mult] : t.members) {
    const auto& b = block(sub);
    const auto& hl = b.local->factors();
    for (std::size_t l = 0; l < hl.size(); ++l) {
      Vec row(m);
      for (std::size_t i = 0; i < m; ++i) row[i] = b.phi.at(l, i) * (e / hl[l]);
      rows.push_back(std::move(row));
    }
  }
  Mat w(rows.size(), m);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t i = 0; i < m; ++i) w.at(r, i) = rows[r][i];
  std::vector<Vec> rels;
  for (std::size_t i = 0; i < m; ++i)
    if (h[i] < e) {
      Vec x(m, 0);
      x[i] = h[i];
      rels.push_back(std::move(x));
    }
  zmod::Subquotient sq(e, m, w, rels);
  H1Result out{sq.factors(), {}, global_};
  for (std::size_t i = 0; i < sq.factors().size(); ++i) out.generators.push_back(global_->combine(sq.generator(i)));
  return out;
}

AbelianGroupValue LocalAnalyzer::coker1(const LocalFamily& t) const {
  require(t.ambient == a_->group(), ErrorKind::InvalidInput, "local family is over a different group");
  const std::size_t m = global_->dimension();
  const std::int64_t e = a_->exponent();
  std::vector<const Block*> parts;
  std::vector<std::int64_t> target;
  for (const auto& [sub, mult] : t.members) {
    const auto& b = block(sub);
    for (std::size_t c = 0; c < mult; ++c) {
      parts.push_back(&b);
      target.insert(target.end(), b.local->factors().begin(), b.local->factors().end());
    }
  }
  const std::size_t dim = target.size();
  std::vector<Vec> rels;
  for (std::size_t i = 0; i < m; ++i) {
    Vec col;
    for (const auto* b : parts)
      for (std::size_t l = 0; l < b->phi.rows; ++l) col.push_back(b->phi.at(l, i));
    rels.push_back(std::move(col));
  }
  for (std::size_t l = 0; l < dim; ++l) {
    Vec x(dim, 0);
    x[l] = target[l] % e;
    rels.push_back(std::move(x));
  }
  zmod::Subquotient sq(e, dim, Mat(0, dim), rels);
  AbelianGroupValue out{sq.factors(), {}};
  for (std::size_t i = 0; i < sq.factors().size(); ++i) {
    Vec g = sq.generator(i);
    for (std::size_t l = 0; l < dim; ++l) g[l] %= target[l];
    out.basis.push_back(std::move(g));
  }
  return out;
}

H1Result sha1(const ModulePtr& a, const LocalFamily& t) { return LocalAnalyzer(a).sha1(t); }

H1Result h1_star(const ModulePtr& a) { return LocalAnalyzer(a).sha1(LocalFamily::all_cyclic(a->group())); }

AbelianGroupValue coker1(const ModulePtr& a, const LocalFamily& t) { return LocalAnalyzer(a).coker1(t); }

bool within_span(const std::vector<std::int64_t>& factors, const std::vector<Vec>& span, const std::vector<Vec>& vs) {
  std::int64_t e = 1;
  for (auto f : factors) e = zmod::lcm(e, f);
  const std::size_t m = factors.size();
  std::vector<Vec> rels = span;
  for (std::size_t i = 0; i < m; ++i) {
    Vec x(m, 0);
    x[i] = factors[i] % e;
    rels.push_back(std::move(x));
  }
  zmod::Subquotient sq(e, m, Mat(0, m), rels);
  for (const auto& v : vs)
    if (!sq.is_zero(v)) return false;
  return true;
}

}  // namespace stablelab
