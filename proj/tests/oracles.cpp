#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

using Vec = std::vector<std::int64_t>;

struct Abelian {
  std::vector<std::int64_t> d;

  std::int64_t size() const {
    std::int64_t n = 1;
    for (auto x : d) n *= x;
    return n;
  }
  Vec decode(std::int64_t code) const {
    Vec v(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      v[i] = code % d[i];
      code /= d[i];
    }
    return v;
  }
  std::int64_t encode(const Vec& v) const {
    std::int64_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * d[i] + (((v[i] % d[i]) + d[i]) % d[i]);
    return code;
  }
  Vec add(const Vec& a, const Vec& b) const {
    Vec r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) r[i] = (a[i] + b[i]) % d[i];
    return r;
  }
  Vec neg(const Vec& a) const {
    Vec r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) r[i] = (d[i] - a[i]) % d[i];
    return r;
  }
  Vec scale(const Vec& a, std::int64_t k) const {
    Vec r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) r[i] = (a[i] * (k % d[i])) % d[i];
    return r;
  }
};

Vec act(const stablelab::GModule& a, Element g, const Vec& v) {
  const auto& m = a.action(g);
  const auto& d = a.orders();
  Vec r(d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < d.size(); ++j) s = (s + m.at(i, j) * v[j]) % d[i];
    r[i] = ((s % d[i]) + d[i]) % d[i];
  }
  return r;
}

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

// Invariant factors (ascending, each dividing the next) of K/I, where the
// sets hold codes of elements of the ambient group.
std::vector<std::int64_t> quotient_factors(const Abelian& amb, const std::set<std::int64_t>& k,
                                           const std::set<std::int64_t>& i) {
  if (k.size() % i.size() != 0) throw std::logic_error("I is not a subgroup of K");
  const auto order = static_cast<std::int64_t>(k.size() / i.size());
  std::map<std::int64_t, std::vector<int>> exps;  // p -> exponents, descending
  for (auto p : prime_factors(order)) {
    // counts[t] = #{q in K/I : p^t q = 0}
    std::vector<std::int64_t> counts{1};
    std::int64_t pt = 1;
    while (true) {
      pt *= p;
      std::int64_t killed = 0;
      for (auto x : k)
        if (i.count(amb.encode(amb.scale(amb.decode(x), pt)))) ++killed;
      const auto c = killed / static_cast<std::int64_t>(i.size());
      if (c == counts.back()) break;
      counts.push_back(c);
    }
    // number of cyclic factors of order >= p^t is log_p(counts[t] / counts[t-1])
    std::vector<int> at_least;
    for (std::size_t t = 1; t < counts.size(); ++t) {
      std::int64_t r = counts[t] / counts[t - 1];
      int e = 0;
      while (r > 1) {
        r /= p;
        ++e;
      }
      at_least.push_back(e);
    }
    std::vector<int> ex;
    for (int j = 0; j < (at_least.empty() ? 0 : at_least[0]); ++j) {
      int e = 0;
      for (auto c : at_least)
        if (c > j) ++e;
      ex.push_back(e);
    }
    exps[p] = ex;
  }
  std::size_t len = 0;
  for (const auto& [p, ex] : exps) len = std::max(len, ex.size());
  std::vector<std::int64_t> out(len, 1);
  for (const auto& [p, ex] : exps)
    for (std::size_t j = 0; j < ex.size(); ++j)
      for (int t = 0; t < ex[j]; ++t) out[len - 1 - j] *= p;
  return out;
}

}  // namespace

std::vector<std::int64_t> fixed_point_character(const stablelab::FiniteGroup& g, const std::vector<Element>& h) {
  const auto n = g.order();
  std::vector<bool> in_h(n, false);
  for (auto x : h) in_h[x] = true;
  // coset id of x: minimal element of xH
  std::vector<Element> coset(n);
  for (Element x = 0; x < n; ++x) {
    Element m = x;
    for (auto y : h) m = std::min(m, g.mul(x, y));
    coset[x] = m;
  }
  std::set<Element> reps(coset.begin(), coset.end());
  std::vector<std::int64_t> out(n, 0);
  for (Element s = 0; s < n; ++s)
    for (auto x : reps)
      if (coset[g.mul(s, x)] == x) ++out[s];
  return out;
}

std::vector<std::int64_t> centralizer_character(const stablelab::FiniteGroup& g, const std::vector<Element>& h) {
  const auto n = g.order();
  std::vector<std::int64_t> out(n, 0);
  std::set<Element> hs(h.begin(), h.end());
  for (Element s = 0; s < n; ++s) {
    std::int64_t cent = 0;
    std::set<Element> cls;
    for (Element x = 0; x < n; ++x) {
      if (g.mul(s, x) == g.mul(x, s)) ++cent;
      cls.insert(g.mul(g.mul(g.inv(x), s), x));
    }
    std::int64_t meet = 0;
    for (auto c : cls)
      if (hs.count(c)) ++meet;
    out[s] = cent * meet / static_cast<std::int64_t>(h.size());
  }
  return out;
}

std::vector<std::int64_t> herbrand_h1(const stablelab::ModulePtr& a, Element s) {
  const auto& g = *a->group();
  Abelian amb{a->orders()};
  std::set<std::int64_t> ker_n, img;
  for (std::int64_t c = 0; c < amb.size(); ++c) {
    auto v = amb.decode(c);
    Vec norm(v.size(), 0);
    for (Element x = 0; x < g.order(); ++x) norm = amb.add(norm, act(*a, x, v));
    if (amb.encode(norm) == 0) ker_n.insert(c);
    img.insert(amb.encode(amb.add(act(*a, s, v), amb.neg(v))));
  }
  return quotient_factors(amb, ker_n, img);
}

std::vector<std::int64_t> herbrand_h2(const stablelab::ModulePtr& a, Element s) {
  const auto& g = *a->group();
  Abelian amb{a->orders()};
  std::set<std::int64_t> fixed, norms;
  for (std::int64_t c = 0; c < amb.size(); ++c) {
    auto v = amb.decode(c);
    if (amb.encode(act(*a, s, v)) == c) fixed.insert(c);
    Vec norm(v.size(), 0);
    for (Element x = 0; x < g.order(); ++x) norm = amb.add(norm, act(*a, x, v));
    norms.insert(amb.encode(norm));
  }
  return quotient_factors(amb, fixed, norms);
}

std::int64_t h1_star_order(const stablelab::ModulePtr& a) {
  const auto& g = *a->group();
  const auto n = g.order();
  Abelian amb{a->orders()};
  const auto size = amb.size();

  // generators: add elements until the generated subgroup is everything
  std::vector<Element> gens;
  std::set<Element> span{g.identity()};
  for (Element x = 0; x < n && span.size() < n; ++x) {
    if (span.count(x)) continue;
    gens.push_back(x);
    std::vector<Element> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (auto y : frontier)
        for (auto t : gens) {
          auto z = g.mul(y, t);
          if (span.insert(z).second) next.push_back(z);
        }
      frontier = std::move(next);
    }
  }

  // (g - 1)A for every g
  std::vector<std::set<std::int64_t>> boundary(n);
  for (Element x = 0; x < n; ++x)
    for (std::int64_t c = 0; c < size; ++c) {
      auto v = amb.decode(c);
      boundary[x].insert(amb.encode(amb.add(act(*a, x, v), amb.neg(v))));
    }

  std::int64_t combos = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) combos *= size;
  std::int64_t star = 0;
  for (std::int64_t code = 0; code < combos; ++code) {
    std::vector<Vec> f(n);
    std::vector<bool> set(n, false);
    f[g.identity()] = Vec(amb.d.size(), 0);
    set[g.identity()] = true;
    std::int64_t rest = code;
    std::vector<Vec> gv;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      gv.push_back(amb.decode(rest % size));
      rest /= size;
    }
    // f(x t) = f(x) + x f(t)
    std::vector<Element> frontier{g.identity()};
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (auto x : frontier)
        for (std::size_t i = 0; i < gens.size(); ++i) {
          auto z = g.mul(x, gens[i]);
          if (set[z]) continue;
          f[z] = amb.add(f[x], act(*a, x, gv[i]));
          set[z] = true;
          next.push_back(z);
        }
      frontier = std::move(next);
    }
    bool cocycle = true;
    for (Element x = 0; x < n && cocycle; ++x)
      for (Element y = 0; y < n && cocycle; ++y)
        if (amb.encode(f[g.mul(x, y)]) != amb.encode(amb.add(f[x], act(*a, x, f[y])))) cocycle = false;
    if (!cocycle) continue;
    bool locally_trivial = true;
    for (Element x = 0; x < n && locally_trivial; ++x)
      if (!boundary[x].count(amb.encode(f[x]))) locally_trivial = false;
    if (locally_trivial) ++star;
  }

  std::int64_t fixed = 0;
  for (std::int64_t c = 0; c < size; ++c) {
    bool inv = true;
    for (Element x = 0; x < n && inv; ++x)
      if (amb.encode(act(*a, x, amb.decode(c))) != c) inv = false;
    if (inv) ++fixed;
  }
  const std::int64_t b1 = size / fixed;
  return star / b1;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t trial_division_pi(std::uint64_t x) {
  std::uint64_t c = 0;
  for (std::uint64_t n = 2; n <= x; ++n)
    if (is_prime(n)) ++c;
  return c;
}

}  // namespace oracle
