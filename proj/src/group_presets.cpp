#include <algorithm>
#include <map>
#include <numeric>

#include "stablelab/error.hpp"
#include "stablelab/group.hpp"

namespace stablelab {

namespace {

using Perm = std::vector<std::size_t>;

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// (p*q)(x) = p(q(x)): apply q first.
Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

bool is_even(const Perm& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

GroupPtr group_from_perm_list(const std::vector<Perm>& elems, std::string name) {
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> table(elems.size(), std::vector<Element>(elems.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels.push_back(cycle_notation(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j) {
      auto it = index.find(compose(elems[i], elems[j]));
      require(it != index.end(), ErrorKind::InvalidInput, "permutation list is not closed");
      table[i][j] = it->second;
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels), std::move(name));
}

std::vector<Perm> all_perms(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_size(const std::string& s, const std::string& whole) {
  require(!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }),
          ErrorKind::UnknownName, "unknown preset '" + whole + "'");
  return std::stoul(s);
}

GroupPtr make_factor(const std::string& name) {
  if (name == "1") return cyclic_group(1);
  if (name == "Q8") return quaternion_group();
  if (name.rfind("Z/", 0) == 0) {
    auto n = parse_size(name.substr(2), name);
    require(n >= 1, ErrorKind::UnknownName, "unknown preset '" + name + "'");
    return cyclic_group(n);
  }
  if (name.rfind("(Z/", 0) == 0 && name.size() > 5 && name.substr(name.size() - 2) == ")*") {
    auto n = parse_size(name.substr(3, name.size() - 5), name);
    require(n >= 2, ErrorKind::UnknownName, "unknown preset '" + name + "'");
    return unit_group(n);
  }
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'A' || name[0] == 'D')) {
    auto n = parse_size(name.substr(1), name);
    if (name[0] == 'S') {
      require(n >= 1 && n <= 5, ErrorKind::UnknownName, "symmetric preset degree must be 1..5: '" + name + "'");
      return symmetric_group(n);
    }
    if (name[0] == 'A') {
      require(n >= 1 && n <= 5, ErrorKind::UnknownName, "alternating preset degree must be 1..5: '" + name + "'");
      return alternating_group(n);
    }
    require(n >= 2, ErrorKind::UnknownName, "dihedral preset needs n >= 2: '" + name + "'");
    return dihedral_group(n);
  }
  fail(ErrorKind::UnknownName, "unknown preset '" + name + "'");
}

}  // namespace

GroupPtr cyclic_group(std::size_t n) {
  require(n >= 1, ErrorKind::InvalidInput, "cyclic group order must be positive");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_table(std::move(t), {}, "Z/" + std::to_string(n));
}

GroupPtr unit_group(std::size_t n) {
  require(n >= 2, ErrorKind::InvalidInput, "unit group modulus must be >= 2");
  std::vector<std::size_t> units;
  for (std::size_t r = 1; r < n; ++r)
    if (std::gcd(r, n) == 1) units.push_back(r);
  if (n == 2) units = {1};
  std::map<std::size_t, Element> idx;
  for (std::size_t i = 0; i < units.size(); ++i) idx[units[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> t(units.size(), std::vector<Element>(units.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < units.size(); ++i) {
    labels.push_back(std::to_string(units[i]));
    for (std::size_t j = 0; j < units.size(); ++j) t[i][j] = idx.at(units[i] * units[j] % n);
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels), "(Z/" + std::to_string(n) + ")*");
}

GroupPtr symmetric_group(std::size_t degree) {
  return group_from_perm_list(all_perms(degree), "S" + std::to_string(degree));
}

GroupPtr alternating_group(std::size_t degree) {
  std::vector<Perm> even;
  for (auto& p : all_perms(degree))
    if (is_even(p)) even.push_back(p);
  return group_from_perm_list(even, "A" + std::to_string(degree));
}

GroupPtr dihedral_group(std::size_t n) {
  // element r^k s^b has index k + n*b; r^k s^b * r^l s^c = r^(k + (-1)^b l) s^(b+c)
  const std::size_t m = 2 * n;
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  std::vector<std::string> labels(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::size_t k = x % n, b = x / n;
    labels[x] = (k == 0 ? std::string(b ? "" : "e") : "r^" + std::to_string(k)) + (b ? (k ? " s" : "s") : "");
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t l = y % n, c = y / n;
      std::size_t kk = b ? (k + n - l) % n : (k + l) % n;
      t[x][y] = static_cast<Element>(kk + n * ((b + c) % 2));
    }
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels), "D" + std::to_string(n));
}

GroupPtr quaternion_group() {
  // basis units 1,i,j,k with sign; index = 2*unit + (negative ? 1 : 0)
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
  std::vector<std::string> labels(8);
  for (int x = 0; x < 8; ++x) {
    labels[x] = (x % 2 ? "-" : "") + std::string(names[x / 2]);
    for (int y = 0; y < 8; ++y) {
      int u = unit_mul[x / 2][y / 2];
      int s = sign_mul[x / 2][y / 2] * (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
      t[x][y] = static_cast<Element>(2 * u + (s < 0 ? 1 : 0));
    }
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels), "Q8");
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + a->label(static_cast<Element>(x / nb)) + "," + b->label(static_cast<Element>(x % nb)) + ")";
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = static_cast<Element>(a->mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
                                     b->mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
  }
  std::string name = (a->name().empty() || b->name().empty()) ? std::string{} : a->name() + " x " + b->name();
  return FiniteGroup::from_table(std::move(t), std::move(labels), std::move(name));
}

GroupPtr group_from_permutations(std::size_t degree, const std::vector<std::vector<std::size_t>>& gens,
                                 std::string name) {
  require(degree >= 1, ErrorKind::InvalidInput, "permutation degree must be positive");
  for (const auto& g : gens) {
    require(g.size() == degree, ErrorKind::InvalidInput, "generator length does not match degree");
    std::vector<bool> seen(degree, false);
    for (auto v : g) {
      require(v < degree && !seen[v], ErrorKind::InvalidInput, "generator is not a permutation");
      seen[v] = true;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::vector<Perm> elems{id};
  std::map<Perm, bool> seen{{id, true}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm p = compose(elems[i], g);
      if (seen.emplace(p, true).second) elems.push_back(p);
    }
  return group_from_perm_list(elems, std::move(name));
}

GroupPtr make_preset(std::string_view name) {
  std::string s(name);
  std::vector<std::string> factors;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(" x ", pos);
    factors.push_back(trim(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  GroupPtr g = make_factor(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, make_factor(factors[i]));
  return g;
}

std::vector<std::string> preset_catalog(std::size_t max_order) {
  std::vector<std::string> names;
  for (std::size_t n = 1; n <= 24; ++n) names.push_back("Z/" + std::to_string(n));
  for (const char* s : {"S3", "S4", "A4", "Q8", "(Z/7)*", "(Z/8)*", "(Z/15)*", "(Z/21)*", "(Z/24)*",
                        "Z/2 x Z/2", "Z/2 x Z/2 x Z/2", "Z/2 x Z/2 x Z/2 x Z/2", "Z/2 x Z/4", "Z/2 x Z/6",
                        "Z/2 x Z/8", "Z/4 x Z/4", "Z/2 x Z/2 x Z/4", "Z/3 x Z/3", "Z/3 x Z/6", "Z/2 x Z/10",
                        "Z/2 x Z/12", "Z/2 x Z/2 x Z/6", "Z/2 x S3", "Z/3 x S3", "Z/4 x S3", "Z/2 x D4",
                        "Z/2 x Q8", "Z/2 x A4", "Z/2 x Z/2 x S3"})
    names.emplace_back(s);
  for (std::size_t n = 4; n <= 12; ++n) names.push_back("D" + std::to_string(n));

  std::vector<std::pair<std::size_t, std::string>> keyed;
  for (auto& nm : names) {
    auto g = make_preset(nm);
    if (g->order() <= max_order) keyed.emplace_back(g->order(), nm);
  }
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  std::vector<std::string> out;
  for (auto& [o, nm] : keyed) out.push_back(nm);
  return out;
}

}  // namespace stablelab
