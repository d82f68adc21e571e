#include "stablelab/gmodule.hpp"

#include <cstdio>
#include <deque>

#include "stablelab/error.hpp"

namespace stablelab {

namespace {

using zmod::Mat;
using zmod::Vec;

Mat module_mul(const Mat& x, const Mat& y, const std::vector<std::int64_t>& d) {
  const std::size_t k = d.size();
  Mat out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      std::int64_t v = x.at(i, l);
      if (v == 0) continue;
      for (std::size_t j = 0; j < k; ++j) out.at(i, j) = (out.at(i, j) + v * y.at(l, j)) % d[i];
    }
  return out;
}

Mat module_identity(std::size_t k) { return Mat::identity(k); }

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  }
};

}  // namespace

ModulePtr GModule::build(GroupPtr group, std::vector<std::int64_t> orders,
                         const std::map<Element, zmod::Mat>& generator_action, std::string label) {
  require(group != nullptr, ErrorKind::InvalidInput, "module without group");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    require(orders[i] > 1, ErrorKind::InvalidInput, "module factor orders must exceed 1");
    require(orders[i] < (std::int64_t{1} << 31), ErrorKind::CapExceeded, "module factor order too large");
    if (i > 0)
      require(orders[i] % orders[i - 1] == 0, ErrorKind::InvalidInput,
              "module factor orders must form a divisibility chain");
  }
  const std::size_t k = orders.size();
  const auto& g = *group;
  auto m = std::shared_ptr<GModule>(new GModule());
  m->group_ = group;
  m->orders_ = orders;
  m->label_ = std::move(label);

  std::map<Element, Mat> gens;
  for (const auto& [s, mat] : generator_action) {
    require(s < g.order(), ErrorKind::InvalidInput, "action generator index out of range");
    require(mat.rows == k && mat.cols == k, ErrorKind::InvalidInput, "action matrix has the wrong shape");
    Mat r = mat;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        r.at(i, j) = zmod::mod(r.at(i, j), orders[i]);
        require(r.at(i, j) * orders[j] % orders[i] == 0, ErrorKind::InvalidInput,
                "action matrix is not well defined on the factor orders");
      }
    Mat pw = module_identity(k);
    for (std::size_t e = 0; e < g.element_order(s); ++e) pw = module_mul(pw, r, orders);
    require(pw.a == module_identity(k).a, ErrorKind::InvalidInput,
            "action matrix of generator " + g.label(s) + " is not invertible of compatible order");
    gens.emplace(s, std::move(r));
  }

  std::vector<Mat> act(g.order());
  std::vector<bool> seen(g.order(), false);
  act[g.identity()] = module_identity(k);
  seen[g.identity()] = true;
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& [s, r] : gens) {
      Element y = g.mul(x, s);
      Mat prod = module_mul(act[x], r, orders);
      if (!seen[y]) {
        seen[y] = true;
        act[y] = std::move(prod);
        queue.push_back(y);
      } else {
        require(act[y].a == prod.a, ErrorKind::InvalidInput, "action is incompatible with the multiplication table");
      }
    }
  }
  for (Element x = 0; x < g.order(); ++x)
    require(seen[x], ErrorKind::InvalidInput, "action generators do not generate the group");
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      require(module_mul(act[x], act[y], orders).a == act[g.mul(x, y)].a, ErrorKind::InvalidInput,
              "action is not a homomorphism");
  m->action_ = std::move(act);
  for (const auto& kv : gens) m->gens_.push_back(kv.first);
  m->finish();
  return m;
}

void GModule::finish() {
  Fnv f;
  const auto& g = *group_;
  f.add(g.order());
  for (Element x : g.table()) f.add(x);
  f.add(orders_.size());
  for (auto d : orders_) f.add(static_cast<std::uint64_t>(d));
  for (const auto& m : action_)
    for (auto v : m.a) f.add(static_cast<std::uint64_t>(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(f.h));
  fingerprint_ = buf;
  card_ = 1;
  for (auto d : orders_) {
    if (card_ > (std::int64_t{1} << 62) / d) {
      card_ = 0;
      break;
    }
    card_ *= d;
  }
  if (label_.empty()) {
    label_ = "A[";
    for (std::size_t i = 0; i < orders_.size(); ++i) label_ += (i ? "," : "") + std::to_string(orders_[i]);
    label_ += "]";
  }
}

ModulePtr GModule::trivial(GroupPtr group, std::vector<std::int64_t> orders) {
  std::map<Element, Mat> gens;
  for (Element s : generating_set(*group)) gens.emplace(s, Mat::identity(orders.size()));
  std::string label = "trivial[";
  for (std::size_t i = 0; i < orders.size(); ++i) label += (i ? "," : "") + std::to_string(orders[i]);
  return build(std::move(group), std::move(orders), gens, label + "]");
}

ModulePtr GModule::scalar(GroupPtr group, std::int64_t n, const std::vector<std::int64_t>& chi) {
  require(chi.size() == group->order(), ErrorKind::InvalidInput, "character needs one value per element");
  std::map<Element, Mat> gens;
  std::string label = "Z/" + std::to_string(n) + "(";
  for (Element s : generating_set(*group)) {
    Mat m(1, 1);
    m.at(0, 0) = zmod::mod(chi[s], n);
    gens.emplace(s, m);
  }
  for (std::size_t i = 0; i < chi.size(); ++i) label += (i ? "," : "") + std::to_string(zmod::mod(chi[i], n));
  auto a = build(group, {n}, gens, label + ")");
  for (Element x = 0; x < group->order(); ++x)
    require(a->action(x).at(0, 0) == zmod::mod(chi[x], n), ErrorKind::InvalidInput,
            "character is not a homomorphism");
  return a;
}

ModulePtr GModule::multiplication(std::int64_t n) {
  auto g = unit_group(static_cast<std::size_t>(n));
  std::vector<std::int64_t> chi;
  for (Element x = 0; x < g->order(); ++x) chi.push_back(std::stoll(g->label(x)));
  auto a = scalar(g, n, chi);
  auto m = std::shared_ptr<GModule>(new GModule(*a));
  m->label_ = "Z/" + std::to_string(n) + " mult";
  return m;
}

ModulePtr GModule::regular(GroupPtr group, std::int64_t p) {
  const std::size_t n = group->order();
  std::map<Element, Mat> gens;
  for (Element s : generating_set(*group)) {
    Mat m(n, n);
    for (Element x = 0; x < n; ++x) m.at(group->mul(s, x), x) = 1;
    gens.emplace(s, m);
  }
  return build(group, std::vector<std::int64_t>(n, p), gens, "Z/" + std::to_string(p) + "[G]");
}

Vec GModule::reduce(Vec v) const {
  require(v.size() == rank(), ErrorKind::InvalidInput, "vector has the wrong length for the module");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = zmod::mod(v[i], orders_[i]);
  return v;
}

Vec GModule::apply(Element g, const Vec& v) const {
  const auto& m = action_[g];
  Vec out(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < rank(); ++j) acc = (acc + m.at(i, j) * v[j]) % orders_[i];
    out[i] = acc;
  }
  return out;
}

Vec GModule::add(const Vec& a, const Vec& b) const {
  Vec out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = (a[i] + b[i]) % orders_[i];
  return out;
}

Vec GModule::sub(const Vec& a, const Vec& b) const {
  Vec out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = zmod::mod(a[i] - b[i], orders_[i]);
  return out;
}

bool GModule::is_zero(const Vec& v) const {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

std::int64_t GModule::encode(const Vec& v) const {
  std::int64_t code = 0;
  for (std::size_t i = rank(); i-- > 0;) code = code * orders_[i] + v[i];
  return code;
}

Vec GModule::decode(std::int64_t code) const {
  Vec v(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    v[i] = code % orders_[i];
    code /= orders_[i];
  }
  return v;
}

Subgroup GModule::action_kernel() const {
  std::vector<Element> mem;
  const auto id = module_identity(rank());
  for (Element x = 0; x < group_->order(); ++x)
    if (action_[x].a == id.a) mem.push_back(x);
  return Subgroup(group_, std::move(mem));
}

bool GModule::is_trivial_action() const { return action_kernel().is_whole(); }

std::map<Element, zmod::Mat> GModule::generator_action() const {
  std::map<Element, Mat> out;
  for (Element s : gens_) out.emplace(s, action_[s]);
  return out;
}

RestrictedModule restrict_module(const ModulePtr& a, const Subgroup& h) {
  require(h.parent() == a->group(), ErrorKind::NotSubgroup, "subgroup is not in the module's group");
  auto emb = as_group(h);
  std::map<Element, Mat> gens;
  for (Element s : generating_set(*emb.group)) gens.emplace(s, a->action(emb.to_parent[s]));
  auto m = GModule::build(emb.group, a->orders(), gens, a->label() + "|H");
  return RestrictedModule{std::move(emb), std::move(m)};
}

ModulePtr descend_module(const ModulePtr& a, const QuotientMap& q) {
  require(q.source == a->group(), ErrorKind::InvalidInput, "quotient map is not on the module's group");
  require(q.kernel.is_subset_of(a->action_kernel()), ErrorKind::InvalidInput,
          "module does not descend: the kernel acts nontrivially");
  std::map<Element, Mat> gens;
  for (Element s : generating_set(*q.target)) gens.emplace(s, a->action(q.section[s]));
  return GModule::build(q.target, a->orders(), gens, a->label() + "/N");
}

bool is_cocycle(const Cocycle& f) {
  const auto& a = *f.module;
  const auto& g = *a.group();
  if (f.values.size() != g.order()) return false;
  for (const auto& v : f.values) {
    if (v.size() != a.rank()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < 0 || v[i] >= a.orders()[i]) return false;
  }
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (f.values[g.mul(x, y)] != a.add(f.values[x], a.apply(x, f.values[y]))) return false;
  return true;
}

Cocycle zero_cocycle(const ModulePtr& a) {
  return Cocycle{a, std::vector<Vec>(a->group()->order(), a->zero())};
}

Cocycle coboundary(const ModulePtr& a, const Vec& x) {
  auto v = a->reduce(x);
  Cocycle f{a, {}};
  for (Element g = 0; g < a->group()->order(); ++g) f.values.push_back(a->sub(a->apply(g, v), v));
  return f;
}

Cocycle scaled_sum(const Cocycle& f, std::int64_t cf, const Cocycle& g, std::int64_t cg) {
  const auto& a = *f.module;
  Cocycle out{f.module, f.values};
  for (std::size_t x = 0; x < out.values.size(); ++x)
    for (std::size_t i = 0; i < a.rank(); ++i)
      out.values[x][i] = zmod::mod(cf * f.values[x][i] + cg * g.values[x][i], a.orders()[i]);
  return out;
}

}  // namespace stablelab
