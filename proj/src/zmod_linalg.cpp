#include "stablelab/zmod_linalg.hpp"

#include <numeric>
#include <utility>

#include "stablelab/error.hpp"

namespace stablelab::zmod {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Mat::column(std::size_t j) const {
  Vec v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  auto r = ext_gcd(mod(a, m), m);
  require(r.g == 1, ErrorKind::InvalidInput, "value is not a unit modulo " + std::to_string(m));
  return mod(r.s, m);
}

Vec mat_vec(const Mat& m, const Vec& v, std::int64_t e) {
  Vec out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < m.cols; ++j) acc = (acc + m.at(i, j) * mod(v[j], e)) % e;
    out[i] = acc;
  }
  return out;
}

Mat mat_mul(const Mat& x, const Mat& y, std::int64_t e) {
  Mat out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) = (out.at(i, j) + v * y.at(k, j)) % e;
    }
  return out;
}

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

// r_x <- al*r_x + be*r_y ; r_y <- ga*r_x + de*r_y
void rows_op(Mat& m, std::size_t x, std::size_t y, std::int64_t al, std::int64_t be, std::int64_t ga,
             std::int64_t de, std::int64_t e) {
  al = mod(al, e), be = mod(be, e), ga = mod(ga, e), de = mod(de, e);
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::int64_t u = m.at(x, j), v = m.at(y, j);
    m.at(x, j) = (al * u + be * v) % e;
    m.at(y, j) = (ga * u + de * v) % e;
  }
}

void cols_op(Mat& m, std::size_t x, std::size_t y, std::int64_t al, std::int64_t be, std::int64_t ga,
             std::int64_t de, std::int64_t e) {
  al = mod(al, e), be = mod(be, e), ga = mod(ga, e), de = mod(de, e);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::int64_t u = m.at(i, x), v = m.at(i, y);
    m.at(i, x) = (al * u + be * v) % e;
    m.at(i, y) = (ga * u + de * v) % e;
  }
}

void swap_rows(Mat& m, std::size_t x, std::size_t y) {
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(x, j), m.at(y, j));
}

void swap_cols(Mat& m, std::size_t x, std::size_t y) {
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, x), m.at(i, y));
}

void scale_row(Mat& m, std::size_t x, std::int64_t c, std::int64_t e) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(x, j) = m.at(x, j) * c % e;
}

void scale_col(Mat& m, std::size_t x, std::int64_t c, std::int64_t e) {
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, x) = m.at(i, x) * c % e;
}

// A unit u modulo e with u * gcd(p, e) = p (mod e).
std::int64_t unit_part(std::int64_t p, std::int64_t e) {
  std::int64_t g = gcd(p, e);
  std::int64_t c = p / g, step = e / g;
  for (std::int64_t u = c;; u += step)
    if (gcd(u, e) == 1) return mod(u, e);
}

struct SmithState {
  Mat a, p, p_inv, q, q_inv;
  std::int64_t e;
  bool rows, cols;

  // Eliminates a(i,k) against the pivot a(k,k) by a unimodular row operation.
  void row_step(std::size_t k, std::size_t i) {
    std::int64_t pa = a.at(k, k), pb = a.at(i, k);
    if (pb == 0) return;
    if (pa == 0) {
      swap_rows(a, k, i);
      if (rows) swap_rows(p, k, i), swap_cols(p_inv, k, i);
      return;
    }
    ExtGcd r = pb % pa == 0 ? ExtGcd{pa, 1, 0} : ext_gcd(pa, pb);
    rows_op(a, k, i, r.s, r.t, -(pb / r.g), pa / r.g, e);
    if (rows) {
      rows_op(p, k, i, r.s, r.t, -(pb / r.g), pa / r.g, e);
      cols_op(p_inv, k, i, pa / r.g, pb / r.g, -r.t, r.s, e);
    }
  }

  void col_step(std::size_t k, std::size_t j) {
    std::int64_t pa = a.at(k, k), pb = a.at(k, j);
    if (pb == 0) return;
    if (pa == 0) {
      swap_cols(a, k, j);
      if (cols) swap_cols(q, k, j), swap_rows(q_inv, k, j);
      return;
    }
    ExtGcd r = pb % pa == 0 ? ExtGcd{pa, 1, 0} : ext_gcd(pa, pb);
    cols_op(a, k, j, r.s, r.t, -(pb / r.g), pa / r.g, e);
    if (cols) {
      cols_op(q, k, j, r.s, r.t, -(pb / r.g), pa / r.g, e);
      rows_op(q_inv, k, j, pa / r.g, pb / r.g, -r.t, r.s, e);
    }
  }
};

}  // namespace

Smith smith_form(const Mat& m, std::int64_t e, bool track_rows, bool track_cols) {
  require(e >= 1 && e < kMaxModulus, ErrorKind::CapExceeded, "modulus outside supported range");
  SmithState st{m, {}, {}, {}, {}, e, track_rows, track_cols};
  for (auto& x : st.a.a) x = mod(x, e);
  const std::size_t R = m.rows, C = m.cols;
  if (track_rows) st.p = st.p_inv = Mat::identity(R);
  if (track_cols) st.q = st.q_inv = Mat::identity(C);
  if (e == 1) {
    for (auto* x : {&st.p, &st.p_inv, &st.q, &st.q_inv})
      for (auto& v : x->a) v = 0;
  }
  Vec diag(std::min(R, C), e);
  auto& a = st.a;
  for (std::size_t k = 0; k < std::min(R, C); ++k) {
    // pivot: entry of smallest gcd with e
    std::size_t bi = R, bj = C;
    std::int64_t best = e;
    for (std::size_t i = k; i < R && best > 1; ++i)
      for (std::size_t j = k; j < C; ++j) {
        std::int64_t x = a.at(i, j);
        if (x == 0) continue;
        std::int64_t g = gcd(x, e);
        if (g < best || bi == R) {
          best = g, bi = i, bj = j;
          if (g == 1) break;
        }
      }
    if (bi == R) break;
    if (bi != k) {
      swap_rows(a, k, bi);
      if (track_rows) swap_rows(st.p, k, bi), swap_cols(st.p_inv, k, bi);
    }
    if (bj != k) {
      swap_cols(a, k, bj);
      if (track_cols) swap_cols(st.q, k, bj), swap_rows(st.q_inv, k, bj);
    }
    for (;;) {
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = k + 1; i < R; ++i) st.row_step(k, i);
        for (std::size_t j = k + 1; j < C; ++j) st.col_step(k, j);
        for (std::size_t i = k + 1; i < R; ++i)
          if (a.at(i, k) != 0) dirty = true;
      }
      std::int64_t piv = a.at(k, k);
      std::int64_t g = gcd(piv, e);
      if (piv != g) {
        std::int64_t u = unit_part(piv, e), v = inverse_mod(u, e);
        scale_row(a, k, v, e);
        if (track_rows) scale_row(st.p, k, v, e), scale_col(st.p_inv, k, u, e);
      }
      std::size_t fi = R;
      for (std::size_t i = k + 1; i < R && fi == R; ++i)
        for (std::size_t j = k + 1; j < C; ++j)
          if (a.at(i, j) % g != 0) {
            fi = i;
            break;
          }
      if (fi == R) break;
      rows_op(a, k, fi, 1, 1, 0, 1, e);
      if (track_rows) rows_op(st.p, k, fi, 1, 1, 0, 1, e), cols_op(st.p_inv, k, fi, 1, 0, -1, 1, e);
    }
    diag[k] = gcd(a.at(k, k), e);
  }
  return Smith{std::move(st.p), std::move(st.p_inv), std::move(st.q), std::move(st.q_inv), std::move(diag)};
}

RowSpan::RowSpan(std::int64_t e, std::size_t n) : e_(e), n_(n), pivots_(n) {}

void RowSpan::add(Vec v) {
  for (auto& x : v) x = mod(x, e_);
  for (std::size_t c = 0; c < n_; ++c) {
    if (v[c] == 0) continue;
    auto& piv = pivots_[c];
    if (piv.empty()) {
      piv = std::move(v);
      return;
    }
    std::int64_t pa = piv[c], pb = v[c];
    ExtGcd r = pb % pa == 0 ? ExtGcd{pa, 1, 0} : ext_gcd(pa, pb);
    std::int64_t al = mod(r.s, e_), be = mod(r.t, e_), ga = mod(-(pb / r.g), e_), de = mod(pa / r.g, e_);
    for (std::size_t j = c; j < n_; ++j) {
      std::int64_t u = piv[j], w = v[j];
      piv[j] = (al * u + be * w) % e_;
      v[j] = (ga * u + de * w) % e_;
    }
  }
}

Mat RowSpan::matrix() const {
  Mat m(size(), n_);
  std::size_t r = 0;
  for (const auto& p : pivots_)
    if (!p.empty()) {
      for (std::size_t j = 0; j < n_; ++j) m.at(r, j) = p[j];
      ++r;
    }
  return m;
}

std::size_t RowSpan::size() const {
  std::size_t k = 0;
  for (const auto& p : pivots_) k += !p.empty();
  return k;
}

Subquotient::Subquotient(std::int64_t e, std::size_t n, const Mat& constraints, const std::vector<Vec>& relations)
    : e_(e), n_(n) {
  require(e >= 1, ErrorKind::InvalidInput, "modulus must be positive");
  require(constraints.cols == n || constraints.rows == 0, ErrorKind::InvalidInput, "constraint width mismatch");
  if (constraints.rows > 2 * n) {
    RowSpan span(e, n);
    for (std::size_t i = 0; i < constraints.rows; ++i) span.add(constraints.row(i));
    w_ = span.matrix();
  } else {
    w_ = constraints;
    w_.cols = n;
    for (auto& x : w_.a) x = mod(x, e);
  }
  t_.assign(n, 1);
  mod_z_.assign(n, e);
  if (w_.rows > 0) {
    auto s = smith_form(w_, e, false, true);
    q_ = std::move(s.q);
    q_inv_ = std::move(s.q_inv);
    for (std::size_t i = 0; i < s.diag.size(); ++i) {
      t_[i] = e / s.diag[i];
      mod_z_[i] = s.diag[i];
    }
  } else {
    q_ = q_inv_ = Mat::identity(n);
    if (e == 1) q_.a.assign(q_.a.size(), 0), q_inv_.a.assign(q_inv_.a.size(), 0);
  }
  // relations in z-coordinates plus the moduli of the z-coordinates
  Mat rel(n, relations.size() + n);
  std::size_t col = 0;
  for (const auto& r : relations) {
    require(r.size() == n, ErrorKind::InvalidInput, "relation width mismatch");
    require(contains(r), ErrorKind::InvalidInput, "relation violates the constraints");
    Vec y = mat_vec(q_inv_, r, e);
    for (std::size_t i = 0; i < n; ++i) rel.at(i, col) = (y[i] / t_[i]) % mod_z_[i];
    ++col;
  }
  for (std::size_t i = 0; i < n; ++i) rel.at(i, col++) = mod(mod_z_[i], e);
  auto s2 = smith_form(rel, e, true, false);
  p2_ = std::move(s2.p);
  p2_inv_ = std::move(s2.p_inv);
  h_ = std::move(s2.diag);
  for (std::size_t i = 0; i < n; ++i)
    if (h_[i] > 1) {
      live_.push_back(i);
      factors_.push_back(h_[i]);
    }
}

Vec Subquotient::generator(std::size_t i) const {
  const std::size_t c = live_.at(i);
  Vec y(n_);
  for (std::size_t j = 0; j < n_; ++j) y[j] = (p2_inv_.at(j, c) % mod_z_[j]) * t_[j] % e_;
  return mat_vec(q_, y, e_);
}

bool Subquotient::contains(const Vec& x) const {
  for (auto v : mat_vec(w_, x, e_))
    if (v != 0) return false;
  return true;
}

Vec Subquotient::coords(const Vec& x) const {
  require(x.size() == n_, ErrorKind::InvalidInput, "vector width mismatch");
  require(contains(x), ErrorKind::InvalidInput, "vector violates the constraints");
  Vec y = mat_vec(q_inv_, x, e_);
  Vec z(n_);
  for (std::size_t i = 0; i < n_; ++i) z[i] = (y[i] / t_[i]) % mod_z_[i];
  Vec w = mat_vec(p2_, z, e_);
  Vec out;
  for (std::size_t k = 0; k < live_.size(); ++k) out.push_back(w[live_[k]] % factors_[k]);
  return out;
}

bool Subquotient::is_zero(const Vec& x) const {
  for (auto c : coords(x))
    if (c != 0) return false;
  return true;
}

Vec Subquotient::combine(const Vec& coeffs) const {
  require(coeffs.size() == factors_.size(), ErrorKind::InvalidInput, "coefficient count mismatch");
  Vec x(n_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t c = mod(coeffs[i], e_);
    if (c == 0) continue;
    Vec g = generator(i);
    for (std::size_t j = 0; j < n_; ++j) x[j] = (x[j] + c * g[j]) % e_;
  }
  return x;
}

}  // namespace stablelab::zmod
