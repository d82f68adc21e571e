#pragma once

#include <cstdint>
#include <vector>

namespace stablelab::zmod {

using Vec = std::vector<std::int64_t>;

/// Dense row-major matrix with entries kept in [0, e) by the routines below.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static Mat identity(std::size_t n);

  std::int64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  Vec row(std::size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
  Vec column(std::size_t j) const;
};

std::int64_t mod(std::int64_t x, std::int64_t m);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

struct ExtGcd {
  std::int64_t g, s, t;  // s*a + t*b = g
};
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m; throws Error(InvalidInput) when a is not a unit.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

Vec mat_vec(const Mat& m, const Vec& v, std::int64_t e);
Mat mat_mul(const Mat& x, const Mat& y, std::int64_t e);

/// P * M * Q = diag(d_0, d_1, ...) over Z/e with each d_i a divisor of e
/// (e standing for zero) and d_0 | d_1 | ... . P and Q are invertible mod e.
struct Smith {
  Mat p, p_inv, q, q_inv;
  Vec diag;  // length min(rows, cols)
};
Smith smith_form(const Mat& m, std::int64_t e, bool track_rows, bool track_cols);

/// Incremental reduction of a row space over Z/e: keeps at most n rows
/// spanning the same submodule as everything added.
class RowSpan {
 public:
  RowSpan(std::int64_t e, std::size_t n);
  void add(Vec v);
  Mat matrix() const;
  std::size_t size() const;

 private:
  std::int64_t e_;
  std::size_t n_;
  std::vector<Vec> pivots_;  // indexed by leading column, empty when absent
};

/// The group {x in Z^n : W x = 0 mod e} / (span(relations) + e Z^n) with
/// explicit invariant factors, generators and coordinates.
class Subquotient {
 public:
  Subquotient(std::int64_t e, std::size_t n, const Mat& constraints, const std::vector<Vec>& relations);

  std::int64_t modulus() const noexcept { return e_; }
  std::size_t dimension() const noexcept { return n_; }
  /// Nontrivial invariant factors, each dividing the next.
  const Vec& factors() const noexcept { return factors_; }
  /// Representative in Z^n of the i-th generator.
  Vec generator(std::size_t i) const;
  bool contains(const Vec& x) const;
  /// Coordinates of x against the generators, entry i reduced mod factors()[i].
  /// Throws Error(InvalidInput) when x violates the constraints.
  Vec coords(const Vec& x) const;
  bool is_zero(const Vec& x) const;
  Vec combine(const Vec& coeffs) const;

 private:
  std::int64_t e_;
  std::size_t n_;
  Mat w_;
  Mat q_, q_inv_;
  Vec t_, mod_z_;
  Mat p2_, p2_inv_;
  Vec h_;
  std::vector<std::size_t> live_;
  Vec factors_;
};

}  // namespace stablelab::zmod
