#pragma once

// Linear representations of a Coxeter group on the span of its simple roots.
//
// A Cartan datum C with C[s][s] = 2, C[s][t] <= 0, C[s][t]C[t][s] = 4cos^2(pi/m)
// for finite m and >= 4 for m = infinity acts faithfully by
//   s(alpha_t) = alpha_t - C[s][t] alpha_s,
// and every root is either positive or negative. Hence l(ws) > l(w) iff
// w(alpha_s) > 0, which is all the word problem needs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "coxwalls/core.hpp"
#include "coxwalls/errors.hpp"

namespace coxwalls::detail {

/// Thrown by the integer representation when a coordinate leaves int64.
struct Overflow {};

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<std::int64_t> {
  static std::int64_t sub_mul(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::int64_t prod = 0;
    std::int64_t out = 0;
    if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
    return out;
  }
  static std::int64_t add_mul(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::int64_t prod = 0;
    std::int64_t out = 0;
    if (__builtin_mul_overflow(b, c, &prod) || __builtin_add_overflow(a, prod, &out)) throw Overflow{};
    return out;
  }
  static std::int64_t negate(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return -a;
  }
  static bool near(std::int64_t a, std::int64_t b, double) { return a == b; }

  // Roots have all coordinates of one sign, so the first nonzero one decides.
  static int root_sign(std::span<const std::int64_t> v, double) {
    for (auto x : v) {
      if (x != 0) return x > 0 ? 1 : -1;
    }
    throw NumericError("zero vector where a root was expected");
  }
};

template <>
struct ScalarTraits<long double> {
  static long double sub_mul(long double a, long double b, long double c) { return a - b * c; }
  static long double add_mul(long double a, long double b, long double c) { return a + b * c; }
  static long double negate(long double a) { return -a; }
  static bool near(long double a, long double b, double tol) {
    return std::fabs(a - b) <= tol * std::max<long double>(1.0L, std::fabs(a) + std::fabs(b));
  }

  static int root_sign(std::span<const long double> v, double tol) {
    long double big = 0;
    for (auto x : v) big = std::max(big, std::fabs(x));
    if (big <= tol) throw NumericError("root coordinates vanished below tolerance");
    int sign = 0;
    for (auto x : v) {
      if (std::fabs(x) == big) {
        sign = x > 0 ? 1 : -1;
        break;
      }
    }
    const long double slack = tol * std::max<long double>(1.0L, big);
    for (auto x : v) {
      if ((sign > 0 && x < -slack) || (sign < 0 && x > slack)) {
        throw NumericError("root with mixed-sign coordinates; precision lost");
      }
    }
    return sign;
  }
};

template <class Scalar>
class Representation {
 public:
  using Traits = ScalarTraits<Scalar>;
  using Matrix = std::vector<Scalar>;  // row-major rank x rank; columns are images of simple roots
  using Vector = std::vector<Scalar>;

  Representation(std::size_t rank, std::vector<Scalar> cartan, double tolerance)
      : n_(rank), cartan_(std::move(cartan)), tol_(tolerance) {}

  std::size_t rank() const noexcept { return n_; }
  double tolerance() const noexcept { return tol_; }
  /// C[s][t] = <alpha_t, alpha_s^vee>.
  Scalar cartan(std::size_t s, std::size_t t) const { return cartan_[s * n_ + t]; }

  Matrix identity() const {
    Matrix m(n_ * n_, Scalar{0});
    for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = Scalar{1};
    return m;
  }

  /// M <- S_s M. Only row s changes.
  void left_multiply(Matrix& m, Letter s) const {
    for (std::size_t col = 0; col < n_; ++col) {
      Scalar acc = Traits::negate(m[s * n_ + col]);
      for (std::size_t t = 0; t < n_; ++t) {
        if (t == s) continue;
        const Scalar c = cartan(s, t);
        if (c != Scalar{0}) acc = Traits::sub_mul(acc, c, m[t * n_ + col]);
      }
      m[s * n_ + col] = acc;
    }
  }

  /// M <- M S_s. Column t gains -C[s][t] times column s; column s is negated.
  void right_multiply(Matrix& m, Letter s) const {
    for (std::size_t t = 0; t < n_; ++t) {
      if (t == s) continue;
      const Scalar c = cartan(s, t);
      if (c == Scalar{0}) continue;
      for (std::size_t row = 0; row < n_; ++row) {
        m[row * n_ + t] = Traits::sub_mul(m[row * n_ + t], c, m[row * n_ + s]);
      }
    }
    for (std::size_t row = 0; row < n_; ++row) m[row * n_ + s] = Traits::negate(m[row * n_ + s]);
  }

  /// Matrix of the element spelled by w.
  Matrix matrix_of(std::span<const Letter> w) const {
    Matrix m = identity();
    for (Letter s : w) right_multiply(m, s);
    return m;
  }

  /// Matrix of the inverse of the element spelled by w.
  Matrix inverse_matrix_of(std::span<const Letter> w) const {
    Matrix m = identity();
    for (Letter s : w) left_multiply(m, s);
    return m;
  }

  Matrix multiply(const Matrix& a, const Matrix& b) const {
    Matrix out(n_ * n_, Scalar{0});
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar x = a[i * n_ + k];
        if (x == Scalar{0}) continue;
        for (std::size_t j = 0; j < n_; ++j) out[i * n_ + j] = Traits::add_mul(out[i * n_ + j], x, b[k * n_ + j]);
      }
    }
    return out;
  }

  bool is_identity(const Matrix& m) const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!Traits::near(m[i * n_ + j], i == j ? Scalar{1} : Scalar{0}, tol_)) return false;
      }
    }
    return true;
  }

  Vector column(const Matrix& m, std::size_t col) const {
    Vector v(n_);
    for (std::size_t row = 0; row < n_; ++row) v[row] = m[row * n_ + col];
    return v;
  }

  Vector apply(const Matrix& m, const Vector& v) const {
    Vector out(n_, Scalar{0});
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (v[j] != Scalar{0}) out[i] = Traits::add_mul(out[i], m[i * n_ + j], v[j]);
      }
    }
    return out;
  }

  /// +1 for a positive root, -1 for a negative one.
  int sign(const Vector& v) const { return Traits::root_sign(v, tol_); }

  int column_sign(const Matrix& m, std::size_t col) const { return sign(column(m, col)); }

  /// ShortLex normal form of g, given the matrix of g^{-1}: repeatedly strip
  /// the smallest left descent s (the s with g^{-1}(alpha_s) < 0).
  Word peel(Matrix inv) const {
    Word out;
    for (;;) {
      bool found = false;
      for (std::size_t s = 0; s < n_; ++s) {
        if (column_sign(inv, s) < 0) {
          out.push_back(static_cast<Letter>(s));
          right_multiply(inv, static_cast<Letter>(s));
          found = true;
          break;
        }
      }
      if (!found) return out;
    }
  }

  Word normal_form(std::span<const Letter> w) const { return peel(inverse_matrix_of(w)); }

  /// l(g) for g with inverse matrix `inv`.
  std::size_t length_from_inverse(Matrix inv) const { return peel(std::move(inv)).size(); }

 private:
  std::size_t n_;
  std::vector<Scalar> cartan_;
  double tol_;
};

using ExactRepresentation = Representation<std::int64_t>;
using FloatRepresentation = Representation<long double>;

}  // namespace coxwalls::detail
