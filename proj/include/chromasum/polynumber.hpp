#pragma once

/**
 * @file polynumber.hpp
 * @brief Dense polynumbers in alpha (1-D) and in alpha, beta (2-D).
 *
 * The coefficient ring is a template parameter with two intended
 * instantiations: Rational and FieldElement. Every polynumber keeps an
 * exemplar zero of its ring so that field-valued polynumbers know their
 * field even when they are zero. Canonical form carries no trailing zeros.
 */

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chromasum/arith.hpp"
#include "chromasum/error.hpp"
#include "chromasum/finite_field.hpp"
#include "chromasum/plane.hpp"

namespace chromasum {

inline bool same_ring(const Rational&, const Rational&) noexcept { return true; }
inline Rational ring_one_like(const Rational&) { return Rational(1); }
inline FieldElement ring_one_like(const FieldElement& z) { return FieldElement::one(z.field()); }

template <typename R>
concept CoefficientRing = std::copyable<R> && requires(R a, const R& b) {
  { a += b } -> std::same_as<R&>;
  { a -= b } -> std::same_as<R&>;
  { b * b } -> std::same_as<R>;
  { -b } -> std::same_as<R>;
  { b.is_zero() } -> std::same_as<bool>;
  { same_ring(b, b) } -> std::same_as<bool>;
  { ring_one_like(b) } -> std::same_as<R>;
};

namespace detail {

template <CoefficientRing R>
std::vector<R> convolve(const std::vector<R>& a, const std::vector<R>& b, const R& zero) {
  if (a.empty() || b.empty()) return {};
  std::vector<R> out(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

/// Rational convolution over a common denominator: integer products only,
/// one reduction per output coefficient.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b,
                               const Rational& zero);

}  // namespace detail

template <CoefficientRing R>
class Polynumber {
 public:
  Polynumber()
    requires std::default_initializable<R>
  = default;
  explicit Polynumber(R ring_zero) : zero_(std::move(ring_zero)) {}
  Polynumber(R ring_zero, std::vector<R> coeffs) : zero_(std::move(ring_zero)), coeffs_(std::move(coeffs)) {
    for (const R& c : coeffs_) require_ring(c);
    trim();
  }

  static Polynumber constant(const R& c) { return monomial(c, 0); }
  static Polynumber monomial(const R& c, std::size_t degree) {
    R zero = c;
    zero -= c;
    std::vector<R> coeffs(degree + 1, zero);
    coeffs[degree] = c;
    return Polynumber(zero, std::move(coeffs));
  }
  /// The polynumber alpha.
  static Polynumber alpha(const R& ring_zero) { return monomial(ring_one_like(ring_zero), 1); }

  const R& ring_zero() const noexcept { return zero_; }
  const std::vector<R>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynumber.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

  /// Coefficient of alpha^n; the ring zero beyond the degree.
  const R& coeff(std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : zero_; }

  Polynumber operator-() const {
    Polynumber out(zero_);
    out.coeffs_.reserve(coeffs_.size());
    for (const R& c : coeffs_) out.coeffs_.push_back(-c);
    return out;
  }

  Polynumber& operator+=(const Polynumber& rhs) {
    require_ring(rhs.zero_);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynumber& operator-=(const Polynumber& rhs) { return *this += -rhs; }
  Polynumber& operator*=(const Polynumber& rhs) {
    require_ring(rhs.zero_);
    coeffs_ = detail::convolve(coeffs_, rhs.coeffs_, zero_);
    trim();
    return *this;
  }
  Polynumber& operator*=(const R& scalar) {
    require_ring(scalar);
    for (R& c : coeffs_) c = c * scalar;
    trim();
    return *this;
  }

  friend Polynumber operator+(Polynumber a, const Polynumber& b) { return a += b; }
  friend Polynumber operator-(Polynumber a, const Polynumber& b) { return a -= b; }
  friend Polynumber operator*(Polynumber a, const Polynumber& b) { return a *= b; }
  friend Polynumber operator*(Polynumber a, const R& s) { return a *= s; }
  friend Polynumber operator*(const R& s, Polynumber a) { return a *= s; }

  Polynumber pow(std::uint64_t exponent) const {
    Polynumber result = constant(ring_one_like(zero_));
    Polynumber base = *this;
    while (exponent > 0) {
      if (exponent & 1) result *= base;
      exponent >>= 1;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  /// Horner evaluation at x, with 0^0 = 1.
  R evaluate(const R& x) const {
    require_ring(x);
    R acc = zero_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x;
      acc += *it;
    }
    return acc;
  }

  friend bool operator==(const Polynumber& a, const Polynumber& b) {
    return same_ring(a.zero_, b.zero_) && a.coeffs_ == b.coeffs_;
  }

  /// Drops trailing zeros. Idempotent.
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

 private:
  void require_ring(const R& other) const {
    if (!same_ring(zero_, other)) throw MathError(Errc::RingMismatch, "polynumber coefficient rings differ");
  }

  R zero_{};
  std::vector<R> coeffs_;
};

/// 2-polynumber: entry (i, j) is the coefficient of alpha^i beta^j, stored row-major.
template <CoefficientRing R>
class Polynumber2 {
 public:
  Polynumber2()
    requires std::default_initializable<R>
  = default;
  explicit Polynumber2(R ring_zero) : zero_(std::move(ring_zero)) {}
  /// grid[i][j] is the coefficient of alpha^i beta^j; ragged rows are padded.
  Polynumber2(R ring_zero, const std::vector<std::vector<R>>& grid) : zero_(std::move(ring_zero)) {
    std::size_t cols = 0;
    for (const auto& row : grid) cols = std::max(cols, row.size());
    resize(grid.size(), cols);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = 0; j < grid[i].size(); ++j) {
        require_ring(grid[i][j]);
        cell(i, j) = grid[i][j];
      }
    }
    trim();
  }

  static Polynumber2 monomial(const R& c, std::size_t i, std::size_t j) {
    R zero = c;
    zero -= c;
    Polynumber2 out(zero);
    out.set(i, j, c);
    return out;
  }
  static Polynumber2 constant(const R& c) { return monomial(c, 0, 0); }
  static Polynumber2 alpha(const R& ring_zero) { return monomial(ring_one_like(ring_zero), 1, 0); }
  static Polynumber2 beta(const R& ring_zero) { return monomial(ring_one_like(ring_zero), 0, 1); }

  /// a(alpha) * b(beta).
  static Polynumber2 outer(const Polynumber<R>& a, const Polynumber<R>& b) {
    Polynumber2 out(a.ring_zero());
    out.require_ring(b.ring_zero());
    if (a.is_zero() || b.is_zero()) return out;
    out.resize(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < out.rows_; ++i) {
      for (std::size_t j = 0; j < out.cols_; ++j) out.cell(i, j) = a.coeffs()[i] * b.coeffs()[j];
    }
    out.trim();
    return out;
  }
  static Polynumber2 from_alpha(const Polynumber<R>& a) {
    return outer(a, Polynumber<R>::constant(ring_one_like(a.ring_zero())));
  }
  static Polynumber2 from_beta(const Polynumber<R>& b) {
    return outer(Polynumber<R>::constant(ring_one_like(b.ring_zero())), b);
  }

  const R& ring_zero() const noexcept { return zero_; }
  /// 1 + alpha-degree, 0 for the zero polynumber.
  std::size_t rows() const noexcept { return rows_; }
  /// 1 + beta-degree, 0 for the zero polynumber.
  std::size_t cols() const noexcept { return cols_; }
  bool is_zero() const noexcept { return rows_ == 0; }

  const R& at(std::size_t i, std::size_t j) const noexcept {
    return (i < rows_ && j < cols_) ? data_[i * cols_ + j] : zero_;
  }
  void set(std::size_t i, std::size_t j, const R& value) {
    require_ring(value);
    if (i >= rows_ || j >= cols_) {
      if (value.is_zero()) return;
      resize(std::max(rows_, i + 1), std::max(cols_, j + 1));
    }
    cell(i, j) = value;
    if (value.is_zero()) trim();
  }

  /// Visits each nonzero entry as f(i, j, coeff).
  template <typename F>
  void for_each_term(F&& f) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const R& c = data_[i * cols_ + j];
        if (!c.is_zero()) f(i, j, c);
      }
    }
  }

  /// Row i as a polynumber in beta.
  Polynumber<R> row(std::size_t i) const {
    std::vector<R> coeffs;
    if (i < rows_) coeffs.assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    return Polynumber<R>(zero_, std::move(coeffs));
  }

  Polynumber2 operator-() const {
    Polynumber2 out = *this;
    for (R& c : out.data_) c = -c;
    return out;
  }

  Polynumber2& operator+=(const Polynumber2& rhs) {
    require_ring(rhs.zero_);
    resize(std::max(rows_, rhs.rows_), std::max(cols_, rhs.cols_));
    for (std::size_t i = 0; i < rhs.rows_; ++i) {
      for (std::size_t j = 0; j < rhs.cols_; ++j) cell(i, j) += rhs.data_[i * rhs.cols_ + j];
    }
    trim();
    return *this;
  }
  Polynumber2& operator-=(const Polynumber2& rhs) { return *this += -rhs; }

  /// Two-dimensional Cauchy product.
  friend Polynumber2 operator*(const Polynumber2& a, const Polynumber2& b) {
    a.require_ring(b.zero_);
    Polynumber2 out(a.zero_);
    if (a.is_zero() || b.is_zero()) return out;
    out.resize(a.rows_ + b.rows_ - 1, a.cols_ + b.cols_ - 1);
    for (std::size_t s = 0; s < a.rows_; ++s) {
      for (std::size_t t = 0; t < a.cols_; ++t) {
        const R& x = a.data_[s * a.cols_ + t];
        if (x.is_zero()) continue;
        for (std::size_t u = 0; u < b.rows_; ++u) {
          for (std::size_t v = 0; v < b.cols_; ++v) {
            const R& y = b.data_[u * b.cols_ + v];
            if (!y.is_zero()) out.cell(s + u, t + v) += x * y;
          }
        }
      }
    }
    out.trim();
    return out;
  }
  Polynumber2& operator*=(const Polynumber2& rhs) { return *this = *this * rhs; }
  Polynumber2& operator*=(const R& scalar) {
    require_ring(scalar);
    for (R& c : data_) c = c * scalar;
    trim();
    return *this;
  }

  friend Polynumber2 operator+(Polynumber2 a, const Polynumber2& b) { return a += b; }
  friend Polynumber2 operator-(Polynumber2 a, const Polynumber2& b) { return a -= b; }
  friend Polynumber2 operator*(Polynumber2 a, const R& s) { return a *= s; }
  friend Polynumber2 operator*(const R& s, Polynumber2 a) { return a *= s; }

  Polynumber2 pow(std::uint64_t exponent) const {
    Polynumber2 result = constant(ring_one_like(zero_));
    Polynumber2 base = *this;
    while (exponent > 0) {
      if (exponent & 1) result *= base;
      exponent >>= 1;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  /// Sum of coeff * x^i y^j, with 0^0 = 1.
  R evaluate(const R& x, const R& y) const {
    require_ring(x);
    require_ring(y);
    R acc = zero_;
    for (std::size_t i = rows_; i-- > 0;) {
      R row_value = zero_;
      for (std::size_t j = cols_; j-- > 0;) {
        row_value = row_value * y;
        row_value += data_[i * cols_ + j];
      }
      acc = acc * x;
      acc += row_value;
    }
    return acc;
  }

  friend bool operator==(const Polynumber2& a, const Polynumber2& b) {
    return same_ring(a.zero_, b.zero_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Drops all-zero trailing rows and columns. Idempotent.
  void trim() {
    std::size_t last_row = 0;
    std::size_t last_col = 0;
    bool any = false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!data_[i * cols_ + j].is_zero()) {
          any = true;
          last_row = std::max(last_row, i);
          last_col = std::max(last_col, j);
        }
      }
    }
    if (!any) {
      rows_ = cols_ = 0;
      data_.clear();
      return;
    }
    resize(last_row + 1, last_col + 1);
  }

 private:
  R& cell(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  void resize(std::size_t rows, std::size_t cols) {
    if (rows == rows_ && cols == cols_) return;
    std::vector<R> data(rows * cols, zero_);
    for (std::size_t i = 0; i < std::min(rows, rows_); ++i) {
      for (std::size_t j = 0; j < std::min(cols, cols_); ++j) data[i * cols + j] = std::move(data_[i * cols_ + j]);
    }
    data_ = std::move(data);
    rows_ = rows;
    cols_ = cols;
  }

  void require_ring(const R& other) const {
    if (!same_ring(zero_, other)) throw MathError(Errc::RingMismatch, "polynumber coefficient rings differ");
  }

  R zero_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

using RationalPolynumber = Polynumber<Rational>;
using FieldPolynumber2 = Polynumber2<FieldElement>;

template <CoefficientRing R>
Polynumber2<R> cauchy_mul(const Polynumber2<R>& a, const Polynumber2<R>& b) {
  return a * b;
}

template <CoefficientRing R>
const R& coefficient_at(const Polynumber<R>& pi, std::size_t n) noexcept {
  return pi.coeff(n);
}

/// Sum of [alpha^i] pi over the given indices; negative or out-of-range indices add zero.
template <CoefficientRing R>
R ladder_sum(const Polynumber<R>& pi, std::span<const std::int64_t> indices) {
  R acc = pi.ring_zero();
  for (std::int64_t i : indices) {
    if (i >= 0) acc += pi.coeff(static_cast<std::size_t>(i));
  }
  return acc;
}

struct CircularPolynumber {
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  /// ((1 + alpha)/2)^k ((1 - alpha)/2)^l.
  RationalPolynumber body;
};

CircularPolynumber circular_polynumber(std::uint64_t k, std::uint64_t l);

/// k_n^{(d)}(m) = sum_l (-1)^l C(m, l) C(d - m, n - l). Throws OutOfRange unless n, m <= d.
BigInt krawtchouk_value(std::uint64_t n, std::uint64_t d, std::uint64_t m);

/// (1 - alpha)^m (1 + alpha)^{d - m}, whose alpha^n coefficient is k_n^{(d)}(m).
RationalPolynumber krawtchouk_generating(std::uint64_t d, std::uint64_t m);

/// The evaluation map at one point.
FieldElement evaluate(const FieldPolynumber2& pi, const AffinePoint& point);

/// The principal-range polynumber whose evaluation is the indicator of point.
FieldPolynumber2 delta_polynumber(const AffinePoint& point);

/// Left action h.pi = pi(h11 alpha + h21 beta, h12 alpha + h22 beta).
FieldPolynumber2 substitute_linear(const FieldPolynumber2& pi, const Dihedron& h);

/// Exponent grid of pi with every coefficient mapped into F_q.
FieldPolynumber2 reduce_to_field(const Polynumber2<Rational>& pi, const FieldRef& field);

}  // namespace chromasum
