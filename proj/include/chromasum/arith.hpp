#pragma once

/**
 * @file arith.hpp
 * @brief Exact integers and rationals.
 *
 * BigInt is Boost.Multiprecision's cpp_int. Rational is a reduced fraction
 * over BigInt with the sign carried by the numerator, so two rationals are
 * equal exactly when their numerators and denominators are.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromasum {

using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt& value);
BigInt bigint_from_decimal(std::string_view text);

/// C(n, k), zero when k < 0 or k > n.
BigInt binomial(std::uint64_t n, std::int64_t k);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const noexcept { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational pow(std::uint64_t exponent) const;

  /// "num/den", or just "num" when den = 1.
  std::string to_string() const;
  static Rational parse(std::string_view text);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Residue of x modulo p, i.e. numerator * denominator^{-1} mod p.
/// Throws MathError(DenominatorDivisibleByP) when p divides the denominator.
std::uint64_t rational_reduce_mod_p(const Rational& x, std::uint64_t p);

/// a^{-1} mod m via the extended Euclidean algorithm; gcd(a, m) must be 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

std::uint64_t bigint_mod(const BigInt& value, std::uint64_t m);

}  // namespace chromasum
