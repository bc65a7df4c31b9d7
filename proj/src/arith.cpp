#include "chromasum/arith.hpp"

#include <ostream>
#include <utility>

#include "chromasum/error.hpp"

namespace chromasum {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotOnCircle: return "NotOnCircle";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt bigint_from_decimal(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw MathError(Errc::ParseError, "empty integer literal");
  }
  BigInt result = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw MathError(Errc::ParseError, "bad integer literal '" + std::string(text) + "'");
    }
    result = result * 10 + (c - '0');
  }
  return negative ? BigInt(-result) : result;
}

BigInt binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) {
    return 0;
  }
  std::uint64_t kk = static_cast<std::uint64_t>(k);
  if (kk > n - kk) {
    kk = n - kk;
  }
  // After step i the accumulator holds C(n - kk + i, i), so each division is exact.
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    result *= (n - kk + i);
    result /= i;
  }
  return result;
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) {
    throw MathError(Errc::DivisionByZero, "rational with zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (num_.is_zero() || rhs.num_.is_zero()) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  // Cross-cancel first so the product is already in lowest terms.
  BigInt g1 = boost::multiprecision::gcd(num_, rhs.den_);
  BigInt g2 = boost::multiprecision::gcd(rhs.num_, den_);
  num_ = (num_ / g1) * (rhs.num_ / g2);
  den_ = (den_ / g2) * (rhs.den_ / g1);
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_.is_zero()) {
    throw MathError(Errc::DivisionByZero, "rational division by zero");
  }
  Rational inverse;
  inverse.num_ = rhs.den_;
  inverse.den_ = rhs.num_;
  if (inverse.den_.sign() < 0) {
    inverse.num_ = -inverse.num_;
    inverse.den_ = -inverse.den_;
  }
  return *this *= inverse;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(std::uint64_t exponent) const {
  Rational r;
  r.num_ = boost::multiprecision::pow(num_, static_cast<unsigned>(exponent));
  r.den_ = boost::multiprecision::pow(den_, static_cast<unsigned>(exponent));
  return r;
}

std::string Rational::to_string() const {
  if (den_ == 1) {
    return num_.str();
  }
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(bigint_from_decimal(text));
  }
  return Rational(bigint_from_decimal(text.substr(0, slash)),
                  bigint_from_decimal(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

std::uint64_t bigint_mod(const BigInt& value, std::uint64_t m) {
  BigInt r = value % m;
  if (r.sign() < 0) {
    r += m;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m);
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    std::int64_t quotient = old_r / r;
    std::int64_t tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw MathError(Errc::DivisionByZero, "no inverse of " + std::to_string(a) + " mod " +
                                              std::to_string(m));
  }
  std::int64_t mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::uint64_t rational_reduce_mod_p(const Rational& x, std::uint64_t p) {
  std::uint64_t den = bigint_mod(x.denominator(), p);
  if (den == 0) {
    throw MathError(Errc::DenominatorDivisibleByP,
                    x.to_string() + " has a denominator divisible by " + std::to_string(p));
  }
  std::uint64_t num = bigint_mod(x.numerator(), p);
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(num) * mod_inverse(den, p)) % p);
}

}  // namespace chromasum
