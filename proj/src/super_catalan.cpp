#include "chromasum/super_catalan.hpp"

#include <string>

#include "chromasum/error.hpp"
#include "chromasum/polynumber.hpp"

namespace chromasum {

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt super_catalan(std::uint64_t m, std::uint64_t n) {
  return factorial(2 * m) * factorial(2 * n) / (factorial(m) * factorial(n) * factorial(m + n));
}

Rational circular_super_catalan(std::uint64_t m, std::uint64_t n) {
  BigInt four_power = BigInt(1) << (2 * (m + n));
  return Rational(super_catalan(m, n), four_power);
}

bool gmt_identity_check(std::uint64_t m, std::uint64_t n) {
  const CircularPolynumber pi = circular_polynumber(2 * m, 2 * n);
  Rational rhs = coefficient_at(pi.body, m + n);
  if (n % 2 == 1) rhs = -rhs;
  return circular_super_catalan(m, n) == rhs;
}

void SuperCatalanTable::check(std::uint64_t m, std::uint64_t n) const {
  if (m > max_m_ || n > max_n_) {
    throw MathError(Errc::OutOfRange, "table cell (" + std::to_string(m) + "," + std::to_string(n) +
                                          ") outside the table");
  }
}

BigInt SuperCatalanTable::s(std::uint64_t m, std::uint64_t n) const {
  check(m, n);
  std::pair key{std::min(m, n), std::max(m, n)};
  {
    std::lock_guard lock(mutex_);
    if (auto it = s_cache_.find(key); it != s_cache_.end()) return it->second;
  }
  BigInt value = super_catalan(m, n);
  std::lock_guard lock(mutex_);
  s_cache_.emplace(key, value);
  return value;
}

Rational SuperCatalanTable::omega(std::uint64_t m, std::uint64_t n) const {
  return Rational(s(m, n), BigInt(1) << (2 * (m + n)));
}

}  // namespace chromasum
