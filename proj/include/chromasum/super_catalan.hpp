#pragma once

// Super Catalan numbers S(m,n) = (2m)!(2n)!/(m!n!(m+n)!) and their circular
// normalization Omega(m,n) = S(m,n)/4^{m+n}.

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

#include "chromasum/arith.hpp"

namespace chromasum {

BigInt factorial(std::uint64_t n);

/// Exact factorial quotient.
BigInt super_catalan(std::uint64_t m, std::uint64_t n);

/// S(m,n)/4^{m+n} in lowest terms.
Rational circular_super_catalan(std::uint64_t m, std::uint64_t n);

/// Compares Omega(m,n) with (-1)^n [alpha^{m+n}] pi_{2m,2n}; the two sides
/// share no code beyond Rational.
bool gmt_identity_check(std::uint64_t m, std::uint64_t n);

/// Per-cell memoized table. Safe to share between threads.
class SuperCatalanTable {
 public:
  SuperCatalanTable(std::uint64_t max_m, std::uint64_t max_n) : max_m_(max_m), max_n_(max_n) {}

  std::uint64_t max_m() const noexcept { return max_m_; }
  std::uint64_t max_n() const noexcept { return max_n_; }

  /// Throws OutOfRange outside [0, max_m] x [0, max_n].
  BigInt s(std::uint64_t m, std::uint64_t n) const;
  Rational omega(std::uint64_t m, std::uint64_t n) const;

 private:
  void check(std::uint64_t m, std::uint64_t n) const;

  std::uint64_t max_m_;
  std::uint64_t max_n_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::uint64_t, std::uint64_t>, BigInt> s_cache_;
};

}  // namespace chromasum
