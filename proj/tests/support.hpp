#pragma once

// Shared generators and oracles for the unit suites.

#include <cstdint>
#include <random>
#include <vector>

#include "chromasum/arith.hpp"
#include "chromasum/finite_field.hpp"

namespace chromasum::testing {

inline constexpr int kIterations = 200;

inline Rational random_rational(std::mt19937_64& rng, std::int64_t bound = 1000) {
  std::uniform_int_distribution<std::int64_t> num(-bound, bound);
  std::uniform_int_distribution<std::int64_t> den(1, bound);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline FieldElement random_element(const FieldRef& field, std::mt19937_64& rng) {
  return FieldElement::from_index(field, rng() % field->q);
}

inline FieldElement random_nonzero(const FieldRef& field, std::mt19937_64& rng) {
  return FieldElement::from_index(field, 1 + rng() % (field->q - 1));
}

/// Pascal's triangle up to row n, computed by addition only.
inline std::vector<std::vector<BigInt>> pascal_rows(std::size_t n) {
  std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<BigInt> row(i + 1, BigInt(1));
    for (std::size_t k = 1; k < i; ++k) row[k] = rows[i - 1][k - 1] + rows[i - 1][k];
    rows.push_back(std::move(row));
  }
  return rows;
}

/// (p, r) pairs for the fields used across the suites.
struct FieldCase {
  std::uint64_t p;
  unsigned r;
};

inline const std::vector<FieldCase>& small_fields() {
  static const std::vector<FieldCase> cases{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {13, 1}, {17, 1}, {5, 2}, {3, 3}};
  return cases;
}

}  // namespace chromasum::testing
