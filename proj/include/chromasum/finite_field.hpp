#pragma once

/**
 * @file finite_field.hpp
 * @brief Finite fields F_q, q = p^r with p odd, as F_p[X]/(modulus).
 *
 * A FieldSpec is immutable and shared by reference; FieldElements carry the
 * reference and refuse to mix with elements of a different field.
 *
 * Elements are coefficient vectors (constant term first) of length r. Their
 * canonical index is sum c_i p^i, which also fixes the canonical ordering
 * used for every listing in the library.
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chromasum {

inline constexpr std::uint64_t kDefaultQCeiling = std::uint64_t{1} << 16;

struct FieldSpec {
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t q = 0;
  /// Monic, degree r, constant term first (size r + 1).
  std::vector<std::uint64_t> modulus;

  bool same_field(const FieldSpec& other) const noexcept {
    return p == other.p && r == other.r && modulus == other.modulus;
  }
};

using FieldRef = std::shared_ptr<const FieldSpec>;

/// Builds F_{p^r}. Without a modulus the lexicographically smallest monic
/// irreducible of degree r is chosen, comparing coefficient tuples
/// (c_0, c_1, ..., c_{r-1}) with c_0 most significant.
/// A supplied modulus may be non-monic; it is scaled by the inverse of its
/// leading coefficient.
FieldRef field_make(std::uint64_t p, unsigned r,
                    const std::optional<std::vector<std::int64_t>>& modulus = std::nullopt,
                    std::uint64_t q_ceiling = kDefaultQCeiling);

/// Parses "p=3,r=3,modulus=1,1,0,-1" (r and modulus optional).
FieldRef field_parse(std::string_view text, std::uint64_t q_ceiling = kDefaultQCeiling);

std::string field_to_string(const FieldSpec& spec);

/// Field-size ceiling from CHROMASUM_Q_CEILING, or kDefaultQCeiling.
std::uint64_t q_ceiling_from_env();

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Rabin's test over F_p. poly is constant-first, degree >= 1, any leading coefficient.
bool is_irreducible_mod_p(std::span<const std::uint64_t> poly, std::uint64_t p);

/// (-1/q) = (-1/p)^r: +1 exactly when -1 is a square in F_q.
int jacobi_minus_one(const FieldSpec& spec);

class FieldElement {
 public:
  FieldElement(FieldRef field, std::vector<std::uint32_t> coeffs);

  static FieldElement zero(const FieldRef& field);
  static FieldElement one(const FieldRef& field);
  /// Image of an integer under Z -> F_p -> F_q.
  static FieldElement from_int(const FieldRef& field, std::int64_t value);
  static FieldElement from_index(const FieldRef& field, std::uint64_t index);

  const FieldRef& field() const noexcept { return field_; }
  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  std::uint64_t index() const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool in_prime_subfield() const noexcept;
  /// The F_p residue of an element of the prime subfield.
  std::uint64_t prime_residue() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Uses 0^0 = 1.
  FieldElement pow(std::uint64_t exponent) const;
  FieldElement inv() const;

  /// Elements of different fields are never equal.
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept;
  /// Canonical (index) order; only meaningful within one field.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept;

  /// Prime-field elements print as integers, others as e.g. "2+a+a^2".
  std::string to_string() const;

 private:
  void require_same_field(const FieldElement& other) const;

  FieldRef field_;
  std::vector<std::uint32_t> coeffs_;
};

bool same_ring(const FieldElement& a, const FieldElement& b) noexcept;

/// All q elements in canonical order.
std::vector<FieldElement> field_elements(const FieldRef& field);

std::uint64_t multiplicative_order(const FieldElement& a);

/// First element in canonical order whose multiplicative order is q - 1.
FieldElement multiplicative_generator(const FieldRef& field);

bool is_square(const FieldElement& a);

}  // namespace chromasum
