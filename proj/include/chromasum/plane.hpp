#pragma once

// Points of the affine plane A(F_q) and 2x2 matrices over F_q (dihedrons).

#include <compare>
#include <string>

#include "chromasum/finite_field.hpp"

namespace chromasum {

struct AffinePoint {
  FieldElement x;
  FieldElement y;

  AffinePoint(FieldElement x_, FieldElement y_);

  const FieldRef& field() const noexcept { return x.field(); }

  friend bool operator==(const AffinePoint& a, const AffinePoint& b) noexcept {
    return a.x == b.x && a.y == b.y;
  }
  /// Canonical order: by x, then y.
  friend std::strong_ordering operator<=>(const AffinePoint& a, const AffinePoint& b) noexcept {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }

  std::string to_string() const;
};

/// A 2x2 matrix (h11 h12; h21 h22). Points are row vectors acted on from the
/// right: [x,y].h = [h11 x + h21 y, h12 x + h22 y].
class Dihedron {
 public:
  Dihedron(FieldElement h11, FieldElement h12, FieldElement h21, FieldElement h22);

  static Dihedron identity(const FieldRef& field);
  static Dihedron zero(const FieldRef& field);
  /// Basis elements (0 1; -1 0), (0 1; 1 0), (1 0; 0 -1).
  static Dihedron basis_i(const FieldRef& field);
  static Dihedron basis_j(const FieldRef& field);
  static Dihedron basis_k(const FieldRef& field);
  /// t * identity.
  static Dihedron scalar(const FieldElement& t);

  const FieldElement& h11() const noexcept { return h11_; }
  const FieldElement& h12() const noexcept { return h12_; }
  const FieldElement& h21() const noexcept { return h21_; }
  const FieldElement& h22() const noexcept { return h22_; }
  const FieldRef& field() const noexcept { return h11_.field(); }

  Dihedron adjugate() const;
  Dihedron transpose() const;
  FieldElement det() const;
  FieldElement trace() const;

  Dihedron& operator+=(const Dihedron& rhs);
  Dihedron& operator-=(const Dihedron& rhs);
  friend Dihedron operator+(Dihedron a, const Dihedron& b) { return a += b; }
  friend Dihedron operator-(Dihedron a, const Dihedron& b) { return a -= b; }
  friend Dihedron operator*(const Dihedron& a, const Dihedron& b);
  friend Dihedron operator*(const FieldElement& t, const Dihedron& h);
  Dihedron pow(std::uint64_t exponent) const;

  friend bool operator==(const Dihedron& a, const Dihedron& b) noexcept = default;

  std::string to_string() const;

 private:
  FieldElement h11_, h12_, h21_, h22_;
};

/// Right action of a matrix on a point.
AffinePoint act(const AffinePoint& point, const Dihedron& h);

}  // namespace chromasum
