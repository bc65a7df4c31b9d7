#pragma once

/**
 * @file chromogeometry.hpp
 * @brief Blue, red and green planar geometries over F_q.
 *
 * Each color c has a symmetric form M_c and a unit circle S_c:
 *   blue  x^2 + y^2 = 1,  M_b = identity
 *   red   x^2 - y^2 = 1,  M_r = diag(1, -1)
 *   green xy = 1,         M_g = (0 1/2; 1/2 0)
 *
 * A circle point doubles as a rotation: blue [a,b] is a*1 + b*i, red [a,b] is
 * a*1 + b*j, green [t,1/t] is diag(t, 1/t). Points act from the right, so the
 * orbit of [1,0] (green [1,1]) is the whole circle.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromasum/finite_field.hpp"
#include "chromasum/plane.hpp"

namespace chromasum {

enum class Color { green, red, blue };

inline constexpr Color kAllColors[] = {Color::blue, Color::red, Color::green};

std::string_view color_name(Color c) noexcept;
/// Accepts "blue"/"b", "red"/"r", "green"/"g". Throws ParseError otherwise.
Color parse_color(std::string_view text);

/// x^2 + y^2, x^2 - y^2 or xy.
FieldElement quadratic_form(Color c, const AffinePoint& point);
bool on_circle(Color c, const AffinePoint& point);

/// q - 1 for red and green, q - (-1/q) for blue.
std::uint64_t circle_size(Color c, const FieldSpec& spec);

/// Determinant; equals the blue quadratic form on x*1 + y*i.
FieldElement quadrance(const Dihedron& h);

/// The Gram matrix M_c.
Dihedron form_matrix(Color c, const FieldRef& field);

/// h M_c h^T == M_c.
bool preserves_form(const Dihedron& h, Color c);

struct UnitCircle {
  Color color;
  FieldRef field;
  /// Canonical order (x, then y by element index), no repeats.
  std::vector<AffinePoint> points;

  std::size_t size() const noexcept { return points.size(); }
  bool contains(const AffinePoint& point) const;
};

/// Scans x and solves for y using a table of square roots.
UnitCircle circle_enumerate(Color c, const FieldRef& field);

/// Rational parametrization; equals circle_enumerate as a set.
UnitCircle circle_parametrize(Color c, const FieldRef& field);

/// [1,0] for blue and red, [1,1] for green.
AffinePoint circle_identity(Color c, const FieldRef& field);

/// Product of two circle points. Throws NotOnCircle.
AffinePoint circle_group_law(Color c, const AffinePoint& a, const AffinePoint& b);

/// Inverse under the group law (the adjugate of the rotation matrix).
AffinePoint circle_inverse(Color c, const AffinePoint& a);

AffinePoint circle_pow(Color c, const AffinePoint& a, std::uint64_t exponent);

/// Order of a circle point in its group.
std::uint64_t circle_order(Color c, const AffinePoint& a);

/// First point in canonical order generating the whole circle, if any.
std::optional<AffinePoint> circle_generator(Color c, const FieldRef& field);

/// The rotation attached to a circle point. Throws NotOnCircle.
Dihedron rotation_matrix(Color c, const AffinePoint& point);

/// One rotation per circle point, in the circle's canonical order.
std::vector<Dihedron> rotation_matrices(Color c, const FieldRef& field);

}  // namespace chromasum
