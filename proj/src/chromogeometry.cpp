#include "chromasum/chromogeometry.hpp"

#include <algorithm>

#include "chromasum/error.hpp"

namespace chromasum {

std::string_view color_name(Color c) noexcept {
  switch (c) {
    case Color::green: return "green";
    case Color::red: return "red";
    case Color::blue: return "blue";
  }
  return "?";
}

Color parse_color(std::string_view text) {
  if (text == "blue" || text == "b") return Color::blue;
  if (text == "red" || text == "r") return Color::red;
  if (text == "green" || text == "g") return Color::green;
  throw MathError(Errc::ParseError, "unknown color '" + std::string(text) + "'");
}

FieldElement quadratic_form(Color c, const AffinePoint& point) {
  switch (c) {
    case Color::blue: return point.x * point.x + point.y * point.y;
    case Color::red: return point.x * point.x - point.y * point.y;
    case Color::green: return point.x * point.y;
  }
  return point.x;
}

bool on_circle(Color c, const AffinePoint& point) { return quadratic_form(c, point).is_one(); }

std::uint64_t circle_size(Color c, const FieldSpec& spec) {
  if (c == Color::blue) {
    return jacobi_minus_one(spec) == 1 ? spec.q - 1 : spec.q + 1;
  }
  return spec.q - 1;
}

FieldElement quadrance(const Dihedron& h) { return h.det(); }

Dihedron form_matrix(Color c, const FieldRef& field) {
  const FieldElement zero = FieldElement::zero(field);
  const FieldElement one = FieldElement::one(field);
  switch (c) {
    case Color::blue: return Dihedron::identity(field);
    case Color::red: return {one, zero, zero, -one};
    case Color::green: {
      const FieldElement half = FieldElement::from_int(field, 2).inv();
      return {zero, half, half, zero};
    }
  }
  return Dihedron::identity(field);
}

bool preserves_form(const Dihedron& h, Color c) {
  const Dihedron m = form_matrix(c, h.field());
  return h * m * h.transpose() == m;
}

bool UnitCircle::contains(const AffinePoint& point) const {
  return std::binary_search(points.begin(), points.end(), point);
}

namespace {

void canonicalize(std::vector<AffinePoint>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

void require_on_circle(Color c, const AffinePoint& point) {
  if (!on_circle(c, point)) {
    throw MathError(Errc::NotOnCircle,
                    point.to_string() + " is not on the " + std::string(color_name(c)) + " circle");
  }
}

}  // namespace

UnitCircle circle_enumerate(Color c, const FieldRef& field) {
  const std::vector<FieldElement> elements = field_elements(field);
  std::vector<AffinePoint> points;
  if (c == Color::green) {
    for (const FieldElement& x : elements) {
      if (!x.is_zero()) points.emplace_back(x, x.inv());
    }
  } else {
    // roots[i] lists the square roots of the element with index i.
    std::vector<std::vector<FieldElement>> roots(field->q);
    for (const FieldElement& t : elements) roots[(t * t).index()].push_back(t);
    const FieldElement one = FieldElement::one(field);
    for (const FieldElement& x : elements) {
      const FieldElement y_squared = (c == Color::blue) ? one - x * x : x * x - one;
      for (const FieldElement& y : roots[y_squared.index()]) points.emplace_back(x, y);
    }
  }
  canonicalize(points);
  return {c, field, std::move(points)};
}

UnitCircle circle_parametrize(Color c, const FieldRef& field) {
  const std::vector<FieldElement> elements = field_elements(field);
  const FieldElement one = FieldElement::one(field);
  const FieldElement two = FieldElement::from_int(field, 2);
  std::vector<AffinePoint> points;
  if (c == Color::green) {
    for (const FieldElement& t : elements) {
      if (!t.is_zero()) points.emplace_back(t, t.inv());
    }
  } else {
    points.emplace_back(-one, FieldElement::zero(field));
    for (const FieldElement& t : elements) {
      const FieldElement t2 = t * t;
      if (c == Color::red) {
        const FieldElement den = one - t2;
        if (den.is_zero()) continue;
        points.emplace_back((one + t2) / den, two * t / den);
      } else {
        const FieldElement den = one + t2;
        if (den.is_zero()) continue;
        points.emplace_back((one - t2) / den, two * t / den);
      }
    }
  }
  canonicalize(points);
  return {c, field, std::move(points)};
}

AffinePoint circle_identity(Color c, const FieldRef& field) {
  const FieldElement one = FieldElement::one(field);
  return {one, c == Color::green ? one : FieldElement::zero(field)};
}

AffinePoint circle_group_law(Color c, const AffinePoint& a, const AffinePoint& b) {
  if (!same_ring(a.x, b.x)) throw MathError(Errc::SpecMismatch, "points from different fields");
  require_on_circle(c, a);
  require_on_circle(c, b);
  switch (c) {
    case Color::blue: return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
    case Color::red: return {a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x};
    case Color::green: return {a.x * b.x, a.y * b.y};
  }
  return a;
}

AffinePoint circle_inverse(Color c, const AffinePoint& a) {
  require_on_circle(c, a);
  if (c == Color::green) return {a.y, a.x};
  return {a.x, -a.y};
}

AffinePoint circle_pow(Color c, const AffinePoint& a, std::uint64_t exponent) {
  AffinePoint result = circle_identity(c, a.field());
  AffinePoint base = a;
  while (exponent > 0) {
    if (exponent & 1) result = circle_group_law(c, result, base);
    exponent >>= 1;
    if (exponent > 0) base = circle_group_law(c, base, base);
  }
  return result;
}

std::uint64_t circle_order(Color c, const AffinePoint& a) {
  require_on_circle(c, a);
  const AffinePoint identity = circle_identity(c, a.field());
  std::uint64_t order = circle_size(c, *a.field());
  for (std::uint64_t prime : prime_factors(order)) {
    while (order % prime == 0 && circle_pow(c, a, order / prime) == identity) order /= prime;
  }
  return order;
}

std::optional<AffinePoint> circle_generator(Color c, const FieldRef& field) {
  const std::uint64_t n = circle_size(c, *field);
  for (const AffinePoint& point : circle_enumerate(c, field).points) {
    if (circle_order(c, point) == n) return point;
  }
  return std::nullopt;
}

Dihedron rotation_matrix(Color c, const AffinePoint& point) {
  require_on_circle(c, point);
  const FieldElement zero = FieldElement::zero(point.field());
  switch (c) {
    case Color::blue: return {point.x, point.y, -point.y, point.x};
    case Color::red: return {point.x, point.y, point.y, point.x};
    case Color::green: return {point.x, zero, zero, point.y};
  }
  return Dihedron::identity(point.field());
}

std::vector<Dihedron> rotation_matrices(Color c, const FieldRef& field) {
  std::vector<Dihedron> out;
  for (const AffinePoint& point : circle_enumerate(c, field).points) {
    out.push_back(rotation_matrix(c, point));
  }
  return out;
}

}  // namespace chromasum
