#include "chromasum/plane.hpp"

#include "chromasum/error.hpp"

namespace chromasum {

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!same_ring(a, b)) {
    throw MathError(Errc::SpecMismatch, "coordinates from different fields");
  }
}

}  // namespace

AffinePoint::AffinePoint(FieldElement x_, FieldElement y_) : x(std::move(x_)), y(std::move(y_)) {
  require_same(x, y);
}

std::string AffinePoint::to_string() const {
  return "[" + x.to_string() + "," + y.to_string() + "]";
}

Dihedron::Dihedron(FieldElement h11, FieldElement h12, FieldElement h21, FieldElement h22)
    : h11_(std::move(h11)), h12_(std::move(h12)), h21_(std::move(h21)), h22_(std::move(h22)) {
  require_same(h11_, h12_);
  require_same(h11_, h21_);
  require_same(h11_, h22_);
}

Dihedron Dihedron::identity(const FieldRef& f) {
  return {FieldElement::one(f), FieldElement::zero(f), FieldElement::zero(f), FieldElement::one(f)};
}

Dihedron Dihedron::zero(const FieldRef& f) {
  auto z = FieldElement::zero(f);
  return {z, z, z, z};
}

Dihedron Dihedron::basis_i(const FieldRef& f) {
  return {FieldElement::zero(f), FieldElement::one(f), FieldElement::from_int(f, -1),
          FieldElement::zero(f)};
}

Dihedron Dihedron::basis_j(const FieldRef& f) {
  return {FieldElement::zero(f), FieldElement::one(f), FieldElement::one(f), FieldElement::zero(f)};
}

Dihedron Dihedron::basis_k(const FieldRef& f) {
  return {FieldElement::one(f), FieldElement::zero(f), FieldElement::zero(f),
          FieldElement::from_int(f, -1)};
}

Dihedron Dihedron::scalar(const FieldElement& t) {
  auto z = FieldElement::zero(t.field());
  return {t, z, z, t};
}

Dihedron Dihedron::adjugate() const { return {h22_, -h12_, -h21_, h11_}; }

Dihedron Dihedron::transpose() const { return {h11_, h21_, h12_, h22_}; }

FieldElement Dihedron::det() const { return h11_ * h22_ - h12_ * h21_; }

FieldElement Dihedron::trace() const { return h11_ + h22_; }

Dihedron& Dihedron::operator+=(const Dihedron& rhs) {
  h11_ += rhs.h11_;
  h12_ += rhs.h12_;
  h21_ += rhs.h21_;
  h22_ += rhs.h22_;
  return *this;
}

Dihedron& Dihedron::operator-=(const Dihedron& rhs) {
  h11_ -= rhs.h11_;
  h12_ -= rhs.h12_;
  h21_ -= rhs.h21_;
  h22_ -= rhs.h22_;
  return *this;
}

Dihedron operator*(const Dihedron& a, const Dihedron& b) {
  return {a.h11_ * b.h11_ + a.h12_ * b.h21_, a.h11_ * b.h12_ + a.h12_ * b.h22_,
          a.h21_ * b.h11_ + a.h22_ * b.h21_, a.h21_ * b.h12_ + a.h22_ * b.h22_};
}

Dihedron operator*(const FieldElement& t, const Dihedron& h) {
  return {t * h.h11_, t * h.h12_, t * h.h21_, t * h.h22_};
}

Dihedron Dihedron::pow(std::uint64_t exponent) const {
  Dihedron result = identity(field());
  Dihedron base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string Dihedron::to_string() const {
  return "(" + h11_.to_string() + " " + h12_.to_string() + "; " + h21_.to_string() + " " +
         h22_.to_string() + ")";
}

AffinePoint act(const AffinePoint& point, const Dihedron& h) {
  if (!same_ring(point.x, h.h11())) {
    throw MathError(Errc::SpecMismatch, "point and matrix from different fields");
  }
  return {h.h11() * point.x + h.h21() * point.y, h.h12() * point.x + h.h22() * point.y};
}

}  // namespace chromasum
