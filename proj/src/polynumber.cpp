#include "chromasum/polynumber.hpp"

namespace chromasum {

namespace detail {

namespace {

BigInt lcm_of_denominators(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const Rational& c : v) {
    if (c.denominator() != 1 && l % c.denominator() != 0) {
      l = boost::multiprecision::lcm(l, c.denominator());
    }
  }
  return l;
}

std::vector<BigInt> scaled_numerators(const std::vector<Rational>& v, const BigInt& common) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (const Rational& c : v) out.push_back(c.numerator() * (common / c.denominator()));
  return out;
}

}  // namespace

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b,
                               const Rational&) {
  if (a.empty() || b.empty()) return {};
  BigInt da = lcm_of_denominators(a);
  BigInt db = lcm_of_denominators(b);
  std::vector<BigInt> na = scaled_numerators(a, da);
  std::vector<BigInt> nb = scaled_numerators(b, db);
  std::vector<BigInt> acc(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (na[i].is_zero()) continue;
    for (std::size_t j = 0; j < nb.size(); ++j) {
      if (!nb[j].is_zero()) acc[i + j] += na[i] * nb[j];
    }
  }
  BigInt den = da * db;
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (BigInt& n : acc) out.emplace_back(std::move(n), den);
  return out;
}

}  // namespace detail

CircularPolynumber circular_polynumber(std::uint64_t k, std::uint64_t l) {
  const Rational half(1, 2);
  RationalPolynumber plus(Rational{}, {half, half});
  RationalPolynumber minus(Rational{}, {half, -half});
  return {k, l, plus.pow(k) * minus.pow(l)};
}

BigInt krawtchouk_value(std::uint64_t n, std::uint64_t d, std::uint64_t m) {
  if (n > d || m > d) {
    throw MathError(Errc::OutOfRange, "krawtchouk_value needs n <= d and m <= d");
  }
  BigInt sum = 0;
  for (std::uint64_t l = 0; l <= std::min(n, m); ++l) {
    BigInt term = binomial(m, static_cast<std::int64_t>(l)) *
                  binomial(d - m, static_cast<std::int64_t>(n - l));
    if (l % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

RationalPolynumber krawtchouk_generating(std::uint64_t d, std::uint64_t m) {
  if (m > d) throw MathError(Errc::OutOfRange, "krawtchouk_generating needs m <= d");
  RationalPolynumber one_minus(Rational{}, {Rational(1), Rational(-1)});
  RationalPolynumber one_plus(Rational{}, {Rational(1), Rational(1)});
  return one_minus.pow(m) * one_plus.pow(d - m);
}

FieldElement evaluate(const FieldPolynumber2& pi, const AffinePoint& point) {
  if (!same_ring(pi.ring_zero(), point.x)) {
    throw MathError(Errc::SpecMismatch, "polynumber and point over different fields");
  }
  return pi.evaluate(point.x, point.y);
}

namespace {

// prod_{t != a} (t - alpha), together with its value at alpha = a.
std::pair<Polynumber<FieldElement>, FieldElement> vanishing_off(const FieldElement& a) {
  const FieldRef& f = a.field();
  const FieldElement minus_one = FieldElement::from_int(f, -1);
  Polynumber<FieldElement> chain = Polynumber<FieldElement>::constant(FieldElement::one(f));
  FieldElement at_a = FieldElement::one(f);
  for (const FieldElement& t : field_elements(f)) {
    if (t == a) continue;
    chain *= Polynumber<FieldElement>(FieldElement::zero(f), {t, minus_one});
    at_a *= t - a;
  }
  return {std::move(chain), std::move(at_a)};
}

}  // namespace

FieldPolynumber2 delta_polynumber(const AffinePoint& point) {
  auto [in_alpha, norm_a] = vanishing_off(point.x);
  auto [in_beta, norm_b] = vanishing_off(point.y);
  return FieldPolynumber2::outer(in_alpha, in_beta) * (norm_a * norm_b).inv();
}

FieldPolynumber2 substitute_linear(const FieldPolynumber2& pi, const Dihedron& h) {
  if (!same_ring(pi.ring_zero(), h.h11())) {
    throw MathError(Errc::SpecMismatch, "polynumber and matrix over different fields");
  }
  const FieldElement& zero = pi.ring_zero();
  if (pi.is_zero()) return pi;
  const FieldPolynumber2 a = FieldPolynumber2::alpha(zero);
  const FieldPolynumber2 b = FieldPolynumber2::beta(zero);
  const FieldPolynumber2 first = h.h11() * a + h.h21() * b;
  const FieldPolynumber2 second = h.h12() * a + h.h22() * b;

  std::vector<FieldPolynumber2> second_powers{FieldPolynumber2::constant(ring_one_like(zero))};
  for (std::size_t j = 1; j < pi.cols(); ++j) second_powers.push_back(second_powers.back() * second);

  FieldPolynumber2 result(zero);
  FieldPolynumber2 first_power = FieldPolynumber2::constant(ring_one_like(zero));
  for (std::size_t i = 0; i < pi.rows(); ++i) {
    FieldPolynumber2 inner(zero);
    for (std::size_t j = 0; j < pi.cols(); ++j) {
      if (!pi.at(i, j).is_zero()) inner += pi.at(i, j) * second_powers[j];
    }
    result += first_power * inner;
    if (i + 1 < pi.rows()) first_power *= first;
  }
  return result;
}

FieldPolynumber2 reduce_to_field(const Polynumber2<Rational>& pi, const FieldRef& field) {
  FieldPolynumber2 out(FieldElement::zero(field));
  pi.for_each_term([&](std::size_t i, std::size_t j, const Rational& c) {
    out.set(i, j,
            FieldElement::from_int(field, static_cast<std::int64_t>(rational_reduce_mod_p(c, field->p))));
  });
  return out;
}

}  // namespace chromasum
