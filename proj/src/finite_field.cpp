#include "chromasum/finite_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "chromasum/arith.hpp"
#include "chromasum/error.hpp"

namespace chromasum {

namespace {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) {
    f.pop_back();
  }
}

// Remainder of a modulo f (f nonzero), both over F_p.
Poly poly_rem(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = mod_inverse(f.back(), p);
  while (a.size() > df && !a.empty()) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = (a[shift + j] + p - mulmod(c, f[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) {
    return {};
  }
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_rem(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = poly_rem(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) {
      result = poly_mulmod(result, base, f, p);
    }
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// X^{p^d} mod f.
Poly frobenius_power_of_x(std::uint64_t d, const Poly& f, std::uint64_t p) {
  Poly x = poly_rem(Poly{0, 1}, f, p);
  for (std::uint64_t i = 0; i < d; ++i) {
    x = poly_powmod(x, p, f, p);
  }
  return x;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) {
    a.resize(b.size(), 0);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] = (a[i] + p - b[i]) % p;
  }
  trim(a);
  return a;
}

std::uint64_t checked_power(std::uint64_t p, unsigned r, std::uint64_t ceiling) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (q > ceiling / p) {
      throw MathError(Errc::FieldTooLarge, std::to_string(p) + "^" + std::to_string(r) +
                                               " exceeds the field-size ceiling " +
                                               std::to_string(ceiling));
    }
    q *= p;
  }
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible_mod_p(std::span<const std::uint64_t> poly, std::uint64_t p) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) {
    return false;
  }
  const std::uint64_t r = f.size() - 1;
  if (r == 1) {
    return true;
  }
  // f | X^{p^r} - X, and X^{p^{r/l}} - X is coprime to f for each prime l | r.
  Poly x{0, 1};
  if (!poly_sub(frobenius_power_of_x(r, f, p), poly_rem(x, f, p), p).empty()) {
    return false;
  }
  for (std::uint64_t l : prime_factors(r)) {
    Poly g = poly_gcd(f, poly_sub(frobenius_power_of_x(r / l, f, p), x, p), p);
    if (g.size() != 1) {
      return false;
    }
  }
  return true;
}

FieldRef field_make(std::uint64_t p, unsigned r,
                    const std::optional<std::vector<std::int64_t>>& modulus,
                    std::uint64_t q_ceiling) {
  if (p == 2) {
    throw MathError(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  }
  if (!is_prime(p)) {
    throw MathError(Errc::NotPrime, std::to_string(p) + " is not prime");
  }
  if (r == 0) {
    throw MathError(Errc::OutOfRange, "extension degree must be positive");
  }
  if (p > 0xFFFFFFFFull) {
    throw MathError(Errc::FieldTooLarge, "characteristic must fit in 32 bits");
  }
  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->r = r;
  spec->q = checked_power(p, r, q_ceiling);

  if (modulus) {
    Poly f;
    f.reserve(modulus->size());
    for (std::int64_t c : *modulus) {
      std::int64_t m = c % static_cast<std::int64_t>(p);
      f.push_back(static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m));
    }
    trim(f);
    if (f.size() != r + 1) {
      throw MathError(Errc::InvalidModulus,
                      "modulus must have degree " + std::to_string(r) + " over F_" +
                          std::to_string(p));
    }
    const std::uint64_t lead_inv = mod_inverse(f.back(), p);
    for (auto& c : f) c = mulmod(c, lead_inv, p);
    if (!is_irreducible_mod_p(f, p)) {
      throw MathError(Errc::NotIrreducible, "supplied modulus is reducible over F_" +
                                                std::to_string(p));
    }
    spec->modulus = std::move(f);
  } else {
    // Odometer over (c_0, ..., c_{r-1}) with c_0 as the most significant digit.
    Poly f(r + 1, 0);
    f[r] = 1;
    for (;;) {
      if (is_irreducible_mod_p(f, p)) {
        break;
      }
      std::size_t pos = r;
      do {
        --pos;
        f[pos] = (f[pos] + 1) % p;
      } while (f[pos] == 0 && pos > 0);
    }
    spec->modulus = std::move(f);
  }
  return spec;
}

FieldRef field_parse(std::string_view text, std::uint64_t q_ceiling) {
  std::optional<std::uint64_t> p;
  unsigned r = 1;
  std::optional<std::vector<std::int64_t>> modulus;
  std::string current_key;
  std::stringstream ss{std::string(text)};
  std::string token;
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    try {
      std::size_t used = 0;
      std::int64_t v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw MathError(Errc::ParseError, "bad number '" + s + "' in field spec");
    }
  };
  while (std::getline(ss, token, ',')) {
    auto eq = token.find('=');
    std::string value = token;
    if (eq != std::string::npos) {
      current_key = token.substr(0, eq);
      value = token.substr(eq + 1);
    } else if (current_key != "modulus") {
      throw MathError(Errc::ParseError, "unexpected token '" + token + "' in field spec");
    }
    if (current_key == "p") {
      std::int64_t v = parse_int(value);
      if (v < 2) throw MathError(Errc::NotPrime, value + " is not prime");
      p = static_cast<std::uint64_t>(v);
    } else if (current_key == "r") {
      std::int64_t v = parse_int(value);
      if (v < 1) throw MathError(Errc::OutOfRange, "r must be positive");
      r = static_cast<unsigned>(v);
    } else if (current_key == "modulus") {
      if (!modulus) modulus.emplace();
      modulus->push_back(parse_int(value));
    } else {
      throw MathError(Errc::ParseError, "unknown field spec key '" + current_key + "'");
    }
  }
  if (!p) {
    throw MathError(Errc::ParseError, "field spec needs p=");
  }
  return field_make(*p, r, modulus, q_ceiling);
}

std::string field_to_string(const FieldSpec& spec) {
  std::ostringstream os;
  os << "p=" << spec.p << ",r=" << spec.r << ",modulus=";
  for (std::size_t i = 0; i < spec.modulus.size(); ++i) {
    os << (i ? "," : "") << spec.modulus[i];
  }
  return os.str();
}

std::uint64_t q_ceiling_from_env() {
  if (const char* raw = std::getenv("CHROMASUM_Q_CEILING")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) {
      return v;
    }
  }
  return kDefaultQCeiling;
}

int jacobi_minus_one(const FieldSpec& spec) {
  if (spec.p % 4 == 1) return 1;
  return spec.r % 2 == 0 ? 1 : -1;
}

FieldElement::FieldElement(FieldRef field, std::vector<std::uint32_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > field_->r) {
    throw MathError(Errc::OutOfRange, "too many coefficients for F_" + std::to_string(field_->q));
  }
  coeffs_.resize(field_->r, 0);
  for (auto& c : coeffs_) {
    c = static_cast<std::uint32_t>(c % field_->p);
  }
}

FieldElement FieldElement::zero(const FieldRef& field) { return FieldElement(field, {}); }

FieldElement FieldElement::one(const FieldRef& field) { return FieldElement(field, {1}); }

FieldElement FieldElement::from_int(const FieldRef& field, std::int64_t value) {
  const auto p = static_cast<std::int64_t>(field->p);
  std::int64_t m = value % p;
  if (m < 0) m += p;
  return FieldElement(field, {static_cast<std::uint32_t>(m)});
}

FieldElement FieldElement::from_index(const FieldRef& field, std::uint64_t index) {
  if (index >= field->q) {
    throw MathError(Errc::OutOfRange, "element index out of range");
  }
  std::vector<std::uint32_t> c(field->r, 0);
  for (unsigned i = 0; i < field->r; ++i) {
    c[i] = static_cast<std::uint32_t>(index % field->p);
    index /= field->p;
  }
  return FieldElement(field, std::move(c));
}

std::uint64_t FieldElement::index() const noexcept {
  std::uint64_t idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    idx = idx * field_->p + coeffs_[i];
  }
  return idx;
}

bool FieldElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool FieldElement::is_one() const noexcept {
  return coeffs_[0] == 1 && in_prime_subfield();
}

bool FieldElement::in_prime_subfield() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](auto c) { return c == 0; });
}

std::uint64_t FieldElement::prime_residue() const {
  if (!in_prime_subfield()) {
    throw MathError(Errc::OutOfRange, to_string() + " is not in the prime subfield");
  }
  return coeffs_[0];
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (field_ != other.field_ && !field_->same_field(*other.field_)) {
    throw MathError(Errc::SpecMismatch, "operands live in F_" + std::to_string(field_->q) +
                                            " (" + field_to_string(*field_) + ") and F_" +
                                            std::to_string(other.field_->q) + " (" +
                                            field_to_string(*other.field_) + ")");
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) {
    c = c == 0 ? 0 : static_cast<std::uint32_t>(field_->p - c);
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  const std::uint64_t p = field_->p;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = static_cast<std::uint32_t>((std::uint64_t{coeffs_[i]} + rhs.coeffs_[i]) % p);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  const std::uint64_t p = field_->p;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] =
        static_cast<std::uint32_t>((std::uint64_t{coeffs_[i]} + p - rhs.coeffs_[i]) % p);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  const std::uint64_t p = field_->p;
  const std::size_t r = field_->r;
  if (r == 1) {
    coeffs_[0] = static_cast<std::uint32_t>(mulmod(coeffs_[0], rhs.coeffs_[0], p));
    return *this;
  }
  std::vector<std::uint64_t> prod(2 * r - 1, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(coeffs_[i], rhs.coeffs_[j], p)) % p;
    }
  }
  const auto& f = field_->modulus;
  for (std::size_t i = 2 * r - 1; i-- > r;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    // X^r = -(f_0 + ... + f_{r-1} X^{r-1})
    for (std::size_t j = 0; j < r; ++j) {
      prod[i - r + j] = (prod[i - r + j] + p - mulmod(c, f[j], p)) % p;
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    coeffs_[i] = static_cast<std::uint32_t>(prod[i]);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inv();
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement result = one(field_);
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) {
    throw MathError(Errc::DivisionByZero, "inverse of zero in F_" + std::to_string(field_->q));
  }
  return pow(field_->q - 2);
}

bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
  if (a.field_ != b.field_ && !a.field_->same_field(*b.field_)) {
    return false;
  }
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
  return a.index() <=> b.index();
}

std::string FieldElement::to_string() const {
  if (field_->r == 1) {
    return std::to_string(coeffs_[0]);
  }
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool same_ring(const FieldElement& a, const FieldElement& b) noexcept {
  return a.field() == b.field() || a.field()->same_field(*b.field());
}

std::vector<FieldElement> field_elements(const FieldRef& field) {
  std::vector<FieldElement> out;
  out.reserve(field->q);
  for (std::uint64_t i = 0; i < field->q; ++i) {
    out.push_back(FieldElement::from_index(field, i));
  }
  return out;
}

std::uint64_t multiplicative_order(const FieldElement& a) {
  if (a.is_zero()) {
    throw MathError(Errc::DivisionByZero, "zero has no multiplicative order");
  }
  std::uint64_t order = a.field()->q - 1;
  for (std::uint64_t l : prime_factors(order)) {
    while (order % l == 0 && a.pow(order / l).is_one()) {
      order /= l;
    }
  }
  return order;
}

FieldElement multiplicative_generator(const FieldRef& field) {
  const std::uint64_t n = field->q - 1;
  const auto factors = prime_factors(n);
  for (std::uint64_t i = 1; i < field->q; ++i) {
    FieldElement g = FieldElement::from_index(field, i);
    bool primitive = std::none_of(factors.begin(), factors.end(),
                                  [&](std::uint64_t l) { return g.pow(n / l).is_one(); });
    if (primitive) {
      return g;
    }
  }
  throw MathError(Errc::OutOfRange, "no generator found");  // unreachable for a field
}

bool is_square(const FieldElement& a) {
  if (a.is_zero()) return true;
  return a.pow((a.field()->q - 1) / 2).is_one();
}

}  // namespace chromasum
