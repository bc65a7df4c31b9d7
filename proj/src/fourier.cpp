#include "chromasum/fourier.hpp"

#include <map>
#include <mutex>
#include <random>

#include "chromasum/error.hpp"
#include "chromasum/super_catalan.hpp"

namespace chromasum {

std::string_view method_name(PsiMethod m) noexcept {
  switch (m) {
    case PsiMethod::brute: return "brute";
    case PsiMethod::closed: return "closed";
    case PsiMethod::program: return "program";
    case PsiMethod::automatic: return "auto";
  }
  return "?";
}

PsiMethod parse_method(std::string_view text) {
  if (text == "brute") return PsiMethod::brute;
  if (text == "closed") return PsiMethod::closed;
  if (text == "program") return PsiMethod::program;
  if (text == "auto") return PsiMethod::automatic;
  throw MathError(Errc::ParseError, "unknown method '" + std::string(text) + "'");
}

std::shared_ptr<const RationalPolynumber> cached_circular_polynumber(std::uint64_t k, std::uint64_t l) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const RationalPolynumber>> cache;
  constexpr std::size_t kMaxEntries = 1 << 14;

  const std::pair key{k, l};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto value = std::make_shared<const RationalPolynumber>(circular_polynumber(k, l).body);
  std::lock_guard lock(mutex);
  if (cache.size() >= kMaxEntries) cache.clear();
  cache.emplace(key, value);
  return value;
}

namespace {

FieldElement field_residue(const FieldRef& field, const Rational& x) {
  return FieldElement::from_int(field, static_cast<std::int64_t>(rational_reduce_mod_p(x, field->p)));
}

FieldElement inverse_circle_size(Color c, const FieldRef& field) {
  return FieldElement::from_int(field, static_cast<std::int64_t>(circle_size(c, *field) % field->p)).inv();
}

Rational four_power_inverse(std::uint64_t e) { return Rational(BigInt(1), BigInt(1) << (2 * e)); }

}  // namespace

FieldElement psi_brute(Color c, const FieldRef& field, const FieldPolynumber2& pi) {
  if (!same_ring(pi.ring_zero(), FieldElement::zero(field))) {
    throw MathError(Errc::SpecMismatch, "polynumber is over a different field");
  }
  FieldElement acc = FieldElement::zero(field);
  for (const AffinePoint& point : circle_enumerate(c, field).points) acc += evaluate(pi, point);
  return acc * inverse_circle_size(c, field);
}

FieldElement psi_brute_monomial(Color c, const FieldRef& field, std::uint64_t k, std::uint64_t l) {
  FieldElement acc = FieldElement::zero(field);
  for (const AffinePoint& point : circle_enumerate(c, field).points) acc += point.x.pow(k) * point.y.pow(l);
  return acc * inverse_circle_size(c, field);
}

LadderPlan ladder_plan(Color c, const FieldSpec& spec, std::uint64_t k, std::uint64_t l) {
  if (c == Color::green) throw MathError(Errc::OutOfRange, "green has no ladder");
  const std::uint64_t size = circle_size(c, spec);
  LadderPlan plan;
  plan.w = size / 2;
  plan.R = (k + l) / size;
  plan.center = (k + l) / 2;
  const auto center = static_cast<std::int64_t>(plan.center);
  const auto w = static_cast<std::int64_t>(plan.w);
  const auto radius = static_cast<std::int64_t>(plan.R);
  for (std::int64_t d = -radius; d <= radius; ++d) plan.indices.push_back(center + d * w);
  return plan;
}

std::optional<LadderEvaluation> ladder_evaluation(Color c, const FieldRef& field, std::uint64_t k,
                                                  std::uint64_t l) {
  if (k % 2 != 0 || l % 2 != 0) return std::nullopt;
  LadderPlan plan = ladder_plan(c, *field, k, l);
  const auto pi = cached_circular_polynumber(k, l);
  const bool negate = c == Color::blue && (l / 2) % 2 == 1;
  std::vector<Rational> rungs;
  Rational exact;
  for (std::int64_t i : plan.indices) {
    Rational rung = i >= 0 ? coefficient_at(*pi, static_cast<std::size_t>(i)) : Rational{};
    if (negate) rung = -rung;
    exact += rung;
    rungs.push_back(std::move(rung));
  }
  FieldElement value = field_residue(field, exact);
  return LadderEvaluation{std::move(plan), std::move(rungs), std::move(exact), std::move(value)};
}

FieldElement psi_green_closed(const FieldRef& field, std::uint64_t k, std::uint64_t l) {
  const std::uint64_t diff = k > l ? k - l : l - k;
  return diff % (field->q - 1) == 0 ? FieldElement::one(field) : FieldElement::zero(field);
}

FieldElement psi_red_closed(const FieldRef& field, std::uint64_t k, std::uint64_t l) {
  auto ladder = ladder_evaluation(Color::red, field, k, l);
  return ladder ? ladder->value : FieldElement::zero(field);
}

FieldElement psi_blue_closed(const FieldRef& field, std::uint64_t k, std::uint64_t l) {
  auto ladder = ladder_evaluation(Color::blue, field, k, l);
  return ladder ? ladder->value : FieldElement::zero(field);
}

FieldElement psi_closed(Color c, const FieldRef& field, std::uint64_t k, std::uint64_t l) {
  switch (c) {
    case Color::green: return psi_green_closed(field, k, l);
    case Color::red: return psi_red_closed(field, k, l);
    case Color::blue: return psi_blue_closed(field, k, l);
  }
  return FieldElement::zero(field);
}

std::pair<std::uint64_t, std::uint64_t> periodicity_reduce(std::uint64_t k, std::uint64_t l, std::uint64_t q) {
  auto step = [q](std::uint64_t e) { return e >= q ? e / q + e % q : e; };
  return {step(k), step(l)};
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> periodicity_chain(std::uint64_t k, std::uint64_t l,
                                                                       std::uint64_t q) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> chain{{k, l}};
  while (chain.back().first >= q || chain.back().second >= q) {
    chain.push_back(periodicity_reduce(chain.back().first, chain.back().second, q));
  }
  return chain;
}

namespace {

// psi_c(alpha^M beta^N) for even M, N < q from the three-term formula.
ProgramResult principal_value(Color c, const FieldRef& field, std::uint64_t big_m, std::uint64_t big_n) {
  ProgramResult out(FieldElement::zero(field));
  out.m_star = big_m / 2;
  out.n_star = big_n / 2;
  const std::uint64_t ms = out.m_star;
  const std::uint64_t ns = out.n_star;
  const std::uint64_t q = field->q;
  const bool odd_n = ns % 2 == 1;
  const Rational omega = circular_super_catalan(ms, ns);
  const auto pi = cached_circular_polynumber(2 * ms, 2 * ns);
  const bool minus_one_square = jacobi_minus_one(*field) == 1;
  const std::uint64_t w = (c == Color::blue && !minus_one_square) ? (q + 1) / 2 : (q - 1) / 2;
  const Rational rung = coefficient_at(*pi, ms + ns + w);
  const bool delta = ms + ns == q - 1;

  if (c == Color::red) {
    out.omega_term = odd_n ? -omega : omega;
    out.rung_term = Rational(2) * rung;
    if (delta) out.delta_term = Rational(2) * four_power_inverse(ms + ns);
  } else {
    out.omega_term = omega;
    out.rung_term = Rational(2) * (odd_n ? -rung : rung);
    if (minus_one_square && delta) {
      Rational d = Rational(2) * four_power_inverse(ms + ns);
      out.delta_term = odd_n ? -d : d;
    }
  }
  out.value = field_residue(field, out.omega_term + out.rung_term + out.delta_term);
  return out;
}

}  // namespace

ProgramResult fourier_summation_program(Color c, const FieldRef& field, std::uint64_t m, std::uint64_t n) {
  auto chain = periodicity_chain(2 * m, 2 * n, field->q);
  const auto [big_m, big_n] = chain.back();
  ProgramResult out(FieldElement::zero(field));
  if (c == Color::green) {
    out.m_star = big_m / 2;
    out.n_star = big_n / 2;
    out.value = psi_green_closed(field, big_m, big_n);
  } else {
    out = principal_value(c, field, big_m, big_n);
  }
  out.chain = std::move(chain);
  return out;
}

FieldElement psi_monomial(Color c, const FieldRef& field, std::uint64_t k, std::uint64_t l, PsiMethod method) {
  if (method == PsiMethod::automatic) {
    method = (k >= field->q || l >= field->q) ? PsiMethod::program : PsiMethod::closed;
  }
  switch (method) {
    case PsiMethod::brute: return psi_brute_monomial(c, field, k, l);
    case PsiMethod::closed: return psi_closed(c, field, k, l);
    case PsiMethod::program:
      if (c == Color::green) {
        const auto [rk, rl] = periodicity_chain(k, l, field->q).back();
        return psi_green_closed(field, rk, rl);
      }
      if (k % 2 != 0 || l % 2 != 0) return FieldElement::zero(field);
      return fourier_summation_program(c, field, k / 2, l / 2).value;
    case PsiMethod::automatic: break;
  }
  return FieldElement::zero(field);
}

FieldElement psi_general(Color c, const FieldRef& field, const FieldPolynumber2& pi, PsiMethod method) {
  if (method == PsiMethod::brute) return psi_brute(c, field, pi);
  if (!same_ring(pi.ring_zero(), FieldElement::zero(field))) {
    throw MathError(Errc::SpecMismatch, "polynumber is over a different field");
  }
  FieldElement acc = FieldElement::zero(field);
  pi.for_each_term([&](std::size_t i, std::size_t j, const FieldElement& coeff) {
    acc += coeff * psi_monomial(c, field, i, j, method);
  });
  return acc;
}

AxiomReport axiom_check(Color c, const FieldRef& field, std::uint64_t seed, const AxiomCounts& counts,
                        PsiMethod method) {
  AxiomReport report;
  report.color = c;
  report.q = field->q;
  std::mt19937_64 rng(seed);
  const FieldElement zero = FieldElement::zero(field);
  const FieldElement one = FieldElement::one(field);
  const std::string where = std::string(color_name(c)) + " q=" + std::to_string(field->q);

  ++report.normalization_checks;
  if (!psi_general(c, field, FieldPolynumber2::constant(one), method).is_one()) {
    report.failures.push_back(where + ": normalization psi(1) != 1");
  }

  // Polynumbers vanishing on the circle: (Q_c - 1) * sigma, and deltas at
  // points off the circle. One delta for every four instances.
  const FieldPolynumber2 a = FieldPolynumber2::alpha(zero);
  const FieldPolynumber2 b = FieldPolynumber2::beta(zero);
  FieldPolynumber2 form(zero);
  switch (c) {
    case Color::blue: form = a * a + b * b; break;
    case Color::red: form = a * a - b * b; break;
    case Color::green: form = a * b; break;
  }
  const FieldPolynumber2 vanishing = form - FieldPolynumber2::constant(one);
  for (std::size_t t = 0; t < counts.locality; ++t) {
    FieldPolynumber2 pi(zero);
    std::string label;
    if (t % 4 == 3) {
      AffinePoint point{zero, zero};
      do {
        point = AffinePoint(FieldElement::from_index(field, rng() % field->q),
                            FieldElement::from_index(field, rng() % field->q));
      } while (on_circle(c, point));
      pi = delta_polynumber(point);
      label = "delta at " + point.to_string();
    } else {
      pi = vanishing * random_polynumber(field, counts.max_degree, rng);
      label = "(Q-1)*sigma #" + std::to_string(t);
    }
    ++report.locality_checks;
    if (!psi_general(c, field, pi, method).is_zero()) {
      report.failures.push_back(where + ": locality fails for " + label);
    }
  }

  const std::vector<Dihedron> rotations = rotation_matrices(c, field);
  for (std::size_t t = 0; t < counts.invariance_per_rotation; ++t) {
    const FieldPolynumber2 pi = random_polynumber(field, counts.max_degree, rng);
    const FieldElement base = psi_general(c, field, pi, method);
    for (const Dihedron& h : rotations) {
      ++report.invariance_checks;
      if (psi_general(c, field, substitute_linear(pi, h), method) != base) {
        report.failures.push_back(where + ": invariance fails for h = " + h.to_string());
      }
    }
  }
  return report;
}

}  // namespace chromasum
