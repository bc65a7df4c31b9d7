#pragma once

/**
 * @file fourier.hpp
 * @brief The Fourier summation functional psi_{c,q}.
 *
 * psi_{c,q}(pi) = |S_c|^{-1} * sum over [x,y] in S_c of pi(x,y).
 *
 * Three independent evaluation routes are provided:
 *  - brute force over the circle (O(q) field operations per monomial),
 *  - closed-form ladders over the rational circular polynumber pi_{k,l},
 *  - the summation program: exponent reduction k = Qq + R -> Q + R until both
 *    exponents are below q, then a fixed three-term formula.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromasum/arith.hpp"
#include "chromasum/chromogeometry.hpp"
#include "chromasum/finite_field.hpp"
#include "chromasum/polynumber.hpp"

namespace chromasum {

enum class PsiMethod { brute, closed, program, automatic };

std::string_view method_name(PsiMethod m) noexcept;
/// "brute", "closed", "program" or "auto". Throws ParseError otherwise.
PsiMethod parse_method(std::string_view text);

/// pi_{k,l} from a process-wide cache. Thread-safe.
std::shared_ptr<const RationalPolynumber> cached_circular_polynumber(std::uint64_t k, std::uint64_t l);

FieldElement psi_brute(Color c, const FieldRef& field, const FieldPolynumber2& pi);
FieldElement psi_brute_monomial(Color c, const FieldRef& field, std::uint64_t k, std::uint64_t l);

/// Rungs m+n+dw for |d| <= R, ascending. Used by red and blue.
struct LadderPlan {
  std::uint64_t w = 0;
  std::uint64_t R = 0;
  std::uint64_t center = 0;
  std::vector<std::int64_t> indices;
};

/// Red: w = (q-1)/2, R = floor((k+l)/(q-1)).
/// Blue: w = |S_b|/2, R = floor((k+l)/|S_b|) with |S_b| = q - (-1/q).
LadderPlan ladder_plan(Color c, const FieldSpec& spec, std::uint64_t k, std::uint64_t l);

struct LadderEvaluation {
  LadderPlan plan;
  /// Signed coefficient at each rung, in plan order.
  std::vector<Rational> rungs;
  Rational exact;
  FieldElement value;
};

/// The exact ladder behind psi_red_closed / psi_blue_closed. Empty when k or l is odd.
std::optional<LadderEvaluation> ladder_evaluation(Color c, const FieldRef& field, std::uint64_t k,
                                                  std::uint64_t l);

/// 1 when (q-1) | (k-l), else 0.
FieldElement psi_green_closed(const FieldRef& field, std::uint64_t k, std::uint64_t l);
FieldElement psi_red_closed(const FieldRef& field, std::uint64_t k, std::uint64_t l);
FieldElement psi_blue_closed(const FieldRef& field, std::uint64_t k, std::uint64_t l);
FieldElement psi_closed(Color c, const FieldRef& field, std::uint64_t k, std::uint64_t l);

/// One step: each exponent e >= q becomes floor(e/q) + (e mod q).
std::pair<std::uint64_t, std::uint64_t> periodicity_reduce(std::uint64_t k, std::uint64_t l,
                                                           std::uint64_t q);

/// Repeats periodicity_reduce until both exponents are below q. The chain
/// starts with (k, l) and ends with the fixed point.
std::vector<std::pair<std::uint64_t, std::uint64_t>> periodicity_chain(std::uint64_t k, std::uint64_t l,
                                                                       std::uint64_t q);

struct ProgramResult {
  explicit ProgramResult(FieldElement v) : value(std::move(v)) {}

  /// (m_0, n_0) = (2m, 2n) down to (M, N).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> chain;
  std::uint64_t m_star = 0;
  std::uint64_t n_star = 0;
  /// The three terms of the principal-range formula.
  Rational omega_term;
  Rational rung_term;
  Rational delta_term;
  FieldElement value;
};

/// psi_c(alpha^{2m} beta^{2n}) by reduction into the principal range.
ProgramResult fourier_summation_program(Color c, const FieldRef& field, std::uint64_t m, std::uint64_t n);

/// Monomial dispatch. Program accepts any exponents: odd exponents give 0 for
/// red and blue, green is reduced and then evaluated in closed form.
/// Automatic uses the program when an exponent is >= q, closed otherwise.
FieldElement psi_monomial(Color c, const FieldRef& field, std::uint64_t k, std::uint64_t l,
                          PsiMethod method = PsiMethod::automatic);

/// Linear extension over the terms of pi (brute evaluates pi pointwise instead).
FieldElement psi_general(Color c, const FieldRef& field, const FieldPolynumber2& pi,
                         PsiMethod method = PsiMethod::automatic);

struct AxiomCounts {
  std::size_t locality = 200;
  std::size_t invariance_per_rotation = 20;
  std::size_t max_degree = 4;
};

struct AxiomReport {
  Color color = Color::blue;
  std::uint64_t q = 0;
  std::size_t normalization_checks = 0;
  std::size_t locality_checks = 0;
  std::size_t invariance_checks = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Random polynumber with both degrees <= max_degree and uniform coefficients.
template <typename Rng>
FieldPolynumber2 random_polynumber(const FieldRef& field, std::size_t max_degree, Rng& rng) {
  FieldPolynumber2 out(FieldElement::zero(field));
  for (std::size_t i = 0; i <= max_degree; ++i) {
    for (std::size_t j = 0; j <= max_degree; ++j) {
      out.set(i, j, FieldElement::from_index(field, rng() % field->q));
    }
  }
  return out;
}

/// Normalization, locality and rotation invariance on seeded random instances.
AxiomReport axiom_check(Color c, const FieldRef& field, std::uint64_t seed, const AxiomCounts& counts = {},
                        PsiMethod method = PsiMethod::automatic);

}  // namespace chromasum
