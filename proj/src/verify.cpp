#include "chromasum/verify.hpp"

#include <cmath>
#include <random>
#include <set>

#include "chromasum/super_catalan.hpp"

namespace chromasum {

void SuiteReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) failures.push_back(what);
}

void SuiteReport::merge(const SuiteReport& other) {
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::vector<FieldRef> fields_for(const std::vector<std::uint64_t>& primes, unsigned max_r,
                                 std::uint64_t q_ceiling) {
  std::vector<FieldRef> out;
  for (std::uint64_t p : primes) {
    std::uint64_t q = 1;
    for (unsigned r = 1; r <= max_r; ++r) {
      q *= p;
      if (q > q_ceiling) break;
      out.push_back(field_make(p, r, std::nullopt, q_ceiling));
    }
  }
  return out;
}

namespace {

std::string tuple_label(Color c, const FieldSpec& f, std::uint64_t k, std::uint64_t l) {
  return std::string(color_name(c)) + " q=" + std::to_string(f.q) + " k=" + std::to_string(k) +
         " l=" + std::to_string(l);
}

}  // namespace

SuiteReport verify_oracle(const std::vector<FieldRef>& fields, std::uint64_t max_degree) {
  SuiteReport report{"oracle", 0, {}};
  for (const FieldRef& f : fields) {
    const std::uint64_t top = max_degree == 0 ? 2 * f->q + 2 : max_degree;
    for (Color c : kAllColors) {
      for (std::uint64_t k = 0; k <= top; ++k) {
        for (std::uint64_t l = 0; l <= top; ++l) {
          const FieldElement brute = psi_brute_monomial(c, f, k, l);
          const FieldElement closed = psi_closed(c, f, k, l);
          const FieldElement program = psi_monomial(c, f, k, l, PsiMethod::program);
          report.expect(closed == brute && program == brute,
                        tuple_label(c, *f, k, l) + ": brute=" + brute.to_string() +
                            " closed=" + closed.to_string() + " program=" + program.to_string());
        }
      }
    }
  }
  return report;
}

SuiteReport verify_identities(const IdentityBounds& bounds) {
  SuiteReport report{"identities", 0, {}};
  auto mn = [](const char* what, std::uint64_t m, std::uint64_t n) {
    return std::string(what) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
  };
  for (std::uint64_t m = 0; m <= bounds.gmt; ++m) {
    for (std::uint64_t n = 0; m + n <= bounds.gmt; ++n) report.expect(gmt_identity_check(m, n), mn("gmt", m, n));
  }
  for (std::uint64_t m = 0; m <= bounds.krawtchouk; ++m) {
    for (std::uint64_t n = 0; n <= bounds.krawtchouk; ++n) {
      const BigInt s = super_catalan(m, n);
      const BigInt k = krawtchouk_value(m + n, 2 * (m + n), 2 * m);
      report.expect(k == (m % 2 ? BigInt(-s) : s), mn("krawtchouk", m, n));
    }
  }
  for (std::uint64_t m = 0; m <= bounds.recurrence; ++m) {
    for (std::uint64_t n = 0; n <= bounds.recurrence; ++n) {
      report.expect(4 * super_catalan(m, n) == super_catalan(m + 1, n) + super_catalan(m, n + 1),
                    mn("recurrence", m, n));
      report.expect(circular_super_catalan(m, n) ==
                        circular_super_catalan(m + 1, n) + circular_super_catalan(m, n + 1),
                    mn("omega-pascal", m, n));
    }
  }
  for (std::uint64_t k = 0; k <= bounds.palindromic; ++k) {
    for (std::uint64_t l = 0; l <= bounds.palindromic; ++l) {
      const RationalPolynumber pi = circular_polynumber(k, l).body;
      const RationalPolynumber swapped = circular_polynumber(l, k).body;
      bool mirror = true;
      bool swap = true;
      for (std::uint64_t i = 0; i <= k + l; ++i) {
        const Rational a = coefficient_at(pi, i);
        const Rational b = coefficient_at(pi, k + l - i);
        const Rational s = coefficient_at(swapped, i);
        mirror = mirror && a == (l % 2 ? -b : b);
        swap = swap && a == (i % 2 ? -s : s);
      }
      report.expect(mirror, "palindromic-mirror k=" + std::to_string(k) + " l=" + std::to_string(l));
      report.expect(swap, "palindromic-swap k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
  }
  return report;
}

SuiteReport verify_periodicity(const std::vector<FieldRef>& fields, std::uint64_t seed, std::size_t samples,
                               std::uint64_t max_exponent) {
  SuiteReport report{"periodicity", 0, {}};
  std::mt19937_64 rng(seed);
  for (const FieldRef& f : fields) {
    for (Color c : kAllColors) {
      for (std::size_t t = 0; t < samples; ++t) {
        const std::uint64_t k = rng() % (max_exponent + 1);
        const std::uint64_t l = rng() % (max_exponent + 1);
        const FieldElement target = psi_brute_monomial(c, f, k, l);
        const auto chain = periodicity_chain(k, l, f->q);
        bool stable = true;
        for (auto [a, b] : chain) stable = stable && psi_brute_monomial(c, f, a, b) == target;
        report.expect(stable, tuple_label(c, *f, k, l) + ": brute psi changes along the reduction chain");

        const double top = static_cast<double>(std::max<std::uint64_t>({k, l, 1}));
        const auto bound =
            static_cast<std::size_t>(std::ceil(std::log(top) / std::log(static_cast<double>(f->q)))) + 2;
        report.expect(chain.size() - 1 <= bound, tuple_label(c, *f, k, l) + ": reduction chain too long");

        const FieldElement program = psi_monomial(c, f, k, l, PsiMethod::program);
        report.expect(program == target, tuple_label(c, *f, k, l) + ": brute=" + target.to_string() +
                                             " program=" + program.to_string());
      }
    }
  }
  return report;
}

SuiteReport verify_axioms(const std::vector<FieldRef>& fields, std::uint64_t seed, const AxiomCounts& counts) {
  SuiteReport report{"axioms", 0, {}};
  for (const FieldRef& f : fields) {
    for (Color c : kAllColors) {
      const AxiomReport axioms = axiom_check(c, f, seed, counts);
      report.checks += axioms.normalization_checks + axioms.locality_checks + axioms.invariance_checks;
      for (const std::string& failure : axioms.failures) {
        report.failures.push_back(std::string(color_name(c)) + " q=" + std::to_string(f->q) + ": " + failure);
      }
    }
  }
  return report;
}

SuiteReport verify_structural(const std::vector<FieldRef>& fields, std::uint64_t max_power_sum_order) {
  SuiteReport report{"structural", 0, {}};
  for (const FieldRef& f : fields) {
    const int jac = jacobi_minus_one(*f);
    for (Color c : kAllColors) {
      const std::string where = std::string(color_name(c)) + " q=" + std::to_string(f->q);
      const UnitCircle circle = circle_enumerate(c, f);
      const std::uint64_t expected_size =
          c == Color::blue ? static_cast<std::uint64_t>(static_cast<std::int64_t>(f->q) - jac) : f->q - 1;
      report.expect(circle.size() == expected_size, where + ": circle size " + std::to_string(circle.size()));
      report.expect(circle_size(c, *f) == expected_size, where + ": circle_size formula");

      bool on = true;
      for (const AffinePoint& point : circle.points) on = on && on_circle(c, point);
      report.expect(on, where + ": enumerated point off the circle");
      report.expect(circle_parametrize(c, f).points == circle.points, where + ": parametrization differs");

      const auto generator = circle_generator(c, f);
      report.expect(generator.has_value() && circle_order(c, *generator) == circle.size(),
                    where + ": no element of full order");

      const std::vector<Dihedron> rotations = rotation_matrices(c, f);
      const AffinePoint identity = circle_identity(c, f);
      std::set<AffinePoint> orbit;
      bool preserved = true;
      for (const Dihedron& h : rotations) {
        preserved = preserved && preserves_form(h, c) && h.det().is_one();
        orbit.insert(act(identity, h));
      }
      report.expect(preserved, where + ": rotation fails to preserve the form");
      report.expect(orbit.size() == rotations.size() &&
                        std::equal(orbit.begin(), orbit.end(), circle.points.begin(), circle.points.end()),
                    where + ": rotation action not simply transitive");

      const std::uint64_t n = circle.size();
      if (n <= max_power_sum_order) {
        bool sums = true;
        for (std::uint64_t k = 0; k <= 3 * n; ++k) {
          Dihedron total = Dihedron::zero(f);
          for (const Dihedron& h : rotations) total += h.pow(k);
          const Dihedron expected = k % n == 0
                                        ? Dihedron::scalar(FieldElement::from_int(f, static_cast<std::int64_t>(n)))
                                        : Dihedron::zero(f);
          sums = sums && total == expected;
        }
        report.expect(sums, where + ": power sums over the rotation group");
      }
    }
    if (f->q - 1 <= max_power_sum_order) {
      bool sums = true;
      const std::uint64_t n = f->q - 1;
      for (std::uint64_t k = 0; k <= 3 * n; ++k) {
        FieldElement total = FieldElement::zero(f);
        for (const FieldElement& t : field_elements(f)) {
          if (!t.is_zero()) total += t.pow(k);
        }
        sums = sums && total == (k % n == 0 ? FieldElement::from_int(f, static_cast<std::int64_t>(n))
                                            : FieldElement::zero(f));
      }
      report.expect(sums, "multiplicative group q=" + std::to_string(f->q) + ": power sums");
    }
  }
  return report;
}

}  // namespace chromasum
