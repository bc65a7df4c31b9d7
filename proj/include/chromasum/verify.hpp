#pragma once

// Self-check suites shared by `chromasum verify` and the acceptance runner.
// Each suite counts its checks and records one line per failed tuple.

#include <cstdint>
#include <string>
#include <vector>

#include "chromasum/finite_field.hpp"
#include "chromasum/fourier.hpp"

namespace chromasum {

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
  void expect(bool ok, const std::string& what);
  void merge(const SuiteReport& other);
};

/// F_{p^r} for each p and 1 <= r <= max_r, skipping fields above the ceiling.
std::vector<FieldRef> fields_for(const std::vector<std::uint64_t>& primes, unsigned max_r,
                                 std::uint64_t q_ceiling = kDefaultQCeiling);

/// psi_closed and the summation program against brute force on every
/// monomial with k, l <= max_degree (0 means 2q + 2), all colors.
SuiteReport verify_oracle(const std::vector<FieldRef>& fields, std::uint64_t max_degree = 0);

/// Super-Catalan identities and the palindromic laws of pi_{k,l}.
struct IdentityBounds {
  std::uint64_t gmt = 20;
  std::uint64_t krawtchouk = 12;
  std::uint64_t recurrence = 20;
  std::uint64_t palindromic = 24;
};
SuiteReport verify_identities(const IdentityBounds& bounds = {});

/// Seeded exponent pairs: brute psi is constant along each reduction chain,
/// the chain respects its length bound, and the program matches brute force.
SuiteReport verify_periodicity(const std::vector<FieldRef>& fields, std::uint64_t seed,
                               std::size_t samples = 30, std::uint64_t max_exponent = 5000);

SuiteReport verify_axioms(const std::vector<FieldRef>& fields, std::uint64_t seed,
                          const AxiomCounts& counts = {});

/// Circle sizes, parametrization, cyclic witnesses, power sums over rotation
/// groups of order <= max_power_sum_order, and the rotation action.
SuiteReport verify_structural(const std::vector<FieldRef>& fields, std::uint64_t max_power_sum_order = 28);

}  // namespace chromasum
