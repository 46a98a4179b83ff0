#pragma once

// Exhaustive machine checks of the identities satisfied by m_lambda(zeta_(n,k))
// and by Theta(Z/nZ)^k, plus an evidence collector for the prime-power
// non-vanishing conjecture.
//
// Failures are data: a suite never throws on a mismatch, it records the
// instance. Exceptions are reserved for budget/usage problems and for
// IntegralityViolation, which must abort a run loudly.

#include <zmsp/bigint.hpp>
#include <zmsp/partitions.hpp>

#include <chrono>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace zmsp {

struct Failure {
  std::string instance;  // reproducible description, e.g. "n=3 k=2 lambda=1,2,3,3,3,3"
  std::string expected;
  std::string actual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct SectionTally {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
};

struct VerificationReport {
  std::string suite;
  int n = 0;
  int k = 0;
  std::size_t instances_checked = 0;
  std::vector<Failure> failures;
  std::vector<SectionTally> breakdown;
  std::chrono::milliseconds elapsed{0};

  [[nodiscard]] bool passed() const { return failures.empty(); }
};

struct ConjectureReport {
  int n = 0;
  int k = 0;
  BigInt total;  // |Lambda~_n^k| examined
  std::vector<BoundedPartition> zero_coefficients;
  bool is_prime_power = false;
  bool consistent_with_conjecture = false;
  std::chrono::milliseconds elapsed{0};
};

struct VerifyOptions {
  unsigned jobs = 1;
  std::size_t budget = 0;  // 0: default_budget()
};

/// Checks sum_{sigma in S_n} f(sum_i l_i sigma(i)) = n sum_{tau in S_(n-1)} f(...)
/// for every residue indicator f and for f(t) = zeta_n^t.
/// Requires length n, n | |lambda| and n <= 7.
VerificationReport check_lemma_2_4(int n, std::span<const Part> lambda);

/// prod_i (1 - x_i^n)^k = sum_{lambda in (n^(kn)), n | |lambda|}
///                        (-1)^|lambda| e_lambda(x) m_lambda(zeta_(n,k)).
VerificationReport check_prop_2_1(int n, int k, const VerifyOptions& opts = {});

/// m_mu(zeta_(n,k+l)) = sum_{lambda <| mu} m_lambda(zeta_(n,k)) m_{mu\lambda}(zeta_(n,l))
/// for every mu in Lambda_n^(k+l).
VerificationReport check_branching(int n, int k, int l, const VerifyOptions& opts = {});

/// Named groups of checks, selectable from the CLI.
enum class TheoremSection {
  kPrimeNonvanishing,    // |lambda| = 0 mod p  <=>  m != 0   (k = 1, n prime)
  kTwoBlocks,            // closed form for (l1^a, n^(kn-a))
  kTwoDistinct,          // sign reduction for (l1^a, l2^(kn-a))
  kMansfieldShapes,      // pattern values -n/2, -n, n/3, n, 2n
  kIntegralVanishing,    // m in Z, m = 0 when n does not divide |lambda|
  kScaling,              // m_{l lambda} = m_lambda for gcd(l, n) = 1
  kExpansionCoefficients,// Theta^k coefficients = DP = naive
  kLeibnizAgreement,     // Theta = Leibniz determinant (k = 1)
  kTermCount,            // Nu(Theta(Z/pZ)) formula (k = 1, n prime)
  kAutomorphism,         // Theta^k fixed by x_i -> x_{l i}
};

std::string to_string(TheoremSection s);

std::vector<TheoremSection> all_sections();
std::vector<TheoremSection> sum_of_roots_sections();       // closed forms and prime case
std::vector<TheoremSection> special_value_sections();      // patterns, integrality, scaling
std::vector<TheoremSection> group_determinant_sections();  // expansion-level checks

VerificationReport check_sections(int n, int k, std::span<const TheoremSection> sections,
                                  const VerifyOptions& opts = {}, std::string suite = "theorems");

/// Every applicable section for (n, k).
VerificationReport check_theorems(int n, int k, const VerifyOptions& opts = {});

/// Evaluates m_lambda on all of Lambda~_n^k and records the zeros. Throws
/// TheoremViolation if a zero appears for prime n and k = 1.
ConjectureReport explore_conjecture(int n, int k, const VerifyOptions& opts = {});

/// Concatenates failures and breakdowns; instance counts add up.
VerificationReport merge_reports(std::string suite, int n, int k,
                                 std::span<const VerificationReport> parts);

}  // namespace zmsp
