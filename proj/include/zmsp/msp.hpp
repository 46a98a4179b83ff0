#pragma once

// Special values m_lambda(zeta_(n,k)) of monomial symmetric polynomials at
// zeta_(n,k) = (1, zeta_n, ..., zeta_n^(kn-1)).
//
// Three independent routes:
//   * msp_value_naive: sum over distinct permutations of lambda (oracle),
//   * msp_value_dp: position-by-position DP over residual multiplicities,
//   * closed forms for special shapes (two blocks, two distinct values,
//     shapes with trailing n parts).
//
// Evaluators accept any integer sequence of length kn. Parts are used as
// given: 0 and n are different parts (they change the set of distinct
// permutations) even though zeta^0 = zeta^n.

#include <zmsp/bigint.hpp>
#include <zmsp/cyclotomic.hpp>
#include <zmsp/monomial_map.hpp>
#include <zmsp/partitions.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zmsp {

/// lambda of length k*n with parts in 0..n, evaluated at zeta_(n,k).
struct EvalInstance {
  BoundedPartition lambda;
  int n = 1;
  int k = 1;

  /// Validates length == k*n and parts in 0..n; throws UsageError.
  static EvalInstance make(BoundedPartition lambda, int n, int k);
  static EvalInstance make(std::span<const Part> parts, int n, int k);
};

inline constexpr std::size_t kNaiveMaxLength = 9;
inline constexpr std::size_t kDefaultStateBudget = 10'000'000;

/// Default state/monomial budget; honours the ZMSP_BUDGET environment variable.
std::size_t default_budget();

/// Sum over the distinct permutations mu of lambda of prod_j zeta^(mu_j * j),
/// j = 0..kn-1, as an element of Z[zeta_n] (no integer readout).
CyclotomicInt msp_cyclotomic_naive(std::span<const Part> lambda, int n);
/// Same quantity via the multiset DP.
CyclotomicInt msp_cyclotomic_dp(std::span<const Part> lambda, int n,
                                std::size_t state_budget = default_budget());

/// Oracle. Throws BudgetExceeded when kn > 9, IntegralityViolation on a
/// non-integer readout.
BigInt msp_value_naive(std::span<const Part> lambda, int n, int k);
BigInt msp_value_naive(const EvalInstance& inst);

/// Throws BudgetExceeded when prod_i (lambda[i] + 1) exceeds state_budget.
BigInt msp_value_dp(std::span<const Part> lambda, int n, int k,
                    std::size_t state_budget = default_budget());
BigInt msp_value_dp(const EvalInstance& inst, std::size_t state_budget = default_budget());

/// lambda = (lambda1^a, n^(kn-a)) with n not dividing lambda1:
/// (-1)^(a + ad/n) binom(kd, ad/n) when (n/d) | a, else 0, where d = gcd(lambda1, n).
BigInt closed_form_two_blocks(long lambda1, int a, int n, int k);

struct TwoDistinctReduction {
  int sign = 1;
  EvalInstance reduced;
};

/// lambda = (lambda1^a, lambda2^(kn-a)) with n not dividing lambda2 - lambda1
/// reduces to sign * m_{lambda'} with lambda' = ((lambda2-lambda1)^(kn-a), n^a),
/// sign = (-1)^(k(n+1)lambda1). lambda' is returned in canonical residues.
TwoDistinctReduction reduce_two_distinct(long lambda1, long lambda2, int a, int n, int k);

enum class MansfieldShape {
  kPair,          // (l1, l2, n^(kn-2)), n | l1 + l2
  kTripleEqual,   // (l1, l1, l1, n^(kn-3)), n | 3 l1
  kPairPlusOne,   // (l1, l1, l2, n^(kn-3)), n | 2 l1 + l2
  kDistinctTriple // (l1, l2, l3, n^(kn-3)), n | l1 + l2 + l3
};

struct MansfieldMatch {
  MansfieldShape shape;
  BigInt value;
};

std::string_view to_string(MansfieldShape shape);

/// Pattern match of canonical_residues(lambda) against the four shapes above;
/// values -n/2 or -n, n/3, n, 2n. nullopt when no shape matches.
std::optional<MansfieldMatch> mansfield_match(std::span<const Part> lambda, int n, int k);
std::optional<BigInt> mansfield_coefficient(const EvalInstance& inst);

struct ClosedFormValue {
  BigInt value;
  std::string form;  // which closed form produced it
};

/// Value of m_lambda(zeta_(n,k)) for canonical_residues(lambda) from the first
/// applicable closed form: vanishing weight, two blocks, two-distinct-value
/// reduction, or (k = 1 only) a pattern shape with trailing n parts. nullopt when none applies.
std::optional<ClosedFormValue> closed_form_value(std::span<const Part> lambda, int n, int k);

/// |lambda| = 0 mod p for a length-p sequence; p must be prime.
bool prime_nonvanishing(std::span<const Part> lambda, int p);

/// canonical_residues(l * lambda); requires gcd(l, n) = 1.
BoundedPartition scale_partition(std::span<const Part> lambda, long l, int n);

/// e_r(points) via prod_i (1 + t x_i); e_0 = 1, e_r = 0 for r > #points.
CyclotomicInt elementary_symmetric(int r, std::span<const CyclotomicInt> points, int order);
/// prod_i e_{lambda_i}(points).
CyclotomicInt e_product(std::span<const Part> lambda, std::span<const CyclotomicInt> points,
                        int order);
/// p_r(points) = sum_i x_i^r.
CyclotomicInt power_sum(int r, std::span<const CyclotomicInt> points, int order);

/// e_r(x_1, ..., x_{n_vars}) as a formal polynomial.
MonomialMap elementary_symmetric_formal(int r, int n_vars);
/// prod_i e_{lambda_i}(x_1..x_{n_vars}).
MonomialMap e_product_formal(std::span<const Part> lambda, int n_vars);

/// The specialization point zeta_(n,k) as kn elements of Z[zeta_n].
std::vector<CyclotomicInt> specialization_points(int n, int k);

}  // namespace zmsp
