#pragma once

// Group determinant of Z/nZ = {1, ..., n} (n is the identity) and its powers.
//
// Theta(Z/nZ)^k is expanded as the product of kn linear forms
// sum_j zeta^(ij) x_j (each character i = 1..n repeated k times) with
// coefficients in Z[zeta_n]; every final coefficient is read out as an
// integer. The Leibniz expansion of det(x_{g h^-1}) is the independent oracle
// for k = 1.

#include <zmsp/bigint.hpp>
#include <zmsp/monomial_map.hpp>
#include <zmsp/partitions.hpp>

#include <cstddef>
#include <memory>

namespace zmsp {

inline constexpr int kLeibnizMaxOrder = 8;

/// sum_sigma sgn(sigma) prod_i x_{(i - sigma(i)) mod n}, representatives 1..n.
/// Throws BudgetExceeded for n > 8.
MonomialMap leibniz_determinant(int n);

/// Theta(Z/nZ)^k. Throws BudgetExceeded when binom(kn + n - 1, n - 1) exceeds
/// the monomial budget, IntegralityViolation on a non-integer coefficient.
MonomialMap dedekind_expand(int n, int k, std::size_t monomial_budget = 0);

/// Cached dedekind_expand(n, k) (computed on first use; thread-safe).
std::shared_ptr<const MonomialMap> cached_expansion(int n, int k, std::size_t monomial_budget = 0);
/// The cached expansion if one exists, else nullptr.
std::shared_ptr<const MonomialMap> find_cached_expansion(int n, int k);

/// c_lambda in Theta(Z/nZ)^k for lambda in Lambda_n^k: read from the cached
/// expansion when present, otherwise evaluated by the multiset DP.
BigInt coefficient(int n, int k, const BoundedPartition& lambda);

struct TermCount {
  BigInt nu;            // nonzero terms of Theta^k
  BigInt lambda_tilde;  // |Lambda~_n^k|
  bool equal = false;
};

TermCount count_terms(int n, int k, std::size_t monomial_budget = 0);

/// (1/p)(p - 1 + binom(2p - 1, p - 1)); p must be prime.
BigInt prime_term_count(int p);

/// Image of a polynomial in x_1..x_n under x_i -> x_{l*i mod n} (representative
/// in 1..n); requires gcd(l, n) = 1.
MonomialMap apply_automorphism(const MonomialMap& poly, long l);

}  // namespace zmsp
