#include <zmsp/groupdet.hpp>

#include <zmsp/cyclotomic.hpp>
#include <zmsp/errors.hpp>
#include <zmsp/msp.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace zmsp {

namespace {

long representative(long a, long n) {
  const long r = mod_floor(a, n);
  return r == 0 ? n : r;
}

}  // namespace

MonomialMap leibniz_determinant(int n) {
  if (n < 1) throw UsageError("leibniz_determinant: n must be >= 1");
  if (n > kLeibnizMaxOrder) {
    throw BudgetExceeded("leibniz_determinant limited to n <= " + std::to_string(kLeibnizMaxOrder));
  }
  MonomialMap det(n);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  ExponentVector e{std::vector<int>(static_cast<std::size_t>(n), 0)};
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += sigma[i] > sigma[j];
    }
    std::fill(e.exps.begin(), e.exps.end(), 0);
    for (int i = 1; i <= n; ++i) {
      ++e.exps[static_cast<std::size_t>(representative(i - sigma[static_cast<std::size_t>(i - 1)], n) - 1)];
    }
    det.add_term(e, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

MonomialMap dedekind_expand(int n, int k, std::size_t monomial_budget) {
  if (n < 1 || k < 1) throw UsageError("dedekind_expand: need n, k >= 1");
  if (monomial_budget == 0) monomial_budget = default_budget();
  const BigInt final_terms = binomial(static_cast<long>(k) * n + n - 1, n - 1);
  if (final_terms > BigInt(static_cast<unsigned long>(monomial_budget))) {
    throw BudgetExceeded("expansion of Theta(Z/" + std::to_string(n) + "Z)^" + std::to_string(k) +
                         " needs up to " + final_terms.get_str() + " monomials, budget is " +
                         std::to_string(monomial_budget));
  }

  using Working = std::map<std::vector<int>, CyclotomicInt>;
  Working current;
  current.emplace(std::vector<int>(static_cast<std::size_t>(n), 0),
                  CyclotomicInt::from_integer(n, 1));
  for (int rep = 0; rep < k; ++rep) {
    for (int character = 1; character <= n; ++character) {
      Working next;
      for (const auto& [exps, coeff] : current) {
        std::vector<int> key = exps;
        for (int j = 1; j <= n; ++j) {
          auto& slot = key[static_cast<std::size_t>(j - 1)];
          ++slot;
          auto it = next.try_emplace(key, n).first;
          it->second.add_rotated(coeff, static_cast<long>(character) * j);
          --slot;
        }
      }
      current = std::move(next);
    }
  }

  MonomialMap result(n);
  for (auto& [exps, coeff] : current) {
    const BigInt c = coeff.to_integer();
    if (c != 0) result.add_term(ExponentVector{exps}, c);
  }
  return result;
}

namespace {

struct ExpansionCache {
  std::mutex mutex;
  std::map<std::pair<int, int>, std::shared_ptr<const MonomialMap>> entries;
};

ExpansionCache& expansion_cache() {
  static ExpansionCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const MonomialMap> find_cached_expansion(int n, int k) {
  auto& cache = expansion_cache();
  std::lock_guard lock(cache.mutex);
  auto it = cache.entries.find({n, k});
  return it == cache.entries.end() ? nullptr : it->second;
}

std::shared_ptr<const MonomialMap> cached_expansion(int n, int k, std::size_t monomial_budget) {
  if (auto hit = find_cached_expansion(n, k)) return hit;
  auto computed = std::make_shared<const MonomialMap>(dedekind_expand(n, k, monomial_budget));
  auto& cache = expansion_cache();
  std::lock_guard lock(cache.mutex);
  return cache.entries.try_emplace({n, k}, std::move(computed)).first->second;
}

BigInt coefficient(int n, int k, const BoundedPartition& lambda) {
  if (n < 1 || k < 1) throw UsageError("coefficient: need n, k >= 1");
  if (lambda.size() != static_cast<std::size_t>(k * n) || !lambda.positive_parts() ||
      (!lambda.empty() && lambda.parts().back() > n)) {
    throw UsageError("coefficient: (" + lambda.to_string() + ") is not in Lambda_" +
                     std::to_string(n) + "^" + std::to_string(k));
  }
  if (auto expansion = find_cached_expansion(n, k)) {
    return expansion->coefficient(to_exponents(lambda, n));
  }
  return msp_value_dp(lambda.parts(), n, k);
}

TermCount count_terms(int n, int k, std::size_t monomial_budget) {
  const auto expansion = cached_expansion(n, k, monomial_budget);
  TermCount tc;
  tc.nu = static_cast<unsigned long>(expansion->size());
  tc.lambda_tilde = lambda_tilde_size(n, k);
  tc.equal = tc.nu == tc.lambda_tilde;
  ZMSP_CHECK(tc.nu <= tc.lambda_tilde, "more terms than Lambda~ members");
  return tc;
}

BigInt prime_term_count(int p) {
  if (!is_prime(p)) throw UsageError("prime_term_count: " + std::to_string(p) + " is not prime");
  const BigInt numerator = BigInt(p - 1) + binomial(2L * p - 1, p - 1);
  BigInt q, r;
  const BigInt denom = p;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(), denom.get_mpz_t());
  ZMSP_CHECK(r == 0, "prime term count: inexact division by p");
  return q;
}

MonomialMap apply_automorphism(const MonomialMap& poly, long l) {
  const int n = poly.n_vars();
  if (gcd(l, n) != 1) throw UsageError("apply_automorphism: l must be coprime to n");
  MonomialMap image(n);
  ExponentVector e{std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (const auto& [exps, c] : poly.terms()) {
    std::fill(e.exps.begin(), e.exps.end(), 0);
    for (int i = 1; i <= n; ++i) {
      e.exps[static_cast<std::size_t>(representative(l * i, n) - 1)] += exps.exps[static_cast<std::size_t>(i - 1)];
    }
    image.add_term(e, c);
  }
  return image;
}

}  // namespace zmsp
