#include "doctest.h"

#include <zmsp/errors.hpp>
#include <zmsp/groupdet.hpp>
#include <zmsp/msp.hpp>

#include <thread>
#include <vector>

using namespace zmsp;

namespace {

BigInt coeff_of(const MonomialMap& m, std::vector<Part> parts, int n) {
  return m.coefficient(to_exponents(BoundedPartition(std::move(parts), n), n));
}

}  // namespace

TEST_SUITE("groupdet") {

TEST_CASE("Leibniz expansion of small cyclic groups") {
  const auto t3 = leibniz_determinant(3);
  CHECK(t3.size() == 4);
  CHECK(coeff_of(t3, {1, 1, 1}, 3) == 1);
  CHECK(coeff_of(t3, {2, 2, 2}, 3) == 1);
  CHECK(coeff_of(t3, {3, 3, 3}, 3) == 1);
  CHECK(coeff_of(t3, {1, 2, 3}, 3) == -3);
  CHECK(t3.to_string() == "x1^3 - 3*x1*x2*x3 + x2^3 + x3^3");

  const auto t1 = leibniz_determinant(1);
  CHECK(t1 == MonomialMap::monomial(1, 0, 1));
  const auto t2 = leibniz_determinant(2);
  CHECK(t2 == MonomialMap::monomial(2, 1, 2) + MonomialMap::monomial(2, 0, 2, -1));
  CHECK_THROWS_AS(leibniz_determinant(9), BudgetExceeded);
}

TEST_CASE("Leibniz expansion matches a symbolic determinant for Z/4Z") {
  const std::vector<std::pair<std::vector<Part>, long>> frozen{
      {{1, 1, 1, 1}, -1}, {{1, 1, 2, 4}, 4}, {{1, 1, 3, 3}, 2},  {{1, 2, 2, 3}, -4},
      {{1, 3, 4, 4}, -4}, {{2, 2, 2, 2}, 1}, {{2, 2, 4, 4}, -2}, {{2, 3, 3, 4}, 4},
      {{3, 3, 3, 3}, -1}, {{4, 4, 4, 4}, 1}};
  MonomialMap expected(4);
  for (const auto& [p, c] : frozen) expected.add_term(to_exponents(BoundedPartition(p, 4), 4), c);
  CHECK(leibniz_determinant(4) == expected);
  CHECK(dedekind_expand(4, 1) == expected);
}

TEST_CASE("character product expansion") {
  CHECK(dedekind_expand(3, 1) == leibniz_determinant(3));
  const auto t22 = dedekind_expand(2, 2);
  CHECK(t22.coefficient(ExponentVector{{2, 2}}) == -2);
  CHECK(t22.coefficient(ExponentVector{{2, 2}}) == msp_value_dp(std::vector<Part>{1, 1, 2, 2}, 2, 2));
  CHECK(dedekind_expand(1, 3) == MonomialMap::monomial(1, 0, 3));
  CHECK_THROWS_AS(dedekind_expand(7, 3, 100), BudgetExceeded);
}

TEST_CASE("character product equals the Leibniz determinant") {
  for (int n = 1; n <= 6; ++n) CHECK_MESSAGE(dedekind_expand(n, 1) == leibniz_determinant(n), "n=" << n);
}

TEST_CASE("powers multiply") {
  for (int n = 1; n <= 4; ++n) {
    const auto t1 = dedekind_expand(n, 1);
    CHECK(dedekind_expand(n, 2) == t1 * t1);
    CHECK(dedekind_expand(n, 3) == t1 * dedekind_expand(n, 2));
    CHECK(dedekind_expand(n, 3) == pow(t1, 3));
  }
}

TEST_CASE("every term has weight divisible by n and the right degree") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 2; ++k) {
      const auto m = dedekind_expand(n, k);
      CHECK(m.degree() == k * n);
      for (const auto& [e, c] : m.terms()) CHECK(e.weighted_sum() % n == 0);
    }
  }
}

TEST_CASE("coefficients equal the evaluated special values") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 2; ++k) {
      const auto m = dedekind_expand(n, k);
      for_each_partition(n, k * n, false, [&](const BoundedPartition& p) {
        CHECK(m.coefficient(to_exponents(p, n)) == msp_value_dp(p.parts(), n, k));
      });
    }
  }
}

TEST_CASE("coefficient lookup") {
  CHECK(coefficient(3, 1, BoundedPartition({1, 2, 3}, 3)) == -3);
  CHECK(coefficient(3, 1, BoundedPartition({3, 3, 3}, 3)) == 1);
  CHECK(coefficient(2, 1, BoundedPartition({1, 2}, 2)) == 0);
  (void)cached_expansion(3, 1);
  REQUIRE(find_cached_expansion(3, 1));
  CHECK(coefficient(3, 1, BoundedPartition({1, 2, 3}, 3)) == -3);
}

TEST_CASE("cache is shared across threads") {
  std::vector<std::shared_ptr<const MonomialMap>> got(6);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < got.size(); ++i) {
      pool.emplace_back([i, &got] { got[i] = cached_expansion(5, 2); });
    }
  }
  for (const auto& g : got) CHECK(g.get() == got[0].get());
  CHECK(*got[0] == dedekind_expand(5, 2));
}

TEST_CASE("term counts") {
  const auto c3 = count_terms(3, 1);
  CHECK(c3.nu == 4);
  CHECK(c3.lambda_tilde == 4);
  CHECK(c3.equal);
  const auto c2 = count_terms(2, 1);
  CHECK(c2.nu == 2);
  CHECK(c2.lambda_tilde == 2);
  CHECK(c2.equal);
  // symbolic expansion of the 6x6 determinant has 68 terms
  const auto c6 = count_terms(6, 1);
  CHECK(c6.nu == 68);
  CHECK(c6.lambda_tilde == 80);
  CHECK_FALSE(c6.equal);
}

TEST_CASE("prime term count formula") {
  CHECK(prime_term_count(2) == 2);
  CHECK(prime_term_count(3) == 4);
  CHECK(prime_term_count(5) == 26);
  CHECK(prime_term_count(7) == 246);
  for (int p : {2, 3, 5}) CHECK(count_terms(p, 1).nu == prime_term_count(p));
  CHECK_THROWS_AS(prime_term_count(4), UsageError);
}

TEST_CASE("unit relabelling fixes every power") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 2; ++k) {
      const auto m = dedekind_expand(n, k);
      for (long l = 1; l <= n; ++l) {
        if (gcd(l, n) == 1) CHECK(apply_automorphism(m, l) == m);
      }
    }
  }
  // a non-symmetric polynomial moves
  const auto x1 = MonomialMap::monomial(3, 0, 1);
  CHECK(apply_automorphism(x1, 2) == MonomialMap::monomial(3, 1, 1));
  CHECK_THROWS_AS(apply_automorphism(x1, 3), UsageError);
}

}  // TEST_SUITE
