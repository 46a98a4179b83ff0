#include "doctest.h"
#include "oracle.hpp"

#include <zmsp/errors.hpp>
#include <zmsp/msp.hpp>

#include <random>
#include <vector>

using namespace zmsp;

namespace {

using Parts = std::vector<Part>;

BigInt naive(const Parts& p, int n, int k) { return msp_value_naive(p, n, k); }
BigInt dp(const Parts& p, int n, int k) { return msp_value_dp(p, n, k); }

Parts block(long v1, int a, long v2, int b) {
  Parts p(static_cast<std::size_t>(a), v1);
  p.insert(p.end(), static_cast<std::size_t>(b), v2);
  return p;
}

BigInt factorial_product(const Parts& p) { return stabilizer_order(p); }

}  // namespace

TEST_SUITE("msp") {

TEST_CASE("permutation oracle examples") {
  CHECK(naive({1, 1, 1}, 3, 1) == 1);
  CHECK(naive({1, 2, 3}, 3, 1) == -3);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k * n <= 9; ++k) {
      CHECK(naive(Parts(static_cast<std::size_t>(k * n), n), n, k) == 1);
    }
  }
  CHECK(naive({1, 1, 2, 2}, 2, 2) == -2);
  CHECK(naive({2, 1, 2, 1}, 2, 2) == -2);
}

TEST_CASE("DP examples") {
  CHECK(dp({2, 2, 2}, 3, 1) == 1);
  CHECK(dp({1, 2}, 2, 1) == 0);
  CHECK(dp({1, 1}, 2, 1) == -1);
  CHECK(dp({1, 1, 2, 2}, 2, 2) == -2);
}

TEST_CASE("values frozen from a symbolic determinant expansion") {
  // coefficients of det(x_{i-j}) for Z/4Z and of Theta(Z/3Z)^2, computed
  // independently by computer algebra
  const std::vector<std::pair<Parts, long>> n4{
      {{1, 1, 1, 1}, -1}, {{1, 1, 2, 4}, 4}, {{1, 1, 3, 3}, 2},  {{1, 2, 2, 3}, -4},
      {{1, 3, 4, 4}, -4}, {{2, 2, 2, 2}, 1}, {{2, 2, 4, 4}, -2}, {{2, 3, 3, 4}, 4},
      {{3, 3, 3, 3}, -1}, {{4, 4, 4, 4}, 1}};
  for (const auto& [p, v] : n4) {
    CHECK(dp(p, 4, 1) == v);
    CHECK(naive(p, 4, 1) == v);
  }
  const std::vector<std::pair<Parts, long>> n3k2{
      {{1, 1, 1, 1, 1, 1}, 1},  {{1, 1, 1, 1, 2, 3}, -6}, {{1, 1, 1, 2, 2, 2}, 2},
      {{1, 1, 1, 3, 3, 3}, 2},  {{1, 1, 2, 2, 3, 3}, 9},  {{1, 2, 2, 2, 2, 3}, -6},
      {{1, 2, 3, 3, 3, 3}, -6}, {{2, 2, 2, 2, 2, 2}, 1},  {{2, 2, 2, 3, 3, 3}, 2},
      {{3, 3, 3, 3, 3, 3}, 1}};
  for (const auto& [p, v] : n3k2) CHECK(dp(p, 3, 2) == v);
  CHECK(dp({1, 2, 3, 6, 6, 6}, 6, 1) == 12);
  CHECK(dp({1, 1, 2, 4, 4, 6}, 6, 1) == 0);
  CHECK(dp({1, 1, 1, 1, 3, 3, 3, 3}, 4, 2) == 6);
}

TEST_CASE("zero parts and n parts are different shapes") {
  CHECK(dp({0, 2}, 2, 1) == 2);
  CHECK(dp({2, 2}, 2, 1) == 1);
  CHECK(naive({0, 2}, 2, 1) == 2);
}

TEST_CASE("DP agrees with the permutation oracle on the zero-padded family") {
  const std::vector<std::pair<int, int>> cases{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2},
                                               {4, 1}, {2, 3}, {4, 2}, {3, 3}, {5, 1}};
  for (auto [n, k] : cases) {
    for_each_partition(n, k * n, true, [&](const BoundedPartition& p) {
      const BigInt d = dp(p.parts(), n, k);
      CHECK_MESSAGE(d == naive(p.parts(), n, k), "n=" << n << " k=" << k << " " << p.to_string());
    });
  }
}

TEST_CASE("DP agrees with a floating-point evaluation") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {6, 1}, {7, 1}}) {
    for_each_partition(n, k * n, false, [&](const BoundedPartition& p) {
      CHECK(dp(p.parts(), n, k) == oracle::msp_rounded(p.parts(), n));
    });
  }
}

TEST_CASE("exact values before readout match between routes") {
  for (const Parts& p : {Parts{0, 1, 1, 3}, Parts{1, 2, 3, 3}, Parts{-1, 4, 4, 4}}) {
    CHECK(msp_cyclotomic_naive(p, 4) == msp_cyclotomic_dp(p, 4));
  }
}

TEST_CASE("values vanish when n does not divide the weight") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for_each_partition(n, k * n, true, [&](const BoundedPartition& p) {
        if (p.weight() % n != 0) CHECK(dp(p.parts(), n, k) == 0);
      });
    }
  }
}

TEST_CASE("residue reduction: equal when residues stay distinct, stabilizer-weighted otherwise") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<Part> d(-12, 12);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 5;
    const int k = 1 + (trial / 5) % 2;
    Parts p(static_cast<std::size_t>(k * n));
    for (auto& x : p) x = d(rng);
    const auto canon = canonical_residues(p, n);
    const BigInt a = dp(p, n, k), b = dp(canon.parts(), n, k);
    // the sum over all of S_N is invariant; distinct-permutation sums are
    // rescaled by the stabilizer sizes
    CHECK(a * factorial_product(p) == b * factorial_product(canon.parts()));
    if (factorial_product(p) == factorial_product(canon.parts())) CHECK(a == b);
  }
  // collisions change the distinct-permutation value
  CHECK(dp({1, 3}, 2, 1) == -2);
  CHECK(dp({1, 1}, 2, 1) == -1);
}

TEST_CASE("instance validation and guards") {
  CHECK_THROWS_AS(EvalInstance::make(Parts{1, 2}, 3, 1), UsageError);
  CHECK_THROWS_AS(EvalInstance::make(Parts{1, 2, 4}, 3, 1), UsageError);
  CHECK_THROWS_AS(EvalInstance::make(Parts{1, 2, 3}, 3, 0), UsageError);
  const auto inst = EvalInstance::make(Parts{3, 2, 1}, 3, 1);
  CHECK(inst.lambda.to_string() == "1,2,3");
  CHECK(msp_value_dp(inst) == msp_value_naive(inst));
  CHECK_THROWS_AS(naive(Parts(10, 1), 5, 2), BudgetExceeded);
  CHECK_THROWS_AS(msp_value_dp(Parts{1, 2, 3, 4, 5, 6}, 6, 1, 10), BudgetExceeded);
  CHECK(msp_value_dp(Parts{1, 2, 3, 4, 5, 6}, 6, 1, 10'000) == msp_value_dp(Parts{1, 2, 3, 4, 5, 6}, 6, 1));
}

TEST_CASE("two-block closed form") {
  CHECK(closed_form_two_blocks(1, 2, 2, 2) == -2);
  CHECK(dp({1, 1, 2, 2}, 2, 2) == -2);
  CHECK(closed_form_two_blocks(1, 1, 3, 1) == 0);
  CHECK(closed_form_two_blocks(2, 2, 4, 1) == -2);
  CHECK(dp({2, 2, 4, 4}, 4, 1) == -2);
  CHECK(closed_form_two_blocks(1, 2, 2, 1) == -1);
  CHECK_THROWS_AS(closed_form_two_blocks(4, 1, 4, 1), UsageError);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (long l1 = 1; l1 < n; ++l1) {
        for (int a = 0; a <= k * n; ++a) {
          const BigInt cf = closed_form_two_blocks(l1, a, n, k);
          CHECK(cf == dp(block(l1, a, n, k * n - a), n, k));
          if ((l1 * a) % n == 0) CHECK(cf != 0);
        }
      }
    }
  }
}

TEST_CASE("two distinct values reduce to two blocks") {
  const auto r1 = reduce_two_distinct(1, 2, 1, 2, 1);
  CHECK(r1.sign == -1);
  CHECK(r1.reduced.lambda.parts() == Parts{1, 2});
  const auto r2 = reduce_two_distinct(2, 3, 2, 3, 1);
  CHECK(r2.sign == 1);
  CHECK(r2.reduced.lambda.parts() == Parts{1, 3, 3});
  CHECK(dp({2, 2, 3}, 3, 1) == dp({1, 3, 3}, 3, 1));
  for (int n = 2; n <= 6; ++n) CHECK(reduce_two_distinct(n, 1, 1, n, 1).sign == 1);
  CHECK_THROWS_AS(reduce_two_distinct(1, 4, 1, 3, 1), UsageError);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (long l1 = 1; l1 <= n; ++l1) {
        for (long l2 = 1; l2 <= n; ++l2) {
          if (l1 == l2) continue;
          for (int a = 0; a <= k * n; ++a) {
            const auto r = reduce_two_distinct(l1, l2, a, n, k);
            CHECK(dp(block(l1, a, l2, k * n - a), n, k) == r.sign * msp_value_dp(r.reduced));
          }
        }
      }
    }
  }
}

TEST_CASE("pattern shapes") {
  const auto m1 = mansfield_match(Parts{1, 2, 3, 3, 3, 3}, 3, 2);
  REQUIRE(m1);
  CHECK(m1->shape == MansfieldShape::kPair);
  CHECK(m1->value == -3);
  // the evaluated value carries a factor k beyond the group-determinant case
  CHECK(dp({1, 2, 3, 3, 3, 3}, 3, 2) == -6);

  const auto m2 = mansfield_match(Parts{1, 1, 1}, 3, 1);
  REQUIRE(m2);
  CHECK(m2->shape == MansfieldShape::kTripleEqual);
  CHECK(m2->value == 1);
  CHECK_FALSE(mansfield_match(Parts{2, 2, 2, 2}, 2, 2));
  const auto m4 = mansfield_match(Parts{1, 2, 3, 6, 6, 6}, 6, 1);
  REQUIRE(m4);
  CHECK(m4->shape == MansfieldShape::kDistinctTriple);
  CHECK(m4->value == 12);
  CHECK(to_string(MansfieldShape::kPairPlusOne) == "pair_plus_one");
  CHECK(mansfield_coefficient(EvalInstance::make(Parts{2, 2, 4, 4}, 4, 1)) == -2);
  CHECK(mansfield_coefficient(EvalInstance::make(Parts{1, 3, 4, 4}, 4, 1)) == -4);
  CHECK_FALSE(mansfield_coefficient(EvalInstance::make(Parts{1, 1, 1, 1}, 4, 1)));
}

TEST_CASE("pattern values hold for the plain group determinant") {
  for (int n = 2; n <= 8; ++n) {
    for_each_partition(n, n, false, [&](const BoundedPartition& p) {
      if (auto m = mansfield_match(p.parts(), n, 1)) {
        CHECK_MESSAGE(dp(p.parts(), n, 1) == m->value, "n=" << n << " " << p.to_string());
      }
    });
  }
}

TEST_CASE("closed-form dispatcher") {
  const auto v1 = closed_form_value(Parts{1, 2, 3}, 3, 1);
  REQUIRE(v1);
  CHECK(v1->value == -3);
  const auto v2 = closed_form_value(Parts{1, 1, 2}, 3, 1);
  REQUIRE(v2);
  CHECK(v2->form == "weight_not_divisible");
  CHECK(v2->value == 0);
  const auto v3 = closed_form_value(Parts{1, 1, 2, 2}, 2, 2);
  REQUIRE(v3);
  CHECK(v3->form == "two_blocks");
  CHECK(v3->value == -2);
  const auto v4 = closed_form_value(Parts{1, 1, 1, 2, 2, 2}, 3, 2);
  REQUIRE(v4);
  CHECK(v4->form == "two_distinct_reduction");
  CHECK(v4->value == dp({1, 1, 1, 2, 2, 2}, 3, 2));
  // pattern shapes are only used for k = 1
  CHECK_FALSE(closed_form_value(Parts{1, 2, 3, 3, 3, 3}, 3, 2));
  CHECK_FALSE(closed_form_value(Parts{1, 1, 2, 2, 3, 3}, 3, 2));
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for_each_partition(n, k * n, false, [&](const BoundedPartition& p) {
        if (auto v = closed_form_value(p.parts(), n, k)) CHECK(v->value == dp(p.parts(), n, k));
      });
    }
  }
}

TEST_CASE("prime non-vanishing test") {
  CHECK(prime_nonvanishing(Parts{1, 2, 3}, 3));
  CHECK(dp({1, 2, 3}, 3, 1) == -3);
  CHECK_FALSE(prime_nonvanishing(Parts{1, 1, 2}, 3));
  CHECK(dp({1, 1, 2}, 3, 1) == 0);
  for (int p : {2, 3, 5, 7}) {
    const Parts all_p(static_cast<std::size_t>(p), p);
    CHECK(prime_nonvanishing(all_p, p));
    CHECK(dp(all_p, p, 1) == 1);
  }
  CHECK_THROWS_AS(prime_nonvanishing(Parts{1, 2, 3, 4}, 4), UsageError);
}

TEST_CASE("scaling by units") {
  CHECK(scale_partition(Parts{1, 2, 3}, 2, 3).parts() == Parts{1, 2, 3});
  CHECK(scale_partition(Parts{1, 1}, 1, 2).parts() == Parts{1, 1});
  CHECK(scale_partition(Parts{1, 1, 2, 2}, 3, 4).parts() == Parts{2, 2, 3, 3});
  CHECK(dp({1, 1, 2, 2}, 4, 1) == dp({2, 2, 3, 3}, 4, 1));
  CHECK_THROWS_AS(scale_partition(Parts{1, 1}, 2, 4), UsageError);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for_each_partition(n, k * n, false, [&](const BoundedPartition& p) {
        for (long l = 1; l < n; ++l) {
          if (gcd(l, n) != 1) continue;
          CHECK(dp(scale_partition(p.parts(), l, n).parts(), n, k) == dp(p.parts(), n, k));
        }
      });
    }
  }
}

TEST_CASE("elementary and power sums at the special point") {
  const auto pts = specialization_points(2, 2);
  REQUIRE(pts.size() == 4);
  CHECK(elementary_symmetric(2, pts, 2).to_integer() == -2);
  CHECK(elementary_symmetric(0, pts, 2).to_integer() == 1);
  CHECK(elementary_symmetric(5, pts, 2).to_integer() == 0);
  CHECK(power_sum(2, pts, 2).to_integer() == 4);
  CHECK(power_sum(1, pts, 2).to_integer() == 0);
  // Newton: 2 e_2 = e_1^2 - p_2
  const auto e1 = elementary_symmetric(1, pts, 2);
  CHECK(elementary_symmetric(2, pts, 2) * BigInt(2) == mul(e1, e1) - power_sum(2, pts, 2));
  CHECK(e_product(Parts{1, 2}, pts, 2).to_integer() == 0);
  CHECK(e_product(Parts{2, 2}, pts, 2).to_integer() == 4);
}

TEST_CASE("formal elementary symmetric polynomials") {
  const auto e2 = elementary_symmetric_formal(2, 3);
  CHECK(e2.size() == 3);
  CHECK(e2.degree() == 2);
  CHECK(e2.coefficient(ExponentVector{{1, 1, 0}}) == 1);
  CHECK(elementary_symmetric_formal(0, 3) == MonomialMap::constant(3, 1));
  CHECK(elementary_symmetric_formal(4, 3).is_zero());
  const auto prod = e_product_formal(Parts{1, 1}, 2);
  CHECK(prod.to_string() == "x1^2 + 2*x1*x2 + x2^2");
}

}  // TEST_SUITE
