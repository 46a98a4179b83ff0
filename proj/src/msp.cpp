#include <zmsp/msp.hpp>

#include <zmsp/errors.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace zmsp {

std::size_t default_budget() {
  if (const char* env = std::getenv("ZMSP_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultStateBudget;
}

EvalInstance EvalInstance::make(BoundedPartition lambda, int n, int k) {
  if (n < 1 || k < 1) throw UsageError("EvalInstance: need n >= 1 and k >= 1");
  if (lambda.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(n)) {
    throw UsageError("EvalInstance: lambda=(" + lambda.to_string() + ") must have length k*n = " +
                     std::to_string(k * n));
  }
  if (lambda.bound() != n) lambda = BoundedPartition(lambda.parts(), n);
  return EvalInstance{std::move(lambda), n, k};
}

EvalInstance EvalInstance::make(std::span<const Part> parts, int n, int k) {
  return make(BoundedPartition(std::vector<Part>(parts.begin(), parts.end()), n), n, k);
}

namespace {

void require_length(std::span<const Part> lambda, int n, int k) {
  if (n < 1 || k < 1) throw UsageError("need n >= 1 and k >= 1");
  if (lambda.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(n)) {
    throw UsageError("lambda must have length k*n = " + std::to_string(k * n) + ", got " +
                     std::to_string(lambda.size()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Naive oracle

CyclotomicInt msp_cyclotomic_naive(std::span<const Part> lambda, int n) {
  if (lambda.size() > kNaiveMaxLength) {
    throw BudgetExceeded("naive evaluation limited to length <= " +
                         std::to_string(kNaiveMaxLength) + ", got " +
                         std::to_string(lambda.size()));
  }
  std::vector<Part> mu(lambda.begin(), lambda.end());
  std::sort(mu.begin(), mu.end());
  std::vector<unsigned long> counts(static_cast<std::size_t>(n), 0);
  do {
    long e = 0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      e = mod_floor(e + mod_floor(mu[j], n) * static_cast<long>(j), n);
    }
    ++counts[static_cast<std::size_t>(e)];
  } while (std::next_permutation(mu.begin(), mu.end()));

  std::vector<BigInt> residues(counts.begin(), counts.end());
  return CyclotomicInt(n, std::move(residues));
}

BigInt msp_value_naive(std::span<const Part> lambda, int n, int k) {
  require_length(lambda, n, k);
  return msp_cyclotomic_naive(lambda, n).to_integer();
}

BigInt msp_value_naive(const EvalInstance& inst) {
  return msp_value_naive(inst.lambda.parts(), inst.n, inst.k);
}

// ---------------------------------------------------------------------------
// Multiset DP
//
// Positions j = 0..L-1 are filled in order. A state records how many copies
// of each distinct part value have been placed; it is encoded in mixed radix
// (digit t ranges over 0..count_t). Every transition increases the index, so
// a single ascending sweep visits each state after all its predecessors.

CyclotomicInt msp_cyclotomic_dp(std::span<const Part> lambda, int n, std::size_t state_budget) {
  const Multiplicities mult = multiplicities(lambda);
  std::vector<long> value_exp;  // part value mod n
  std::vector<std::size_t> count;
  for (const auto& [value, c] : mult) {
    value_exp.push_back(mod_floor(value, n));
    count.push_back(c);
  }
  const std::size_t d = count.size();

  std::vector<std::size_t> stride(d + 1, 1);
  for (std::size_t t = 0; t < d; ++t) {
    if (stride[t] > state_budget / (count[t] + 1)) {
      throw BudgetExceeded("DP state count exceeds budget of " + std::to_string(state_budget) +
                           " states");
    }
    stride[t + 1] = stride[t] * (count[t] + 1);
  }
  const std::size_t total = stride[d];
  if (total > state_budget) {
    throw BudgetExceeded("DP state count " + std::to_string(total) + " exceeds budget of " +
                         std::to_string(state_budget));
  }

  const auto width = static_cast<std::size_t>(n);
  std::vector<std::vector<BigInt>> dp(total);
  dp[0].assign(width, 0);
  dp[0][0] = 1;

  std::vector<std::size_t> digit(d, 0);
  for (std::size_t idx = 0; idx + 1 < total; ++idx) {
    // digit[] tracks the mixed-radix decoding of idx.
    if (idx > 0) {
      for (std::size_t t = 0; t < d; ++t) {
        if (++digit[t] <= count[t]) break;
        digit[t] = 0;
      }
    }
    if (dp[idx].empty()) continue;
    const long position = static_cast<long>(std::accumulate(digit.begin(), digit.end(), std::size_t{0}));
    const std::vector<BigInt>& src = dp[idx];
    for (std::size_t t = 0; t < d; ++t) {
      if (digit[t] == count[t]) continue;
      std::vector<BigInt>& dst = dp[idx + stride[t]];
      if (dst.empty()) dst.assign(width, 0);
      const auto shift = static_cast<std::size_t>(mod_floor(value_exp[t] * position, n));
      for (std::size_t i = 0; i < width; ++i) {
        if (src[i] == 0) continue;
        std::size_t j = i + shift;
        if (j >= width) j -= width;
        dst[j] += src[i];
      }
    }
    std::vector<BigInt>().swap(dp[idx]);
  }
  std::vector<BigInt> result = std::move(dp[total - 1]);
  if (result.empty()) result.assign(width, 0);
  return CyclotomicInt(n, std::move(result));
}

BigInt msp_value_dp(std::span<const Part> lambda, int n, int k, std::size_t state_budget) {
  require_length(lambda, n, k);
  return msp_cyclotomic_dp(lambda, n, state_budget).to_integer();
}

BigInt msp_value_dp(const EvalInstance& inst, std::size_t state_budget) {
  return msp_value_dp(inst.lambda.parts(), inst.n, inst.k, state_budget);
}

// ---------------------------------------------------------------------------
// Closed forms

BigInt closed_form_two_blocks(long lambda1, int a, int n, int k) {
  if (n < 1 || k < 1) throw UsageError("closed_form_two_blocks: need n, k >= 1");
  if (mod_floor(lambda1, n) == 0) {
    throw UsageError("closed_form_two_blocks: n must not divide lambda1");
  }
  if (a < 0 || a > k * n) throw UsageError("closed_form_two_blocks: need 0 <= a <= kn");
  const long d = gcd(lambda1, n);
  const long period = n / d;  // multiplicative order of zeta^lambda1
  if (a % period != 0) return 0;
  const long t = a / period;  // = a*d/n
  BigInt value = binomial(static_cast<long>(k) * d, t);
  if ((a + t) % 2 != 0) value = -value;
  return value;
}

TwoDistinctReduction reduce_two_distinct(long lambda1, long lambda2, int a, int n, int k) {
  if (n < 1 || k < 1) throw UsageError("reduce_two_distinct: need n, k >= 1");
  if (mod_floor(lambda2 - lambda1, n) == 0) {
    throw UsageError("reduce_two_distinct: n must not divide lambda2 - lambda1");
  }
  if (a < 0 || a > k * n) throw UsageError("reduce_two_distinct: need 0 <= a <= kn");
  const long exponent_parity = (k % 2) * ((n + 1) % 2) * mod_floor(lambda1, 2);
  std::vector<Part> reduced(static_cast<std::size_t>(k * n - a), lambda2 - lambda1);
  reduced.insert(reduced.end(), static_cast<std::size_t>(a), n);
  return {exponent_parity == 0 ? 1 : -1, EvalInstance::make(canonical_residues(reduced, n), n, k)};
}

std::string_view to_string(MansfieldShape shape) {
  switch (shape) {
    case MansfieldShape::kPair: return "pair";
    case MansfieldShape::kTripleEqual: return "triple_equal";
    case MansfieldShape::kPairPlusOne: return "pair_plus_one";
    case MansfieldShape::kDistinctTriple: return "distinct_triple";
  }
  return "?";
}

std::optional<MansfieldMatch> mansfield_match(std::span<const Part> lambda, int n, int k) {
  require_length(lambda, n, k);
  const BoundedPartition canon = canonical_residues(lambda, n);
  std::vector<Part> rest;  // parts other than n, sorted
  for (Part p : canon.parts()) {
    if (p != n) rest.push_back(p);
  }
  if (rest.size() == 2) {
    if ((rest[0] + rest[1]) % n != 0) return std::nullopt;
    if (rest[0] == rest[1]) return MansfieldMatch{MansfieldShape::kPair, BigInt(-(n / 2))};
    return MansfieldMatch{MansfieldShape::kPair, BigInt(-n)};
  }
  if (rest.size() != 3) return std::nullopt;
  const Part a = rest[0], b = rest[1], c = rest[2];
  if (a == b && b == c) {
    if ((3 * a) % n != 0) return std::nullopt;
    return MansfieldMatch{MansfieldShape::kTripleEqual, BigInt(n / 3)};
  }
  if (a == b || b == c) {
    const Part pair = b;
    const Part single = (a == b) ? c : a;
    if ((2 * pair + single) % n != 0) return std::nullopt;
    return MansfieldMatch{MansfieldShape::kPairPlusOne, BigInt(n)};
  }
  if ((a + b + c) % n != 0) return std::nullopt;
  return MansfieldMatch{MansfieldShape::kDistinctTriple, BigInt(2 * n)};
}

std::optional<BigInt> mansfield_coefficient(const EvalInstance& inst) {
  auto m = mansfield_match(inst.lambda.parts(), inst.n, inst.k);
  if (!m) return std::nullopt;
  return m->value;
}

std::optional<ClosedFormValue> closed_form_value(std::span<const Part> lambda, int n, int k) {
  require_length(lambda, n, k);
  const BoundedPartition canon = canonical_residues(lambda, n);
  if (canon.weight() % n != 0) return ClosedFormValue{0, "weight_not_divisible"};

  const Multiplicities mult = multiplicities(canon.parts());
  if (mult.size() == 1) {
    const Part v = mult.begin()->first;
    if (v == n) return ClosedFormValue{1, "two_blocks"};
    return ClosedFormValue{closed_form_two_blocks(v, k * n, n, k), "two_blocks"};
  }
  if (mult.size() == 2) {
    const auto [v1, a1] = *mult.begin();
    const auto [v2, a2] = *std::next(mult.begin());
    if (v2 == n) {
      return ClosedFormValue{closed_form_two_blocks(v1, static_cast<int>(a1), n, k), "two_blocks"};
    }
    const auto red = reduce_two_distinct(v1, v2, static_cast<int>(a1), n, k);
    // lambda' = ((v2 - v1)^(kn - a1), n^a1) is a two-block partition.
    const BigInt inner = closed_form_two_blocks(v2 - v1, static_cast<int>(a2), n, k);
    return ClosedFormValue{red.sign * inner, "two_distinct_reduction"};
  }
  if (k == 1) {
    if (auto m = mansfield_match(canon.parts(), n, k)) {
      return ClosedFormValue{m->value, "pattern_" + std::string(to_string(m->shape))};
    }
  }
  return std::nullopt;
}

bool prime_nonvanishing(std::span<const Part> lambda, int p) {
  if (!is_prime(p)) throw UsageError("prime_nonvanishing: " + std::to_string(p) + " is not prime");
  if (lambda.size() != static_cast<std::size_t>(p)) {
    throw UsageError("prime_nonvanishing: lambda must have length p");
  }
  long s = 0;
  for (Part x : lambda) s = mod_floor(s + mod_floor(x, p), p);
  return s == 0;
}

BoundedPartition scale_partition(std::span<const Part> lambda, long l, int n) {
  if (gcd(l, n) != 1) {
    throw UsageError("scale_partition: gcd(" + std::to_string(l) + ", " + std::to_string(n) +
                     ") != 1");
  }
  std::vector<Part> scaled;
  scaled.reserve(lambda.size());
  for (Part x : lambda) scaled.push_back(mod_floor(x, n) * mod_floor(l, n));
  return canonical_residues(scaled, n);
}

// ---------------------------------------------------------------------------
// Elementary symmetric functions

CyclotomicInt elementary_symmetric(int r, std::span<const CyclotomicInt> points, int order) {
  if (r < 0 || static_cast<std::size_t>(r) > points.size()) return CyclotomicInt(order);
  std::vector<CyclotomicInt> e(static_cast<std::size_t>(r) + 1, CyclotomicInt(order));
  e[0] = CyclotomicInt::from_integer(order, 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(r), i + 1);
    for (std::size_t s = top; s >= 1; --s) e[s] += e[s - 1] * points[i];
  }
  return e[static_cast<std::size_t>(r)];
}

CyclotomicInt e_product(std::span<const Part> lambda, std::span<const CyclotomicInt> points,
                        int order) {
  CyclotomicInt r = CyclotomicInt::from_integer(order, 1);
  for (Part p : lambda) r = r * elementary_symmetric(static_cast<int>(p), points, order);
  return r;
}

CyclotomicInt power_sum(int r, std::span<const CyclotomicInt> points, int order) {
  if (r < 0) throw UsageError("power_sum: negative degree");
  CyclotomicInt s(order);
  for (const auto& x : points) {
    CyclotomicInt t = CyclotomicInt::from_integer(order, 1);
    for (int i = 0; i < r; ++i) t = t * x;
    s += t;
  }
  return s;
}

MonomialMap elementary_symmetric_formal(int r, int n_vars) {
  if (r < 0 || r > n_vars) return MonomialMap(n_vars);
  std::vector<MonomialMap> e(static_cast<std::size_t>(r) + 1, MonomialMap(n_vars));
  e[0] = MonomialMap::constant(n_vars, 1);
  for (int i = 0; i < n_vars; ++i) {
    const MonomialMap xi = MonomialMap::monomial(n_vars, i, 1);
    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(r), static_cast<std::size_t>(i) + 1);
    for (std::size_t s = top; s >= 1; --s) e[s] += e[s - 1] * xi;
  }
  return e[static_cast<std::size_t>(r)];
}

MonomialMap e_product_formal(std::span<const Part> lambda, int n_vars) {
  MonomialMap r = MonomialMap::constant(n_vars, 1);
  for (Part p : lambda) {
    if (p == 0) continue;
    r = r * elementary_symmetric_formal(static_cast<int>(p), n_vars);
    if (r.is_zero()) break;
  }
  return r;
}

std::vector<CyclotomicInt> specialization_points(int n, int k) {
  std::vector<CyclotomicInt> pts;
  pts.reserve(static_cast<std::size_t>(k * n));
  for (int j = 0; j < k * n; ++j) pts.push_back(root_power(n, j));
  return pts;
}

}  // namespace zmsp
