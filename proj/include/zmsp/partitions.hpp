#pragma once

// Bounded partitions stored nondecreasing (0 <= l_1 <= l_2 <= ...), the index
// sets Lambda_n^k (length kn, parts in 1..n) and the zero-padded family
// (parts in 0..n), plus the arithmetic helpers used by the counting formulas.

#include <zmsp/bigint.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zmsp {

using Part = long;

/// Nondecreasing partition with parts bounded by `bound`.
class BoundedPartition {
 public:
  BoundedPartition() = default;
  /// Sorts `parts`; throws UsageError when a part lies outside 0..bound.
  BoundedPartition(std::vector<Part> parts, int bound);

  [[nodiscard]] const std::vector<Part>& parts() const { return parts_; }
  [[nodiscard]] int bound() const { return bound_; }
  [[nodiscard]] std::size_t size() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] Part operator[](std::size_t i) const { return parts_[i]; }

  /// |lambda|, the part sum.
  [[nodiscard]] long weight() const;
  /// lambda[i] = #{j : lambda_j = i} for i = 0..bound.
  [[nodiscard]] std::vector<std::size_t> multiplicities() const;
  /// True when all parts lie in 1..bound (membership in Lambda_bound^k).
  [[nodiscard]] bool positive_parts() const;

  /// "1,1,2,3".
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const BoundedPartition& a, const BoundedPartition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const BoundedPartition& a, const BoundedPartition& b) = default;

 private:
  std::vector<Part> parts_;
  int bound_ = 0;
};

/// Sparse multiplicity table of an integer sequence: value -> count.
using Multiplicities = std::map<Part, std::size_t>;
Multiplicities multiplicities(std::span<const Part> seq);
/// |S_N^lambda| = prod_i lambda[i]!.
BigInt stabilizer_order(std::span<const Part> seq);

/// Lexicographic stream of nondecreasing sequences of length `length` with
/// parts in 1..bound (or 0..bound when allow_zero). Restartable by
/// constructing a new stream.
class PartitionStream {
 public:
  PartitionStream(int bound, int length, bool allow_zero);
  /// Writes the next partition into `out`; false once exhausted.
  bool next(BoundedPartition& out);

 private:
  int bound_;
  Part lo_;
  std::vector<Part> cur_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<BoundedPartition> enumerate(int bound, int length, bool allow_zero);
void for_each_partition(int bound, int length, bool allow_zero,
                        const std::function<void(const BoundedPartition&)>& fn);

/// Lambda~_n^k: members of Lambda_n^k with |lambda| = 0 mod n, lexicographic.
std::vector<BoundedPartition> lambda_tilde(int n, int k);

/// Each part replaced by its representative in 1..n, then sorted.
BoundedPartition canonical_residues(std::span<const Part> seq, int n);

/// lambda <| mu: lambda[a] <= mu[a] for every part value a.
bool triangle_order(const BoundedPartition& lambda, const BoundedPartition& mu);
/// mu \ lambda, the multiset difference; throws UsageError unless lambda <| mu.
BoundedPartition remove(const BoundedPartition& mu, const BoundedPartition& lambda);
/// Multiset union, sorted.
BoundedPartition multiset_union(const BoundedPartition& a, const BoundedPartition& b);

/// Componentwise lambda_i <= mu_i after front zero-padding to equal length.
bool inclusion_order(std::span<const Part> lambda, std::span<const Part> mu);

long gcd(long a, long b);
long euler_phi(long n);
std::vector<long> divisors(long n);
bool is_prime(long n);
bool is_prime_power(long n);

/// Dimension of degree-m invariants of the regular representation of Z/nZ:
/// (1/(n+m)) sum_{d | gcd(n,m)} binom(n/d + m/d, n/d) phi(d).
BigInt regular_invariant_dimension(long n, long m);

/// |Lambda~_n^k| = (1/n) sum_{d | n} binom(dk + d - 1, d - 1) phi(n/d).
BigInt lambda_tilde_size(long n, long k);

/// Lenient parse of "3,1,2" (whitespace tolerated, any order, negatives ok).
std::vector<Part> parse_parts(std::string_view text);

}  // namespace zmsp
