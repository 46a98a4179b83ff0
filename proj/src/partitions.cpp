#include <zmsp/partitions.hpp>

#include <zmsp/cyclotomic.hpp>
#include <zmsp/errors.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>

namespace zmsp {

BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

// ---------------------------------------------------------------------------

BoundedPartition::BoundedPartition(std::vector<Part> parts, int bound)
    : parts_(std::move(parts)), bound_(bound) {
  if (bound < 1) throw UsageError("partition bound must be >= 1");
  std::sort(parts_.begin(), parts_.end());
  if (!parts_.empty() && (parts_.front() < 0 || parts_.back() > bound)) {
    throw UsageError("partition part outside 0.." + std::to_string(bound) + ": " + to_string());
  }
}

long BoundedPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::vector<std::size_t> BoundedPartition::multiplicities() const {
  std::vector<std::size_t> m(static_cast<std::size_t>(bound_) + 1, 0);
  for (Part p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

bool BoundedPartition::positive_parts() const { return parts_.empty() || parts_.front() >= 1; }

std::string BoundedPartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Multiplicities multiplicities(std::span<const Part> seq) {
  Multiplicities m;
  for (Part p : seq) ++m[p];
  return m;
}

BigInt stabilizer_order(std::span<const Part> seq) {
  BigInt r = 1;
  for (const auto& [value, count] : multiplicities(seq)) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), count);
    r *= f;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration

PartitionStream::PartitionStream(int bound, int length, bool allow_zero)
    : bound_(bound), lo_(allow_zero ? 0 : 1) {
  if (bound < 1 || length < 0) throw UsageError("enumerate: need bound >= 1 and length >= 0");
  cur_.assign(static_cast<std::size_t>(length), lo_);
}

bool PartitionStream::next(BoundedPartition& out) {
  if (done_) return false;
  if (started_) {
    // Lexicographic successor of a nondecreasing sequence: bump the last part
    // that is below the bound and flatten everything after it.
    std::size_t i = cur_.size();
    while (i > 0 && cur_[i - 1] == bound_) --i;
    if (i == 0) {
      done_ = true;
      return false;
    }
    const Part v = cur_[i - 1] + 1;
    std::fill(cur_.begin() + static_cast<std::ptrdiff_t>(i - 1), cur_.end(), v);
  }
  started_ = true;
  out = BoundedPartition(cur_, bound_);
  return true;
}

std::vector<BoundedPartition> enumerate(int bound, int length, bool allow_zero) {
  std::vector<BoundedPartition> out;
  PartitionStream stream(bound, length, allow_zero);
  BoundedPartition p;
  while (stream.next(p)) out.push_back(p);
  return out;
}

void for_each_partition(int bound, int length, bool allow_zero,
                        const std::function<void(const BoundedPartition&)>& fn) {
  PartitionStream stream(bound, length, allow_zero);
  BoundedPartition p;
  while (stream.next(p)) fn(p);
}

std::vector<BoundedPartition> lambda_tilde(int n, int k) {
  std::vector<BoundedPartition> out;
  for_each_partition(n, k * n, false, [&](const BoundedPartition& p) {
    if (p.weight() % n == 0) out.push_back(p);
  });
  return out;
}

BoundedPartition canonical_residues(std::span<const Part> seq, int n) {
  if (n < 1) throw UsageError("canonical_residues: n must be >= 1");
  std::vector<Part> parts;
  parts.reserve(seq.size());
  for (Part p : seq) {
    const Part r = mod_floor(p, n);
    parts.push_back(r == 0 ? n : r);
  }
  return BoundedPartition(std::move(parts), n);
}

// ---------------------------------------------------------------------------
// Orders

bool triangle_order(const BoundedPartition& lambda, const BoundedPartition& mu) {
  const auto a = multiplicities(lambda.parts());
  const auto b = multiplicities(mu.parts());
  for (const auto& [value, count] : a) {
    auto it = b.find(value);
    if (it == b.end() || it->second < count) return false;
  }
  return true;
}

BoundedPartition remove(const BoundedPartition& mu, const BoundedPartition& lambda) {
  if (!triangle_order(lambda, mu)) {
    throw UsageError("remove: " + lambda.to_string() + " is not contained in " + mu.to_string());
  }
  std::vector<Part> diff;
  std::set_difference(mu.parts().begin(), mu.parts().end(), lambda.parts().begin(),
                      lambda.parts().end(), std::back_inserter(diff));
  return BoundedPartition(std::move(diff), mu.bound());
}

BoundedPartition multiset_union(const BoundedPartition& a, const BoundedPartition& b) {
  std::vector<Part> merged;
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(merged));
  return BoundedPartition(std::move(merged), std::max(a.bound(), b.bound()));
}

bool inclusion_order(std::span<const Part> lambda, std::span<const Part> mu) {
  const std::size_t len = std::max(lambda.size(), mu.size());
  auto at = [len](std::span<const Part> s, std::size_t i) -> Part {
    const std::size_t pad = len - s.size();
    return i < pad ? 0 : s[i - pad];
  };
  for (std::size_t i = 0; i < len; ++i) {
    if (at(lambda, i) > at(mu, i)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Arithmetic

long gcd(long a, long b) { return std::gcd(a, b); }

long euler_phi(long n) {
  if (n < 1) throw UsageError("euler_phi: n must be >= 1");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i <= n; ++i) {
    if (n % i == 0) d.push_back(i);
  }
  return d;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

bool is_prime_power(long n) {
  if (n < 2) return false;
  long p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

BigInt regular_invariant_dimension(long n, long m) {
  if (n < 1 || m < 0) throw UsageError("regular_invariant_dimension: need n >= 1, m >= 0");
  BigInt sum = 0;
  for (long d : divisors(std::gcd(n, m == 0 ? n : m))) {
    sum += binomial(n / d + m / d, n / d) * euler_phi(d);
  }
  BigInt q, r;
  const BigInt denom = n + m;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), denom.get_mpz_t());
  ZMSP_CHECK(r == 0, "inexact division in invariant dimension formula");
  return q;
}

BigInt lambda_tilde_size(long n, long k) {
  if (n < 1 || k < 1) throw UsageError("lambda_tilde_size: need n, k >= 1");
  BigInt sum = 0;
  for (long d : divisors(n)) sum += binomial(d * k + d - 1, d - 1) * euler_phi(n / d);
  BigInt q, r;
  const BigInt denom = n;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), denom.get_mpz_t());
  ZMSP_CHECK(r == 0, "inexact division in |Lambda~| formula");
  ZMSP_CHECK(q == regular_invariant_dimension(n, k * n), "|Lambda~| disagrees with a(n, kn)");
  return q;
}

std::vector<Part> parse_parts(std::string_view text) {
  std::vector<Part> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    Part v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw UsageError("cannot parse partition part '" + std::string(tok) + "' in '" +
                       std::string(text) + "'");
    }
    parts.push_back(v);
    pos = comma + 1;
  }
  return parts;
}

}  // namespace zmsp
