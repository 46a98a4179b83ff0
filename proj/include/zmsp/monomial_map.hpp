#pragma once

#include <zmsp/bigint.hpp>
#include <zmsp/partitions.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zmsp {

/// exps[i] is the exponent of x_{i+1}.
struct ExponentVector {
  std::vector<int> exps;

  [[nodiscard]] int total_degree() const;
  /// sum_i (i+1) * exps[i], the group-element weight of the monomial.
  [[nodiscard]] long weighted_sum() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

/// Monomial x_lambda = x_{l_1} ... x_{l_L} for parts in 1..n.
ExponentVector to_exponents(const BoundedPartition& lambda, int n_vars);
/// Inverse of to_exponents; parts in 1..n_vars.
BoundedPartition to_partition(const ExponentVector& e);

/// Sparse polynomial in n_vars variables with exact integer coefficients.
/// Zero coefficients are never stored.
class MonomialMap {
 public:
  using Terms = std::map<ExponentVector, BigInt>;

  MonomialMap() = default;
  explicit MonomialMap(int n_vars) : n_vars_(n_vars) {}

  static MonomialMap constant(int n_vars, const BigInt& c);
  /// c * x_{var+1}^power (var is 0-based).
  static MonomialMap monomial(int n_vars, int var, int power, const BigInt& c = 1);

  [[nodiscard]] int n_vars() const { return n_vars_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] BigInt coefficient(const ExponentVector& e) const;

  /// The common total degree of all terms, or nullopt when the map is not
  /// homogeneous (the zero map is homogeneous of every degree: returns 0).
  [[nodiscard]] std::optional<int> degree() const;

  /// Accumulates c into the coefficient of e, erasing it if it cancels.
  void add_term(const ExponentVector& e, const BigInt& c);

  MonomialMap& operator+=(const MonomialMap& other);
  MonomialMap& operator*=(const BigInt& c);
  friend MonomialMap operator+(MonomialMap a, const MonomialMap& b) { return a += b; }
  friend MonomialMap operator*(const MonomialMap& a, const MonomialMap& b);
  friend bool operator==(const MonomialMap& a, const MonomialMap& b) = default;

  /// e.g. "x1^3 - 3*x1*x2*x3 + x2^3 + x3^3", terms in descending exponent order.
  [[nodiscard]] std::string to_string() const;

 private:
  int n_vars_ = 0;
  Terms terms_;
};

MonomialMap pow(const MonomialMap& base, int exponent);

}  // namespace zmsp
