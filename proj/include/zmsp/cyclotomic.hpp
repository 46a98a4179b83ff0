#pragma once

// Exact arithmetic in Z[zeta_n].
//
// Values are kept in the working representation Z[x]/(x^n - 1): a length-n
// coefficient vector where index j holds the coefficient of zeta^j. Addition
// is componentwise and multiplication is cyclic convolution, both cheap.
// Equality, zero-testing and integer readout go through the canonical form,
// i.e. the remainder modulo the n-th cyclotomic polynomial Phi_n, which is
// unique because {1, zeta, ..., zeta^(phi(n)-1)} is a Z-basis of Z[zeta_n].

#include <zmsp/bigint.hpp>

#include <span>
#include <utility>
#include <vector>

namespace zmsp {

/// Dense univariate polynomial with exact integer coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// x^n - 1.
  static IntPolynomial x_pow_minus_one(int n);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }
  [[nodiscard]] BigInt coeff(int i) const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Division with remainder by a monic divisor; returns {quotient, remainder}.
  [[nodiscard]] std::pair<IntPolynomial, IntPolynomial> divmod_monic(
      const IntPolynomial& divisor) const;

  [[nodiscard]] std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;  // coeffs_[i] multiplies x^i; back() != 0
};

/// Phi_n, by exact division of x^n - 1 by prod_{d | n, d < n} Phi_d.
/// Memoized per process; safe to call concurrently. The reference stays valid
/// for the lifetime of the process.
const IntPolynomial& cyclotomic_poly(int n);

/// Element of Z[zeta_n].
class CyclotomicInt {
 public:
  /// Zero of Z[zeta_n].
  explicit CyclotomicInt(int order);
  CyclotomicInt(int order, std::vector<BigInt> residue_coeffs);

  static CyclotomicInt from_integer(int order, const BigInt& value);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] std::span<const BigInt> residue_coeffs() const { return residues_; }

  /// Coefficients of the remainder mod Phi_n, length phi(n).
  [[nodiscard]] std::vector<BigInt> canonical_form() const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_integer() const;
  /// Integer readout; throws IntegralityViolation when !is_integer().
  [[nodiscard]] BigInt to_integer() const;

  CyclotomicInt& operator+=(const CyclotomicInt& other);
  CyclotomicInt& operator-=(const CyclotomicInt& other);
  CyclotomicInt& operator*=(const BigInt& m);

  /// this += zeta^shift * other. Hot path of the DP and of product expansion:
  /// multiplying by a root power is a cyclic rotation of the residues.
  void add_rotated(const CyclotomicInt& other, long shift);
  /// this += m * zeta^e.
  void add_root_power(long e, const BigInt& m = 1);

  /// True when every working-representation residue is zero. Cheaper than
  /// is_zero() but only a sufficient condition for zero.
  [[nodiscard]] bool residues_all_zero() const;

  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator-(const CyclotomicInt& a);
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator*(CyclotomicInt a, const BigInt& m) { return a *= m; }

  /// Equality of the represented elements of Z[zeta_n] (canonical forms).
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);

 private:
  int order_;
  std::vector<BigInt> residues_;  // size order_
};

/// zeta_n^e.
CyclotomicInt root_power(int n, long e);

CyclotomicInt add(const CyclotomicInt& a, const CyclotomicInt& b);
CyclotomicInt mul(const CyclotomicInt& a, const CyclotomicInt& b);
CyclotomicInt neg(const CyclotomicInt& a);
CyclotomicInt scale(const CyclotomicInt& a, const BigInt& m);

/// Non-negative residue of e modulo n.
inline long mod_floor(long e, long n) {
  long r = e % n;
  return r < 0 ? r + n : r;
}

}  // namespace zmsp
