#include <zmsp/cyclotomic.hpp>

#include <zmsp/errors.hpp>

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace zmsp {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::x_pow_minus_one(int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
  c.front() = -1;
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(
    const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1) {
    throw UsageError("divmod_monic: divisor must be monic");
  }
  const int dd = divisor.degree();
  std::vector<BigInt> rem = coeffs_;
  if (degree() < dd) return {IntPolynomial{}, *this};
  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
  for (int i = degree(); i >= dd; --i) {
    const BigInt q = rem[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i > 0) {
      out << var;
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Phi_n memo

namespace {

struct CyclotomicMemo {
  std::shared_mutex mutex;
  std::map<int, IntPolynomial> table;  // node-based: references stay valid
};

CyclotomicMemo& memo() {
  static CyclotomicMemo m;
  return m;
}

}  // namespace

const IntPolynomial& cyclotomic_poly(int n) {
  if (n < 1) throw UsageError("cyclotomic_poly: n must be >= 1");
  auto& m = memo();
  {
    std::shared_lock lock(m.mutex);
    if (auto it = m.table.find(n); it != m.table.end()) return it->second;
  }
  IntPolynomial divisor_product(std::vector<BigInt>{1});
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) divisor_product = divisor_product * cyclotomic_poly(d);
  }
  auto [quot, rem] = IntPolynomial::x_pow_minus_one(n).divmod_monic(divisor_product);
  ZMSP_CHECK(rem.is_zero(), "nonzero remainder computing Phi_" + std::to_string(n));
  std::unique_lock lock(m.mutex);
  auto [it, inserted] = m.table.emplace(n, std::move(quot));
  return it->second;
}

// ---------------------------------------------------------------------------
// CyclotomicInt

CyclotomicInt::CyclotomicInt(int order) : order_(order) {
  if (order < 1) throw UsageError("CyclotomicInt: order must be >= 1");
  residues_.assign(static_cast<std::size_t>(order), 0);
}

CyclotomicInt::CyclotomicInt(int order, std::vector<BigInt> residue_coeffs)
    : order_(order), residues_(std::move(residue_coeffs)) {
  if (order < 1) throw UsageError("CyclotomicInt: order must be >= 1");
  if (residues_.size() != static_cast<std::size_t>(order)) {
    throw UsageError("CyclotomicInt: residue vector must have exactly `order` entries");
  }
}

CyclotomicInt CyclotomicInt::from_integer(int order, const BigInt& value) {
  CyclotomicInt r(order);
  r.residues_[0] = value;
  return r;
}

std::vector<BigInt> CyclotomicInt::canonical_form() const {
  const IntPolynomial& phi = cyclotomic_poly(order_);
  auto rem = IntPolynomial(residues_).divmod_monic(phi).second;
  std::vector<BigInt> out(static_cast<std::size_t>(phi.degree()), 0);
  for (int i = 0; i <= rem.degree(); ++i) out[static_cast<std::size_t>(i)] = rem.coeff(i);
  return out;
}

bool CyclotomicInt::residues_all_zero() const {
  for (const auto& c : residues_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicInt::is_zero() const {
  if (residues_all_zero()) return true;
  for (const auto& c : canonical_form()) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicInt::is_integer() const {
  const auto canon = canonical_form();
  for (std::size_t i = 1; i < canon.size(); ++i) {
    if (canon[i] != 0) return false;
  }
  return true;
}

BigInt CyclotomicInt::to_integer() const {
  const auto canon = canonical_form();
  for (std::size_t i = 1; i < canon.size(); ++i) {
    if (canon[i] != 0) {
      std::ostringstream msg;
      msg << "non-integer value in Z[zeta_" << order_ << "], canonical form (";
      for (std::size_t j = 0; j < canon.size(); ++j) msg << (j ? ", " : "") << canon[j].get_str();
      msg << ")";
      throw IntegralityViolation(msg.str());
    }
  }
  return canon[0];
}

namespace {
void require_same_order(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order() != b.order()) {
    throw UsageError("cyclotomic order mismatch: " + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()));
  }
}
}  // namespace

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < residues_.size(); ++i) residues_[i] += other.residues_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < residues_.size(); ++i) residues_[i] -= other.residues_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const BigInt& m) {
  for (auto& c : residues_) c *= m;
  return *this;
}

void CyclotomicInt::add_rotated(const CyclotomicInt& other, long shift) {
  require_same_order(*this, other);
  const auto n = static_cast<std::size_t>(order_);
  const auto s = static_cast<std::size_t>(mod_floor(shift, order_));
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt& c = other.residues_[i];
    if (c == 0) continue;
    std::size_t j = i + s;
    if (j >= n) j -= n;
    residues_[j] += c;
  }
}

void CyclotomicInt::add_root_power(long e, const BigInt& m) {
  residues_[static_cast<std::size_t>(mod_floor(e, order_))] += m;
}

CyclotomicInt operator-(const CyclotomicInt& a) {
  CyclotomicInt r = a;
  for (auto& c : r.residues_) c = -c;
  return r;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  require_same_order(a, b);
  CyclotomicInt r(a.order_);
  const auto n = a.residues_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.residues_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.residues_[j] == 0) continue;
      r.residues_[(i + j) % n] += a.residues_[i] * b.residues_[j];
    }
  }
  return r;
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
  require_same_order(a, b);
  return (a - b).is_zero();
}

CyclotomicInt root_power(int n, long e) {
  CyclotomicInt r(n);
  r.add_root_power(e);
  return r;
}

CyclotomicInt add(const CyclotomicInt& a, const CyclotomicInt& b) { return a + b; }
CyclotomicInt mul(const CyclotomicInt& a, const CyclotomicInt& b) { return a * b; }
CyclotomicInt neg(const CyclotomicInt& a) { return -a; }
CyclotomicInt scale(const CyclotomicInt& a, const BigInt& m) { return a * m; }

}  // namespace zmsp
