#include <zmsp/monomial_map.hpp>

#include <zmsp/errors.hpp>

#include <numeric>
#include <sstream>

namespace zmsp {

int ExponentVector::total_degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

long ExponentVector::weighted_sum() const {
  long s = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) s += static_cast<long>(i + 1) * exps[i];
  return s;
}

ExponentVector to_exponents(const BoundedPartition& lambda, int n_vars) {
  ExponentVector e{std::vector<int>(static_cast<std::size_t>(n_vars), 0)};
  for (Part p : lambda.parts()) {
    if (p < 1 || p > n_vars) {
      throw UsageError("to_exponents: part " + std::to_string(p) + " outside 1.." +
                       std::to_string(n_vars));
    }
    ++e.exps[static_cast<std::size_t>(p - 1)];
  }
  return e;
}

BoundedPartition to_partition(const ExponentVector& e) {
  std::vector<Part> parts;
  for (std::size_t i = 0; i < e.exps.size(); ++i) {
    parts.insert(parts.end(), static_cast<std::size_t>(e.exps[i]), static_cast<Part>(i + 1));
  }
  return BoundedPartition(std::move(parts), static_cast<int>(e.exps.size()));
}

MonomialMap MonomialMap::constant(int n_vars, const BigInt& c) {
  MonomialMap m(n_vars);
  m.add_term(ExponentVector{std::vector<int>(static_cast<std::size_t>(n_vars), 0)}, c);
  return m;
}

MonomialMap MonomialMap::monomial(int n_vars, int var, int power, const BigInt& c) {
  MonomialMap m(n_vars);
  ExponentVector e{std::vector<int>(static_cast<std::size_t>(n_vars), 0)};
  e.exps.at(static_cast<std::size_t>(var)) = power;
  m.add_term(e, c);
  return m;
}

BigInt MonomialMap::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<int> MonomialMap::degree() const {
  if (terms_.empty()) return 0;
  const int d = terms_.begin()->first.total_degree();
  for (const auto& [e, c] : terms_) {
    if (e.total_degree() != d) return std::nullopt;
  }
  return d;
}

void MonomialMap::add_term(const ExponentVector& e, const BigInt& c) {
  if (c == 0) return;
  if (static_cast<int>(e.exps.size()) != n_vars_) {
    throw UsageError("MonomialMap: exponent vector has wrong number of variables");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MonomialMap& MonomialMap::operator+=(const MonomialMap& other) {
  if (other.n_vars_ != n_vars_) throw UsageError("MonomialMap: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MonomialMap& MonomialMap::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MonomialMap operator*(const MonomialMap& a, const MonomialMap& b) {
  if (a.n_vars_ != b.n_vars_) throw UsageError("MonomialMap: variable count mismatch");
  MonomialMap r(a.n_vars_);
  ExponentVector e{std::vector<int>(static_cast<std::size_t>(a.n_vars_), 0)};
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.exps.size(); ++i) e.exps[i] = ea.exps[i] + eb.exps[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MonomialMap pow(const MonomialMap& base, int exponent) {
  if (exponent < 0) throw UsageError("pow: negative exponent");
  MonomialMap r = MonomialMap::constant(base.n_vars(), 1);
  for (int i = 0; i < exponent; ++i) r = r * base;
  return r;
}

std::string MonomialMap::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending exponent vectors = ascending partitions
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant_term = e.total_degree() == 0;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || constant_term) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.exps.size(); ++i) {
      if (e.exps[i] == 0) continue;
      if (need_star) out << '*';
      out << 'x' << (i + 1);
      if (e.exps[i] > 1) out << '^' << e.exps[i];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace zmsp
