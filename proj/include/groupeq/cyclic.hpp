#pragma once

#include "groupeq/bigint.hpp"
#include "groupeq/laurent.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace groupeq {

/// Element of the cyclic group ring Z[y]/(y^m - 1); coeffs[i] multiplies y^i.
/// This ring has zero divisors for m > 1.
class CyclicPoly {
 public:
  CyclicPoly() : CyclicPoly(1) {}
  explicit CyclicPoly(std::size_t m) : coeffs_(m, Integer(0)) {
    if (m == 0) throw std::invalid_argument("cyclic modulus must be at least 1");
  }
  CyclicPoly(std::size_t m, const Integer& constant) : CyclicPoly(m) { coeffs_[0] = constant; }
  CyclicPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("cyclic modulus must be at least 1");
  }

  /// c * y^k with k reduced mod m.
  static CyclicPoly monomial(std::size_t m, std::int64_t k, const Integer& c = 1) {
    CyclicPoly p(m);
    p.coeffs_[reduce(k, m)] = c;
    return p;
  }

  std::size_t modulus() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  CyclicPoly& operator+=(const CyclicPoly& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CyclicPoly& operator-=(const CyclicPoly& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b) { return a += b; }
  friend CyclicPoly operator-(CyclicPoly a, const CyclicPoly& b) { return a -= b; }
  friend CyclicPoly operator-(CyclicPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b) {
    a.check(b);
    const std::size_t m = a.modulus();
    CyclicPoly out(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out.coeffs_[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  CyclicPoly& operator*=(const CyclicPoly& o) { return *this = *this * o; }
  friend bool operator==(const CyclicPoly& a, const CyclicPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator==(const CyclicPoly& a, int c) { return a == CyclicPoly(a.modulus(), c); }

  /// Multiplication by y^k.
  CyclicPoly rotated(std::int64_t k) const {
    const std::size_t m = modulus();
    CyclicPoly out(m);
    for (std::size_t i = 0; i < m; ++i) out.coeffs_[reduce(static_cast<std::int64_t>(i) + k, m)] = coeffs_[i];
    return out;
  }

  Integer augmentation() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  static std::size_t reduce(std::int64_t k, std::size_t m) {
    std::int64_t r = k % static_cast<std::int64_t>(m);
    return static_cast<std::size_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
  }

 private:
  void check(const CyclicPoly& o) const {
    if (o.modulus() != modulus()) throw std::invalid_argument("cyclic modulus mismatch");
  }

  std::vector<Integer> coeffs_;
};

/// Folds exponents of a one-variable Laurent polynomial mod m.
inline CyclicPoly cyclic_project(const LaurentPoly& a, std::size_t m) {
  if (a.nvars() != 1) throw std::invalid_argument("cyclic projection needs a one-variable polynomial");
  CyclicPoly out(m);
  for (const auto& [e, c] : a.terms()) out += CyclicPoly::monomial(m, e[0], c);
  return out;
}

/// Renders as a polynomial in `var` with exponents 0..m-1, e.g. "-1 + y^2 + y^3 - y^5".
inline std::string to_string(const CyclicPoly& p, const std::string& var = "y") {
  LaurentPoly lp = LaurentPoly::univariate(p.coeffs());
  return to_string(lp, var);
}

}  // namespace groupeq
