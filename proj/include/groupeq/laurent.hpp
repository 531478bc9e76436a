#pragma once

#include "groupeq/bigint.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace groupeq {

using Exponent = std::vector<std::int64_t>;

/// Element of the Laurent ring Z[t1^±1, ..., tn^±1], i.e. the group ring of Z^n.
/// Terms are kept in lexicographic exponent order with no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}
  LaurentPoly(std::size_t nvars, const Integer& constant) : nvars_(nvars) {
    if (constant != 0) terms_.emplace(Exponent(nvars, 0), constant);
  }

  static LaurentPoly monomial(Exponent exps, const Integer& coeff = 1) {
    LaurentPoly p(exps.size());
    if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
    return p;
  }
  static LaurentPoly one(std::size_t nvars) { return LaurentPoly(nvars, 1); }

  /// One-variable polynomial from dense coefficients, starting at t^low.
  static LaurentPoly univariate(std::vector<Integer> coeffs, std::int64_t low = 0) {
    LaurentPoly p(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      p.add_term({low + static_cast<std::int64_t>(i)}, coeffs[i]);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Integer& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match nvars");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check(b);
    LaurentPoly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  // Comparison against integer constants, mainly `p == 0`.
  friend bool operator==(const LaurentPoly& a, int c) { return a == LaurentPoly(a.nvars_, c); }

  /// Multiplication by the monomial t^shift.
  LaurentPoly shifted(const Exponent& shift) const {
    if (shift.size() != nvars_) throw std::invalid_argument("shift length does not match nvars");
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Sum of coefficients: the image under the augmentation Z[A] -> Z.
  Integer augmentation() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

 private:
  void check(const LaurentPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("Laurent polynomial nvars mismatch");
  }

  std::size_t nvars_ = 1;
  std::map<Exponent, Integer> terms_;
};

/// Exact quotient a / b in the Laurent ring; throws std::domain_error when b
/// does not divide a.
///
/// Both operands are shifted by monomials into the ordinary polynomial ring,
/// with b's shift chosen so that no variable divides it. The quotient is then
/// a genuine polynomial and lex-order long division terminates.
inline LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (a.nvars() != b.nvars()) throw std::invalid_argument("Laurent polynomial nvars mismatch");
  const std::size_t n = a.nvars();
  if (a.is_zero()) return LaurentPoly(n);

  auto min_exps = [n](const LaurentPoly& p) {
    Exponent m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
      for (std::size_t i = 0; i < n; ++i) m[i] = std::min(m[i], e[i]);
    return m;
  };
  Exponent ma = min_exps(a), mb = min_exps(b);
  Exponent neg_ma(n), neg_mb(n), result_shift(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_ma[i] = -ma[i];
    neg_mb[i] = -mb[i];
    result_shift[i] = ma[i] - mb[i];
  }
  LaurentPoly r = a.shifted(neg_ma);
  const LaurentPoly d = b.shifted(neg_mb);
  const auto& [lead_e, lead_c] = *d.terms().rbegin();

  LaurentPoly q(n);
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    Exponent qe(n);
    for (std::size_t i = 0; i < n; ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < 0) throw std::domain_error("Laurent division is not exact");
    }
    if (rc % lead_c != 0) throw std::domain_error("Laurent division is not exact");
    LaurentPoly term = LaurentPoly::monomial(qe, rc / lead_c);
    r -= term * d;
    q += term;
  }
  return q.shifted(result_shift);
}

/// Canonical rendering: terms in increasing lexicographic exponent order.
/// One variable prints as `var`; several print as `var1 ... varn`.
inline std::string to_string(const LaurentPoly& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool constant = std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (p.nvars() > 1) mono += std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (constant) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace groupeq
