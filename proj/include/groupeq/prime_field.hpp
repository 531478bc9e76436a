#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace groupeq {

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Element of F_p for a word-sized prime p.
class PrimeFieldElem {
 public:
  PrimeFieldElem() = default;
  PrimeFieldElem(std::int64_t p, std::int64_t value) : p_(p), value_(normalize(value, p)) {
    if (!is_prime(p)) throw std::invalid_argument("F_p modulus " + std::to_string(p) + " is not prime");
  }

  std::int64_t prime() const { return p_; }
  std::int64_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend PrimeFieldElem operator+(PrimeFieldElem a, const PrimeFieldElem& b) {
    a.check(b);
    a.value_ = (a.value_ + b.value_) % a.p_;
    return a;
  }
  friend PrimeFieldElem operator-(PrimeFieldElem a, const PrimeFieldElem& b) {
    a.check(b);
    a.value_ = (a.value_ - b.value_ + a.p_) % a.p_;
    return a;
  }
  friend PrimeFieldElem operator-(PrimeFieldElem a) {
    a.value_ = (a.p_ - a.value_) % a.p_;
    return a;
  }
  friend PrimeFieldElem operator*(PrimeFieldElem a, const PrimeFieldElem& b) {
    a.check(b);
    a.value_ = static_cast<std::int64_t>((static_cast<__int128>(a.value_) * b.value_) % a.p_);
    return a;
  }
  PrimeFieldElem& operator+=(const PrimeFieldElem& o) { return *this = *this + o; }
  PrimeFieldElem& operator-=(const PrimeFieldElem& o) { return *this = *this - o; }
  PrimeFieldElem& operator*=(const PrimeFieldElem& o) { return *this = *this * o; }

  PrimeFieldElem pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    PrimeFieldElem result(*this), base(*this);
    result.value_ = 1 % p_;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }
  PrimeFieldElem inverse() const {
    if (value_ == 0) throw std::domain_error("zero has no inverse in F_p");
    return pow(p_ - 2);
  }
  friend PrimeFieldElem operator/(const PrimeFieldElem& a, const PrimeFieldElem& b) { return a * b.inverse(); }

  friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }
  friend bool operator==(const PrimeFieldElem& a, int c) { return a.value_ == normalize(c, a.p_); }

 private:
  static std::int64_t normalize(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
  }
  void check(const PrimeFieldElem& o) const {
    if (o.p_ != p_) throw std::invalid_argument("F_p characteristic mismatch");
  }

  std::int64_t p_ = 2;
  std::int64_t value_ = 0;
};

inline std::string to_string(const PrimeFieldElem& x) { return std::to_string(x.value()); }

}  // namespace groupeq
