#pragma once

#include "groupeq/cyclic.hpp"
#include "groupeq/prime_field.hpp"

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace groupeq {

template <class G>
concept GroupElement = requires(const G& a, const G& b) {
  { a * b } -> std::convertible_to<G>;
  { a.inverse() } -> std::convertible_to<G>;
  { a.identity() } -> std::convertible_to<G>;
  { a == b } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

/// x^h = h^-1 x h
template <GroupElement G>
G conj(const G& x, const G& h) {
  return h.inverse() * x * h;
}

/// [x, y] = x^-1 y^-1 x y
template <GroupElement G>
G comm(const G& x, const G& y) {
  return x.inverse() * y.inverse() * x * y;
}

template <GroupElement G>
G power(const G& x, std::int64_t k) {
  G base = k < 0 ? x.inverse() : x;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  G result = x.identity();
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

template <GroupElement G>
bool is_identity(const G& x) {
  return x == x.identity();
}

/// ((1, u), (0, v)) with v a unit of the ring R.
template <class R>
class TriangularElem {
 public:
  TriangularElem(R u, R v) : u_(std::move(u)), v_(std::move(v)) {
    if (v_.is_zero()) throw std::invalid_argument("lower-right entry of a triangular element must be a unit");
  }

  const R& u() const { return u_; }
  const R& v() const { return v_; }

  friend TriangularElem operator*(const TriangularElem& a, const TriangularElem& b) {
    return {b.u_ + a.u_ * b.v_, a.v_ * b.v_};
  }
  TriangularElem inverse() const {
    R vi = v_.inverse();
    return {-(u_ * vi), vi};
  }
  TriangularElem identity() const { return {u_ - u_, v_ * v_.inverse()}; }
  friend bool operator==(const TriangularElem& a, const TriangularElem& b) {
    return a.u_ == b.u_ && a.v_ == b.v_;
  }

 private:
  R u_, v_;
};

template <class R>
std::string to_string(const TriangularElem<R>& x) {
  return "((1," + to_string(x.u()) + "),(0," + to_string(x.v()) + "))";
}

using FpTriangular = TriangularElem<PrimeFieldElem>;

inline FpTriangular fp_triangular(std::int64_t p, std::int64_t u, std::int64_t v) {
  return {PrimeFieldElem(p, u), PrimeFieldElem(p, v)};
}

/// 2^k ((1, u), (0, y^k)) with u in Z[y]/(y^m - 1).
class ScaledTriangularElem {
 public:
  explicit ScaledTriangularElem(std::size_t m = 6) : k_(0), u_(m) {}
  ScaledTriangularElem(std::int64_t k, CyclicPoly u) : k_(k), u_(std::move(u)) {}

  std::int64_t k() const { return k_; }
  const CyclicPoly& u() const { return u_; }
  std::size_t modulus() const { return u_.modulus(); }

  friend ScaledTriangularElem operator*(const ScaledTriangularElem& a, const ScaledTriangularElem& b) {
    return {a.k_ + b.k_, b.u_ + a.u_.rotated(b.k_)};
  }
  ScaledTriangularElem inverse() const { return {-k_, -u_.rotated(-k_)}; }
  ScaledTriangularElem identity() const { return ScaledTriangularElem(modulus()); }
  friend bool operator==(const ScaledTriangularElem&, const ScaledTriangularElem&) = default;

 private:
  std::int64_t k_;
  CyclicPoly u_;
};

inline std::string to_string(const ScaledTriangularElem& x) {
  return "2^" + std::to_string(x.k()) + "*((1," + to_string(x.u()) + "),(0,y^" + std::to_string(x.k()) + "))";
}

/// d^p e^q f^r in the integer Heisenberg group, with [d, e] = f central.
struct HeisenbergElem {
  std::int64_t p = 0, q = 0, r = 0;

  friend HeisenbergElem operator*(const HeisenbergElem& a, const HeisenbergElem& b) {
    return {a.p + b.p, a.q + b.q, a.r + b.r + a.p * b.q};
  }
  HeisenbergElem inverse() const { return {-p, -q, p * q - r}; }
  HeisenbergElem identity() const { return {}; }
  friend bool operator==(const HeisenbergElem&, const HeisenbergElem&) = default;
};

inline std::string to_string(const HeisenbergElem& x) {
  return "d^" + std::to_string(x.p) + "*e^" + std::to_string(x.q) + "*f^" + std::to_string(x.r);
}

/// G1 x H modulo the identification a^6 = f. Normal form keeps the f-exponent
/// of the Heisenberg part at zero, moving f^r into the G1 part as a^(6r).
class CentralProductElem {
 public:
  CentralProductElem() : g_(6) {}
  CentralProductElem(const ScaledTriangularElem& g, const HeisenbergElem& h) : g_(g), h_(h) { normalize(); }

  const ScaledTriangularElem& g() const { return g_; }
  const HeisenbergElem& h() const { return h_; }

  friend CentralProductElem operator*(const CentralProductElem& a, const CentralProductElem& b) {
    return {a.g_ * b.g_, a.h_ * b.h_};
  }
  CentralProductElem inverse() const { return {g_.inverse(), h_.inverse()}; }
  CentralProductElem identity() const { return {g_.identity(), {}}; }
  friend bool operator==(const CentralProductElem&, const CentralProductElem&) = default;

 private:
  void normalize() {
    if (h_.r == 0) return;
    const auto six = static_cast<std::int64_t>(g_.modulus());
    // a^(6r) is central in G1 because y^6 = 1, so right multiplication only shifts k.
    g_ = ScaledTriangularElem(g_.k() + six * h_.r, g_.u());
    h_.r = 0;
  }

  ScaledTriangularElem g_;
  HeisenbergElem h_;
};

inline CentralProductElem central_product_normalize(const ScaledTriangularElem& g, const HeisenbergElem& h) {
  return {g, h};
}

inline std::string to_string(const CentralProductElem& x) {
  return "(" + to_string(x.g()) + ";" + to_string(x.h()) + ")";
}

/// Permutation of {0..n-1}; the product applies the left factor first.
class PermutationElem {
 public:
  explicit PermutationElem(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto i : images_) {
      if (i >= images_.size() || seen[i]) throw std::invalid_argument("not a permutation");
      seen[i] = true;
    }
  }

  const std::vector<std::uint8_t>& images() const { return images_; }

  friend PermutationElem operator*(const PermutationElem& a, const PermutationElem& b) {
    if (a.images_.size() != b.images_.size()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<std::uint8_t> out(a.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
    return PermutationElem(std::move(out));
  }
  PermutationElem inverse() const {
    std::vector<std::uint8_t> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[images_[i]] = static_cast<std::uint8_t>(i);
    return PermutationElem(std::move(out));
  }
  PermutationElem identity() const {
    std::vector<std::uint8_t> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(i);
    return PermutationElem(std::move(out));
  }
  friend bool operator==(const PermutationElem&, const PermutationElem&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

inline std::string to_string(const PermutationElem& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.images().size(); ++i) {
    if (i) s += " ";
    s += std::to_string(x.images()[i]);
  }
  return s + "]";
}

template <GroupElement A, GroupElement B>
struct DirectProductElem {
  A first;
  B second;

  friend DirectProductElem operator*(const DirectProductElem& x, const DirectProductElem& y) {
    return {x.first * y.first, x.second * y.second};
  }
  DirectProductElem inverse() const { return {first.inverse(), second.inverse()}; }
  DirectProductElem identity() const { return {first.identity(), second.identity()}; }
  friend bool operator==(const DirectProductElem& x, const DirectProductElem& y) {
    return x.first == y.first && x.second == y.second;
  }
};

template <GroupElement A, GroupElement B>
std::string to_string(const DirectProductElem<A, B>& x) {
  return "(" + to_string(x.first) + " x " + to_string(x.second) + ")";
}

}  // namespace groupeq
