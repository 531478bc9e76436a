#pragma once

#include "groupeq/bigint.hpp"
#include "groupeq/errors.hpp"
#include "groupeq/matrix.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace groupeq {

/// U * M * V = S with U, V unimodular and S diagonal carrying the invariant
/// factors d1 | d2 | ... | dr (all positive).
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::vector<Integer> factors;
};

namespace detail {

inline void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  // row[dst] -= q * row[src]
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

inline void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

}  // namespace detail

/// Smith normal form by gcd-driven elimination. The pivot at each stage is
/// the smallest nonzero |entry| of the trailing block.
inline SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  SmithForm out{M, IntMatrix::identity(m, 0, 1), IntMatrix::identity(n, 0, 1), {}};
  IntMatrix& A = out.S;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Locate the smallest nonzero entry of the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A(i, j) != 0 && (pi == m || abs(A(i, j)) < abs(A(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        // Trailing block is zero; no more invariant factors.
        t = std::min(m, n);
        break;
      }
      A.swap_rows(t, pi);
      U.swap_rows(t, pi);
      A.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        Integer q = floor_div(A(i, t), A(t, t));
        detail::row_axpy(A, i, t, q);
        detail::row_axpy(U, i, t, q);
        if (A(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        Integer q = floor_div(A(t, j), A(t, t));
        detail::col_axpy(A, j, t, q);
        detail::col_axpy(V, j, t, q);
        if (A(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility of the trailing block.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row != m) {
        detail::row_axpy(A, t, bad_row, -1);
        detail::row_axpy(U, t, bad_row, -1);
        continue;
      }
      if (A(t, t) < 0) {
        for (std::size_t j = 0; j < n; ++j) A(t, j) = -A(t, j);
        for (std::size_t j = 0; j < m; ++j) U(t, j) = -U(t, j);
      }
      out.factors.push_back(A(t, t));
      break;
    }
  }
  return out;
}

/// Fraction-free (Bareiss) elimination; returns the rank and, for square
/// input, writes the determinant.
inline std::size_t bareiss_rank(IntMatrix A, Integer* det = nullptr) {
  const std::size_t m = A.rows(), n = A.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t p = rank;
    while (p < m && A(p, col) == 0) ++p;
    if (p == m) continue;
    if (p != rank) {
      A.swap_rows(p, rank);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j)
        A(i, j) = (A(rank, col) * A(i, j) - A(i, col) * A(rank, j)) / prev;
      A(i, col) = 0;
    }
    prev = A(rank, col);
    ++rank;
  }
  if (det) {
    if (m != n) throw std::invalid_argument("determinant of a non-square matrix");
    *det = (rank == n) ? (n == 0 ? Integer(1) : Integer(sign * prev)) : Integer(0);
  }
  return rank;
}

inline std::size_t rank_over_rationals(const IntMatrix& M) { return bareiss_rank(M); }

inline Integer determinant(const IntMatrix& M) {
  Integer d;
  bareiss_rank(M, &d);
  return d;
}

namespace detail {

inline Integer pollard_brent(const Integer& n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  std::uniform_int_distribution<unsigned long long> dist(1, 1ULL << 62);
  while (true) {
    Integer y = Integer(dist(rng)) % n, c = Integer(dist(rng)) % n, g = 1, q = 1, x, ys;
    const std::size_t block = 128;
    std::size_t r = 1;
    auto f = [&](const Integer& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      std::size_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::size_t i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += block;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(Integer n, std::set<Integer>& primes, std::mt19937_64& rng) {
  if (n < 2) return;
  if (boost::multiprecision::miller_rabin_test(n, 30, rng)) {
    primes.insert(n);
    return;
  }
  Integer d = pollard_brent(n, rng);
  factor_into(d, primes, rng);
  factor_into(n / d, primes, rng);
}

}  // namespace detail

/// Distinct prime divisors of |n| (empty for 0 and ±1).
inline std::set<Integer> prime_divisors(Integer n) {
  n = abs(n);
  std::set<Integer> primes;
  if (n < 2) return primes;
  for (unsigned p = 2; p < 10000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      primes.insert(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) {
    std::mt19937_64 rng(0x5eed);
    detail::factor_into(n, primes, rng);
  }
  return primes;
}

/// Primes p at which the rows of M become dependent over F_p. Requires the
/// rows to be independent over Q.
inline std::set<Integer> bad_primes(const IntMatrix& M) {
  SmithForm snf = smith_normal_form(M);
  if (snf.factors.size() != M.rows())
    throw PreconditionError("singular matrix has no bad-prime profile");
  if (snf.factors.empty()) return {};
  return prime_divisors(snf.factors.back());
}

}  // namespace groupeq
