#pragma once

#include "groupeq/cyclic.hpp"
#include "groupeq/laurent.hpp"
#include "groupeq/matrix.hpp"
#include "groupeq/prime_field.hpp"
#include "groupeq/smith.hpp"

#include <stdexcept>

namespace groupeq {

namespace detail {

inline LaurentPoly ring_divide(const LaurentPoly& a, const LaurentPoly& b) { return exact_divide(a, b); }
inline PrimeFieldElem ring_divide(const PrimeFieldElem& a, const PrimeFieldElem& b) { return a / b; }

template <class R>
bool ring_is_zero(const R& x) {
  return x.is_zero();
}

}  // namespace detail

/// Fraction-free Bareiss determinant over an integral domain with exact division.
template <class R>
R bareiss_determinant(Matrix<R> A, const R& zero, const R& one) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return one;
  R prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && detail::ring_is_zero(A(p, k))) ++p;
    if (p == n) return zero;
    if (p != k) {
      A.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        A(i, j) = detail::ring_divide(A(k, k) * A(i, j) - A(i, k) * A(k, j), prev);
      A(i, k) = zero;
    }
    prev = A(k, k);
  }
  R d = A(n - 1, n - 1);
  return negate ? -d : d;
}

/// Laplace expansion along the first row; valid over any commutative ring.
template <class R>
R cofactor_determinant(const Matrix<R>& A, const R& zero, const R& one) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return one;
  if (n == 1) return A(0, 0);
  R total = zero;
  std::vector<std::size_t> rows(n - 1), cols(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) rows[i] = i + 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (detail::ring_is_zero(A(0, j))) continue;
    for (std::size_t c = 0, k = 0; c < n; ++c)
      if (c != j) cols[k++] = c;
    R term = A(0, j) * cofactor_determinant(A.select(rows, cols), zero, one);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

inline LaurentPoly determinant(const Matrix<LaurentPoly>& A, std::size_t nvars) {
  return bareiss_determinant(A, LaurentPoly(nvars), LaurentPoly::one(nvars));
}

inline LaurentPoly determinant(const Matrix<LaurentPoly>& A) {
  if (A.empty()) throw std::invalid_argument("empty Laurent matrix needs an explicit nvars");
  return determinant(A, A(0, 0).nvars());
}

inline PrimeFieldElem determinant(const Matrix<PrimeFieldElem>& A, std::int64_t p) {
  return bareiss_determinant(A, PrimeFieldElem(p, 0), PrimeFieldElem(p, 1));
}

// Z[y]/(y^m - 1) is not a domain, so Bareiss's exact divisions are unavailable.
inline CyclicPoly determinant(const Matrix<CyclicPoly>& A, std::size_t m) {
  return cofactor_determinant(A, CyclicPoly(m), CyclicPoly(m, 1));
}

}  // namespace groupeq
