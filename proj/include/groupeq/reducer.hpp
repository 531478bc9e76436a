#pragma once

#include "groupeq/classifier.hpp"
#include "groupeq/determinant.hpp"
#include "groupeq/laurent.hpp"
#include "groupeq/ring_hom.hpp"
#include "groupeq/smith.hpp"
#include "groupeq/word.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace groupeq {

using RationalVector = std::vector<Rational>;

/// G = A x| B with A = Z^rank; each coefficient is recorded by its A-part.
struct SplitExtensionSpec {
  std::size_t rank = 1;
  std::map<std::string, std::vector<std::int64_t>> coefficient_images;

  void validate(const SymbolTable& table) const {
    if (rank == 0) throw std::invalid_argument("the abelian quotient must have rank at least 1");
    for (const auto& c : table.coefficients()) {
      auto it = coefficient_images.find(c);
      if (it == coefficient_images.end())
        throw PreconditionError("coefficient '" + c + "' has no image in A");
      if (it->second.size() != rank)
        throw PreconditionError("image of '" + c + "' has length " + std::to_string(it->second.size()) +
                                ", expected " + std::to_string(rank));
    }
  }
};

/// Abelianized system M X = b over A: one row per equation, b_i in Z^n.
struct InducedSystem {
  IntMatrix matrix;
  std::vector<std::vector<Integer>> rhs;
};

inline InducedSystem induced_system(const EquationSystem& sys, const SplitExtensionSpec& spec) {
  spec.validate(sys.table());
  InducedSystem out{exponent_matrix(sys), {}};
  for (const auto& w : sys.equations()) {
    std::vector<Integer> b(spec.rank, 0);
    for (const auto& l : w.letters()) {
      if (sys.table().kind(l.symbol) != SymbolKind::coefficient) continue;
      const auto& img = spec.coefficient_images.at(l.symbol);
      for (std::size_t k = 0; k < spec.rank; ++k) b[k] -= l.sign * img[k];
    }
    out.rhs.push_back(std::move(b));
  }
  return out;
}

/// A solution of the induced system in Q^n, together with the least common
/// denominator of all its entries.
struct AbelianSolution {
  std::vector<RationalVector> values;  // one per unknown, in table order
  Integer denominator = 1;
};

/// Reduced-row-echelon particular solution with free unknowns set to zero.
inline AbelianSolution solve_induced(const IntMatrix& M, const std::vector<std::vector<Integer>>& b,
                                     std::size_t rank) {
  const std::size_t k = M.rows(), m = M.cols();
  if (b.size() != k) throw std::invalid_argument("right-hand side count does not match the equations");
  if (rank_over_rationals(M) != k) throw PreconditionError("reduction requires a nonsingular system");
  const std::size_t n = rank;
  for (const auto& row : b)
    if (row.size() != n) throw std::invalid_argument("right-hand side vector has the wrong length");

  Matrix<Rational> A(k, m + n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) A(i, j) = Rational(M(i, j));
    for (std::size_t c = 0; c < n; ++c) A(i, m + c) = Rational(b[i][c]);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < m && r < k; ++j) {
    std::size_t p = r;
    while (p < k && A(p, j) == 0) ++p;
    if (p == k) continue;
    A.swap_rows(p, r);
    Rational piv = A(r, j);
    for (std::size_t c = 0; c < m + n; ++c) A(r, c) /= piv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r || A(i, j) == 0) continue;
      Rational f = A(i, j);
      for (std::size_t c = 0; c < m + n; ++c) A(i, c) -= f * A(r, c);
    }
    pivots.push_back(j);
    ++r;
  }

  AbelianSolution sol;
  sol.values.assign(m, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) sol.values[pivots[i]][c] = A(i, m + c);
  for (const auto& v : sol.values)
    for (const auto& q : v) sol.denominator = lcm(sol.denominator, boost::multiprecision::denominator(q));
  return sol;
}

/// The system with every unknown x_j replaced by (offset_j) x_j', where the
/// offsets solve the induced system; the new unknowns have trivial A-image.
struct AnnotatedSystem {
  EquationSystem system;
  SplitExtensionSpec spec;
  AbelianSolution offsets;
};

inline AnnotatedSystem change_variables(const EquationSystem& sys, const SplitExtensionSpec& spec,
                                        const AbelianSolution& sol) {
  InducedSystem ind = induced_system(sys, spec);
  const std::size_t m = sys.table().unknowns().size();
  if (sol.values.size() != m) throw PreconditionError("solution does not assign every unknown");
  for (std::size_t i = 0; i < ind.matrix.rows(); ++i)
    for (std::size_t c = 0; c < spec.rank; ++c) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (sol.values[j].size() != spec.rank) throw PreconditionError("solution vector has the wrong length");
        lhs += Rational(ind.matrix(i, j)) * sol.values[j][c];
      }
      if (lhs != Rational(ind.rhs[i][c])) throw PreconditionError("solution does not solve the induced system");
    }
  return {sys, spec, sol};
}

/// Letter of a rewritten word: a coefficient, or a copy x_{j,alpha} of an
/// unknown indexed by an element alpha of the enlarged abelian group.
struct RewrittenLetter {
  std::string symbol;
  int sign = 1;
  std::optional<RationalVector> decoration;
};

inline std::string to_string(const RewrittenLetter& l) {
  std::string s = l.symbol;
  if (l.decoration) {
    s += "[";
    for (std::size_t i = 0; i < l.decoration->size(); ++i) {
      if (i) s += ",";
      s += to_string((*l.decoration)[i]);
    }
    s += "]";
  }
  if (l.sign < 0) s += "^-1";
  return s;
}

inline std::string to_string(const std::vector<RewrittenLetter>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " * ";
    s += to_string(w[i]);
  }
  return s;
}

/// Words over B * F(copies of X) and their Z[A]-matrix. The variable t_k
/// stands for the k-th basis element of A scaled by 1/scale, so the Laurent
/// exponent of x_{j,alpha} is scale * alpha.
struct RewrittenSystem {
  std::size_t nvars = 1;
  Integer scale = 1;
  std::vector<std::vector<RewrittenLetter>> words;
  Matrix<LaurentPoly> laurent_matrix;
};

namespace detail {

struct ScanResult {
  RewrittenSystem rs;
  std::vector<RationalVector> totals;  // A-image of each rewritten word
};

// Walks each word left to right with the running A-image pi of the prefix.
// An unknown occurrence standing after a prefix P is P x P^-1 up to the
// suffix, i.e. x conjugated by an element of A-image -pi; that element is
// its decoration.
inline ScanResult scan(const EquationSystem& sys, const SplitExtensionSpec& spec,
                       const std::vector<RationalVector>& offsets, const Integer& scale) {
  const std::size_t n = spec.rank, m = sys.table().unknowns().size();
  ScanResult out;
  out.rs.nvars = n;
  out.rs.scale = scale;
  out.rs.laurent_matrix = Matrix<LaurentPoly>(sys.size(), m, LaurentPoly(n));

  auto exponent_of = [&](const RationalVector& pi) {
    Exponent e(n);
    for (std::size_t k = 0; k < n; ++k) {
      Rational v = -pi[k] * Rational(scale);
      if (boost::multiprecision::denominator(v) != 1)
        throw std::logic_error("scale does not clear the denominators of the prefix");
      e[k] = boost::multiprecision::numerator(v).convert_to<std::int64_t>();
    }
    return e;
  };

  for (std::size_t i = 0; i < sys.size(); ++i) {
    RationalVector pi(n, Rational(0));
    std::vector<RewrittenLetter> word;
    for (const auto& l : sys.equations()[i].letters()) {
      if (auto j = sys.table().unknown_index(l.symbol)) {
        const RationalVector& alpha = offsets[*j];
        if (l.sign > 0)
          for (std::size_t k = 0; k < n; ++k) pi[k] += alpha[k];
        RationalVector deco(n);
        for (std::size_t k = 0; k < n; ++k) deco[k] = -pi[k];
        out.rs.laurent_matrix(i, *j).add_term(exponent_of(pi), l.sign);
        word.push_back({l.symbol, l.sign, std::move(deco)});
        if (l.sign < 0)
          for (std::size_t k = 0; k < n; ++k) pi[k] -= alpha[k];
      } else {
        const auto& img = spec.coefficient_images.at(l.symbol);
        for (std::size_t k = 0; k < n; ++k) pi[k] += l.sign * img[k];
        word.push_back({l.symbol, l.sign, std::nullopt});
      }
    }
    out.rs.words.push_back(std::move(word));
    out.totals.push_back(std::move(pi));
  }
  return out;
}

inline IntMatrix augment(const Matrix<LaurentPoly>& m) {
  return map_entries(m, [](const LaurentPoly& p) { return p.augmentation(); });
}

}  // namespace detail

/// Rewrites each w_i as f(v_i) over B with A-indexed copies of the unknowns
/// and checks the two structural invariants of the result.
inline RewrittenSystem rewrite_over_base(const AnnotatedSystem& annotated) {
  const auto& sys = annotated.system;
  annotated.spec.validate(sys.table());
  auto result = detail::scan(sys, annotated.spec, annotated.offsets.values, annotated.offsets.denominator);
  for (const auto& total : result.totals)
    for (const auto& q : total)
      if (q != 0) throw std::logic_error("rewritten word has nonzero total A-image");
  if (!(detail::augment(result.rs.laurent_matrix) == exponent_matrix(sys)))
    throw std::logic_error("augmentation of the Laurent matrix differs from the exponent matrix");
  return std::move(result.rs);
}

/// Rows of the orbit system translated by a in A: multiplication by t^(scale*a).
inline Matrix<LaurentPoly> orbit_shift(const Matrix<LaurentPoly>& rows, std::size_t nvars, const Integer& scale,
                                       const std::vector<std::int64_t>& a) {
  if (a.size() != nvars) throw std::invalid_argument("shift vector length does not match the rank of A");
  Exponent e(nvars);
  for (std::size_t k = 0; k < nvars; ++k) e[k] = Integer(scale * a[k]).convert_to<std::int64_t>();
  return map_entries(rows, [&](const LaurentPoly& p) { return p.shifted(e); });
}

inline Matrix<LaurentPoly> orbit_shift(const RewrittenSystem& rs, const std::vector<std::int64_t>& a) {
  return orbit_shift(rs.laurent_matrix, rs.nvars, rs.scale, a);
}

struct WitnessMinor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  LaurentPoly determinant;
};

enum class CertificateVerdict { certified, not_certified };

inline std::string to_string(CertificateVerdict v) {
  return v == CertificateVerdict::certified ? "Certified" : "NotCertified";
}

struct NonsingularityCertificate {
  IntMatrix integer_matrix;
  std::size_t integer_rank = 0;
  Matrix<LaurentPoly> laurent_matrix;
  std::optional<WitnessMinor> witness_minor;
  CertificateVerdict verdict = CertificateVerdict::not_certified;
};

inline constexpr std::size_t kDefaultMinorBudget = 500;

namespace detail {

inline std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<std::size_t>(c);
}

// Pivot columns of an integer matrix by Gaussian elimination over Q.
inline std::vector<std::size_t> pivot_columns(const IntMatrix& m) {
  Matrix<Rational> A = map_entries(m, [](const Integer& x) { return Rational(x); });
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t j = 0; j < A.cols() && r < A.rows(); ++j) {
    std::size_t p = r;
    while (p < A.rows() && A(p, j) == 0) ++p;
    if (p == A.rows()) continue;
    A.swap_rows(p, r);
    for (std::size_t i = r + 1; i < A.rows(); ++i) {
      if (A(i, j) == 0) continue;
      Rational f = A(i, j) / A(r, j);
      for (std::size_t c = j; c < A.cols(); ++c) A(i, c) -= f * A(r, c);
    }
    piv.push_back(j);
    ++r;
  }
  return piv;
}

}  // namespace detail

/// First nonzero maximal minor (all rows, k columns) in lexicographic column
/// order when the number of subsets fits the budget; otherwise the columns
/// are chosen greedily from the pivots of the augmentation image.
inline std::optional<WitnessMinor> find_witness_minor(const Matrix<LaurentPoly>& m, std::size_t nvars,
                                                      std::size_t budget = kDefaultMinorBudget) {
  const std::size_t k = m.rows(), cols = m.cols();
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  if (k > cols) return std::nullopt;
  std::optional<WitnessMinor> found;
  if (detail::binomial_capped(cols, k, budget) <= budget) {
    for_each_combination(cols, k, [&](std::span<const std::size_t> sel) {
      LaurentPoly d = determinant(m.select(rows, sel), nvars);
      if (d.is_zero()) return true;
      found = WitnessMinor{rows, {sel.begin(), sel.end()}, std::move(d)};
      return false;
    });
    return found;
  }
  auto piv = detail::pivot_columns(detail::augment(m));
  if (piv.size() == k) {
    LaurentPoly d = determinant(m.select(rows, piv), nvars);
    if (!d.is_zero()) found = WitnessMinor{rows, piv, std::move(d)};
  }
  return found;
}

/// Certifies that the orbit system {v_i o a = 1} is nonsingular: if the
/// augmentation image (the original exponent matrix) has full row rank, the
/// Z[A]-rows cannot be dependent, since dependence would survive reduction
/// modulo the fundamental ideal.
inline NonsingularityCertificate certify_nonsingular(const Matrix<LaurentPoly>& laurent, std::size_t nvars,
                                                     std::size_t minor_budget = kDefaultMinorBudget) {
  NonsingularityCertificate cert;
  cert.laurent_matrix = laurent;
  cert.integer_matrix = detail::augment(laurent);
  cert.integer_rank = rank_over_rationals(cert.integer_matrix);
  cert.verdict = cert.integer_rank == laurent.rows() ? CertificateVerdict::certified
                                                     : CertificateVerdict::not_certified;
  cert.witness_minor = find_witness_minor(laurent, nvars, minor_budget);
  return cert;
}

inline NonsingularityCertificate certify_nonsingular(const RewrittenSystem& rs,
                                                     std::size_t minor_budget = kDefaultMinorBudget) {
  return certify_nonsingular(rs.laurent_matrix, rs.nvars, minor_budget);
}

/// The whole pipeline for one system. Singular systems skip the change of
/// variables (the induced system need not be solvable) and are scanned with
/// zero offsets; their certificate is never Certified.
struct Reduction {
  EquationSystem system;
  SplitExtensionSpec spec;
  InducedSystem induced;
  std::optional<AbelianSolution> solution;
  RewrittenSystem rewritten;
  NonsingularityCertificate certificate;
};

inline Reduction reduce(const EquationSystem& sys, const SplitExtensionSpec& spec,
                        std::size_t minor_budget = kDefaultMinorBudget) {
  Reduction r{sys, spec, induced_system(sys, spec), std::nullopt, {}, {}};
  if (rank_over_rationals(r.induced.matrix) == sys.size()) {
    r.solution = solve_induced(r.induced.matrix, r.induced.rhs, spec.rank);
    r.rewritten = rewrite_over_base(change_variables(sys, spec, *r.solution));
  } else {
    std::vector<RationalVector> zero(sys.table().unknowns().size(), RationalVector(spec.rank, Rational(0)));
    r.rewritten = detail::scan(sys, spec, zero, 1).rs;
  }
  r.certificate = certify_nonsingular(r.rewritten, minor_budget);
  return r;
}

/// Dependence of a Z[A]-matrix checked against a ring homomorphism.
struct Lemma2Result {
  bool dependent = false;                // every maximal Laurent minor vanishes
  std::size_t minors_checked = 0;
  std::optional<WitnessMinor> witness;   // first nonzero Laurent minor
  bool image_minors_vanish = true;       // every maximal minor of the image vanishes
  bool hom_commutes_with_minors = true;  // h(det) == det(h(.)) on every minor
};

namespace detail {

inline RingValue image_determinant(const Matrix<LaurentPoly>& sub, const RingHom& h) {
  switch (h.kind) {
    case RingHom::Kind::augmentation:
      return determinant(map_entries(sub, [](const LaurentPoly& p) { return p.augmentation(); }));
    case RingHom::Kind::cyclic_quotient:
      return determinant(map_entries(sub, [&](const LaurentPoly& p) { return cyclic_project(p, h.modulus); }),
                         h.modulus);
    case RingHom::Kind::evaluation:
      return determinant(
          map_entries(sub, [&](const LaurentPoly& p) { return std::get<PrimeFieldElem>(apply_hom(h, p)); }),
          h.prime);
  }
  throw std::logic_error("unreachable ring hom kind");
}

inline bool same_value(const RingValue& a, const RingValue& b) { return a == b; }

}  // namespace detail

inline Lemma2Result lemma2_check(const Matrix<LaurentPoly>& m, std::size_t nvars, const RingHom& h) {
  if (m.rows() > m.cols()) throw std::invalid_argument("lemma2_check needs rows <= cols");
  const std::size_t k = m.rows();
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  Lemma2Result r;
  for_each_combination(m.cols(), k, [&](std::span<const std::size_t> sel) {
    Matrix<LaurentPoly> sub = m.select(rows, sel);
    LaurentPoly d = determinant(sub, nvars);
    RingValue img = detail::image_determinant(sub, h);
    ++r.minors_checked;
    if (!detail::same_value(apply_hom(h, d), img)) r.hom_commutes_with_minors = false;
    if (!is_zero(img)) r.image_minors_vanish = false;
    if (!d.is_zero() && !r.witness) r.witness = WitnessMinor{rows, {sel.begin(), sel.end()}, d};
    return true;
  });
  r.dependent = !r.witness.has_value();
  return r;
}

/// For this instance: dependence over Z[A] implies
/// vanishing of all maximal minors after the homomorphism.
inline bool lemma2_conclusion_holds(const Lemma2Result& r) { return !r.dependent || r.image_minors_vanish; }

}  // namespace groupeq
