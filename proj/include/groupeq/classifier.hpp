#pragma once

#include "groupeq/smith.hpp"
#include "groupeq/word.hpp"

#include <cassert>
#include <set>
#include <string>
#include <vector>

namespace groupeq {

enum class VerdictKind { singular, nonsingular, unimodular };

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::singular: return "SINGULAR";
    case VerdictKind::nonsingular: return "NONSINGULAR";
    case VerdictKind::unimodular: return "UNIMODULAR";
  }
  return "?";
}

struct Verdict {
  VerdictKind kind = VerdictKind::unimodular;
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;
  std::set<Integer> bad_primes;  // nonempty exactly for nonsingular verdicts
};

/// Singular when the exponent rows are dependent over Q; otherwise
/// unimodular when every invariant factor is 1, else nonsingular with the
/// primes at which the rows collapse.
inline Verdict classify_matrix(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  Verdict v;
  v.rank = snf.factors.size();
  v.invariant_factors = snf.factors;
  if (v.rank < m.rows()) {
    v.kind = VerdictKind::singular;
    return v;
  }
  if (!snf.factors.empty() && snf.factors.back() != 1) {
    v.kind = VerdictKind::nonsingular;
    v.bad_primes = prime_divisors(snf.factors.back());
    return v;
  }
  v.kind = VerdictKind::unimodular;
  assert(v.rank == m.rows());
  return v;
}

inline Verdict classify(const EquationSystem& sys) { return classify_matrix(exponent_matrix(sys)); }

}  // namespace groupeq
