#pragma once

#include "groupeq/finite_group.hpp"
#include "groupeq/groups.hpp"
#include "groupeq/parser.hpp"
#include "groupeq/smith.hpp"

#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace groupeq {

// ---------------------------------------------------------------------------
// Words shared by the metabelian counterexamples.

/// x x^-a x^(a^2) = c, written as a word equal to 1.
inline EquationSystem metabelian_obstruction_system() {
  SymbolTable table({"x"}, {"a", "c"});
  return EquationSystem(table, {flatten(parse_word("x * x^-(a) * x^(a^2) * c^-1", table))});
}

/// c c^a c^-(a^3) c^-(a^4); nontrivial value blocks metabelian solutions.
inline FlatWord obstruction_word() {
  SymbolTable table({}, {"a", "c"});
  return flatten(parse_word("c * c^(a) * c^-(a^3) * c^-(a^4)", table));
}

// ---------------------------------------------------------------------------
// Affine group of F_7: order 42.

inline constexpr std::int64_t kF7 = 7;
inline constexpr std::int64_t kF7Generator = 5;

inline FpTriangular f7_a() { return fp_triangular(kF7, 0, kF7Generator); }
inline FpTriangular f7_elementary() { return fp_triangular(kF7, 1, 1); }
inline FpTriangular f7_c() { return fp_triangular(kF7, kF7Generator - 1, 1); }

inline FiniteGroupTable<FpTriangular> f7_group(std::size_t cap = kDefaultClosureCap) {
  return group_closure(std::vector{f7_a(), f7_c()}, cap);
}

/// Affine group x -> v x + u of F_p with v ranging over <g>.
inline FiniteGroupTable<FpTriangular> affine_group(std::int64_t p, std::int64_t g,
                                                   std::size_t cap = kDefaultClosureCap) {
  return group_closure(std::vector{fp_triangular(p, 0, g), fp_triangular(p, 1, 1)}, cap);
}

// ---------------------------------------------------------------------------
// Torsion-free example: G1 = { 2^k ((1,u),(0,y^k)) } over Z[y]/(y^6 - 1),
// the Heisenberg group H = <d, e, f>, and G = G1 x H / (a^6 = f).

inline constexpr std::size_t kCyclicOrder = 6;

inline CyclicPoly y_power(std::int64_t k, const Integer& c = 1) { return CyclicPoly::monomial(kCyclicOrder, k, c); }

inline ScaledTriangularElem g1_a() { return {1, CyclicPoly(kCyclicOrder)}; }
inline ScaledTriangularElem g1_elementary() { return {0, CyclicPoly(kCyclicOrder, 1)}; }
inline ScaledTriangularElem g1_c() { return {0, y_power(1) - CyclicPoly(kCyclicOrder, 1)}; }

inline CentralProductElem cp_from_g1(const ScaledTriangularElem& g) { return {g, {}}; }
inline CentralProductElem cp_d() { return {ScaledTriangularElem(kCyclicOrder), {1, 0, 0}}; }
inline CentralProductElem cp_e() { return {ScaledTriangularElem(kCyclicOrder), {0, 1, 0}}; }
inline CentralProductElem cp_f() { return {ScaledTriangularElem(kCyclicOrder), {0, 0, 1}}; }

/// Value of (y - 1)(1 + y - y^3 - y^4) in Z[y]/(y^6 - 1).
inline CyclicPoly expected_obstruction_u() {
  return (y_power(1) - y_power(0)) * (y_power(0) + y_power(1) - y_power(3) - y_power(4));
}

struct CentralProductSampler {
  std::mt19937_64 rng;
  int coord_bound = 4;

  explicit CentralProductSampler(std::uint64_t seed) : rng(seed) {}

  std::int64_t coord() { return std::uniform_int_distribution<std::int64_t>(-coord_bound, coord_bound)(rng); }

  ScaledTriangularElem g1() {
    std::vector<Integer> u(kCyclicOrder);
    for (auto& c : u) c = coord();
    return {coord(), CyclicPoly(std::move(u))};
  }
  CentralProductElem element() { return {g1(), {coord(), coord(), 0}}; }
};

// ---------------------------------------------------------------------------
// Small finite groups addressable by name.

using F7xF7 = DirectProductElem<FpTriangular, FpTriangular>;
using NamedGroup =
    std::variant<FiniteGroupTable<FpTriangular>, FiniteGroupTable<PermutationElem>, FiniteGroupTable<F7xF7>>;

inline std::vector<std::string> named_group_names() {
  return {"f7-42", "s3", "agl1-13", "c6", "c7", "c6xc7", "trivial", "s4"};
}

inline NamedGroup named_group(const std::string& name, std::size_t cap = kDefaultClosureCap) {
  if (name == "f7-42") return f7_group(cap);
  if (name == "s3") return affine_group(3, 2, cap);
  if (name == "agl1-13") return affine_group(13, 2, cap);
  if (name == "c6") return group_closure(std::vector{f7_a()}, cap);
  if (name == "c7") return group_closure(std::vector{f7_elementary()}, cap);
  if (name == "trivial") return group_closure(std::vector{f7_a().identity()}, cap);
  if (name == "c6xc7") {
    F7xF7 a{f7_a(), f7_a().identity()}, b{f7_a().identity(), f7_elementary()};
    return group_closure(std::vector{a, b}, cap);
  }
  if (name == "s4") {
    return group_closure(std::vector{PermutationElem({1, 0, 2, 3}), PermutationElem({1, 2, 3, 0})}, cap);
  }
  throw std::invalid_argument("unknown group '" + name + "'");
}

}  // namespace groupeq
