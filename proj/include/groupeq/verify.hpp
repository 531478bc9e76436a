#pragma once

#include "groupeq/constructions.hpp"
#include "groupeq/finite_group.hpp"

#include <string>
#include <vector>

namespace groupeq {

/// Facts about the order-42 counterexample.
struct FiniteCounterexampleReport {
  std::size_t order = 0;
  std::size_t derived_order = 0;
  bool metabelian = false;
  bool a6_identity = false;
  bool c_is_commutator = false;  // c = [((1,1),(0,1)), a]
  bool c_in_derived = false;
  FpTriangular obstruction = f7_a().identity();
  bool obstruction_nontrivial = false;
  std::size_t candidates = 0;
  std::size_t solutions = 0;

  bool pass() const {
    return order == 42 && metabelian && a6_identity && c_is_commutator && c_in_derived &&
           obstruction_nontrivial && solutions == 0;
  }
};

inline FiniteCounterexampleReport verify_finite_counterexample(std::size_t closure_cap = kDefaultClosureCap,
                                                               std::size_t max_unknowns = kDefaultMaxUnknowns) {
  FiniteCounterexampleReport r;
  const auto g = f7_group(closure_cap);
  const auto derived = derived_subgroup(g);
  r.order = g.size();
  r.derived_order = derived.size();
  r.metabelian = derived_subgroup(derived).size() == 1;
  r.a6_identity = is_identity(power(f7_a(), 6));
  r.c_is_commutator = comm(f7_elementary(), f7_a()) == f7_c();
  r.c_in_derived = derived.contains(f7_c());
  std::map<std::string, FpTriangular> coeffs{{"a", f7_a()}, {"c", f7_c()}};
  r.obstruction = evaluate_word(obstruction_word(), coeffs, g.identity());
  r.obstruction_nontrivial = !is_identity(r.obstruction);
  const auto sys = metabelian_obstruction_system();
  r.candidates = g.size();
  r.solutions = brute_force_solve(sys, g, coeffs, max_unknowns).size();
  return r;
}

/// Facts about the torsion-free central product G1 x_{a^6 = f} H.
struct TorsionFreeReport {
  CentralProductElem obstruction;
  bool obstruction_matches = false;  // u-part equals (y-1)(1+y-y^3-y^4), rest trivial
  bool obstruction_nontrivial = false;
  bool a6_is_f = false;
  bool de_commutator_is_f = false;
  bool f_central = false;
  bool c_is_commutator = false;
  bool hypotheses_in_derived = false;  // a^6 = [d,e] and c = [t,a] are commutators
  std::size_t derived_samples = 0;
  bool derived_sample_abelian = false;
  std::size_t torsion_samples = 0;
  std::size_t torsion_max_power = 0;
  std::size_t torsion_failures = 0;
  std::size_t rank_base = 0;      // u-part subgroup
  std::size_t rank_middle = 0;    // G1 modulo the u-part
  std::size_t rank_top = 0;       // G modulo G1
  bool series_checks = false;     // homomorphism / normality / abelian-quotient samples

  bool pass() const {
    return obstruction_matches && obstruction_nontrivial && a6_is_f && de_commutator_is_f && f_central &&
           c_is_commutator && hypotheses_in_derived && derived_sample_abelian && torsion_failures == 0 &&
           rank_base == 6 && rank_middle == 1 && rank_top == 2 && series_checks;
  }
};

inline TorsionFreeReport verify_torsion_free_example(std::uint64_t seed, std::size_t samples = 1000,
                                                     std::size_t max_power = 12) {
  TorsionFreeReport r;
  const CentralProductElem a = cp_from_g1(g1_a()), c = cp_from_g1(g1_c()), t = cp_from_g1(g1_elementary());
  const CentralProductElem d = cp_d(), e = cp_e(), f = cp_f();
  const CentralProductElem one = a.identity();

  std::map<std::string, CentralProductElem> coeffs{{"a", a}, {"c", c}};
  r.obstruction = evaluate_word(obstruction_word(), coeffs, one);
  r.obstruction_matches = r.obstruction.g().k() == 0 && r.obstruction.g().u() == expected_obstruction_u() &&
                          r.obstruction.h() == HeisenbergElem{};
  r.obstruction_nontrivial = !is_identity(r.obstruction);

  r.a6_is_f = power(a, 6) == f;
  r.de_commutator_is_f = comm(d, e) == f;
  r.c_is_commutator = comm(t, a) == c;
  r.hypotheses_in_derived = r.a6_is_f && r.de_commutator_is_f && r.c_is_commutator;

  CentralProductSampler sampler(seed);
  r.f_central = true;
  for (const auto& x : {a, c, d, e, t})
    if (!(x * f == f * x)) r.f_central = false;

  // Sampled: commutators pairwise commute (G' is abelian).
  r.derived_samples = samples;
  r.derived_sample_abelian = true;
  for (std::size_t i = 0; i < samples; ++i) {
    CentralProductElem c1 = comm(sampler.element(), sampler.element());
    CentralProductElem c2 = comm(sampler.element(), sampler.element());
    if (!(c1 * c2 == c2 * c1)) r.derived_sample_abelian = false;
    if (!(c1 * f == f * c1)) r.f_central = false;
  }

  // Sampled torsion: no nontrivial element has a small power equal to 1.
  r.torsion_samples = samples;
  r.torsion_max_power = max_power;
  for (std::size_t i = 0; i < samples; ++i) {
    CentralProductElem g = sampler.element();
    while (is_identity(g)) g = sampler.element();
    ScaledTriangularElem g1 = sampler.g1();
    while (is_identity(g1)) g1 = sampler.g1();
    for (std::size_t k = 2; k <= max_power; ++k) {
      if (is_identity(power(g, static_cast<std::int64_t>(k)))) ++r.torsion_failures;
      if (is_identity(power(g1, static_cast<std::int64_t>(k)))) ++r.torsion_failures;
    }
  }

  // Subnormal series G > G1 > {u-part} > 1 read off normal-form coordinates.
  auto in_base = [](const CentralProductElem& x) { return x.g().k() == 0 && x.h() == HeisenbergElem{}; };
  auto in_g1 = [](const CentralProductElem& x) { return x.h() == HeisenbergElem{}; };

  IntMatrix base_coords(kCyclicOrder, kCyclicOrder);
  for (std::size_t i = 0; i < kCyclicOrder; ++i) {
    CentralProductElem b = cp_from_g1({0, y_power(static_cast<std::int64_t>(i))});
    for (std::size_t j = 0; j < kCyclicOrder; ++j) base_coords(i, j) = b.g().u()[j];
  }
  r.rank_base = rank_over_rationals(base_coords);
  r.rank_middle = rank_over_rationals(IntMatrix::from_rows({{Integer(a.g().k())}}));
  r.rank_top = rank_over_rationals(IntMatrix::from_rows({{Integer(d.h().p), Integer(d.h().q)},
                                                         {Integer(e.h().p), Integer(e.h().q)}}));

  r.series_checks = true;
  for (std::size_t i = 0; i < samples && r.series_checks; ++i) {
    CentralProductElem x = sampler.element(), y = sampler.element();
    CentralProductElem gx = cp_from_g1(sampler.g1()), gy = cp_from_g1(sampler.g1());
    CentralProductElem bx = cp_from_g1({0, sampler.g1().u()}), by = cp_from_g1({0, sampler.g1().u()});
    bool ok = true;
    // Coordinates are homomorphisms on the relevant factors.
    ok &= (bx * by).g().u() == bx.g().u() + by.g().u() && in_base(bx * by);
    ok &= (gx * gy).g().k() == gx.g().k() + gy.g().k();
    ok &= (x * y).h().p == x.h().p + y.h().p && (x * y).h().q == x.h().q + y.h().q;
    // Each term is normal in the previous one with abelian quotient.
    ok &= in_base(conj(bx, gx)) && in_g1(conj(gx, x));
    ok &= in_base(comm(gx, gy)) && in_g1(comm(x, y));
    r.series_checks = ok;
  }
  return r;
}

}  // namespace groupeq
