#include "groupeq/constructions.hpp"
#include "groupeq/parser.hpp"
#include "groupeq/reducer.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace groupeq;
using namespace groupeq::testing;

namespace {

LaurentPoly uni(std::vector<Integer> c, std::int64_t low = 0) { return LaurentPoly::univariate(std::move(c), low); }
LaurentPoly t(std::int64_t k, const Integer& c = 1) { return LaurentPoly::monomial({k}, c); }

SplitExtensionSpec spec1(std::map<std::string, std::vector<std::int64_t>> images) {
  SplitExtensionSpec s;
  s.rank = 1;
  s.coefficient_images = std::move(images);
  return s;
}

EquationSystem two_unknowns() {
  SymbolTable table({"x", "y"}, {"a"});
  return EquationSystem(table, {letters({{"x", 1}, {"y", 1}, {"a", 1}}), letters({{"x", 1}, {"y", -1}})});
}

Matrix<LaurentPoly> laurent_rows(std::vector<std::vector<LaurentPoly>> rows) {
  Matrix<LaurentPoly> m(rows.size(), rows.front().size(), LaurentPoly(rows.front().front().nvars()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST(SplitExtension, Validation) {
  SymbolTable table({"x"}, {"a", "c"});
  EXPECT_THROW(spec1({{"a", {1}}}).validate(table), PreconditionError);
  EXPECT_THROW(spec1({{"a", {1}}, {"c", {0, 1}}}).validate(table), PreconditionError);
  EXPECT_NO_THROW(spec1({{"a", {1}}, {"c", {0}}}).validate(table));
  SplitExtensionSpec zero;
  zero.rank = 0;
  EXPECT_THROW(zero.validate(table), std::invalid_argument);
}

TEST(InducedSystem, RightHandSideNegatesCoefficientImages) {
  auto ind = induced_system(two_unknowns(), spec1({{"a", {1}}}));
  EXPECT_EQ(ind.matrix, IntMatrix::from_rows({{1, 1}, {1, -1}}));
  ASSERT_EQ(ind.rhs.size(), 2u);
  EXPECT_EQ(ind.rhs[0], std::vector<Integer>{-1});
  EXPECT_EQ(ind.rhs[1], std::vector<Integer>{0});
}

TEST(SolveInduced, HalfIntegerSolution) {
  auto ind = induced_system(two_unknowns(), spec1({{"a", {1}}}));
  auto sol = solve_induced(ind.matrix, ind.rhs, 1);
  ASSERT_EQ(sol.values.size(), 2u);
  EXPECT_EQ(sol.values[0][0], Rational(-1, 2));
  EXPECT_EQ(sol.values[1][0], Rational(-1, 2));
  EXPECT_EQ(sol.denominator, 2);
}

TEST(SolveInduced, FreeUnknownsAreZero) {
  // x y^2 a = 1 over Z^2 with a -> (2, 4): x = (-2, -4), y free.
  SymbolTable table({"x", "y"}, {"a"});
  EquationSystem sys(table, {letters({{"x", 1}, {"y", 1}, {"y", 1}, {"a", 1}})});
  SplitExtensionSpec spec;
  spec.rank = 2;
  spec.coefficient_images = {{"a", {2, 4}}};
  auto ind = induced_system(sys, spec);
  auto sol = solve_induced(ind.matrix, ind.rhs, 2);
  EXPECT_EQ(sol.values[0], (RationalVector{-2, -4}));
  EXPECT_EQ(sol.values[1], (RationalVector{0, 0}));
  EXPECT_EQ(sol.denominator, 1);
}

TEST(SolveInduced, RejectsSingularAndMalformed) {
  auto M = IntMatrix::from_rows({{1}, {2}});
  EXPECT_THROW(solve_induced(M, {{0}, {0}}, 1), PreconditionError);
  EXPECT_THROW(solve_induced(IntMatrix::from_rows({{1}}), {{0, 0}}, 1), std::invalid_argument);
  EXPECT_THROW(solve_induced(IntMatrix::from_rows({{1}}), {}, 1), std::invalid_argument);
}

TEST(ChangeVariables, ChecksTheSolution) {
  auto sys = two_unknowns();
  auto spec = spec1({{"a", {1}}});
  AbelianSolution wrong{{{Rational(0)}, {Rational(0)}}, 1};
  EXPECT_THROW(change_variables(sys, spec, wrong), PreconditionError);
  AbelianSolution right{{{Rational(-1, 2)}, {Rational(-1, 2)}}, 2};
  EXPECT_NO_THROW(change_variables(sys, spec, right));
  AbelianSolution short_sol{{{Rational(-1, 2)}}, 2};
  EXPECT_THROW(change_variables(sys, spec, short_sol), PreconditionError);
}

TEST(Rewrite, ObstructionEquationGivesOneMinusTPlusTSquared) {
  auto sys = metabelian_obstruction_system();
  auto r = reduce(sys, spec1({{"a", {1}}, {"c", {0}}}));
  ASSERT_TRUE(r.solution);
  EXPECT_EQ(r.rewritten.scale, 1);
  EXPECT_EQ(r.rewritten.laurent_matrix(0, 0), uni({1, -1, 1}));
  EXPECT_EQ(to_string(r.rewritten.laurent_matrix(0, 0)), "1 - t + t^2");
  EXPECT_EQ(to_string(r.rewritten.words[0]), "x[0] * a^-1 * x[1]^-1 * a^-1 * x[2] * a * a * c^-1");
  EXPECT_EQ(r.certificate.verdict, CertificateVerdict::certified);
  EXPECT_EQ(r.certificate.integer_matrix, IntMatrix::from_rows({{1}}));
}

TEST(Rewrite, SingleUnknownIsOne) {
  SymbolTable table({"x"}, {});
  auto r = reduce(EquationSystem(table, {letters({{"x", 1}})}), spec1({}));
  EXPECT_EQ(r.rewritten.laurent_matrix(0, 0), LaurentPoly::one(1));
  EXPECT_EQ(to_string(r.rewritten.words[0]), "x[0]");
}

TEST(Rewrite, TwoUnknownsNeedScaleTwo) {
  auto r = reduce(two_unknowns(), spec1({{"a", {1}}}));
  EXPECT_EQ(r.rewritten.scale, 2);
  const auto& L = r.rewritten.laurent_matrix;
  EXPECT_EQ(L(0, 0), t(1));
  EXPECT_EQ(L(0, 1), t(2));
  EXPECT_EQ(L(1, 0), t(1));
  EXPECT_EQ(L(1, 1), t(1, -1));
  EXPECT_EQ(to_string(r.rewritten.words[0]), "x[1/2] * y[1] * a");
  EXPECT_EQ(to_string(r.rewritten.words[1]), "x[1/2] * y[1/2]^-1");
  ASSERT_TRUE(r.certificate.witness_minor);
  EXPECT_EQ(r.certificate.witness_minor->determinant, uni({-1, -1}, 2));
  EXPECT_EQ(r.certificate.witness_minor->determinant.augmentation(), -2);
  EXPECT_EQ(r.certificate.integer_matrix, IntMatrix::from_rows({{1, 1}, {1, -1}}));
  EXPECT_EQ(r.certificate.verdict, CertificateVerdict::certified);
}

TEST(Rewrite, SingularSystemIsNotCertified) {
  SymbolTable table({"x"}, {"a", "b"});
  auto r = reduce(EquationSystem(table, {letters({{"x", 1}, {"a", 1}, {"x", -1}, {"b", 1}})}),
                  spec1({{"a", {1}}, {"b", {-1}}}));
  EXPECT_FALSE(r.solution);
  EXPECT_EQ(r.certificate.integer_rank, 0u);
  EXPECT_EQ(r.certificate.verdict, CertificateVerdict::not_certified);
  // x - t^-1 x: a nonzero Laurent entry with augmentation 0.
  EXPECT_EQ(r.rewritten.laurent_matrix(0, 0), LaurentPoly::one(1) - t(-1));
}

TEST(OrbitShift, MultipliesByScaledMonomial) {
  auto r = reduce(two_unknowns(), spec1({{"a", {1}}}));
  auto shifted = orbit_shift(r.rewritten, {1});
  EXPECT_EQ(shifted(0, 0), t(3));
  EXPECT_EQ(shifted(0, 1), t(4));
  EXPECT_EQ(shifted(1, 1), t(3, -1));
  EXPECT_THROW(orbit_shift(r.rewritten, {1, 0}), std::invalid_argument);
  EXPECT_EQ(orbit_shift(r.rewritten, {0}), r.rewritten.laurent_matrix);
}

TEST(Certify, Examples) {
  auto id = laurent_rows({{LaurentPoly::one(1), LaurentPoly(1)}, {LaurentPoly(1), LaurentPoly::one(1)}});
  auto c = certify_nonsingular(id, 1);
  EXPECT_EQ(c.verdict, CertificateVerdict::certified);
  EXPECT_EQ(c.integer_rank, 2u);

  // Augmentation-zero rows are never certified, even with a nonzero minor.
  auto fund = laurent_rows({{LaurentPoly::one(1) - t(1)}});
  auto f = certify_nonsingular(fund, 1);
  EXPECT_EQ(f.verdict, CertificateVerdict::not_certified);
  ASSERT_TRUE(f.witness_minor);
  EXPECT_EQ(f.witness_minor->determinant, fund(0, 0));
}

TEST(WitnessMinor, FirstNonzeroInLexOrderAndGreedyFallback) {
  auto m = laurent_rows({{LaurentPoly(1), t(1), t(2)}});
  auto w = find_witness_minor(m, 1);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->cols, std::vector<std::size_t>{1});
  auto greedy = find_witness_minor(m, 1, 1);  // 3 subsets > budget 1
  ASSERT_TRUE(greedy);
  EXPECT_EQ(greedy->cols, std::vector<std::size_t>{1});
  EXPECT_FALSE(find_witness_minor(laurent_rows({{LaurentPoly(1)}}), 1));
}

TEST(DependenceCheck, DependentRows) {
  auto m = laurent_rows({{uni({1, 1}), t(1)}, {uni({0, 1, 1}), t(2)}});
  auto r = lemma2_check(m, 1, RingHom::augmentation());
  EXPECT_TRUE(r.dependent);
  EXPECT_EQ(r.minors_checked, 1u);
  EXPECT_TRUE(r.image_minors_vanish);
  EXPECT_TRUE(r.hom_commutes_with_minors);
  EXPECT_TRUE(lemma2_conclusion_holds(r));
  EXPECT_EQ(map_entries(m, [](const LaurentPoly& p) { return p.augmentation(); }),
            IntMatrix::from_rows({{2, 1}, {2, 1}}));
}

TEST(DependenceCheck, IndependentRows) {
  auto id = laurent_rows({{LaurentPoly::one(1), LaurentPoly(1)}, {LaurentPoly(1), LaurentPoly::one(1)}});
  auto r = lemma2_check(id, 1, RingHom::augmentation());
  EXPECT_FALSE(r.dependent);
  EXPECT_FALSE(r.image_minors_vanish);

  auto row = laurent_rows({{uni({1, -1, 1}), t(1)}});
  auto s = lemma2_check(row, 1, RingHom::cyclic_quotient(6));
  EXPECT_FALSE(s.dependent);
  EXPECT_EQ(s.minors_checked, 2u);
  ASSERT_TRUE(s.witness);
  EXPECT_EQ(s.witness->cols, std::vector<std::size_t>{0});
  EXPECT_TRUE(s.hom_commutes_with_minors);
  EXPECT_THROW(lemma2_check(laurent_rows({{t(0)}, {t(1)}}), 1, RingHom::augmentation()), std::invalid_argument);
}

TEST(ReducerProperties, CoherentWithExponentMatrixAndFoxCalculus) {
  SurfaceWordGen gen(41, {"x", "y", "a", "b"});
  int reduced = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto rs = random_split_system(gen);
    IntMatrix e = exponent_matrix(rs.system);
    if (rank_over_rationals(e) != e.rows()) continue;
    ++reduced;
    Reduction r = reduce(rs.system, rs.spec);
    ASSERT_TRUE(r.solution);
    EXPECT_EQ(detail::augment(r.rewritten.laurent_matrix), e);
    EXPECT_EQ(r.certificate.verdict, CertificateVerdict::certified);
    for (std::size_t i = 0; i < rs.system.size(); ++i)
      for (std::size_t j = 0; j < rs.system.table().unknowns().size(); ++j) {
        LaurentPoly fox = fox_derivative(rs.system.equations()[i], j, rs.system, rs.spec, r.solution->values,
                                         r.rewritten.scale);
        EXPECT_EQ(r.rewritten.laurent_matrix(i, j),
                  bar_and_shift(fox, r.solution->values[j], r.rewritten.scale))
            << to_string(rs.system.equations()[i]);
      }
  }
  EXPECT_GT(reduced, 100);
}

TEST(ReducerProperties, DependenceSurvivesRandomHomomorphisms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto inst = random_laurent_instance(rng, trial % 2 == 0);
    RingHom h = random_hom(rng, inst.nvars);
    auto r = lemma2_check(inst.matrix, inst.nvars, h);
    EXPECT_TRUE(r.hom_commutes_with_minors);
    if (inst.dependent) {
      EXPECT_TRUE(r.dependent);
    }
    if (r.witness) {
      // The witness is independently a nonzero maximal minor.
      auto sub = inst.matrix.select(r.witness->rows, r.witness->cols);
      EXPECT_FALSE(cofactor_determinant(sub, LaurentPoly(inst.nvars), LaurentPoly::one(inst.nvars)).is_zero());
    }
    EXPECT_TRUE(lemma2_conclusion_holds(r));
  }
}

TEST(ReducerProperties, CertifiedImpliesIndependent) {
  std::mt19937_64 rng(13);
  int certified = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto inst = random_laurent_instance(rng, trial % 3 == 0);
    auto c = certify_nonsingular(inst.matrix, inst.nvars);
    if (c.verdict != CertificateVerdict::certified) continue;
    ++certified;
    EXPECT_FALSE(inst.dependent);
    EXPECT_FALSE(lemma2_check(inst.matrix, inst.nvars, RingHom::augmentation()).dependent);
    EXPECT_TRUE(c.witness_minor);
  }
  EXPECT_GT(certified, 20);
}

TEST(ReducerProperties, OrbitShiftScalesEveryMaximalMinor) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = random_laurent_instance(rng, false);
    std::vector<std::int64_t> a(inst.nvars);
    for (auto& v : a) v = std::uniform_int_distribution<std::int64_t>(-2, 2)(rng);
    Integer scale = std::uniform_int_distribution<int>(1, 3)(rng);
    auto shifted = orbit_shift(inst.matrix, inst.nvars, scale, a);
    Exponent e(inst.nvars);
    for (std::size_t i = 0; i < inst.nvars; ++i)
      e[i] = (scale * a[i] * static_cast<std::int64_t>(inst.matrix.rows())).convert_to<std::int64_t>();
    std::vector<std::size_t> rows(inst.matrix.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    for_each_combination(inst.matrix.cols(), inst.matrix.rows(), [&](std::span<const std::size_t> cs) {
      EXPECT_EQ(determinant(shifted.select(rows, cs), inst.nvars),
                determinant(inst.matrix.select(rows, cs), inst.nvars).shifted(e));
      return true;
    });
  }
}

TEST(ReducerProperties, ConjugatingAnEquationByACoefficientScalesItsRow) {
  SurfaceWordGen gen(53, {"x", "y", "a", "b"});
  for (int trial = 0; trial < 200; ++trial) {
    auto rs = random_split_system(gen);
    if (rank_over_rationals(exponent_matrix(rs.system)) != rs.system.size()) continue;
    std::vector<FlatWord> words = rs.system.equations();
    words[0] = words[0].conjugated_by(letters({{"a", 1}}));
    EquationSystem conj(rs.system.table(), words);
    Reduction r0 = reduce(rs.system, rs.spec), r1 = reduce(conj, rs.spec);
    ASSERT_EQ(r0.rewritten.scale, r1.rewritten.scale);
    EXPECT_EQ(r1.certificate.verdict, r0.certificate.verdict);
    Exponent e(rs.spec.rank);
    for (std::size_t k = 0; k < rs.spec.rank; ++k)
      e[k] = (r0.rewritten.scale * rs.spec.coefficient_images["a"][k]).convert_to<std::int64_t>();
    for (std::size_t j = 0; j < words.size() && j < rs.system.table().unknowns().size(); ++j)
      EXPECT_EQ(r1.rewritten.laurent_matrix(0, j), r0.rewritten.laurent_matrix(0, j).shifted(e));
  }
}

// Only square systems: otherwise the particular solution (free unknowns set
// to zero) depends on the column order.
TEST(ReducerProperties, RenamingUnknownsPermutesColumns) {
  SurfaceWordGen gen(61, {"x", "y", "a", "b"});
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto rs = random_split_system(gen);
    if (rs.system.table().unknowns().size() != 2 || rs.system.size() != 2) continue;
    if (rank_over_rationals(exponent_matrix(rs.system)) != rs.system.size()) continue;
    SymbolTable swapped({"y", "x"}, {"a", "b"});
    EquationSystem sys2(swapped, rs.system.equations());
    Reduction r0 = reduce(rs.system, rs.spec), r1 = reduce(sys2, rs.spec);
    for (std::size_t i = 0; i < rs.system.size(); ++i) {
      EXPECT_EQ(r1.rewritten.laurent_matrix(i, 0), r0.rewritten.laurent_matrix(i, 1));
      EXPECT_EQ(r1.rewritten.laurent_matrix(i, 1), r0.rewritten.laurent_matrix(i, 0));
    }
    ++checked;
  }
  EXPECT_GT(checked, 20);
}
