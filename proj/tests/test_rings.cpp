#include "groupeq/cyclic.hpp"
#include "groupeq/determinant.hpp"
#include "groupeq/laurent.hpp"
#include "groupeq/prime_field.hpp"
#include "groupeq/ring_hom.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace groupeq;
using namespace groupeq::testing;

namespace {

LaurentPoly uni(std::vector<Integer> c, std::int64_t low = 0) { return LaurentPoly::univariate(std::move(c), low); }

}  // namespace

TEST(Laurent, ObstructionFactorIdentity) {
  // (1 - y + y^2)(1 + y - y^3 - y^4) = 1 - y^6
  EXPECT_EQ(uni({1, -1, 1}) * uni({1, 1, 0, -1, -1}), uni({1, 0, 0, 0, 0, 0, -1}));
}

TEST(Laurent, InverseMonomials) {
  EXPECT_EQ(LaurentPoly::monomial({1, 0}) * LaurentPoly::monomial({-1, 0}), LaurentPoly::one(2));
}

TEST(Laurent, ZeroIsAbsorbing) {
  LaurentPoly p = uni({3, 0, -2}, -1);
  EXPECT_TRUE((p * LaurentPoly(1)).is_zero());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).size(), 0u);
}

TEST(Laurent, NvarsMismatchThrows) {
  EXPECT_THROW(LaurentPoly::one(1) * LaurentPoly::one(2), std::invalid_argument);
  EXPECT_THROW(LaurentPoly::one(1) + LaurentPoly::one(2), std::invalid_argument);
}

TEST(Laurent, CanonicalRendering) {
  EXPECT_EQ(to_string(uni({1, -1, 1})), "1 - t + t^2");
  EXPECT_EQ(to_string(uni({-1, 0, 2}, -1)), "-t^-1 + 2*t");
  EXPECT_EQ(to_string(LaurentPoly(1)), "0");
  LaurentPoly two = LaurentPoly::monomial({2, -1}, 3) + LaurentPoly::monomial({0, 1}, -1) + LaurentPoly::one(2);
  EXPECT_EQ(to_string(two), "1 - t2 + 3*t1^2*t2^-1");
  EXPECT_EQ(to_string(uni({1, -1, 1}), "y"), "1 - y + y^2");
}

TEST(Laurent, ExactDivision) {
  LaurentPoly a = uni({1, -1, 1}), b = uni({1, 1, 0, -1, -1}, -3);
  EXPECT_EQ(exact_divide(a * b, b), a);
  EXPECT_EQ(exact_divide(a * b, a), b);
  EXPECT_THROW(exact_divide(uni({1, 1}), uni({1, 0, 1})), std::domain_error);
  EXPECT_THROW(exact_divide(uni({2}), uni({3})), std::domain_error);
  EXPECT_THROW(exact_divide(a, LaurentPoly(1)), std::domain_error);
}

TEST(LaurentProperties, RingAxiomsAndNoZeroDivisors) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + i % 2;
    LaurentPoly a = random_nonzero(rng, n), b = random_nonzero(rng, n), c = random_poly(rng, n);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_FALSE((a * b).is_zero());
    EXPECT_EQ(exact_divide(a * b, a), b);
  }
}

TEST(LaurentProperties, AugmentationSendsMonomialsToOne) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> ex(-50, 50);
  for (int i = 0; i < 100; ++i) {
    Exponent e{ex(rng), ex(rng), ex(rng)};
    EXPECT_EQ(std::get<Integer>(apply_hom(RingHom::augmentation(), LaurentPoly::monomial(e))), 1);
  }
}

TEST(Cyclic, ProjectExamples) {
  EXPECT_TRUE(cyclic_project(uni({1, 0, 0, 0, 0, 0, -1}), 6).is_zero());
  CyclicPoly obstruction = cyclic_project(uni({-1, 1}) * uni({1, 1, 0, -1, -1}), 6);
  EXPECT_EQ(obstruction, CyclicPoly(std::vector<Integer>{-1, 0, 1, 1, 0, -1}));
  EXPECT_EQ(to_string(obstruction), "-1 + y^2 + y^3 - y^5");
  EXPECT_EQ(cyclic_project(LaurentPoly::monomial({7}), 6), CyclicPoly::monomial(6, 1));
  EXPECT_EQ(cyclic_project(LaurentPoly::monomial({-1}), 6), CyclicPoly::monomial(6, 5));
}

TEST(Cyclic, HasZeroDivisors) {
  CyclicPoly a = CyclicPoly::monomial(6, 0) - CyclicPoly::monomial(6, 1);
  CyclicPoly b(std::vector<Integer>{1, 1, 1, 1, 1, 1});
  EXPECT_FALSE(a.is_zero());
  EXPECT_FALSE(b.is_zero());
  EXPECT_TRUE((a * b).is_zero());
}

TEST(CyclicProperties, ProjectionIsRingHomomorphism) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_poly(rng, 1, 5, 9), b = random_poly(rng, 1, 5, 9);
    EXPECT_EQ(cyclic_project(a * b, 6), cyclic_project(a, 6) * cyclic_project(b, 6));
    EXPECT_EQ(cyclic_project(a + b, 6), cyclic_project(a, 6) + cyclic_project(b, 6));
  }
}

TEST(PrimeField, Arithmetic) {
  PrimeFieldElem five(7, 5);
  EXPECT_EQ(five.pow(6), PrimeFieldElem(7, 1));
  for (int k = 1; k < 6; ++k) EXPECT_FALSE(five.pow(k) == 1) << k;  // 5 generates F_7^*
  EXPECT_EQ(five * five.inverse(), PrimeFieldElem(7, 1));
  EXPECT_EQ(PrimeFieldElem(7, -3), PrimeFieldElem(7, 4));
  EXPECT_THROW(PrimeFieldElem(6, 1), std::invalid_argument);
  EXPECT_THROW(PrimeFieldElem(7, 0).inverse(), std::domain_error);
  EXPECT_THROW(PrimeFieldElem(7, 1) + PrimeFieldElem(5, 1), std::invalid_argument);
}

TEST(RingHom, Examples) {
  EXPECT_EQ(std::get<Integer>(apply_hom(RingHom::augmentation(), uni({1, -1, 1}))), 1);
  EXPECT_EQ(std::get<PrimeFieldElem>(apply_hom(RingHom::evaluation(7, 5), uni({-1, 1}))), PrimeFieldElem(7, 4));
  EXPECT_EQ(std::get<Integer>(apply_hom(RingHom::augmentation(), LaurentPoly(1))), 0);
  EXPECT_THROW(RingHom::evaluation(7, 0), std::domain_error);
  EXPECT_THROW(RingHom::evaluation(7, 14), std::domain_error);
}

TEST(RingHom, EvaluationOnCyclicRing) {
  // y -> 5 is well defined on Z[y]/(y^6 - 1) over F_7; y -> 2 would need 2^6 = 1, true as well (2^3 = 1).
  CyclicPoly u = CyclicPoly::monomial(6, 1) - CyclicPoly(6, 1);
  EXPECT_EQ(std::get<PrimeFieldElem>(apply_hom(RingHom::evaluation(7, 5), u)), PrimeFieldElem(7, 4));
  EXPECT_THROW(apply_hom(RingHom::evaluation(11, 2), u), std::domain_error);  // 2^6 = 9 in F_11
  EXPECT_EQ(std::get<Integer>(apply_hom(RingHom::augmentation(), u)), 0);
  EXPECT_EQ(std::get<CyclicPoly>(apply_hom(RingHom::cyclic_quotient(3), CyclicPoly::monomial(6, 4))),
            CyclicPoly::monomial(3, 1));
}

TEST(RingHomProperties, EvaluationCommutesWithArithmetic) {
  std::mt19937_64 rng(3);
  RingHom h = RingHom::evaluation(7, 5);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_poly(rng, 2), b = random_poly(rng, 2);
    auto ev = [&](const LaurentPoly& p) { return std::get<PrimeFieldElem>(apply_hom(h, p)); };
    EXPECT_EQ(ev(a * b), ev(a) * ev(b));
    EXPECT_EQ(ev(a + b), ev(a) + ev(b));
  }
  for (int i = 0; i < 200; ++i) {
    CyclicPoly a = cyclic_project(random_poly(rng, 1, 4, 8), 6), b = cyclic_project(random_poly(rng, 1, 4, 8), 6);
    auto ev = [&](const CyclicPoly& p) { return std::get<PrimeFieldElem>(apply_hom(h, p)); };
    EXPECT_EQ(ev(a * b), ev(a) * ev(b));
  }
}

TEST(Determinant, LaurentDependentRows) {
  Matrix<LaurentPoly> m = Matrix<LaurentPoly>::from_rows({{uni({1, 1}), uni({0, 1})}, {uni({0, 1, 1}), uni({0, 0, 1})}});
  EXPECT_TRUE(determinant(m, 1).is_zero());
}

TEST(Determinant, IdentityAndUnitriangular) {
  EXPECT_EQ(determinant(Matrix<LaurentPoly>::identity(3, LaurentPoly(2), LaurentPoly::one(2)), 2), LaurentPoly::one(2));
  Matrix<PrimeFieldElem> u = Matrix<PrimeFieldElem>::from_rows(
      {{PrimeFieldElem(7, 1), PrimeFieldElem(7, 4)}, {PrimeFieldElem(7, 0), PrimeFieldElem(7, 1)}});
  EXPECT_EQ(determinant(u, 7), PrimeFieldElem(7, 1));
  EXPECT_EQ(determinant(Matrix<CyclicPoly>::identity(3, CyclicPoly(6), CyclicPoly(6, 1)), 6), CyclicPoly(6, 1));
}

TEST(DeterminantProperties, BareissAgreesWithCofactorOverLaurent) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 1 + static_cast<std::size_t>(i % 4), nv = 1 + static_cast<std::size_t>(i % 2);
    Matrix<LaurentPoly> m(n, n, LaurentPoly(nv));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(rng, nv, 3, 2, 3);
    EXPECT_EQ(determinant(m, nv), cofactor_determinant(m, LaurentPoly(nv), LaurentPoly::one(nv)));
  }
}

TEST(DeterminantProperties, CyclicDeterminantIsProjectionOfLaurent) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    Matrix<LaurentPoly> m(n, n, LaurentPoly(1));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(rng, 1, 3, 7, 3);
    auto projected = map_entries(m, [](const LaurentPoly& p) { return cyclic_project(p, 6); });
    EXPECT_EQ(determinant(projected, 6), cyclic_project(determinant(m, 1), 6));
  }
}
