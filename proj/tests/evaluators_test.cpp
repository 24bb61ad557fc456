#include "fibhess/evaluators.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <array>

namespace fibhess {
namespace {

using testing::PolyGen;
using testing::X;
using testing::Y;
using testing::poly;

const std::array<MatrixKind, 4> kKinds{MatrixKind::W, MatrixKind::M, MatrixKind::H, MatrixKind::K};

HessenbergMatrix two_by_two(const BivarPoly& a, const BivarPoly& b, const BivarPoly& c, const BivarPoly& d) {
  HessenbergMatrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

HessenbergMatrix diagonal(std::size_t n, const BivarPoly& v) {
  HessenbergMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) m(r, r) = v;
  return m;
}

TEST(DetHessenbergTest, WorkedExamples) {
  EXPECT_EQ(det_hessenberg(build_W(4, 5)), poly({{5, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(det_hessenberg(build_M(3, 5)), poly({{5, 0, 1}, {1, 1, 2}}));
  HessenbergMatrix one(1);
  one(0, 0) = poly({{2, 3, 4, -1}});
  EXPECT_EQ(det_hessenberg(one), one(0, 0));
}

TEST(DetHessenbergTest, LargerFrozenValues) {
  // Frozen from symbolic brute-force determinants.
  EXPECT_EQ(det_hessenberg(build_W(2, 7)), poly({{7, 0, 1}, {4, 1, 5}, {1, 2, 3}}));
  EXPECT_EQ(det_hessenberg(build_M(2, 9)), poly({{9, 0, 1}, {6, 1, 7}, {3, 2, 10}, {0, 3, 1}}));
}

TEST(DetHessenbergTest, EmptyMatrixIsOne) {
  EXPECT_EQ(det_hessenberg(HessenbergMatrix(0)), BivarPoly(1));
  EXPECT_EQ(per_hessenberg(HessenbergMatrix(0)), BivarPoly(1));
}

TEST(DetHessenbergTest, RejectsShapeViolation) {
  HessenbergMatrix a = build_W(2, 4);
  a(0, 3) = BivarPoly(1);
  EXPECT_THROW(det_hessenberg(a), ShapeError);
  EXPECT_THROW(per_hessenberg(a), ShapeError);
}

TEST(PerHessenbergTest, WorkedExamples) {
  EXPECT_EQ(per_hessenberg(build_H(3, 5)), poly({{5, 0, 1}, {1, 1, 2}}));
  EXPECT_EQ(per_hessenberg(build_K(2, 4)), poly({{4, 0, 1}, {1, 1, 2}}));
  EXPECT_EQ(per_hessenberg(build_H(1, 6)), poly({{6, 0, 1}, {4, 1, 5}, {2, 2, 6}, {0, 3, 1}}));
  HessenbergMatrix one(1);
  one(0, 0) = Y;
  EXPECT_EQ(per_hessenberg(one), Y);
}

TEST(OracleTest, TwoByTwo) {
  const BivarPoly a = X, b = Y, c = poly({{0, 0, 3, 1}}), d = poly({{1, 1, 2}});
  EXPECT_EQ(det_oracle(two_by_two(a, b, c, d)), a * d - b * c);
  EXPECT_EQ(per_oracle(two_by_two(a, b, c, d)), a * d + b * c);
}

TEST(OracleTest, Diagonal) {
  EXPECT_EQ(det_oracle(diagonal(3, X)), poly({{3, 0, 1}}));
  EXPECT_EQ(per_oracle(diagonal(2, X)), poly({{2, 0, 1}}));
}

TEST(OracleTest, WorkedExamples) {
  EXPECT_EQ(det_oracle(build_W(3, 5)), poly({{5, 0, 1}, {1, 1, 2}}));
  EXPECT_EQ(det_oracle(build_W(3, 5)), det_hessenberg(build_W(3, 5)));
  EXPECT_EQ(per_oracle(build_H(3, 5)), poly({{5, 0, 1}, {1, 1, 2}}));
}

TEST(OracleTest, Budget) {
  EXPECT_THROW(det_oracle(build_W(1, 11)), BudgetExceeded);
  EXPECT_NO_THROW(det_oracle(build_W(1, 10)));
  EXPECT_THROW(per_oracle(build_H(1, 9)), BudgetExceeded);
  EXPECT_NO_THROW(per_oracle(build_H(1, 8)));
  EvalBudget small{.max_oracle_order = 3, .max_permanent_order = 2};
  EXPECT_THROW(det_oracle(build_W(1, 4), small), BudgetExceeded);
  EXPECT_THROW(per_oracle(build_H(1, 3), small), BudgetExceeded);
}

TEST(OracleEquivalenceTest, AllFamilies) {
  for (MatrixKind kind : kKinds)
    for (int p = 1; p <= 4; ++p)
      for (int n = 1; n <= 7; ++n) {
        HessenbergMatrix a = build(kind, p, n);
        EXPECT_EQ(det_hessenberg(a), det_oracle(a)) << kind_name(kind) << " p=" << p << " n=" << n;
        EXPECT_EQ(per_hessenberg(a), per_oracle(a)) << kind_name(kind) << " p=" << p << " n=" << n;
      }
}

TEST(OracleEquivalenceTest, RandomDenseHessenberg) {
  PolyGen gen(7);
  for (int t = 0; t < 60; ++t) {
    HessenbergMatrix a = gen.dense_hessenberg(static_cast<std::size_t>(gen.uniform(1, 6)));
    EXPECT_EQ(det_hessenberg(a), det_oracle(a));
    EXPECT_EQ(per_hessenberg(a), per_oracle(a));
  }
}

TEST(OracleEquivalenceTest, MisleadingBandAnnotationIsIgnored) {
  // Band says 2, entries also sit on offset 1.
  HessenbergMatrix a = build_K(2, 5);
  a(3, 2) = X;
  a(4, 1) = poly({{0, 0, 0, 5}});
  ASSERT_FALSE(a.band_consistent());
  EXPECT_EQ(det_hessenberg(a), det_oracle(a));
  EXPECT_EQ(per_hessenberg(a), per_oracle(a));
}

BivarPoly scale_row_and_eval(HessenbergMatrix a, std::size_t row, const GaussianInt& c, bool det) {
  for (std::size_t col = 0; col < a.order(); ++col) a(row, col) = a(row, col).scaled(c);
  return det ? det_hessenberg(a) : per_hessenberg(a);
}

TEST(PropertyTest, RowScalingLinearity) {
  PolyGen gen(99);
  const std::array<GaussianInt, 2> scalars{GaussianInt(2), GaussianInt::unit()};
  for (int t = 0; t < 100; ++t) {
    const auto order = static_cast<std::size_t>(gen.uniform(1, 6));
    const auto band = static_cast<std::size_t>(gen.uniform(1, 4));
    HessenbergMatrix a = gen.band_matrix(order, band);
    const auto row = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(order) - 1));
    const BivarPoly det = det_hessenberg(a), per = per_hessenberg(a);
    for (const auto& c : scalars) {
      EXPECT_EQ(scale_row_and_eval(a, row, c, true), det.scaled(c));
      EXPECT_EQ(scale_row_and_eval(a, row, c, false), per.scaled(c));
    }
  }
}

TEST(PropertyTest, TriangularProduct) {
  PolyGen gen(5);
  for (int t = 0; t < 100; ++t) {
    const auto order = static_cast<std::size_t>(gen.uniform(1, 7));
    HessenbergMatrix a = gen.dense_hessenberg(order);
    for (std::size_t r = 0; r + 1 < order; ++r) a(r, r + 1) = BivarPoly();
    BivarPoly product(1);
    for (std::size_t r = 0; r < order; ++r) product *= a(r, r);
    EXPECT_EQ(det_hessenberg(a), product);
    EXPECT_EQ(per_hessenberg(a), product);
  }
}

TEST(PropertyTest, RealnessOfComplexFamilies) {
  for (int p = 1; p <= 4; ++p)
    for (int n = 1; n <= 12; ++n) {
      EXPECT_TRUE(det_hessenberg(build_W(p, n)).all_real()) << p << "," << n;
      EXPECT_TRUE(per_hessenberg(build_H(p, n)).all_real()) << p << "," << n;
    }
}

TEST(PropertyTest, ComplexEntriesDoNotCancelForPermanentOfW) {
  // per(W) keeps i^p * i^p = (-1)^p without the determinant's sign, so odd p
  // leaves a -y contribution; the recursion and oracle must agree on it.
  HessenbergMatrix w = build_W(1, 2);
  EXPECT_EQ(per_hessenberg(w), poly({{2, 0, 1}, {0, 1, -1}}));
  EXPECT_EQ(per_oracle(w), per_hessenberg(w));
}

}  // namespace
}  // namespace fibhess
