#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "rooksum/field.hpp"
#include "rooksum/matrix.hpp"
#include "rooksum/rational.hpp"
#include "rooksum/span.hpp"

using namespace rooksum;

namespace {

using QVec = std::vector<Rational>;

DenseMatrix<RationalField> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range,
                                         double density) {
  RationalField q;
  DenseMatrix<RationalField> m(rows, cols, q);
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (keep(rng)) m(i, j) = Rational(num(rng), den(rng));
    }
  }
  return m;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_EQ(Rational(4, 2).to_fraction_string(), "2/1");
  EXPECT_EQ(Rational::parse("10/-4"), Rational(-5, 2));
  EXPECT_TRUE(Rational(0, 7).is_zero());
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) * Rational(3, 5), Rational(1, 5));
  EXPECT_EQ(Rational(1, 3) / Rational(-2), Rational(-1, 6));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(Rational, GrowsPastMachineWords) {
  Rational big(INT64_MAX);
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq / big, big);
  EXPECT_TRUE((sq / big).is_small());
  EXPECT_EQ((sq - sq), Rational(0));
  mpz_class expect = mpz_class("85070591730234615847396907784232501249");
  EXPECT_EQ(sq.numerator(), expect);
  Rational acc(1);
  for (int i = 1; i <= 30; ++i) acc *= Rational(i);
  EXPECT_EQ(acc.to_string(), "265252859812191058636308480000000");
  Rational r = acc;
  r.add_mul(Rational(-1), acc);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(Rational(INT64_MIN).to_string(), "-9223372036854775808");
}

TEST(PrimeField, Arithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.from_rational(Rational(1, 2)), 4u);
  EXPECT_THROW(f.from_rational(Rational(1, 7)), std::exception);
  EXPECT_EQ(f.name(), "Fp:7");
  EXPECT_THROW(PrimeField(8), std::invalid_argument);
}

TEST(FieldSpec, Parsing) {
  EXPECT_EQ(FieldSpec::parse("Q").modulus, 0u);
  EXPECT_EQ(FieldSpec::parse("Fp:3").modulus, 3u);
  EXPECT_THROW(FieldSpec::parse("Fp:9"), std::invalid_argument);
  EXPECT_THROW(FieldSpec::parse("R"), std::invalid_argument);
  EXPECT_TRUE(factorial_invertible(PrimeField(7), 5));
  EXPECT_FALSE(factorial_invertible(PrimeField(5), 5));
  EXPECT_TRUE(factorial_invertible(RationalField{}, 10));
}

TEST(Elimination, SmallExamples) {
  RationalField q;
  EXPECT_EQ(rank(DenseMatrix<RationalField>::identity(5, q)), 5u);
  EXPECT_EQ(nullspace(DenseMatrix<RationalField>(3, 4, q)).size(), 4u);
  auto m = DenseMatrix<RationalField>::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, 2, q);
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(bareiss_rank(m), 1u);
  auto sol = solve(m, QVec{Rational(3), Rational(6)});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ((*sol)[0] + Rational(2) * (*sol)[1], Rational(3));
  EXPECT_FALSE(solve(m, QVec{Rational(3), Rational(7)}).has_value());
}

TEST(Elimination, TwoRoutesAgreeOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    auto m = random_matrix(rng, rows, cols, 5, 0.6);
    // Force some dependent rows.
    if (rows > 2) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * Rational(3, 2) - m(1, j);
    }
    std::size_t r1 = rank(m, PivotRule::kFirstNonzero);
    EXPECT_EQ(r1, rank(m, PivotRule::kSmallest));
    EXPECT_EQ(r1, bareiss_rank(m));
    auto ns = nullspace(m);
    EXPECT_EQ(r1 + ns.size(), cols);
    for (const auto& v : ns) {
      for (std::size_t i = 0; i < rows; ++i) {
        Rational s;
        for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * v[j];
        EXPECT_TRUE(s.is_zero());
      }
    }
  }
}

TEST(Elimination, PrimeFieldRankCanDrop) {
  PrimeField f2(2);
  auto m = DenseMatrix<PrimeField>::from_rows({{1, 1}, {1, 1}}, 2, f2);
  EXPECT_EQ(rank(m), 1u);
  RationalField q;
  auto mq = DenseMatrix<RationalField>::from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}}, 2, q);
  EXPECT_EQ(rank(mq), 2u);
  auto m2 = DenseMatrix<PrimeField>::from_rows({{1, 1}, {1, f2.from_int(-1)}}, 2, f2);
  EXPECT_EQ(rank(m2), 1u);
}

TEST(SpanBasis, InsertAndContain) {
  RationalField q;
  SpanBasis<RationalField> s(2, q);
  QVec e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)}, sum{Rational(1), Rational(1)};
  EXPECT_TRUE(s.insert(e1));
  EXPECT_FALSE(s.insert(e1));
  EXPECT_TRUE(s.insert(e2));
  EXPECT_FALSE(s.insert(sum));
  EXPECT_EQ(s.rank(), 2u);
  EXPECT_TRUE(s.is_full());

  SpanBasis<RationalField> x(2, q), y(2, q);
  x.insert(e1);
  y.insert(e2);
  EXPECT_EQ(x.rank() + y.rank() - joint_rank(x, y), 0u);
  EXPECT_EQ(x.rank() + x.rank() - joint_rank(x, x), x.rank());
  EXPECT_THROW(x.insert(QVec{Rational(1)}), PreconditionError);
}

TEST(SpanBasis, InsertionOrderIrrelevant) {
  std::mt19937_64 rng(5);
  RationalField q;
  for (int t = 0; t < 50; ++t) {
    auto m = random_matrix(rng, 6, 5, 3, 0.4);
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < 6; ++i) rows.push_back(m.row(i));
    SpanBasis<RationalField> a(5, q), b(5, q);
    for (const auto& r : rows) a.insert(r);
    std::shuffle(rows.begin(), rows.end(), rng);
    for (const auto& r : rows) b.insert(r);
    EXPECT_TRUE(same_span(a, b));
    EXPECT_EQ(a.rank(), bareiss_rank(m));
    auto probe = random_matrix(rng, 1, 5, 3, 0.5).row(0);
    EXPECT_EQ(a.contains(probe), b.contains(probe));
  }
}

TEST(MinDependency, Examples) {
  RationalField q;
  QVec v{Rational(2), Rational(-1)};
  auto d = min_dependency<RationalField>({v, v}, 2, q);
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, (QVec{Rational(-1), Rational(1)}));

  QVec e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)}, s{Rational(1), Rational(1)};
  d = min_dependency<RationalField>({e1, e2, s}, 2, q);
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, (QVec{Rational(-1), Rational(-1), Rational(1)}));

  // Powers of a nilpotent N with N^2 = 0 applied to x: x, Nx, 0.
  QVec x{Rational(0), Rational(1)}, nx{Rational(1), Rational(0)}, zero{Rational(0), Rational(0)};
  d = min_dependency<RationalField>({x, nx, zero}, 2, q);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->size(), 3u);

  EXPECT_FALSE((min_dependency<RationalField>({e1, e2}, 2, q)));
}
