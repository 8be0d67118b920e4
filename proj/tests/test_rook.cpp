#include <gtest/gtest.h>

#include <random>

#include "rooksum/rook.hpp"
#include "rooksum/serialize.hpp"
#include "support/oracles.hpp"

using namespace rooksum;

namespace {

using Q = RationalField;
using Elem = AlgebraElement<Q>;

Subset S(int n, const char* text) { return Subset::parse(n, text); }

Elem perms(int n, std::initializer_list<const char*> ws) {
  Elem e(n, Q{});
  for (const char* w : ws) e = e + Elem::basis(Permutation::parse(w), Q{});
  return e;
}

}  // namespace

TEST(RookSum, WorkedExamples) {
  EXPECT_EQ(nabla(S(4, "{2,3}"), S(4, "{1,4}"), Q{}), perms(4, {"2143", "2413", "3142", "3412"}));
  EXPECT_EQ(nabla_tilde(S(4, "{1,2,3}"), S(4, "{1,4}"), Q{}).support_size(), 12u);
  EXPECT_TRUE(nabla(S(4, "{1}"), S(4, "{1,2}"), Q{}).is_zero());
  EXPECT_TRUE(nabla_tilde(S(4, "{1}"), S(4, "{1,2}"), Q{}).is_zero());
}

TEST(RookSum, MatchesSetOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (const Subset& b : all_subsets(n)) {
      for (const Subset& a : all_subsets(n)) {
        auto ob = oracle::elements(b), oa = oracle::elements(a);
        EXPECT_EQ(oracle::from_element(nabla(b, a, Q{})), oracle::nabla(n, ob, oa));
        EXPECT_EQ(oracle::from_element(nabla_tilde(b, a, Q{})), oracle::nabla_tilde(n, ob, oa));
      }
    }
  }
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega(Subset::empty(4), Subset::empty(4)), 24);
  EXPECT_EQ(omega(Subset::full(4), Subset::full(4)), 24);
  EXPECT_EQ(omega(S(4, "{1,2}"), S(4, "{2,3}")), 1);
  EXPECT_EQ(omega(S(5, "{1,2}"), S(5, "{1,2}")), 2 * 6);
}

TEST(ProductRules, AllEmptyGivesScaledFullSum) {
  for (int n = 1; n <= 4; ++n) {
    Subset e = Subset::empty(n);
    Elem full = Elem::sum_where(n, Q{}, [](const Permutation&) { return true; });
    Elem expected = scale(Rational(static_cast<std::int64_t>(factorial(n))), full);
    EXPECT_EQ(product_rule_a(e, e, e, e, Q{}), expected);
    EXPECT_EQ(product_rule_b(e, e, e, e, Q{}), expected);
    EXPECT_EQ(product_rule_c(e, e, e, e, Q{}), expected);
  }
}

TEST(ProductRules, SingletonExampleMatchesConvolutionOracle) {
  Subset d = S(4, "{1}"), c = S(4, "{1}"), b = S(4, "{2}"), a = S(4, "{2}");
  auto direct = oracle::convolve(oracle::nabla(4, {0}, {0}), oracle::nabla(4, {1}, {1}));
  EXPECT_EQ(oracle::from_element(product_rule_a(d, c, b, a, Q{})), direct);
  EXPECT_EQ(oracle::from_element(product_rule_b(d, c, b, a, Q{})), direct);
  EXPECT_EQ(oracle::from_element(product_rule_c(d, c, b, a, Q{})), direct);
}

TEST(ProductRules, RejectsBadShapes) {
  EXPECT_THROW(product_rule_a(S(3, "{1}"), S(3, "{1,2}"), S(3, "{1}"), S(3, "{2}"), Q{}), PreconditionError);
  EXPECT_THROW(product_rule_b(S(3, "{1}"), S(3, "{1}"), S(3, "{1}"), S(3, "{}"), Q{}), PreconditionError);
  Subset big = Subset::empty(9);
  EXPECT_THROW(product_rule_b(big, big, big, big, Q{}), CapExceeded);
}

TEST(ProductRules, PairCountEqualsOmega) {
  // For each w: #{(u,v) : u(C)=D, v(A)=B, uv=w} is omega(B,C) when
  // |w(A) ∩ D| = |B ∩ C| and 0 otherwise.
  for (int n = 1; n <= 4; ++n) {
    auto lines = oracle::permutations(n);
    std::vector<std::pair<Subset, Subset>> pairs;
    for (const Subset& x : all_subsets(n)) {
      for (const Subset& y : all_subsets(n)) {
        if (x.size() == y.size()) pairs.emplace_back(x, y);
      }
    }
    for (const auto& [d, c] : pairs) {
      for (const auto& [b, a] : pairs) {
        auto od = oracle::elements(d), oc = oracle::elements(c), ob = oracle::elements(b), oa = oracle::elements(a);
        std::map<oracle::Line, std::int64_t> count;
        for (const auto& u : lines) {
          if (oracle::image(u, oc) != od) continue;
          for (const auto& v : lines) {
            if (oracle::image(v, oa) == ob) ++count[oracle::compose(u, v)];
          }
        }
        int overlap = (b & c).size();
        for (const auto& w : lines) {
          auto wa = oracle::image(w, oa);
          int meet = 0;
          for (int x : wa) meet += od.count(x);
          std::int64_t expected = meet == overlap ? omega(b, c) : 0;
          ASSERT_EQ(count[w], expected);
        }
      }
    }
  }
}

TEST(Delta, Examples) {
  Subset d = S(3, "{1}");
  EXPECT_EQ(delta(d, d, 2), 0);
  EXPECT_EQ(delta(d, d, 0), 2);  // |C|! (n-|C|)! = 1 * 2
  EXPECT_EQ(delta(d, d, 1), 2);
  EXPECT_EQ(delta_tilde(S(3, "{1,2}"), S(3, "{1}"), 0), 0);
  EXPECT_EQ(delta_tilde(Subset::empty(3), Subset::empty(3), 0), delta(Subset::empty(3), Subset::empty(3), 0));
}

TEST(Triangularity, ZeroWeightsAndContainmentForm) {
  Subset d = S(3, "{1,2}");
  SubsetWeights<Q> none;
  EXPECT_TRUE(triangular_annihilation(d, none, Q{}).is_zero());
  // Indicator of the |D|-subsets of B reproduces the containment product.
  Subset b = S(4, "{1,2,4}");
  Subset d4 = S(4, "{2,3}");
  SubsetWeights<Q> ind;
  for (const Subset& c : subsets_of_size(4, 2)) {
    if (c.is_subset_of(b)) ind[c] = Rational(1);
  }
  EXPECT_EQ(weighted_nabla_from(d4, ind, Q{}), nabla_tilde(b, d4, Q{}));
  EXPECT_TRUE(triangular_annihilation_mirrored(d4, ind, Q{}).is_zero());
  EXPECT_TRUE(containment_annihilation(b, d4, Q{}).is_zero());
  SubsetWeights<Q> wrong{{S(4, "{1}"), Rational(1)}};
  EXPECT_THROW(triangular_annihilation(d4, wrong, Q{}), PreconditionError);
}

TEST(Kappa, Examples) {
  for (int n = 2; n <= 5; ++n) {
    Elem full = Elem::sum_where(n, Q{}, [](const Permutation&) { return true; });
    EXPECT_EQ(kappa(n, 0, 0, 0, Q{}), full);
    EXPECT_EQ(kappa(n, 2, 0, 0, Q{}), full);
    EXPECT_EQ(minpol_row(n, 0, 0, 0).formatted(), "(x-" + std::to_string(factorial(n)) + ")*x");
  }
  EXPECT_EQ(minpol_row(2, 1, 1, 1).formatted(), "(x-1)*(x+1)");
  EXPECT_EQ(minpol_row(5, 3, 2, 2).formatted(), "(x-12)*(x-4)*x*(x+8)");
  EXPECT_EQ(minpol_row(4, 2, 2, 1).formatted(FactorStyle::kTeX), "(x-4)(x+2)x^{2}");
  EXPECT_TRUE(kappa(3, 1, 2, 2, Q{}).is_zero());  // c > a
  EXPECT_TRUE(kappa(3, 2, 2, 0, Q{}).is_zero());  // a + b - c > n
}

TEST(Kappa, MinimalPolynomialsSplitWithFewFactors) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& row : minpol_table(n)) {
      ASSERT_TRUE(row.factors.has_value()) << row.n << " " << row.a << row.b << row.c;
      EXPECT_LE(static_cast<int>(row.factors->size()), row.a + 2);
      EXPECT_TRUE(oracle::is_minimal_polynomial(kappa(n, row.a, row.b, row.c, Q{}), row.coefficients));
    }
  }
}

TEST(MinpolTable, RowCountsAndFormats) {
  std::vector<std::size_t> counts;
  for (int n = 1; n <= 6; ++n) counts.push_back(minpol_parameters(n).size());
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 3, 5, 10, 15, 24}));
  auto rows = minpol_table(1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].formatted(), "x-1");
  EXPECT_EQ(minpol_tsv(rows), "n\ta\tb\tc\tminpol\n1\t0\t0\t0\tx-1\n");
  EXPECT_EQ(minpol_json(rows).dump(), R"([{"n":1,"a":0,"b":0,"c":0,"minpol":"x-1"}])");
  EXPECT_THROW(minpol_table(7), CapExceeded);
}
