#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "brute_force.hpp"
#include "onefactor/pairing.hpp"
#include "onefactor/product.hpp"

namespace onefactor {
namespace {

// All pairs of product vertices satisfying both sum conditions.
std::vector<PairEdge> scan_product_edges(Int s, Int t, Int k, Int l) {
  std::vector<PairEdge> out;
  for (Int a = 0; a < s * t; ++a) {
    for (Int b = a + 1; b < s * t; ++b) {
      const PairVertex x{a / t, a % t};
      const PairVertex y{b / t, b % t};
      if ((x.i + y.i) % s == k && (x.j + y.j) % t == l) out.push_back({x, y});
    }
  }
  return out;
}

bool contains(const ProductFactor& pf, PairVertex a, PairVertex b) {
  if (b < a) std::swap(a, b);
  return std::ranges::find(pf.edges, PairEdge{a, b}) != pf.edges.end();
}

TEST(ProductFactorTest, Examples) {
  const ProductFactor d00 = build_product_factor(3, 5, 0, 0);
  EXPECT_EQ(d00.isolated, (PairVertex{0, 0}));
  EXPECT_EQ(d00.edges.size(), 7u);
  EXPECT_TRUE(contains(d00, {1, 1}, {2, 4}));
  EXPECT_TRUE(contains(d00, {0, 1}, {0, 4}));

  const ProductFactor d33 = build_product_factor(3, 3, 0, 0);
  EXPECT_EQ(d33.isolated, (PairVertex{0, 0}));
  EXPECT_EQ(d33.edges.size(), 4u);

  EXPECT_EQ(build_product_factor(3, 5, 1, 2).isolated, (PairVertex{2, 1}));
}

TEST(ProductFactorTest, RejectsEvenOrOutOfRange) {
  EXPECT_THROW(build_product_factor(4, 5, 0, 0), std::invalid_argument);
  EXPECT_THROW(build_product_factor(3, 6, 0, 0), std::invalid_argument);
  EXPECT_THROW(build_product_factor(3, 5, 3, 0), std::invalid_argument);
}

TEST(ProductFactorTest, MatchesScanAndIsNearOneFactor) {
  for (Int s = 3; s <= 9; s += 2) {
    for (Int t = 3; t <= 9; t += 2) {
      for (Int k = 0; k < s; ++k) {
        for (Int l = 0; l < t; ++l) {
          const ProductFactor pf = build_product_factor(s, t, k, l);
          ASSERT_EQ(pf.edges, scan_product_edges(s, t, k, l));
          const Factor flat = flatten(pf);
          const Validity v = validate_factor(flat);
          ASSERT_TRUE(v) << s << "x" << t << " (" << k << "," << l << "): " << v.reason;
          ASSERT_EQ(pf.isolated.i, brute::half(k, s));
          ASSERT_EQ(pf.isolated.j, brute::half(l, t));
        }
      }
    }
  }
}

TEST(ProductFactorTest, FamilyPartitionsEdgesForCoprimeOrders) {
  for (auto [s, t] : {std::pair<Int, Int>{3, 5}, {3, 7}, {5, 7}, {5, 9}, {7, 9}}) {
    Factorization fz{s * t, {}};
    for (const ProductFactor& pf : build_product_family(s, t)) fz.factors.push_back(flatten(pf));
    std::size_t total = 0;
    for (const Factor& f : fz.factors) total += f.edges.size();
    EXPECT_EQ(static_cast<Int>(total), s * t * (s * t - 1) / 2);
    EXPECT_TRUE(validate_factorization(fz));
  }
}

TEST(ProductCriterionTest, Examples) {
  EXPECT_TRUE(is_perfect_product_pair(3, 5, {0, 0}, {1, 1}));
  EXPECT_FALSE(is_perfect_product_pair(3, 5, {0, 0}, {0, 1}));
  EXPECT_FALSE(is_perfect_product_pair(3, 5, {0, 0}, {1, 0}));
  EXPECT_THROW(is_perfect_product_pair(3, 5, {1, 1}, {1, 1}), std::invalid_argument);
}

TEST(ProductBoundTest, Examples) {
  EXPECT_EQ(product_bound(3, 5, 3, 10), 60);
  EXPECT_EQ(product_bound(3, 5, 0, 10), 0);
  EXPECT_EQ(product_bound(5, 7, 10, 21), 420);
}

TEST(ProductCountTest, CoprimeOrdersMatchCriterionAndBound) {
  // c values of the modular families: 3*2/2, 5*4/2, 7*6/2.
  EXPECT_EQ(count_perfect_product_pairs(3, 5), 60);
  EXPECT_EQ(count_perfect_product_pairs(3, 7), 126);
  EXPECT_EQ(count_perfect_product_pairs(5, 7), 420);
  EXPECT_EQ(predicted_perfect_product_pairs(3, 5), 60);
  EXPECT_EQ(predicted_perfect_product_pairs(3, 7), 126);
  EXPECT_EQ(predicted_perfect_product_pairs(5, 7), 420);
}

// For s = t = 3 the two-gcd rule predicts 9*(2*2)/2 = 18 pairs, but the
// product walk closes after lcm(s,t) - 1 edges, so traversal finds none.
TEST(ProductCountTest, NonCoprimeOrdersDisagreeWithCriterion) {
  EXPECT_EQ(predicted_perfect_product_pairs(3, 3), 18);
  EXPECT_EQ(count_perfect_product_pairs(3, 3), 0);
  EXPECT_EQ(count_perfect_product_pairs(3, 9), 0);
  EXPECT_EQ(count_perfect_product_pairs(5, 5), 0);
}

TEST(ProductCountTest, TraversalVersusCriterionPerPair) {
  for (Int s = 3; s <= 9; s += 2) {
    for (Int t = 3; t <= 9; t += 2) {
      std::vector<Factor> flat;
      for (const ProductFactor& pf : build_product_family(s, t)) flat.push_back(flatten(pf));
      const Int n = s * t;
      Int mismatches = 0;
      for (Int a = 0; a < n; ++a) {
        for (Int b = a + 1; b < n; ++b) {
          const bool traversal = classify_pair(flat[a], flat[b]).perfect;
          const bool predicted = is_perfect_product_pair(s, t, {a / t, a % t}, {b / t, b % t});
          if (traversal != predicted) ++mismatches;
          // Traversal never finds a pair the criterion rules out.
          ASSERT_TRUE(!traversal || predicted);
        }
      }
      if (gcd(s, t) == 1) {
        ASSERT_EQ(mismatches, 0) << s << "x" << t;
      } else {
        ASSERT_EQ(mismatches, predicted_perfect_product_pairs(s, t)) << s << "x" << t;
      }
    }
  }
}

TEST(ProductCountTest, DoublingFromConstituentPairs) {
  for (auto [s, t] : {std::pair<Int, Int>{3, 5}, {3, 7}, {5, 7}}) {
    std::vector<Factor> flat;
    for (const ProductFactor& pf : build_product_family(s, t)) flat.push_back(flatten(pf));
    auto d = [&](Int k, Int l) -> const Factor& { return flat[static_cast<std::size_t>(k * t + l)]; };
    for (Int k = 0; k < s; ++k) {
      for (Int k2 = k + 1; k2 < s; ++k2) {
        if (!classify_pair(build_modular_factor(s, k), build_modular_factor(s, k2)).perfect) continue;
        for (Int l = 0; l < t; ++l) {
          for (Int l2 = l + 1; l2 < t; ++l2) {
            if (!classify_pair(build_modular_factor(t, l), build_modular_factor(t, l2)).perfect) {
              continue;
            }
            ASSERT_TRUE(classify_pair(d(k, l), d(k2, l2)).perfect);
            ASSERT_TRUE(classify_pair(d(k2, l), d(k, l2)).perfect);
          }
        }
      }
    }
    const Int c_s = count_perfect_pairs(build_modular_factorization(s));
    const Int c_t = count_perfect_pairs(build_modular_factorization(t));
    EXPECT_GE(count_perfect_product_pairs(s, t), product_bound(s, t, c_s, c_t));
  }
}

}  // namespace
}  // namespace onefactor
