#include <gtest/gtest.h>

#include <algorithm>

#include "bfw/error.hpp"
#include "bfw/kloosterman.hpp"
#include "oracle.hpp"

using namespace bfw;

TEST(KloostermanSum, ZeroArgumentIsMinusOne) {
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(kloosterman_sum(BinaryField::of_degree(k), 0), -1) << k;
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(kloosterman_subfield(BinaryField::quadratic(m), 0), -1) << m;
}

TEST(KloostermanSum, MTwoByHand) {
  // F_4 inside F_16: the units of the subfield are 1, w, w^2 with w^2 + w + 1 = 0.
  const auto F = BinaryField::quadratic(2);
  const auto units = F.enumerate(Subgroup::subfield_units);
  ASSERT_EQ(units.size(), 3u);
  EXPECT_EQ(kloosterman_subfield(F, 1), 3);
  for (Elem w : units)
    if (w != 1) EXPECT_EQ(kloosterman_subfield(F, w), -1);
  const auto minus_one = find_mu(F, -1);
  EXPECT_EQ(minus_one.size(), 2u);
}

TEST(KloostermanSum, MatchesOracle) {
  for (int m = 1; m <= 5; ++m) {
    const auto F = BinaryField::quadratic(m);
    const oracle::Field O(2 * m, F.reduction_poly());
    for (std::uint64_t a : O.subfield_units()) ASSERT_EQ(kloosterman_subfield(F, a), oracle::kloosterman_sub(O, a));
    for (Elem a = 0; a < F.size(); a += 7) ASSERT_EQ(kloosterman_sum(F, a), oracle::kloosterman(O, a));
  }
}

TEST(KloostermanSum, TwoArgumentFormReducesToProduct) {
  const auto F = BinaryField::quadratic(4);
  const auto units = F.enumerate(Subgroup::subfield_units);
  for (Elem a : units)
    for (Elem b : units) {
      const std::int64_t k = kloosterman_subfield(F, a, b);
      EXPECT_EQ(k, kloosterman_subfield(F, F.mul(a, b), 1));
      EXPECT_EQ(k, kloosterman_subfield(F, 1, F.mul(a, b)));
    }
  EXPECT_THROW(kloosterman_subfield(F, F.generator()), Error);
}

TEST(KloostermanSum, TableIsAscendingAndComplete) {
  const auto F = BinaryField::quadratic(5);
  const auto table = subfield_kloosterman_table(F);
  ASSERT_EQ(table.size(), 31u);
  EXPECT_TRUE(std::is_sorted(table.begin(), table.end()));
  for (const auto& [mu, k] : table) EXPECT_EQ(k, kloosterman_subfield(F, mu));
}

TEST(Embedding, TraceCompatibleAndMultiplicative) {
  for (auto [m, s] : {std::pair{2, 2}, {2, 3}, {3, 2}, {4, 2}, {3, 3}}) {
    const auto small = BinaryField::of_degree(m);
    const auto big = BinaryField::of_degree(m * s);
    const SubfieldEmbedding e(small, big);
    EXPECT_TRUE(e.trace_compatible(small, big));
    for (Elem a = 0; a < small.size(); ++a)
      for (Elem b = 0; b < small.size(); ++b) ASSERT_EQ(e(small.mul(a, b)), big.mul(e(a), e(b)));
  }
}

TEST(Lifted, SEqualsOneIsTheBaseSum) {
  const auto base = BinaryField::of_degree(4);
  for (Elem a = 0; a < base.size(); ++a) EXPECT_EQ(kloosterman_lifted_direct(base, 1, a), kloosterman_sum(base, a));
  for (int s = 1; s <= 4; ++s) EXPECT_EQ(kloosterman_lifted_direct(base, s, 0), -1);
  EXPECT_THROW(kloosterman_lifted_direct(base, 8, 1), Error);
}

TEST(Lifted, RecursionMatchesDirectLiftForNonzeroA) {
  for (auto [m, s] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
    const auto base = BinaryField::of_degree(m);
    for (Elem a = 1; a < base.size(); ++a) {
      const std::int64_t k1 = kloosterman_sum(base, a);
      ASSERT_EQ(kloosterman_recursive(m, s, k1), kloosterman_lifted_direct(base, s, a)) << m << "," << s;
    }
  }
}

// At a = 0 the lifted sum is -1 for every s while the recursion, seeded with
// k(0) = -1, gives 2^{m+1} - 1 at s = 2. The recursion needs a != 0.
TEST(Lifted, RecursionDisagreesAtZero) {
  for (int m = 2; m <= 5; ++m) {
    const auto base = BinaryField::of_degree(m);
    EXPECT_EQ(kloosterman_lifted_direct(base, 2, 0), -1);
    EXPECT_EQ(kloosterman_recursive(m, 2, kloosterman_sum(base, 0)), (std::int64_t{1} << (m + 1)) - 1);
  }
}

TEST(Lifted, RecursionSeeds) {
  EXPECT_EQ(kloosterman_recursive(3, 0, 5), -2);
  EXPECT_EQ(kloosterman_recursive(3, 1, 5), 5);
  for (std::int64_t k : {-5, -1, 3}) EXPECT_EQ(kloosterman_recursive(3, 2, k), -k * k + 16);
  EXPECT_THROW(kloosterman_recursive(3, -1, 0), Error);
}

TEST(UnitCircle, SumIsMinusKloosterman) {
  for (int m = 2; m <= 8; ++m) {
    const auto F = BinaryField::quadratic(m);
    for (Elem mu : F.enumerate(Subgroup::subfield_units))
      ASSERT_EQ(unit_circle_sum(F, mu), -kloosterman_subfield(F, mu)) << "m = " << m;
  }
  const auto F = BinaryField::quadratic(2);
  for (Elem w : find_mu(F, -1)) EXPECT_EQ(unit_circle_sum(F, w), 1);
  EXPECT_THROW(unit_circle_sum(F, 0), Error);
}

TEST(Scan, SmallValueSets) {
  const auto s3 = scan(3);
  EXPECT_EQ(s3.entries.size(), 8u);
  EXPECT_EQ(s3.value_set, (std::vector<std::int64_t>{-5, -1, 3}));
  EXPECT_EQ(scan(4).value_set, (std::vector<std::int64_t>{-5, -1, 3, 7}));
  EXPECT_EQ(kloosterman_value_range(4), (std::vector<std::int64_t>{-5, -1, 3, 7}));
}

TEST(Scan, CongruenceWeilAndValueSet) {
  for (int m = 3; m <= 10; ++m) {
    const auto s = scan(m);
    for (auto k : s.entries) {
      ASSERT_EQ(((k % 4) + 4) % 4, 3);
      ASSERT_TRUE(within_weil_bound(m, k));
    }
    EXPECT_EQ(s.value_set, kloosterman_value_range(m)) << "m = " << m;
  }
}

TEST(Scan, WeilBoundInIntegers) {
  EXPECT_TRUE(within_weil_bound(4, 8));
  EXPECT_FALSE(within_weil_bound(4, 9));
  EXPECT_TRUE(within_weil_bound(3, 5));   // 5^2 = 25 <= 32
  EXPECT_FALSE(within_weil_bound(3, 6));  // 36 > 32
}

TEST(FindMu, Targets) {
  EXPECT_FALSE(find_mu(BinaryField::quadratic(3), -1).empty());
  for (int m = 2; m <= 7; ++m) EXPECT_TRUE(find_mu(BinaryField::quadratic(m), -3).empty());
  const auto F = BinaryField::quadratic(5);
  for (Elem mu : find_mu(F, -1)) EXPECT_EQ(kloosterman_subfield(F, mu), -1);
}
