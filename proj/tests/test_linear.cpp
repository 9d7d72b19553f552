#include <gtest/gtest.h>

#include <random>

#include "bfw/gf2_linear.hpp"

using namespace bfw;

namespace {

std::uint32_t apply(const std::vector<std::uint32_t>& cols, std::uint32_t x) {
  std::uint32_t y = 0;
  for (std::size_t i = 0; i < cols.size(); ++i)
    if ((x >> i) & 1u) y ^= cols[i];
  return y;
}

std::vector<std::uint32_t> random_cols(std::mt19937_64& rng, int k, int width) {
  std::vector<std::uint32_t> cols(k);
  const std::uint32_t mask = width == 32 ? ~0u : (1u << width) - 1;
  for (auto& c : cols) c = static_cast<std::uint32_t>(rng()) & mask;
  return cols;
}

}  // namespace

TEST(LinearMap, TableEvaluationMatchesColumnSum) {
  std::mt19937_64 rng(1);
  for (int k : {1, 5, 8, 13, 24, 32}) {
    const auto cols = random_cols(rng, k, 32);
    const LinearMap map(cols);
    for (int i = 0; i < 2000; ++i) {
      std::uint32_t x = static_cast<std::uint32_t>(rng());
      if (k < 32) x &= (1u << k) - 1;
      ASSERT_EQ(map(x), apply(cols, x));
    }
  }
}

TEST(LinearSolve, FindsPreimagesOrReportsNone) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cols = random_cols(rng, 10, 8);
    const std::uint32_t x = static_cast<std::uint32_t>(rng()) & 0x3ff;
    const auto sol = solve_linear(cols, apply(cols, x));
    ASSERT_TRUE(sol);
    EXPECT_EQ(apply(cols, *sol), apply(cols, x));
  }
  // Image is spanned by bit 0 only.
  const std::vector<std::uint32_t> cols{1, 1, 0};
  EXPECT_FALSE(solve_linear(cols, 2));
}

TEST(Kernel, BasisSpansTheNullSpace) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cols = random_cols(rng, 9, 5);
    const auto basis = kernel_basis(cols);
    for (auto v : basis) EXPECT_EQ(apply(cols, v), 0u);
    EXPECT_EQ(rank(basis), static_cast<int>(basis.size()));
    EXPECT_EQ(static_cast<int>(basis.size()) + rank(cols), 9);
  }
}

TEST(Invert, RoundTripAndSingular) {
  std::mt19937_64 rng(4);
  int inverted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto cols = random_cols(rng, 8, 8);
    const auto inv = invert(cols);
    EXPECT_EQ(inv.has_value(), rank(cols) == 8);
    if (!inv) continue;
    ++inverted;
    for (std::uint32_t x = 0; x < 256; ++x) ASSERT_EQ(apply(*inv, apply(cols, x)), x);
  }
  EXPECT_GT(inverted, 0);
  const std::vector<std::uint32_t> singular{1, 2, 3};
  EXPECT_FALSE(invert(singular));
}
