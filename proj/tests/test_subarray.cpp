#include <gtest/gtest.h>

#include <random>

#include "salpart/subarray.hpp"

namespace salpart {
namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, int max_value) {
  std::uniform_int_distribution<int> d(0, max_value);
  std::vector<double> a(n);
  for (double& x : a) x = d(rng);
  return a;
}

TEST(MaxSubarrayFlTest, Examples) {
  const std::vector<double> a{1, 2, 3, 4};
  EXPECT_EQ(max_subarray_fl(a, 2, 6), (WindowHit{2, 7}));
  EXPECT_EQ(max_subarray_fl_oracle(a, 2, 6), (WindowHit{2, 7}));

  const std::vector<double> ones{1, 1, 1};
  EXPECT_FALSE(max_subarray_fl(ones, 2, 5));

  const std::vector<double> tie{5, 0, 0, 5};
  EXPECT_EQ(max_subarray_fl(tie, 1, 4), (WindowHit{0, 5}));
  EXPECT_EQ(max_subarray_fl_oracle(tie, 1, 4), (WindowHit{0, 5}));

  const std::vector<double> zero{0};
  EXPECT_EQ(max_subarray_fl(zero, 1, 0), (WindowHit{0, 0}));
  EXPECT_EQ(max_subarray_fl_oracle(zero, 1, 0), (WindowHit{0, 0}));
}

TEST(MaxSubarrayFlTest, WidthOutOfRangeIsAContractError) {
  const std::vector<double> a{1, 2};
  EXPECT_THROW(max_subarray_fl(a, 0, 0), std::invalid_argument);
  EXPECT_THROW(max_subarray_fl(a, 3, 0), std::invalid_argument);
  EXPECT_THROW(max_subarray_fl_oracle(a, 3, 0), std::invalid_argument);
}

TEST(MaxSubarrayFlTest, FullWidthWindow) {
  const std::vector<double> a{2, 0, 3};
  EXPECT_EQ(max_subarray_fl(a, 3, 5), (WindowHit{0, 5}));
  EXPECT_FALSE(max_subarray_fl(a, 3, 5.5));
}

TEST(MaxSubarrayFlTest, AgreesWithOracle) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 256;
    const std::size_t w = 1 + rng() % n;
    const auto a = random_vector(rng, n, trial % 3 == 0 ? 1 : 50);
    const double threshold = static_cast<double>(rng() % (w * 50 + 2));
    ASSERT_EQ(max_subarray_fl(a, w, threshold), max_subarray_fl_oracle(a, w, threshold))
        << "n=" << n << " w=" << w << " T=" << threshold;
  }
}

TEST(MaxSubarrayFlTest, CountsOperations) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const std::size_t w = 1 + rng() % n;
    const auto a = random_vector(rng, n, 9);
    WindowScanStats stats;
    max_subarray_fl(a, w, 0, &stats);
    EXPECT_EQ(stats.additions, n);
    EXPECT_EQ(stats.subtractions, n - w);
    EXPECT_EQ(stats.windows, n - w + 1);
  }
}

TEST(MaxSubarrayFlTest, LoweringThresholdKeepsTheHit) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const std::size_t w = 1 + rng() % n;
    const auto a = random_vector(rng, n, 9);
    const double high = static_cast<double>(rng() % (9 * w + 1));
    const auto hit = max_subarray_fl(a, w, high);
    if (!hit) continue;
    for (double lower = high; lower >= 0; lower -= 1 + rng() % 4) {
      EXPECT_EQ(max_subarray_fl(a, w, lower), hit);
    }
  }
}

}  // namespace
}  // namespace salpart
