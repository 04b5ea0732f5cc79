#pragma once

// Test-only reference routines. Nothing here calls the integral tables, the
// rolling-sum search or the two-pointer schedule.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "salpart/far_crop.hpp"
#include "salpart/partition.hpp"
#include "salpart/saliency_map.hpp"

namespace salpart::testing {

inline double naive_box_sum(const SaliencyMap& map, std::size_t top, std::size_t left,
                            std::size_t bottom, std::size_t right) {
  double sum = 0.0;
  for (std::size_t r = top; r <= bottom; ++r) {
    for (std::size_t c = left; c <= right; ++c) sum += map(r, c);
  }
  return sum;
}

inline double naive_box_sum(const SaliencyMap& map, const CropBox& b) {
  return naive_box_sum(map, b.top, b.left, b.bottom, b.right);
}

/// Integer-valued map with entries in [0, max_value]; sums are exact in doubles.
inline SaliencyMap random_integer_map(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                      int max_value = 9, double zero_probability = 0.3) {
  std::uniform_int_distribution<int> value(0, max_value);
  std::bernoulli_distribution zero(zero_probability);
  std::vector<double> v(rows * cols);
  for (double& x : v) x = zero(rng) ? 0.0 : static_cast<double>(value(rng));
  return SaliencyMap(rows, cols, std::move(v));
}

inline std::size_t uniform_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline CropBox random_box(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::size_t t = uniform_size(rng, 0, rows - 1);
  std::size_t b = uniform_size(rng, 0, rows - 1);
  std::size_t l = uniform_size(rng, 0, cols - 1);
  std::size_t r = uniform_size(rng, 0, cols - 1);
  if (t > b) std::swap(t, b);
  if (l > r) std::swap(l, r);
  return CropBox{t, l, b, r, 0.0};
}

struct ReplayRound {
  double remaining = 0.0;
  double threshold = 0.0;
  std::optional<CropBox> box;
};

/// Greedy rounds with the exhaustive crop oracle, naive mass totals and
/// direct zeroing in place of the library's search and suppression.
inline std::vector<ReplayRound> replay_greedy(const SaliencyMap& map, const PartitionConfig& cfg) {
  std::vector<double> values(map.values().begin(), map.values().end());
  std::vector<CropBox> accepted;
  std::vector<ReplayRound> rounds;
  for (std::size_t round = 0; round < cfg.k; ++round) {
    const SaliencyMap current(map.rows(), map.cols(), values);
    ReplayRound rr;
    for (double v : values) rr.remaining += v;
    const double share = (1.0 + cfg.epsilon) * rr.remaining /
                         static_cast<double>(cfg.k - accepted.size());
    rr.threshold = std::min(share, cfg.tau_max * rr.remaining);
    rr.box = far_crop_oracle(current, cfg.ratio, rr.threshold,
                             cfg.strict_disjoint ? std::span<const CropBox>(accepted)
                                                 : std::span<const CropBox>());
    if (rr.box) {
      for (std::size_t r = rr.box->top; r <= rr.box->bottom; ++r) {
        for (std::size_t c = rr.box->left; c <= rr.box->right; ++c) values[r * map.cols() + c] = 0.0;
      }
      accepted.push_back(*rr.box);
    }
    rounds.push_back(rr);
  }
  return rounds;
}

/// The 8x16 two-blob scene: a 2x2 block of 10s (mass 40) at rows 3-4,
/// columns 2-3 and a 2x3 block of 10s (mass 60) at rows 3-4, columns 11-13.
inline SaliencyMap two_blob_scene() {
  std::vector<double> v(8 * 16, 0.0);
  for (std::size_t r = 3; r <= 4; ++r) {
    for (std::size_t c = 2; c <= 3; ++c) v[r * 16 + c] = 10.0;
    for (std::size_t c = 11; c <= 13; ++c) v[r * 16 + c] = 10.0;
  }
  return SaliencyMap(8, 16, std::move(v));
}

}  // namespace salpart::testing
