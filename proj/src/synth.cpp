#include "salpart/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace salpart {
namespace {

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit(rng);
}

double blob_value(const Blob& b, double row, double col) {
  const double dr = row - b.center_row;
  const double dc = col - b.center_col;
  return b.amplitude * std::exp(-(dr * dr + dc * dc) / (2.0 * b.sigma * b.sigma));
}

}  // namespace

SaliencyMap synth_blobs(std::size_t rows, std::size_t cols, const std::vector<Blob>& blobs) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("synth_blobs: empty grid");
  for (const Blob& b : blobs) {
    if (!(b.sigma > 0.0) || !(b.amplitude > 0.0) || !std::isfinite(b.center_row) ||
        !std::isfinite(b.center_col) || !std::isfinite(b.sigma) || !std::isfinite(b.amplitude)) {
      throw std::invalid_argument("synth_blobs: blobs need sigma > 0 and amplitude > 0");
    }
  }
  std::vector<double> values(rows * cols, 0.0);
  const auto n_rows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n_rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      double v = 0.0;
      for (const Blob& b : blobs) v += blob_value(b, static_cast<double>(r), static_cast<double>(c));
      values[static_cast<std::size_t>(r) * cols + c] = std::clamp(v, 0.0, 1.0);
    }
  }
  return SaliencyMap(rows, cols, std::move(values));
}

SaliencyMap random_scene(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double extent = static_cast<double>(std::min(rows, cols));
  std::vector<Blob> blobs(6);
  for (Blob& b : blobs) {
    b.center_row = uniform(rng, 0.0, static_cast<double>(rows - 1));
    b.center_col = uniform(rng, 0.0, static_cast<double>(cols - 1));
    b.sigma = std::max(0.5, uniform(rng, extent / 24.0, extent / 10.0));
    b.amplitude = uniform(rng, 0.4, 1.0);
  }
  SaliencyMap scene = synth_blobs(rows, cols, blobs);
  std::vector<double> values(scene.values().begin(), scene.values().end());
  for (double& v : values) v = std::min(1.0, v + 0.02 * unit(rng));
  return SaliencyMap(rows, cols, std::move(values));
}

}  // namespace salpart
