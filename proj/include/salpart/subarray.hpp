#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace salpart {

/// Winning fixed-width window: its first column and its sum.
struct WindowHit {
  std::size_t start = 0;
  double sum = 0.0;

  friend bool operator==(const WindowHit&, const WindowHit&) = default;
};

/// Operation counts of one rolling-sum scan.
struct WindowScanStats {
  std::uint64_t additions = 0;
  std::uint64_t subtractions = 0;
  std::uint64_t windows = 0;
};

/// Fixed-width maximum-sum window in one pass over `a`.
///
/// Returns the leftmost window with the maximum sum when that sum is at least
/// `threshold`, otherwise nothing. Evaluates exactly a.size() - width + 1
/// windows using a.size() additions and a.size() - width subtractions.
/// Throws std::invalid_argument unless 1 <= width <= a.size().
std::optional<WindowHit> max_subarray_fl(std::span<const double> a,
                                         std::size_t width, double threshold,
                                         WindowScanStats* stats = nullptr);

/// Exhaustive reference: recomputes every window sum from scratch.
std::optional<WindowHit> max_subarray_fl_oracle(std::span<const double> a,
                                                std::size_t width,
                                                double threshold);

}  // namespace salpart
