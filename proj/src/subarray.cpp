#include "salpart/subarray.hpp"

#include <stdexcept>
#include <string>

namespace salpart {
namespace {

void check_width(std::size_t n, std::size_t width) {
  if (width < 1 || width > n) {
    throw std::invalid_argument("window width " + std::to_string(width) +
                                " outside [1, " + std::to_string(n) + "]");
  }
}

}  // namespace

std::optional<WindowHit> max_subarray_fl(std::span<const double> a, std::size_t width,
                                         double threshold, WindowScanStats* stats) {
  const std::size_t n = a.size();
  check_width(n, width);

  double sum = 0.0;
  for (std::size_t j = 0; j < width; ++j) sum += a[j];
  double best = sum;
  std::size_t best_start = 0;
  for (std::size_t j = width; j < n; ++j) {
    sum += a[j];
    sum -= a[j - width];
    // Strict comparison keeps the leftmost window on ties.
    if (sum > best) {
      best = sum;
      best_start = j - width + 1;
    }
  }
  if (stats) {
    stats->additions += n;
    stats->subtractions += n - width;
    stats->windows += n - width + 1;
  }
  if (best >= threshold) return WindowHit{best_start, best};
  return std::nullopt;
}

std::optional<WindowHit> max_subarray_fl_oracle(std::span<const double> a, std::size_t width,
                                                double threshold) {
  check_width(a.size(), width);
  std::optional<WindowHit> best;
  for (std::size_t start = 0; start + width <= a.size(); ++start) {
    double sum = 0.0;
    for (std::size_t j = start; j < start + width; ++j) sum += a[j];
    if (sum >= threshold && (!best || sum > best->sum)) best = WindowHit{start, sum};
  }
  return best;
}

}  // namespace salpart
