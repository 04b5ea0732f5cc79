#include "salpart/far_crop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "salpart/subarray.hpp"

namespace salpart {
namespace {

void check_search_args(const SaliencyMap& map, const ColumnIntegralMap& colint,
                       double ratio, double threshold) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw std::invalid_argument("aspect ratio must be positive and finite");
  }
  if (!(threshold >= 0.0)) throw std::invalid_argument("threshold must be non-negative");
  if (colint.rows() != map.rows() || colint.cols() != map.cols()) {
    throw std::invalid_argument("column integral does not match the map");
  }
}

// Two-pointer schedule confined to `region` (an inclusive rectangle; its mass
// field is ignored). Candidates replace the best only when strictly better, so the
// first-found candidate wins exact (area, mass) ties.
//
// `pruning`, used only for the reruns inside empty rectangles, adds two exact
// shortcuts: bands shorter than a known-infeasible height are skipped, and a
// band whose total mass is below the threshold counts as a miss without a
// window scan.
struct RegionPruning {
  const IntegralMap* integral = nullptr;
  std::size_t min_height = 1;
  std::size_t max_height = std::numeric_limits<std::size_t>::max();
};

// Shortest row band of `region` (full region width) holding at least
// `threshold` mass, or nullopt. Two pointers over O(1) rectangle sums; no
// window scans.
std::optional<std::size_t> shortest_heavy_band(const IntegralMap& integral,
                                               const CropBox& region, double threshold) {
  std::optional<std::size_t> best;
  std::size_t top = region.top;
  for (std::size_t bottom = region.top; bottom <= region.bottom; ++bottom) {
    while (top <= bottom &&
           rect_sum(integral, CropBox{top, region.left, bottom, region.right, 0.0}) >= threshold) {
      const std::size_t h = bottom - top + 1;
      if (!best || h < *best) best = h;
      ++top;
    }
  }
  return best;
}

std::optional<CropBox> search_region(const ColumnIntegralMap& colint, const CropBox& region,
                                     double ratio, double threshold,
                                     CropSearchOutcome& counters, std::vector<double>& band,
                                     const RegionPruning& pruning = {}) {
  const std::size_t region_width = region.width();
  band.resize(region_width);
  std::optional<CropBox> best;

  std::size_t i1 = region.top;
  std::size_t i2 = region.top;
  while (i2 <= region.bottom) {
    ++counters.rows_advanced;
    if (i2 + 1 < i1 + pruning.min_height) {
      // The band emptied after a height-1 hit (or is shorter than the pruning
      // floor); grow it again from the bottom.
      i2 = i1 + pruning.min_height - 1;
      continue;
    }
    const std::size_t height = i2 - i1 + 1;
    const std::size_t width = crop_width(height, ratio);
    if (width > region_width || height > pruning.max_height) {
      ++i1;
      continue;
    }
    if (pruning.integral &&
        rect_sum(*pruning.integral, CropBox{i1, region.left, i2, region.right, 0.0}) < threshold) {
      ++i2;
      continue;
    }
    band_column_sums(colint, i1, i2, region.left, band);
    const auto hit = max_subarray_fl(band, width, threshold);
    ++counters.windows_searched;
    if (hit) {
      const CropBox candidate{i1, region.left + hit->start, i2,
                              region.left + hit->start + width - 1, hit->sum};
      if (!best || candidate.area() < best->area() ||
          (candidate.area() == best->area() && candidate.mass > best->mass)) {
        best = candidate;
      }
      ++i1;
    } else {
      ++i2;
    }
  }
  return best;
}

}  // namespace

bool better_candidate(const CropBox& a, const CropBox& b) noexcept {
  const auto area_a = a.area();
  const auto area_b = b.area();
  if (area_a != area_b) return area_a < area_b;
  if (a.mass != b.mass) return a.mass > b.mass;
  return std::tie(a.top, a.left) < std::tie(b.top, b.left);
}

CropSearchOutcome smallest_far_crop(const SaliencyMap& map, const ColumnIntegralMap& colint,
                                    double ratio, double threshold) {
  check_search_args(map, colint, ratio, threshold);
  CropSearchOutcome outcome;
  std::vector<double> band;
  const CropBox whole{0, 0, map.rows() - 1, map.cols() - 1, 0.0};
  outcome.box = search_region(colint, whole, ratio, threshold, outcome, band);
  return outcome;
}

CropSearchOutcome smallest_far_crop_avoiding(const SaliencyMap& map,
                                             const ColumnIntegralMap& colint,
                                             const IntegralMap& integral, double ratio,
                                             double threshold,
                                             std::span<const CropBox> forbidden) {
  CropSearchOutcome outcome = smallest_far_crop(map, colint, ratio, threshold);
  if (!outcome.box) return outcome;
  const auto clashes = [&](const CropBox& box) {
    return std::any_of(forbidden.begin(), forbidden.end(),
                       [&](const CropBox& f) { return intersects(box, f); });
  };
  if (!clashes(*outcome.box)) return outcome;

  // Allowed crops are a subset of all crops, so none is shorter than the
  // unrestricted winner.
  const std::size_t floor_height = outcome.box->height();
  outcome.box.reset();

  struct Candidate {
    CropBox region;
    double mass;
  };
  std::vector<Candidate> regions;
  for (const CropBox& region : maximal_empty_rectangles(map.rows(), map.cols(), forbidden)) {
    if (region.height() < floor_height) continue;
    const double mass = rect_sum(integral, region);
    if (mass >= threshold) regions.push_back({region, mass});
  }
  // Heavier rectangles first so an early winner caps the heights searched later.
  std::stable_sort(regions.begin(), regions.end(),
                   [](const Candidate& a, const Candidate& b) { return a.mass > b.mass; });

  std::vector<double> band;
  for (const auto& [region, mass] : regions) {
    RegionPruning pruning{&integral, floor_height};
    const auto heavy = shortest_heavy_band(integral, region, threshold);
    if (!heavy) continue;
    pruning.min_height = std::max(pruning.min_height, *heavy);
    if (outcome.box) pruning.max_height = outcome.box->height();
    if (pruning.min_height > pruning.max_height) continue;
    const auto found = search_region(colint, region, ratio, threshold, outcome, band, pruning);
    if (found && (!outcome.box || better_candidate(*found, *outcome.box))) outcome.box = found;
  }
  return outcome;
}

std::optional<CropBox> far_crop_oracle(const SaliencyMap& map, double ratio, double threshold,
                                       std::span<const CropBox> forbidden) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw std::invalid_argument("aspect ratio must be positive and finite");
  }
  const IntegralMap integral = serial::build_integral(map);
  const std::size_t m = map.rows();
  const std::size_t n = map.cols();
  std::optional<CropBox> best;
  for (std::size_t top = 0; top < m; ++top) {
    for (std::size_t height = 1; top + height <= m; ++height) {
      const std::size_t width = crop_width(height, ratio);
      if (width > n) break;
      for (std::size_t left = 0; left + width <= n; ++left) {
        CropBox box{top, left, top + height - 1, left + width - 1, 0.0};
        if (std::any_of(forbidden.begin(), forbidden.end(),
                        [&](const CropBox& f) { return intersects(box, f); })) {
          continue;
        }
        box.mass = rect_sum(integral, box);
        if (box.mass >= threshold && (!best || better_candidate(box, *best))) best = box;
      }
    }
  }
  return best;
}

std::vector<CropBox> maximal_empty_rectangles(std::size_t rows, std::size_t cols,
                                              std::span<const CropBox> obstacles) {
  std::vector<std::size_t> tops{0};
  std::vector<std::size_t> bottoms{rows - 1};
  for (const CropBox& b : obstacles) {
    if (b.bottom + 1 < rows) tops.push_back(b.bottom + 1);
    if (b.top > 0) bottoms.push_back(b.top - 1);
  }
  std::sort(tops.begin(), tops.end());
  tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
  std::sort(bottoms.begin(), bottoms.end());
  bottoms.erase(std::unique(bottoms.begin(), bottoms.end()), bottoms.end());

  // A row range [top, bottom] can be extended upward over columns [l, r]
  // unless an obstacle covers some of those columns in row top - 1.
  const auto blocked_row = [&](std::size_t row, std::size_t l, std::size_t r) {
    return std::any_of(obstacles.begin(), obstacles.end(), [&](const CropBox& b) {
      return b.top <= row && row <= b.bottom && b.left <= r && l <= b.right;
    });
  };

  std::vector<CropBox> out;
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (std::size_t top : tops) {
    for (std::size_t bottom : bottoms) {
      if (bottom < top) continue;
      spans.clear();
      for (const CropBox& b : obstacles) {
        if (b.top <= bottom && top <= b.bottom) spans.emplace_back(b.left, b.right);
      }
      std::sort(spans.begin(), spans.end());
      std::size_t next_free = 0;
      const auto emit = [&](std::size_t l, std::size_t r) {
        if (top > 0 && !blocked_row(top - 1, l, r)) return;
        if (bottom + 1 < rows && !blocked_row(bottom + 1, l, r)) return;
        out.push_back(CropBox{top, l, bottom, r, 0.0});
      };
      for (const auto& [l, r] : spans) {
        if (l > next_free) emit(next_free, l - 1);
        next_free = std::max(next_free, r + 1);
      }
      if (next_free < cols) emit(next_free, cols - 1);
    }
  }
  std::sort(out.begin(), out.end(), [](const CropBox& a, const CropBox& b) {
    return std::tie(a.top, a.left, a.bottom, a.right) < std::tie(b.top, b.left, b.bottom, b.right);
  });
  return out;
}

}  // namespace salpart
