#include "salpart/partition.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "map_access.hpp"
#include "salpart/far_crop.hpp"
#include "salpart/integral.hpp"

namespace salpart {
namespace {

void check_box(const SaliencyMap& map, const CropBox& box) {
  if (!box.fits(map.rows(), map.cols())) {
    throw std::out_of_range("cannot suppress " + to_string(box) + ": outside map");
  }
}

// Clears one row segment and returns the sum of what it cleared.
double clear_segment(std::vector<double>& values, std::size_t offset, std::size_t count) {
  double sum = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    sum += values[offset + j];
    values[offset + j] = 0.0;
  }
  return sum;
}

}  // namespace

std::string_view orientation_name(Orientation o) {
  return o == Orientation::vertical ? "vertical" : "horizontal";
}

double compute_threshold(double remaining, std::size_t k, std::size_t selected, double epsilon,
                         double tau_max) {
  if (selected >= k) {
    throw std::invalid_argument("threshold requested after all " + std::to_string(k) +
                                " crops were selected");
  }
  const double share = (1.0 + epsilon) * remaining / static_cast<double>(k - selected);
  return std::min(share, tau_max * remaining);
}

namespace serial {

Suppressed suppress(SaliencyMap map, const CropBox& box) {
  check_box(map, box);
  auto& values = MapAccess::values(map);
  double removed = 0.0;
  for (std::size_t r = box.top; r <= box.bottom; ++r) {
    removed += clear_segment(values, r * map.cols() + box.left, box.width());
  }
  return {std::move(map), removed};
}

}  // namespace serial

Suppressed suppress(SaliencyMap map, const CropBox& box) {
  check_box(map, box);
  auto& values = MapAccess::values(map);
  const std::size_t cols = map.cols();
  std::vector<double> row_sums(box.height());
  const auto height = static_cast<std::ptrdiff_t>(box.height());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < height; ++i) {
    const std::size_t r = box.top + static_cast<std::size_t>(i);
    row_sums[static_cast<std::size_t>(i)] = clear_segment(values, r * cols + box.left, box.width());
  }
  // Row partials are combined in row order, matching the serial kernel.
  double removed = 0.0;
  for (double s : row_sums) removed += s;
  return {std::move(map), removed};
}

std::vector<CropBox> sort_boxes(std::vector<CropBox> boxes) {
  std::sort(boxes.begin(), boxes.end(), [](const CropBox& a, const CropBox& b) {
    return std::tie(a.left, a.top, a.right, a.bottom) <
           std::tie(b.left, b.top, b.right, b.bottom);
  });
  return boxes;
}

BoundarySet compute_boundaries(std::span<const CropBox> boxes, std::size_t rows,
                               std::size_t cols, bool strict) {
  BoundarySet out;
  const auto vertical = [&](std::size_t position, std::size_t i) {
    out.lines.push_back({Orientation::vertical, position, 0, rows - 1, i, i + 1});
  };
  const auto horizontal = [&](std::size_t position, std::size_t i) {
    out.lines.push_back({Orientation::horizontal, position, 0, cols - 1, i, i + 1});
  };

  for (std::size_t i = 0; i + 1 < boxes.size(); ++i) {
    const CropBox& a = boxes[i];
    const CropBox& b = boxes[i + 1];
    const bool rows_overlap = a.top <= b.bottom && b.top <= a.bottom;
    const bool cols_overlap = a.left <= b.right && b.left <= a.right;
    const CropBox& upper = a.top <= b.top ? a : b;
    const CropBox& lower = a.top <= b.top ? b : a;

    if (rows_overlap && cols_overlap && strict) {
      out.overlapping_pairs.emplace_back(i, i + 1);
    } else if (rows_overlap) {
      vertical((a.right + b.left) / 2, i);
    } else if (cols_overlap) {
      horizontal((upper.bottom + lower.top) / 2, i);
    } else {
      // Diagonal neighbours: split along the wider gap, columns on ties.
      const std::size_t col_gap = b.left - a.right;
      const std::size_t row_gap = lower.top - upper.bottom;
      if (col_gap >= row_gap) {
        vertical((a.right + b.left) / 2, i);
      } else {
        horizontal((upper.bottom + lower.top) / 2, i);
      }
    }
  }
  return out;
}

PartitionResult partition(const SaliencyMap& map, const PartitionConfig& config) {
  config.validate();

  PartitionResult result;
  result.rows = map.rows();
  result.cols = map.cols();

  SaliencyMap work = map;
  std::vector<CropBox> accepted;
  double remaining = 0.0;

  for (std::size_t round = 1; round <= config.k; ++round) {
    // Suppression invalidates both tables, so they are rebuilt every round.
    const IntegralMap integral = build_integral(work);
    const ColumnIntegralMap colint = build_column_integral(work);
    if (round == 1) {
      remaining = integral.total();
      result.initial_mass = remaining;
    }

    RoundDiagnostics diag;
    diag.round_index = round;
    diag.remaining_before = remaining;
    diag.threshold = compute_threshold(remaining, config.k, accepted.size(), config.epsilon,
                                       config.tau_max);

    // A failed round leaves the map, the accepted set and the threshold
    // unchanged, so every later round would repeat the same search.
    const bool repeat_of_failure = !result.rounds.empty() && !result.rounds.back().found();
    CropSearchOutcome outcome;
    if (!repeat_of_failure) {
      outcome = config.strict_disjoint
                    ? smallest_far_crop_avoiding(work, colint, integral, config.ratio,
                                                 diag.threshold, accepted)
                    : smallest_far_crop(work, colint, config.ratio, diag.threshold);
    }
    diag.box = outcome.box;
    diag.windows_searched = outcome.windows_searched;
    diag.rows_advanced = outcome.rows_advanced;
    result.rounds.push_back(diag);

    if (outcome.box) {
      accepted.push_back(*outcome.box);
      Suppressed cleared = suppress(std::move(work), *outcome.box);
      work = std::move(cleared.map);
      remaining = std::max(0.0, remaining - cleared.removed);
    } else if (!config.allow_partial) {
      std::ostringstream msg;
      msg << "round " << round << ": no crop reaches threshold " << diag.threshold
          << " (remaining mass " << remaining << ")";
      throw PartitionError(msg.str());
    }
  }

  result.remaining_mass = remaining;
  result.boxes = sort_boxes(std::move(accepted));
  BoundarySet bounds =
      compute_boundaries(result.boxes, result.rows, result.cols, config.strict_disjoint);
  result.boundaries = std::move(bounds.lines);
  result.overlapping_pairs = std::move(bounds.overlapping_pairs);
  return result;
}

}  // namespace salpart
