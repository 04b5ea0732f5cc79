#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "salpart/saliency_map.hpp"

namespace salpart {

/// A round found no crop and the config does not allow partial results.
class PartitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Orientation { vertical, horizontal };
std::string_view orientation_name(Orientation o);

/// Axis-aligned partition line. `position` is a column for vertical lines and
/// a row for horizontal ones; `span_*` is the inclusive extent along the line.
struct BoundaryLine {
  Orientation orientation = Orientation::vertical;
  std::size_t position = 0;
  std::size_t span_start = 0;
  std::size_t span_end = 0;
  /// Indices into PartitionResult::boxes.
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const BoundaryLine&, const BoundaryLine&) = default;
};

struct RoundDiagnostics {
  std::size_t round_index = 0;  // 1-based
  double remaining_before = 0.0;
  double threshold = 0.0;
  std::optional<CropBox> box;
  std::uint64_t windows_searched = 0;
  std::uint64_t rows_advanced = 0;

  bool found() const noexcept { return box.has_value(); }
};

struct PartitionResult {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Sorted left-to-right, then top-to-bottom.
  std::vector<CropBox> boxes;
  std::vector<BoundaryLine> boundaries;
  /// Neighbouring boxes that overlap and therefore got no boundary.
  std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs;
  /// One entry per round, in selection order.
  std::vector<RoundDiagnostics> rounds;
  double initial_mass = 0.0;
  double remaining_mass = 0.0;

  bool complete(std::size_t k) const noexcept { return boxes.size() == k; }
};

/// min((1 + epsilon) * remaining / (k - selected), tau_max * remaining).
/// Throws std::invalid_argument when selected >= k.
double compute_threshold(double remaining, std::size_t k, std::size_t selected,
                         double epsilon, double tau_max);

struct Suppressed {
  SaliencyMap map;
  double removed = 0.0;
};

/// Zeroes the box. `removed` is the sum of the values that were cleared.
/// Throws std::out_of_range when the box does not fit the map.
Suppressed suppress(SaliencyMap map, const CropBox& box);

namespace serial {
Suppressed suppress(SaliencyMap map, const CropBox& box);
}  // namespace serial

/// Orders by (left, top, right, bottom).
std::vector<CropBox> sort_boxes(std::vector<CropBox> boxes);

struct BoundarySet {
  std::vector<BoundaryLine> lines;
  std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs;
};

/// One line per consecutive pair of sorted boxes, at the midpoint of the gap
/// along the axis on which they are separated. With `strict`, pairs that
/// overlap get no line and are listed in `overlapping_pairs` instead.
BoundarySet compute_boundaries(std::span<const CropBox> boxes, std::size_t rows,
                               std::size_t cols, bool strict);

/// Greedy k-round extraction: threshold from the remaining mass, smallest
/// fixed-ratio crop meeting it, suppression of that crop; then ordering and
/// boundaries. The input map is not modified.
PartitionResult partition(const SaliencyMap& map, const PartitionConfig& config);

}  // namespace salpart
