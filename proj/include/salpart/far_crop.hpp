#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "salpart/integral.hpp"
#include "salpart/saliency_map.hpp"

namespace salpart {

struct CropSearchOutcome {
  /// Winner, with mass set to its window sum.
  std::optional<CropBox> box;
  /// max_subarray_fl invocations.
  std::uint64_t windows_searched = 0;
  /// Row-pointer moves of the two-pointer schedule.
  std::uint64_t rows_advanced = 0;
};

/// Candidate ordering shared by the search and the oracle: smaller area, then
/// larger mass, then smaller top, then smaller left.
bool better_candidate(const CropBox& a, const CropBox& b) noexcept;

/// Smallest crop with width = ceil(height * ratio) whose mass reaches
/// `threshold`, found with the two-pointer row schedule: the top pointer
/// advances after a hit or when the crop would be wider than the map, the
/// bottom pointer advances after a miss. Area ties go to the larger mass,
/// remaining ties to the first candidate found.
CropSearchOutcome smallest_far_crop(const SaliencyMap& map,
                                    const ColumnIntegralMap& colint, double ratio,
                                    double threshold);

/// Same search restricted to crops that avoid every box in `forbidden`.
///
/// Feasibility is not monotone in the row band once boxes are masked out, so
/// the unrestricted schedule is run first and, if its winner intersects a
/// forbidden box, the schedule is rerun inside every maximal empty rectangle
/// whose mass can still reach the threshold. Any allowed crop lies inside one
/// of those rectangles, so the result is the best allowed crop.
CropSearchOutcome smallest_far_crop_avoiding(const SaliencyMap& map,
                                             const ColumnIntegralMap& colint,
                                             const IntegralMap& integral,
                                             double ratio, double threshold,
                                             std::span<const CropBox> forbidden);

/// Exhaustive reference over every (top, height, left) triple, O(m^2 n).
/// Returns the best candidate under `better_candidate`, skipping any crop
/// that intersects a box in `forbidden`.
std::optional<CropBox> far_crop_oracle(const SaliencyMap& map, double ratio,
                                       double threshold,
                                       std::span<const CropBox> forbidden = {});

/// Maximal axis-aligned rectangles of the rows x cols grid that intersect no
/// obstacle. Output is sorted by (top, left, bottom, right).
std::vector<CropBox> maximal_empty_rectangles(std::size_t rows, std::size_t cols,
                                              std::span<const CropBox> obstacles);

}  // namespace salpart
