#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace salpart {

/// Raised for malformed or unreadable input files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// m x n grid of non-negative, finite attention values stored row-major.
///
/// Immutable once built: every mutation in the library goes through a copy
/// (see `suppress`), so a map can be shared read-only between threads.
class SaliencyMap {
 public:
  /// Validates dimensions and values. Throws std::invalid_argument naming the
  /// first offending pixel when a value is negative or non-finite.
  SaliencyMap(std::size_t rows, std::size_t cols, std::vector<double> values);

  static SaliencyMap zeros(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return values_.size(); }

  double operator()(std::size_t row, std::size_t col) const noexcept {
    return values_[row * cols_ + col];
  }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> row(std::size_t r) const noexcept {
    return std::span<const double>(values_).subspan(r * cols_, cols_);
  }

  /// Sum of all values, accumulated row by row.
  double total() const noexcept;

  friend bool operator==(const SaliencyMap&, const SaliencyMap&) = default;

 private:
  friend struct MapAccess;

  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

/// Inclusive, 0-indexed rectangle with the saliency mass it captured.
struct CropBox {
  std::size_t top = 0;
  std::size_t left = 0;
  std::size_t bottom = 0;
  std::size_t right = 0;
  double mass = 0.0;

  std::size_t height() const noexcept { return bottom - top + 1; }
  std::size_t width() const noexcept { return right - left + 1; }
  std::size_t area() const noexcept { return width() * height(); }

  bool fits(std::size_t rows, std::size_t cols) const noexcept {
    return top <= bottom && left <= right && bottom < rows && right < cols;
  }
  bool contains(std::size_t row, std::size_t col) const noexcept {
    return row >= top && row <= bottom && col >= left && col <= right;
  }

  friend bool operator==(const CropBox&, const CropBox&) = default;
};

/// True when the two boxes share at least one pixel.
inline bool intersects(const CropBox& a, const CropBox& b) noexcept {
  return a.left <= b.right && b.left <= a.right && a.top <= b.bottom &&
         b.top <= a.bottom;
}

std::string to_string(const CropBox& box);

/// Width of a fixed-aspect-ratio crop of the given height: ceil(height * ratio).
std::size_t crop_width(std::size_t height, double ratio) noexcept;

struct PartitionConfig {
  std::size_t k = 1;
  /// Width / height.
  double ratio = 1.0;
  /// Margin above the even share of remaining mass, T = (1 + epsilon) S_r / (k - selected).
  double epsilon = 0.05;
  /// Upper clamp on T as a fraction of the remaining mass.
  double tau_max = 0.95;
  /// Reject candidates that intersect an already accepted box.
  bool strict_disjoint = true;
  /// Return fewer than k boxes instead of throwing.
  bool allow_partial = true;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

}  // namespace salpart
