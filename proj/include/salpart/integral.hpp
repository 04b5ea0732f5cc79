#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "salpart/saliency_map.hpp"

namespace salpart {

/// Summed-area table with an implicit zero top row and left column:
/// at(i, j) is the sum of all values in rows [0, i) and columns [0, j).
class IntegralMap {
 public:
  IntegralMap(std::size_t rows, std::size_t cols, std::vector<double> table);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double at(std::size_t i, std::size_t j) const noexcept {
    return table_[i * (cols_ + 1) + j];
  }
  double total() const noexcept { return at(rows_, cols_); }
  std::span<const double> table() const noexcept { return table_; }

  friend bool operator==(const IntegralMap&, const IntegralMap&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> table_;
};

/// Per-column prefix sums: at(i, j) is the sum of column j over rows [0, i).
class ColumnIntegralMap {
 public:
  ColumnIntegralMap(std::size_t rows, std::size_t cols, std::vector<double> table);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double at(std::size_t i, std::size_t j) const noexcept {
    return table_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(table_).subspan(i * cols_, cols_);
  }

  friend bool operator==(const ColumnIntegralMap&, const ColumnIntegralMap&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> table_;
};

// OpenMP kernels. Each output element is produced by the same sequence of
// floating-point operations as the serial reference below, so results are
// bit-identical for any thread count. `pixel_visits`, when given, is
// incremented once per source pixel read.
IntegralMap build_integral(const SaliencyMap& map,
                           std::uint64_t* pixel_visits = nullptr);
ColumnIntegralMap build_column_integral(const SaliencyMap& map,
                                        std::uint64_t* pixel_visits = nullptr);

namespace serial {
IntegralMap build_integral(const SaliencyMap& map,
                           std::uint64_t* pixel_visits = nullptr);
ColumnIntegralMap build_column_integral(const SaliencyMap& map,
                                        std::uint64_t* pixel_visits = nullptr);
}  // namespace serial

/// Inclusion-exclusion sum over an inclusive box. Throws std::out_of_range
/// when the box does not fit the map.
double rect_sum(const IntegralMap& integral, const CropBox& box);

/// Column sums of the row band [i1, i2] restricted to columns
/// [col_begin, col_begin + out.size()). O(out.size()).
void band_column_sums(const ColumnIntegralMap& colint, std::size_t i1,
                      std::size_t i2, std::size_t col_begin, std::span<double> out);

/// Full-width band sums. Throws std::out_of_range on an invalid row range.
std::vector<double> band_column_sums(const ColumnIntegralMap& colint,
                                     std::size_t i1, std::size_t i2);

}  // namespace salpart
