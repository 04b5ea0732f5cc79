#include "salpart/integral.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace salpart {
namespace {

constexpr std::size_t kColumnBlock = 64;

void check_band(const ColumnIntegralMap& colint, std::size_t i1, std::size_t i2) {
  if (i1 > i2 || i2 >= colint.rows()) {
    throw std::out_of_range("invalid row band [" + std::to_string(i1) + ", " +
                            std::to_string(i2) + "] for " + std::to_string(colint.rows()) +
                            " rows");
  }
}

}  // namespace

IntegralMap::IntegralMap(std::size_t rows, std::size_t cols, std::vector<double> table)
    : rows_(rows), cols_(cols), table_(std::move(table)) {
  if (table_.size() != (rows_ + 1) * (cols_ + 1)) {
    throw std::invalid_argument("integral table has the wrong size");
  }
}

ColumnIntegralMap::ColumnIntegralMap(std::size_t rows, std::size_t cols,
                                     std::vector<double> table)
    : rows_(rows), cols_(cols), table_(std::move(table)) {
  if (table_.size() != (rows_ + 1) * cols_) {
    throw std::invalid_argument("column integral table has the wrong size");
  }
}

namespace serial {

IntegralMap build_integral(const SaliencyMap& map, std::uint64_t* pixel_visits) {
  const std::size_t m = map.rows();
  const std::size_t n = map.cols();
  const std::size_t stride = n + 1;
  std::vector<double> t(stride * (m + 1), 0.0);
  std::uint64_t visits = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = map.row(i);
    double running = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      running += row[j];
      ++visits;
      t[(i + 1) * stride + j + 1] = t[i * stride + j + 1] + running;
    }
  }
  if (pixel_visits) *pixel_visits += visits;
  return IntegralMap(m, n, std::move(t));
}

ColumnIntegralMap build_column_integral(const SaliencyMap& map, std::uint64_t* pixel_visits) {
  const std::size_t m = map.rows();
  const std::size_t n = map.cols();
  std::vector<double> t(n * (m + 1), 0.0);
  std::uint64_t visits = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = map.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      t[(i + 1) * n + j] = t[i * n + j] + row[j];
      ++visits;
    }
  }
  if (pixel_visits) *pixel_visits += visits;
  return ColumnIntegralMap(m, n, std::move(t));
}

}  // namespace serial

IntegralMap build_integral(const SaliencyMap& map, std::uint64_t* pixel_visits) {
  const std::size_t m = map.rows();
  const std::size_t n = map.cols();
  const std::size_t stride = n + 1;
  std::vector<double> t(stride * (m + 1), 0.0);
  std::uint64_t visits = 0;

  // Row prefix sums, one row per iteration.
  const auto m_signed = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static) reduction(+ : visits)
  for (std::ptrdiff_t ii = 0; ii < m_signed; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto row = map.row(i);
    double* out = &t[(i + 1) * stride + 1];
    double running = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      running += row[j];
      ++visits;
      out[j] = running;
    }
  }

  // Accumulate down each column block.
  const auto blocks = static_cast<std::ptrdiff_t>((n + kColumnBlock - 1) / kColumnBlock);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < blocks; ++b) {
    const std::size_t j0 = static_cast<std::size_t>(b) * kColumnBlock + 1;
    const std::size_t j1 = std::min(j0 + kColumnBlock, n + 1);
    for (std::size_t i = 1; i < m; ++i) {
      const double* above = &t[i * stride];
      double* here = &t[(i + 1) * stride];
      for (std::size_t j = j0; j < j1; ++j) here[j] = above[j] + here[j];
    }
  }
  if (pixel_visits) *pixel_visits += visits;
  return IntegralMap(m, n, std::move(t));
}

ColumnIntegralMap build_column_integral(const SaliencyMap& map, std::uint64_t* pixel_visits) {
  const std::size_t m = map.rows();
  const std::size_t n = map.cols();
  std::vector<double> t(n * (m + 1), 0.0);
  std::uint64_t visits = 0;
  const auto blocks = static_cast<std::ptrdiff_t>((n + kColumnBlock - 1) / kColumnBlock);
#pragma omp parallel for schedule(static) reduction(+ : visits)
  for (std::ptrdiff_t b = 0; b < blocks; ++b) {
    const std::size_t j0 = static_cast<std::size_t>(b) * kColumnBlock;
    const std::size_t j1 = std::min(j0 + kColumnBlock, n);
    for (std::size_t i = 0; i < m; ++i) {
      const auto row = map.row(i);
      const double* above = &t[i * n];
      double* here = &t[(i + 1) * n];
      for (std::size_t j = j0; j < j1; ++j) {
        here[j] = above[j] + row[j];
        ++visits;
      }
    }
  }
  if (pixel_visits) *pixel_visits += visits;
  return ColumnIntegralMap(m, n, std::move(t));
}

double rect_sum(const IntegralMap& g, const CropBox& box) {
  if (!box.fits(g.rows(), g.cols())) {
    throw std::out_of_range("box " + to_string(box) + " outside " + std::to_string(g.rows()) +
                            "x" + std::to_string(g.cols()) + " map");
  }
  return g.at(box.bottom + 1, box.right + 1) - g.at(box.top, box.right + 1) -
         g.at(box.bottom + 1, box.left) + g.at(box.top, box.left);
}

void band_column_sums(const ColumnIntegralMap& colint, std::size_t i1, std::size_t i2,
                      std::size_t col_begin, std::span<double> out) {
  const auto lower = colint.row(i2 + 1).subspan(col_begin, out.size());
  const auto upper = colint.row(i1).subspan(col_begin, out.size());
#pragma omp simd
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = lower[j] - upper[j];
}

std::vector<double> band_column_sums(const ColumnIntegralMap& colint, std::size_t i1,
                                     std::size_t i2) {
  check_band(colint, i1, i2);
  std::vector<double> out(colint.cols());
  band_column_sums(colint, i1, i2, 0, out);
  return out;
}

}  // namespace salpart
