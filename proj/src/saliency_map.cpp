#include "salpart/saliency_map.hpp"

#include <cmath>
#include <sstream>

namespace salpart {

SaliencyMap::SaliencyMap(std::size_t rows, std::size_t cols,
                         std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("saliency map must have at least one row and column");
  }
  if (values_.size() != rows_ * cols_) {
    std::ostringstream msg;
    msg << "saliency map expects " << rows_ * cols_ << " values, got "
        << values_.size();
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < 0.0) {
      std::ostringstream msg;
      msg << "invalid saliency value " << v << " at pixel (" << i / cols_ << ", "
          << i % cols_ << ")";
      throw std::invalid_argument(msg.str());
    }
  }
}

SaliencyMap SaliencyMap::zeros(std::size_t rows, std::size_t cols) {
  return SaliencyMap(rows, cols, std::vector<double>(rows * cols, 0.0));
}

double SaliencyMap::total() const noexcept {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum;
}

std::string to_string(const CropBox& box) {
  std::ostringstream out;
  out << "(" << box.top << "," << box.left << ")-(" << box.bottom << ","
      << box.right << ") mass=" << box.mass;
  return out.str();
}

std::size_t crop_width(std::size_t height, double ratio) noexcept {
  return static_cast<std::size_t>(std::ceil(static_cast<double>(height) * ratio));
}

void PartitionConfig::validate() const {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw std::invalid_argument("aspect ratio must be positive and finite");
  }
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be non-negative and finite");
  }
  if (!(tau_max > 0.0 && tau_max <= 1.0)) {
    throw std::invalid_argument("tau_max must lie in (0, 1]");
  }
}

}  // namespace salpart
