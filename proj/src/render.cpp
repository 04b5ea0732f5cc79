#include "salpart/render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace salpart {

RgbImage saliency_to_rgb(const SaliencyMap& map) {
  RgbImage image(map.rows(), map.cols());
  const auto values = map.values();
  const auto count = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const double v = std::clamp(values[static_cast<std::size_t>(i)], 0.0, 1.0);
    const auto g = static_cast<std::uint8_t>(std::floor(v * 255.0 + 0.5));
    std::uint8_t* px = &image.pixels[static_cast<std::size_t>(i) * 3];
    px[0] = px[1] = px[2] = g;
  }
  return image;
}

RgbImage render_overlay(const RgbImage& base, const PartitionResult& result,
                        const OverlaySpec& spec) {
  if (base.rows != result.rows || base.cols != result.cols) {
    throw std::invalid_argument("overlay base is " + std::to_string(base.rows) + "x" +
                                std::to_string(base.cols) + " but the partition is " +
                                std::to_string(result.rows) + "x" + std::to_string(result.cols));
  }
  if (spec.stroke == 0) throw std::invalid_argument("stroke must be at least 1");

  RgbImage out = base;
  const std::size_t before = (spec.stroke - 1) / 2;
  const std::size_t after = spec.stroke / 2;

  for (const BoundaryLine& line : result.boundaries) {
    const bool vertical = line.orientation == Orientation::vertical;
    const std::size_t limit = vertical ? out.cols : out.rows;
    const std::size_t lo = line.position >= before ? line.position - before : 0;
    const std::size_t hi = std::min(line.position + after, limit - 1);
    for (std::size_t p = lo; p <= hi; ++p) {
      for (std::size_t s = line.span_start; s <= line.span_end; ++s) {
        if (vertical) {
          out.set(s, p, spec.line_color);
        } else {
          out.set(p, s, spec.line_color);
        }
      }
    }
  }

  for (const CropBox& box : result.boxes) {
    for (std::size_t r = box.top; r <= box.bottom; ++r) {
      for (std::size_t c = box.left; c <= box.right; ++c) {
        const std::size_t edge =
            std::min({r - box.top, box.bottom - r, c - box.left, box.right - c});
        if (edge < spec.stroke) out.set(r, c, spec.box_color);
      }
    }
  }
  return out;
}

}  // namespace salpart
