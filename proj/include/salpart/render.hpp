#pragma once

#include "salpart/image.hpp"
#include "salpart/partition.hpp"
#include "salpart/saliency_map.hpp"

namespace salpart {

enum class OverlayBase { saliency_grayscale, source_image };

struct OverlaySpec {
  OverlayBase base = OverlayBase::saliency_grayscale;
  Rgb box_color{255, 0, 0};
  Rgb line_color{0, 255, 255};
  std::size_t stroke = 2;
};

/// Grayscale expansion: round(v * 255) half up, replicated to three channels.
RgbImage saliency_to_rgb(const SaliencyMap& map);

/// Strokes boundaries first, then box outlines, onto a copy of `base`.
/// Box strokes run inward from the box edge; a line of stroke s covers
/// positions [p - (s - 1) / 2, p + s / 2]. Throws std::invalid_argument on a
/// size mismatch or a zero stroke.
RgbImage render_overlay(const RgbImage& base, const PartitionResult& result,
                        const OverlaySpec& spec = {});

}  // namespace salpart
