#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace salpart::detail {

/// Decoded PNG samples after palette expansion and low-bit-depth widening.
/// 16-bit samples keep their full range; 8-bit samples are stored as-is.
struct PngRaster {
  std::size_t rows = 0;
  std::size_t cols = 0;
  int channels = 0;
  int bit_depth = 0;
  std::vector<std::uint16_t> samples;
};

PngRaster read_png_raster(const std::filesystem::path& path);

void write_png_raster(const std::filesystem::path& path, std::size_t rows,
                      std::size_t cols, int channels, int bit_depth,
                      const std::vector<std::uint16_t>& samples);

}  // namespace salpart::detail
