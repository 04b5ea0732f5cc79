#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace salpart {

using Rgb = std::array<std::uint8_t, 3>;

/// 8-bit RGB raster, row-major, interleaved.
struct RgbImage {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> pixels;

  RgbImage() = default;
  RgbImage(std::size_t r, std::size_t c, Rgb fill = {0, 0, 0});

  Rgb at(std::size_t row, std::size_t col) const noexcept {
    const std::uint8_t* p = &pixels[(row * cols + col) * 3];
    return {p[0], p[1], p[2]};
  }
  void set(std::size_t row, std::size_t col, Rgb c) noexcept {
    std::uint8_t* p = &pixels[(row * cols + col) * 3];
    p[0] = c[0];
    p[1] = c[1];
    p[2] = c[2];
  }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

/// Any PNG, converted to 8-bit RGB (gray is replicated, alpha dropped).
RgbImage read_png_rgb(const std::filesystem::path& path);
void write_png_rgb(const std::filesystem::path& path, const RgbImage& image);
/// 8- or 16-bit single-channel PNG; used to produce fixtures.
void write_png_gray(const std::filesystem::path& path, std::size_t rows,
                    std::size_t cols, std::span<const std::uint16_t> pixels,
                    int bit_depth);

}  // namespace salpart
