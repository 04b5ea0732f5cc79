#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "salpart/saliency_map.hpp"

namespace salpart {

enum class MapFormat { png_gray, pgm, raw_f32, csv };

std::optional<MapFormat> parse_format(std::string_view name);
std::string_view format_name(MapFormat format);
/// Guesses the format from the file extension (.png, .pgm, .salf/.f32, .csv).
std::optional<MapFormat> format_from_extension(const std::filesystem::path& path);

/// Reads a saliency map. Integer sources are divided by their full-scale
/// value so results land in [0, 1]; float and CSV sources are only checked
/// for non-negative, finite values. Throws IoError on any failure.
SaliencyMap load_saliency(const std::filesystem::path& path, MapFormat format);

SaliencyMap read_pgm(const std::filesystem::path& path);
SaliencyMap read_png_gray(const std::filesystem::path& path);
SaliencyMap read_raw_f32(const std::filesystem::path& path);
SaliencyMap read_csv(const std::filesystem::path& path);

/// "SALF" header + little-endian u32 rows, cols, reserved, then float32 values.
inline constexpr std::size_t kRawF32HeaderBytes = 16;

std::vector<std::uint8_t> encode_raw_f32(const SaliencyMap& map);
SaliencyMap decode_raw_f32(std::span<const std::uint8_t> bytes);
void write_raw_f32(const std::filesystem::path& path, const SaliencyMap& map);

void write_csv(const std::filesystem::path& path, const SaliencyMap& map);
/// Binary PGM (P5); 8-bit when maxval <= 255, else big-endian 16-bit.
void write_pgm(const std::filesystem::path& path, std::size_t rows,
               std::size_t cols, std::span<const std::uint16_t> pixels,
               std::uint16_t maxval);

}  // namespace salpart
