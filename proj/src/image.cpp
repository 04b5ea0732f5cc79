#include "salpart/image.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>

#include "png_raster.hpp"
#include "salpart/saliency_map.hpp"

namespace salpart {
namespace detail {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const noexcept {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct ErrorSink {
  char message[256] = {};
};

void on_png_error(png_structp png, png_const_charp msg) {
  auto* sink = static_cast<ErrorSink*>(png_get_error_ptr(png));
  std::snprintf(sink->message, sizeof(sink->message), "%s", msg);
  png_longjmp(png, 1);
}

void on_png_warning(png_structp, png_const_charp) {}

// libpng reports errors by longjmp, so everything with a destructor lives in
// the callers; these functions only touch plain data after setjmp.
bool decode(std::FILE* file, ErrorSink& sink, PngRaster& out,
            std::vector<png_bytep>& row_ptrs, std::vector<png_byte>& buffer) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &sink,
                                           on_png_error, on_png_warning);
  if (!png) return false;
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  png_init_io(png, file);
  png_read_info(png, info);

  const png_byte color = png_get_color_type(png, info);
  const png_byte depth = png_get_bit_depth(png, info);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  png_read_update_info(png, info);

  out.rows = png_get_image_height(png, info);
  out.cols = png_get_image_width(png, info);
  out.channels = png_get_channels(png, info);
  out.bit_depth = png_get_bit_depth(png, info);
  const std::size_t stride = png_get_rowbytes(png, info);

  buffer.resize(stride * out.rows);
  row_ptrs.resize(out.rows);
  for (std::size_t r = 0; r < out.rows; ++r) row_ptrs[r] = buffer.data() + r * stride;
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

bool encode(std::FILE* file, ErrorSink& sink, std::size_t rows, std::size_t cols,
            int color_type, int bit_depth, std::vector<png_bytep>& row_ptrs) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &sink,
                                            on_png_error, on_png_warning);
  if (!png) return false;
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return false;
  }
  png_init_io(png, file);
  png_set_IHDR(png, info, static_cast<png_uint_32>(cols),
               static_cast<png_uint_32>(rows), bit_depth, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, row_ptrs.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

}  // namespace

PngRaster read_png_raster(const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) throw IoError("cannot open " + path.string());
  png_byte signature[8];
  if (std::fread(signature, 1, 8, file.get()) != 8 || png_sig_cmp(signature, 0, 8) != 0) {
    throw IoError(path.string() + ": not a PNG file");
  }
  std::rewind(file.get());

  ErrorSink sink;
  PngRaster raster;
  std::vector<png_bytep> row_ptrs;
  std::vector<png_byte> buffer;
  if (!decode(file.get(), sink, raster, row_ptrs, buffer)) {
    throw IoError(path.string() + ": PNG decode failed: " + sink.message);
  }
  const std::size_t count = raster.rows * raster.cols * raster.channels;
  raster.samples.resize(count);
  if (raster.bit_depth == 16) {
    for (std::size_t i = 0; i < count; ++i) {
      raster.samples[i] =
          static_cast<std::uint16_t>((buffer[2 * i] << 8) | buffer[2 * i + 1]);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) raster.samples[i] = buffer[i];
  }
  return raster;
}

void write_png_raster(const std::filesystem::path& path, std::size_t rows,
                      std::size_t cols, int channels, int bit_depth,
                      const std::vector<std::uint16_t>& samples) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("empty image");
  if (bit_depth != 8 && bit_depth != 16) throw std::invalid_argument("bit depth must be 8 or 16");
  int color_type = 0;
  switch (channels) {
    case 1: color_type = PNG_COLOR_TYPE_GRAY; break;
    case 3: color_type = PNG_COLOR_TYPE_RGB; break;
    default: throw std::invalid_argument("unsupported channel count");
  }
  const std::size_t count = rows * cols * static_cast<std::size_t>(channels);
  if (samples.size() != count) throw std::invalid_argument("sample count mismatch");

  const std::size_t bytes_per = bit_depth / 8;
  std::vector<png_byte> buffer(count * bytes_per);
  for (std::size_t i = 0; i < count; ++i) {
    if (bytes_per == 2) {
      buffer[2 * i] = static_cast<png_byte>(samples[i] >> 8);
      buffer[2 * i + 1] = static_cast<png_byte>(samples[i] & 0xff);
    } else {
      buffer[i] = static_cast<png_byte>(samples[i]);
    }
  }
  std::vector<png_bytep> row_ptrs(rows);
  const std::size_t stride = cols * channels * bytes_per;
  for (std::size_t r = 0; r < rows; ++r) row_ptrs[r] = buffer.data() + r * stride;

  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw IoError("cannot write " + path.string());
  ErrorSink sink;
  if (!encode(file.get(), sink, rows, cols, color_type, bit_depth, row_ptrs)) {
    throw IoError(path.string() + ": PNG encode failed: " + sink.message);
  }
  if (std::fflush(file.get()) != 0) throw IoError("write failed: " + path.string());
}

}  // namespace detail

RgbImage::RgbImage(std::size_t r, std::size_t c, Rgb fill)
    : rows(r), cols(c), pixels(r * c * 3) {
  for (std::size_t i = 0; i < r * c; ++i) {
    std::memcpy(&pixels[i * 3], fill.data(), 3);
  }
}

RgbImage read_png_rgb(const std::filesystem::path& path) {
  const detail::PngRaster raster = detail::read_png_raster(path);
  RgbImage image(raster.rows, raster.cols);
  const int shift = raster.bit_depth == 16 ? 8 : 0;
  const std::size_t ch = static_cast<std::size_t>(raster.channels);
  for (std::size_t i = 0; i < raster.rows * raster.cols; ++i) {
    const std::uint16_t* px = &raster.samples[i * ch];
    for (std::size_t c = 0; c < 3; ++c) {
      // Gray and gray+alpha replicate channel 0; RGB(A) keeps the first three.
      const std::uint16_t v = ch >= 3 ? px[c] : px[0];
      image.pixels[i * 3 + c] = static_cast<std::uint8_t>(v >> shift);
    }
  }
  return image;
}

void write_png_rgb(const std::filesystem::path& path, const RgbImage& image) {
  std::vector<std::uint16_t> samples(image.pixels.begin(), image.pixels.end());
  detail::write_png_raster(path, image.rows, image.cols, 3, 8, samples);
}

void write_png_gray(const std::filesystem::path& path, std::size_t rows,
                    std::size_t cols, std::span<const std::uint16_t> pixels,
                    int bit_depth) {
  detail::write_png_raster(path, rows, cols, 1, bit_depth,
                           std::vector<std::uint16_t>(pixels.begin(), pixels.end()));
}

}  // namespace salpart
