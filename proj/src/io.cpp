#include "salpart/io.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "png_raster.hpp"

namespace salpart {
namespace {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

// Rethrows map validation failures (negative / non-finite values) as IoError
// so every loader failure has a single type.
SaliencyMap make_map(const std::filesystem::path& path, std::size_t rows,
                     std::size_t cols, std::vector<double> values) {
  try {
    return SaliencyMap(rows, cols, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::uint32_t get_u32_le(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

void put_u32_le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

// PGM header tokenizer: whitespace-separated fields, '#' comments to end of line.
class PgmHeader {
 public:
  PgmHeader(std::span<const std::uint8_t> bytes, const std::filesystem::path& path)
      : bytes_(bytes), path_(path) {}

  std::string token() {
    skip_space_and_comments();
    std::string out;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_])) {
      out.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (out.empty()) fail("truncated header");
    return out;
  }

  unsigned long number() {
    const std::string t = token();
    unsigned long v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) fail("bad header field '" + t + "'");
    return v;
  }

  // Binary rasters start after exactly one whitespace byte.
  std::size_t raster_start() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) fail("missing raster separator");
    return pos_ + 1;
  }

  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& why) const {
    throw IoError(path_.string() + ": malformed PGM: " + why);
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  const std::filesystem::path& path_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<MapFormat> parse_format(std::string_view name) {
  if (name == "png-gray") return MapFormat::png_gray;
  if (name == "pgm") return MapFormat::pgm;
  if (name == "raw-f32") return MapFormat::raw_f32;
  if (name == "csv") return MapFormat::csv;
  return std::nullopt;
}

std::string_view format_name(MapFormat format) {
  switch (format) {
    case MapFormat::png_gray: return "png-gray";
    case MapFormat::pgm: return "pgm";
    case MapFormat::raw_f32: return "raw-f32";
    case MapFormat::csv: return "csv";
  }
  return "unknown";
}

std::optional<MapFormat> format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == ".png") return MapFormat::png_gray;
  if (ext == ".pgm") return MapFormat::pgm;
  if (ext == ".salf" || ext == ".f32" || ext == ".raw") return MapFormat::raw_f32;
  if (ext == ".csv") return MapFormat::csv;
  return std::nullopt;
}

SaliencyMap load_saliency(const std::filesystem::path& path, MapFormat format) {
  switch (format) {
    case MapFormat::png_gray: return read_png_gray(path);
    case MapFormat::pgm: return read_pgm(path);
    case MapFormat::raw_f32: return read_raw_f32(path);
    case MapFormat::csv: return read_csv(path);
  }
  throw IoError("unknown format");
}

SaliencyMap read_pgm(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_bytes(path);
  PgmHeader header(bytes, path);
  const std::string magic = header.token();
  if (magic != "P5" && magic != "P2") header.fail("unsupported magic '" + magic + "'");
  const unsigned long cols = header.number();
  const unsigned long rows = header.number();
  const unsigned long maxval = header.number();
  if (cols == 0 || rows == 0) header.fail("zero dimension");
  if (maxval == 0 || maxval > 65535) header.fail("maxval out of range");

  const std::size_t count = rows * cols;
  const double scale = static_cast<double>(maxval);
  std::vector<double> values(count);

  auto store = [&](std::size_t i, unsigned long v) {
    if (v > maxval) {
      throw IoError(path.string() + ": pixel (" + std::to_string(i / cols) + ", " +
                    std::to_string(i % cols) + ") exceeds maxval");
    }
    values[i] = static_cast<double>(v) / scale;
  };

  if (magic == "P5") {
    const std::size_t start = header.raster_start();
    const std::size_t bpp = maxval > 255 ? 2 : 1;
    if (bytes.size() - start < count * bpp) header.fail("truncated raster");
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint8_t* p = &bytes[start + i * bpp];
      store(i, bpp == 2 ? (static_cast<unsigned long>(p[0]) << 8) | p[1] : p[0]);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) store(i, header.number());
  }
  return make_map(path, rows, cols, std::move(values));
}

SaliencyMap read_png_gray(const std::filesystem::path& path) {
  const detail::PngRaster raster = detail::read_png_raster(path);
  const double scale = raster.bit_depth == 16 ? 65535.0 : 255.0;
  const std::size_t ch = static_cast<std::size_t>(raster.channels);
  std::vector<double> values(raster.rows * raster.cols);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = static_cast<double>(raster.samples[i * ch]) / scale;
  }
  return make_map(path, raster.rows, raster.cols, std::move(values));
}

std::vector<std::uint8_t> encode_raw_f32(const SaliencyMap& map) {
  std::vector<std::uint8_t> out;
  out.reserve(kRawF32HeaderBytes + map.size() * 4);
  for (char c : {'S', 'A', 'L', 'F'}) out.push_back(static_cast<std::uint8_t>(c));
  put_u32_le(out, static_cast<std::uint32_t>(map.rows()));
  put_u32_le(out, static_cast<std::uint32_t>(map.cols()));
  put_u32_le(out, 0);
  for (double v : map.values()) {
    put_u32_le(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  }
  return out;
}

SaliencyMap decode_raw_f32(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kRawF32HeaderBytes || std::memcmp(bytes.data(), "SALF", 4) != 0) {
    throw IoError("malformed raw-f32 header: bad magic");
  }
  const std::uint32_t rows = get_u32_le(bytes, 4);
  const std::uint32_t cols = get_u32_le(bytes, 8);
  if (get_u32_le(bytes, 12) != 0) throw IoError("malformed raw-f32 header: reserved field not zero");
  if (rows == 0 || cols == 0) throw IoError("malformed raw-f32 header: zero dimension");
  const std::size_t count = static_cast<std::size_t>(rows) * cols;
  if (bytes.size() != kRawF32HeaderBytes + count * 4) {
    throw IoError("raw-f32 payload is " + std::to_string(bytes.size() - kRawF32HeaderBytes) +
                  " bytes, expected " + std::to_string(count * 4));
  }
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = std::bit_cast<float>(get_u32_le(bytes, kRawF32HeaderBytes + 4 * i));
  }
  try {
    return SaliencyMap(rows, cols, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw IoError(e.what());
  }
}

SaliencyMap read_raw_f32(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_bytes(path);
  try {
    return decode_raw_f32(bytes);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_raw_f32(const std::filesystem::path& path, const SaliencyMap& map) {
  write_bytes(path, encode_raw_f32(map));
}

SaliencyMap read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t fields = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (true) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      double v = 0.0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) {
        throw IoError(path.string() + ": bad number at row " + std::to_string(rows) +
                      ", column " + std::to_string(fields));
      }
      values.push_back(v);
      ++fields;
      p = next;
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      if (p == end) break;
      if (*p != ',') {
        throw IoError(path.string() + ": expected ',' at row " + std::to_string(rows));
      }
      ++p;
    }
    if (rows == 0) {
      cols = fields;
    } else if (fields != cols) {
      throw IoError(path.string() + ": row " + std::to_string(rows) + " has " +
                    std::to_string(fields) + " values, expected " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw IoError(path.string() + ": empty CSV");
  return make_map(path, rows, cols, std::move(values));
}

void write_csv(const std::filesystem::path& path, const SaliencyMap& map) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t r = 0; r < map.rows(); ++r) {
    for (std::size_t c = 0; c < map.cols(); ++c) {
      if (c) out << ',';
      out << map(r, c);
    }
    out << '\n';
  }
  const std::string text = out.str();
  write_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

void write_pgm(const std::filesystem::path& path, std::size_t rows, std::size_t cols,
               std::span<const std::uint16_t> pixels, std::uint16_t maxval) {
  if (pixels.size() != rows * cols) throw std::invalid_argument("pixel count mismatch");
  const std::string header = "P5\n" + std::to_string(cols) + " " + std::to_string(rows) +
                             "\n" + std::to_string(maxval) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (std::uint16_t v : pixels) {
    if (maxval > 255) out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
  }
  write_bytes(path, out);
}

}  // namespace salpart
