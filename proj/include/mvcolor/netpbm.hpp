#pragma once

// Netpbm input/output. Reads P3/P6 color images (maxval up to 65535,
// two-byte samples big-endian) into an ImageBuffer with channels normalized
// as value/maxval, and P2/P5 graymaps into a Plane. Writes planes as 8-bit
// P5 with round-half-away-from-zero quantization, byte-deterministic.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mvcolor/errors.hpp"
#include "mvcolor/image.hpp"

namespace mvcolor {
namespace detail {

class PnmReader {
 public:
  explicit PnmReader(std::span<const unsigned char> data) : data_(data) {}

  [[nodiscard]] std::size_t offset() const noexcept { return pos_; }
  [[nodiscard]] std::size_t remaining() const noexcept { return data_.size() - pos_; }

  [[nodiscard]] std::string read_magic() {
    if (data_.size() < 2) {
      throw parse_error("not a Netpbm file: fewer than 2 bytes", 0);
    }
    std::string magic{static_cast<char>(data_[0]), static_cast<char>(data_[1])};
    pos_ = 2;
    return magic;
  }

  /// Skips whitespace and '#' comments, then reads a decimal integer.
  std::uint64_t read_header_int(const char* what) {
    skip_space_and_comments();
    if (pos_ >= data_.size()) {
      throw parse_error(std::string("unexpected end of header, expected ") + what, pos_);
    }
    if (!is_digit(data_[pos_])) {
      throw parse_error(std::string("expected integer for ") + what, pos_);
    }
    std::uint64_t v = 0;
    while (pos_ < data_.size() && is_digit(data_[pos_])) {
      v = v * 10 + (data_[pos_] - '0');
      if (v > 10'000'000'000ULL) {
        throw parse_error(std::string(what) + " is absurdly large", pos_);
      }
      ++pos_;
    }
    return v;
  }

  /// Consumes the single whitespace byte separating maxval from raw payload.
  void consume_raster_separator() {
    if (pos_ >= data_.size()) {
      throw parse_error("missing raster after header", pos_);
    }
    if (!is_space(data_[pos_])) {
      throw parse_error("expected single whitespace byte before raster", pos_);
    }
    ++pos_;
  }

  [[nodiscard]] std::span<const unsigned char> take_bytes(std::size_t n, const char* what) {
    if (remaining() < n) {
      throw parse_error("truncated " + std::string(what) + ": need " +
                        std::to_string(n) + " bytes, have " + std::to_string(remaining()),
                        pos_);
    }
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      if (is_space(data_[pos_])) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  static bool is_space(unsigned char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }
  static bool is_digit(unsigned char c) noexcept { return c >= '0' && c <= '9'; }

 private:
  std::span<const unsigned char> data_;
  std::size_t pos_ = 0;
};

struct PnmHeader {
  std::size_t width = 0;
  std::size_t height = 0;
  unsigned maxval = 0;
};

inline PnmHeader read_pnm_header(PnmReader& reader) {
  PnmHeader h;
  const std::size_t width_at = reader.offset();
  const std::uint64_t w = reader.read_header_int("width");
  const std::uint64_t ht = reader.read_header_int("height");
  if (w == 0 || ht == 0) {
    throw parse_error("image dimensions must be positive", width_at);
  }
  if (w * ht > 100'000'000ULL) {
    throw parse_error("image dimensions exceed the 1e8 pixel limit", width_at);
  }
  const std::size_t maxval_at = reader.offset();
  const std::uint64_t maxval = reader.read_header_int("maxval");
  if (maxval == 0) {
    throw parse_error("maxval 0 is not allowed", maxval_at);
  }
  if (maxval > 65535) {
    throw parse_error("maxval " + std::to_string(maxval) + " exceeds 65535", maxval_at);
  }
  h.width = static_cast<std::size_t>(w);
  h.height = static_cast<std::size_t>(ht);
  h.maxval = static_cast<unsigned>(maxval);
  return h;
}

/// Reads width*height*channels samples, normalized by maxval.
inline std::vector<double> read_pnm_samples(PnmReader& reader, const PnmHeader& h,
                                            std::size_t channels, bool binary) {
  const std::size_t n_samples = h.width * h.height * channels;
  std::vector<double> samples;
  samples.reserve(n_samples);
  // direct division: the correctly rounded double nearest to v / maxval
  const double maxval = static_cast<double>(h.maxval);

  if (binary) {
    reader.consume_raster_separator();
    const std::size_t bytes_per_sample = h.maxval < 256 ? 1 : 2;
    const auto raster = reader.take_bytes(n_samples * bytes_per_sample, "pixel payload");
    for (std::size_t i = 0; i < n_samples; ++i) {
      unsigned v;
      if (bytes_per_sample == 1) {
        v = raster[i];
      } else {
        v = (static_cast<unsigned>(raster[2 * i]) << 8) | raster[2 * i + 1];
      }
      if (v > h.maxval) {
        throw parse_error("sample value " + std::to_string(v) + " exceeds maxval " +
                          std::to_string(h.maxval),
                          reader.offset() - (n_samples - i) * bytes_per_sample);
      }
      samples.push_back(static_cast<double>(v) / maxval);
    }
  } else {
    for (std::size_t i = 0; i < n_samples; ++i) {
      const std::size_t at = reader.offset();
      const std::uint64_t v = reader.read_header_int("sample");
      if (v > h.maxval) {
        throw parse_error("sample value " + std::to_string(v) + " exceeds maxval " +
                          std::to_string(h.maxval), at);
      }
      samples.push_back(static_cast<double>(v) / maxval);
    }
  }
  return samples;
}

}  // namespace detail

/// Parses a P6 (binary) or P3 (ASCII) color image.
inline ImageBuffer load_ppm(std::span<const unsigned char> data) {
  detail::PnmReader reader(data);
  const std::string magic = reader.read_magic();
  if (magic != "P6" && magic != "P3") {
    throw parse_error("unsupported magic \"" + magic + "\" (expected P6 or P3)", 0);
  }
  const detail::PnmHeader h = detail::read_pnm_header(reader);
  const std::vector<double> samples =
      detail::read_pnm_samples(reader, h, 3, magic == "P6");

  ImageBuffer img;
  img.width = static_cast<int>(h.width);
  img.height = static_cast<int>(h.height);
  img.pixels.reserve(h.width * h.height);
  for (std::size_t i = 0; i < samples.size(); i += 3) {
    img.pixels.push_back({UnitValue(samples[i]), UnitValue(samples[i + 1]),
                          UnitValue(samples[i + 2])});
  }
  return img;
}

/// Parses a P5 (binary) or P2 (ASCII) graymap into a single plane.
inline Plane load_pgm(std::span<const unsigned char> data) {
  detail::PnmReader reader(data);
  const std::string magic = reader.read_magic();
  if (magic != "P5" && magic != "P2") {
    throw parse_error("unsupported magic \"" + magic + "\" (expected P5 or P2)", 0);
  }
  const detail::PnmHeader h = detail::read_pnm_header(reader);
  const std::vector<double> samples =
      detail::read_pnm_samples(reader, h, 1, magic == "P5");

  Plane plane;
  plane.width = static_cast<int>(h.width);
  plane.height = static_cast<int>(h.height);
  plane.label = "gray";
  plane.values.reserve(samples.size());
  for (double v : samples) plane.values.emplace_back(v);
  return plane;
}

/// Serializes a plane as 8-bit binary PGM, quantizing with
/// round(255 * v) half away from zero.
inline std::vector<unsigned char> write_pgm(const Plane& plane) {
  const std::string header = "P5\n" + std::to_string(plane.width) + " " +
                             std::to_string(plane.height) + "\n255\n";
  std::vector<unsigned char> out(header.begin(), header.end());
  out.reserve(header.size() + plane.values.size());
  for (UnitValue v : plane.values) {
    out.push_back(static_cast<unsigned char>(std::lround(255.0 * v.value())));
  }
  return out;
}

}  // namespace mvcolor
