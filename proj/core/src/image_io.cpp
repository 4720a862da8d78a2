// SPDX-License-Identifier: Apache-2.0
#include "scorpio/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "png_codec.hpp"

namespace scorpio {

namespace {

std::string read_binary_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw IoError("failed reading file " + path.string());
  }
  return buf.str();
}

void write_binary_file(const std::string& bytes, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write file " + path.string());
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("failed writing file " + path.string());
  }
}

// Reads one whitespace-delimited PNM header token, skipping '#' comments.
std::string pnm_token(const std::string& bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    const char c = bytes[pos];
    if (c == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else {
      break;
    }
  }
  const std::size_t start = pos;
  while (pos < bytes.size() &&
         !std::isspace(static_cast<unsigned char>(bytes[pos])) && bytes[pos] != '#') {
    ++pos;
  }
  if (start == pos) {
    throw IoError("PNM decode: truncated header");
  }
  return bytes.substr(start, pos - start);
}

int pnm_int(const std::string& bytes, std::size_t& pos, const char* what) {
  const std::string tok = pnm_token(bytes, pos);
  try {
    std::size_t used = 0;
    const int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw FormatError(std::string("PNM decode: bad ") + what + " '" + tok + "'");
  }
}

// Common P5/P6 header handling: returns (width, height) and leaves pos at the
// first raw data byte.
std::pair<int, int> pnm_header(const std::string& bytes, std::size_t& pos,
                               const char* magic) {
  const std::string found = pnm_token(bytes, pos);
  if (found != magic) {
    throw FormatError(std::string("PNM decode: expected magic ") + magic + ", got '" +
                      found + "'");
  }
  const int width = pnm_int(bytes, pos, "width");
  const int height = pnm_int(bytes, pos, "height");
  const int maxval = pnm_int(bytes, pos, "maxval");
  if (width < 1 || height < 1) {
    throw FormatError("PNM decode: dimensions must be >= 1");
  }
  if (maxval != 255) {
    throw FormatError("PNM decode: unsupported maxval " + std::to_string(maxval) +
                      " (only 255 supported)");
  }
  if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
    throw IoError("PNM decode: missing whitespace before raster data");
  }
  ++pos;  // exactly one whitespace byte separates header and raster
  return {width, height};
}

RgbFrame decode_ppm(const std::string& bytes) {
  std::size_t pos = 0;
  const auto [width, height] = pnm_header(bytes, pos, "P6");
  const std::size_t need = 3 * static_cast<std::size_t>(width) * height;
  if (bytes.size() - pos < need) {
    throw IoError("PPM decode: truncated raster data");
  }
  RgbFrame frame(width, height);
  const auto* src = reinterpret_cast<const unsigned char*>(bytes.data()) + pos;
  Rgb* dst = frame.data();
  for (std::size_t i = 0; i < static_cast<std::size_t>(width) * height; ++i) {
    dst[i] = Rgb{src[3 * i], src[3 * i + 1], src[3 * i + 2]};
  }
  return frame;
}

std::string lower_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

}  // namespace

RgbFrame decode_frame(const std::string& bytes) {
  if (detail::looks_like_png(bytes)) {
    return detail::decode_png_bytes(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') {
    return decode_ppm(bytes);
  }
  throw FormatError("unsupported image format (expected PNG or binary PPM)");
}

std::string encode_ppm(const RgbFrame& frame) {
  std::string out = "P6\n" + std::to_string(frame.width()) + " " +
                    std::to_string(frame.height()) + "\n255\n";
  out.reserve(out.size() + 3 * static_cast<std::size_t>(frame.pixel_count()));
  const Rgb* src = frame.data();
  for (std::int64_t i = 0; i < frame.pixel_count(); ++i) {
    out.push_back(static_cast<char>(src[i].r));
    out.push_back(static_cast<char>(src[i].g));
    out.push_back(static_cast<char>(src[i].b));
  }
  return out;
}

std::string encode_png(const RgbFrame& frame) { return detail::encode_png_bytes(frame); }

BinaryMask decode_pgm(const std::string& bytes) {
  std::size_t pos = 0;
  const auto [width, height] = pnm_header(bytes, pos, "P5");
  const std::size_t need = static_cast<std::size_t>(width) * height;
  if (bytes.size() - pos < need) {
    throw IoError("PGM decode: truncated raster data");
  }
  BinaryMask mask(width, height);
  const auto* src = reinterpret_cast<const unsigned char*>(bytes.data()) + pos;
  std::uint8_t* dst = mask.data();
  for (std::size_t i = 0; i < need; ++i) {
    dst[i] = src[i] != 0 ? 1 : 0;
  }
  return mask;
}

std::string encode_pgm(const BinaryMask& mask) {
  std::string out = "P5\n" + std::to_string(mask.width()) + " " +
                    std::to_string(mask.height()) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(mask.pixel_count()));
  const std::uint8_t* src = mask.data();
  for (std::int64_t i = 0; i < mask.pixel_count(); ++i) {
    out.push_back(src[i] ? static_cast<char>(255) : '\0');
  }
  return out;
}

RgbFrame load_frame(const std::filesystem::path& path) {
  return decode_frame(read_binary_file(path));
}

void save_frame(const RgbFrame& frame, const std::filesystem::path& path) {
  const std::string ext = lower_extension(path);
  if (ext == ".png") {
    write_binary_file(encode_png(frame), path);
  } else if (ext == ".ppm") {
    write_binary_file(encode_ppm(frame), path);
  } else {
    throw FormatError("unsupported frame extension '" + ext + "' (use .png or .ppm)");
  }
}

BinaryMask load_mask(const std::filesystem::path& path) {
  return decode_pgm(read_binary_file(path));
}

void save_mask(const BinaryMask& mask, const std::filesystem::path& path) {
  write_binary_file(encode_pgm(mask), path);
}

}  // namespace scorpio
