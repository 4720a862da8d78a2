// SPDX-License-Identifier: Apache-2.0
#include "png_codec.hpp"

#include <zlib.h>

#include <array>
#include <cstring>

namespace scorpio::detail {

namespace {

constexpr std::array<unsigned char, 8> kSignature = {137, 80, 78, 71, 13, 10, 26, 10};

void append_u32_be(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

std::uint32_t read_u32_be(const unsigned char* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

void append_chunk(std::string& out, const char type[4], const std::string& payload) {
  append_u32_be(out, static_cast<std::uint32_t>(payload.size()));
  std::string body(type, 4);
  body += payload;
  out += body;
  const auto crc =
      crc32(0, reinterpret_cast<const Bytef*>(body.data()), static_cast<uInt>(body.size()));
  append_u32_be(out, static_cast<std::uint32_t>(crc));
}

int paeth(int a, int b, int c) {
  const int p = a + b - c;
  const int pa = std::abs(p - a);
  const int pb = std::abs(p - b);
  const int pc = std::abs(p - c);
  if (pa <= pb && pa <= pc) return a;
  if (pb <= pc) return b;
  return c;
}

}  // namespace

bool looks_like_png(const std::string& bytes) {
  return bytes.size() >= kSignature.size() &&
         std::memcmp(bytes.data(), kSignature.data(), kSignature.size()) == 0;
}

std::string encode_png_bytes(const RgbFrame& frame) {
  const int w = frame.width();
  const int h = frame.height();

  // Raw scanlines, each prefixed with filter type 0 (None).
  std::string raw;
  raw.reserve(static_cast<std::size_t>(h) * (1 + 3 * static_cast<std::size_t>(w)));
  for (int y = 0; y < h; ++y) {
    raw.push_back('\0');
    const Rgb* row = frame.row(y);
    for (int x = 0; x < w; ++x) {
      raw.push_back(static_cast<char>(row[x].r));
      raw.push_back(static_cast<char>(row[x].g));
      raw.push_back(static_cast<char>(row[x].b));
    }
  }

  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::string compressed(bound, '\0');
  if (compress2(reinterpret_cast<Bytef*>(compressed.data()), &bound,
                reinterpret_cast<const Bytef*>(raw.data()),
                static_cast<uLong>(raw.size()), Z_DEFAULT_COMPRESSION) != Z_OK) {
    throw IoError("PNG encode: deflate failed");
  }
  compressed.resize(bound);

  std::string ihdr;
  append_u32_be(ihdr, static_cast<std::uint32_t>(w));
  append_u32_be(ihdr, static_cast<std::uint32_t>(h));
  ihdr.push_back(8);   // bit depth
  ihdr.push_back(2);   // color type: RGB truecolor
  ihdr.push_back(0);   // compression
  ihdr.push_back(0);   // filter method
  ihdr.push_back(0);   // interlace

  std::string out(reinterpret_cast<const char*>(kSignature.data()), kSignature.size());
  append_chunk(out, "IHDR", ihdr);
  append_chunk(out, "IDAT", compressed);
  append_chunk(out, "IEND", "");
  return out;
}

RgbFrame decode_png_bytes(const std::string& bytes) {
  if (!looks_like_png(bytes)) {
    throw FormatError("not a PNG stream");
  }

  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();
  std::size_t pos = kSignature.size();

  bool saw_ihdr = false;
  bool saw_iend = false;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::string idat;

  while (pos < size) {
    if (size - pos < 12) {
      throw IoError("PNG decode: truncated chunk header");
    }
    const std::uint32_t length = read_u32_be(data + pos);
    if (size - pos - 12 < length) {
      throw IoError("PNG decode: truncated chunk payload");
    }
    const char* type = reinterpret_cast<const char*>(data + pos + 4);
    const unsigned char* payload = data + pos + 8;
    const std::uint32_t stored_crc = read_u32_be(payload + length);
    const auto crc = crc32(0, data + pos + 4, static_cast<uInt>(length + 4));
    if (static_cast<std::uint32_t>(crc) != stored_crc) {
      throw IoError("PNG decode: chunk CRC mismatch");
    }
    const std::string type_str(type, 4);

    if (type_str == "IHDR") {
      if (length != 13) throw FormatError("PNG decode: bad IHDR length");
      width = read_u32_be(payload);
      height = read_u32_be(payload + 4);
      const int bit_depth = payload[8];
      const int color_type = payload[9];
      const int compression = payload[10];
      const int filter_method = payload[11];
      const int interlace = payload[12];
      if (width == 0 || height == 0) {
        throw FormatError("PNG decode: zero image dimension");
      }
      if (bit_depth != 8) {
        throw FormatError("PNG decode: unsupported bit depth " +
                          std::to_string(bit_depth) + " (only 8-bit supported)");
      }
      if (color_type != 2) {
        throw FormatError("PNG decode: unsupported color type " +
                          std::to_string(color_type) + " (only RGB truecolor supported)");
      }
      if (compression != 0 || filter_method != 0) {
        throw FormatError("PNG decode: nonstandard compression or filter method");
      }
      if (interlace != 0) {
        throw FormatError("PNG decode: interlaced images unsupported");
      }
      saw_ihdr = true;
    } else if (type_str == "IDAT") {
      if (!saw_ihdr) throw FormatError("PNG decode: IDAT before IHDR");
      idat.append(reinterpret_cast<const char*>(payload), length);
    } else if (type_str == "IEND") {
      saw_iend = true;
      break;
    } else if ((type[0] & 0x20) == 0) {
      // Unknown critical chunk; PLTE is legal for truecolor but only advisory.
      if (type_str != "PLTE") {
        throw FormatError("PNG decode: unsupported critical chunk " + type_str);
      }
    }
    pos += 12 + length;
  }

  if (!saw_ihdr) throw FormatError("PNG decode: missing IHDR");
  if (!saw_iend) throw IoError("PNG decode: missing IEND (truncated file)");
  if (idat.empty()) throw IoError("PNG decode: no image data");

  const std::size_t stride = 1 + 3 * static_cast<std::size_t>(width);
  const std::size_t expected = stride * height;
  std::string raw(expected, '\0');
  uLongf raw_len = static_cast<uLongf>(expected);
  const int rc = uncompress(reinterpret_cast<Bytef*>(raw.data()), &raw_len,
                            reinterpret_cast<const Bytef*>(idat.data()),
                            static_cast<uLong>(idat.size()));
  if (rc != Z_OK || raw_len != expected) {
    throw IoError("PNG decode: corrupt or truncated image data");
  }

  RgbFrame frame(static_cast<int>(width), static_cast<int>(height));
  std::vector<unsigned char> prev(3 * width, 0);
  std::vector<unsigned char> cur(3 * width, 0);
  for (std::uint32_t y = 0; y < height; ++y) {
    const auto* line = reinterpret_cast<const unsigned char*>(raw.data()) + y * stride;
    const int filter = line[0];
    const unsigned char* src = line + 1;
    for (std::size_t i = 0; i < 3 * width; ++i) {
      const int a = (i >= 3) ? cur[i - 3] : 0;
      const int b = prev[i];
      const int c = (i >= 3) ? prev[i - 3] : 0;
      int value = src[i];
      switch (filter) {
        case 0: break;
        case 1: value += a; break;
        case 2: value += b; break;
        case 3: value += (a + b) / 2; break;
        case 4: value += paeth(a, b, c); break;
        default:
          throw FormatError("PNG decode: invalid scanline filter " +
                            std::to_string(filter));
      }
      cur[i] = static_cast<unsigned char>(value & 0xff);
    }
    Rgb* row = frame.row(static_cast<int>(y));
    for (std::uint32_t x = 0; x < width; ++x) {
      row[x] = Rgb{cur[3 * x], cur[3 * x + 1], cur[3 * x + 2]};
    }
    std::swap(prev, cur);
  }
  return frame;
}

}  // namespace scorpio::detail
