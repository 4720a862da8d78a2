// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "scorpio/image.hpp"
#include "scorpio/mask.hpp"

namespace scorpio {

/// Decodes a frame file. Supported inputs are 8-bit RGB truecolor PNG and
/// binary PPM (magic "P6", maxval 255); any other variant throws FormatError,
/// a missing or truncated file throws IoError.
RgbFrame load_frame(const std::filesystem::path& path);

/// Encodes by extension: ".png" or ".ppm". Pixel data round-trips exactly
/// through both formats.
void save_frame(const RgbFrame& frame, const std::filesystem::path& path);

/// Masks travel as binary PGM ("P5", maxval 255): foreground 255,
/// background 0. Loading treats any nonzero byte as foreground, so
/// round-trips preserve every bit.
BinaryMask load_mask(const std::filesystem::path& path);
void save_mask(const BinaryMask& mask, const std::filesystem::path& path);

/// In-memory codecs behind the file functions (byte strings hold raw bytes).
RgbFrame decode_frame(const std::string& bytes);
std::string encode_ppm(const RgbFrame& frame);
std::string encode_png(const RgbFrame& frame);
BinaryMask decode_pgm(const std::string& bytes);
std::string encode_pgm(const BinaryMask& mask);

}  // namespace scorpio
