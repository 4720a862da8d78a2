// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "scorpio/image.hpp"

namespace scorpio::detail {

// Minimal PNG support for exactly one variant: 8-bit RGB truecolor,
// non-interlaced. Everything else is rejected.
std::string encode_png_bytes(const RgbFrame& frame);
RgbFrame decode_png_bytes(const std::string& bytes);

bool looks_like_png(const std::string& bytes);

}  // namespace scorpio::detail
