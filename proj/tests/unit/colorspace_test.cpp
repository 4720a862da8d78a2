// SPDX-License-Identifier: Apache-2.0
#include "scorpio/colorspace.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace scorpio;

TEST_CASE("rgb_to_hsv maps the primary and secondary corners") {
  CHECK(rgb_to_hsv(Rgb{255, 0, 0}) == Hsv{0, 255, 255});     // red
  CHECK(rgb_to_hsv(Rgb{255, 255, 0}) == Hsv{30, 255, 255});  // yellow
  CHECK(rgb_to_hsv(Rgb{0, 255, 0}) == Hsv{60, 255, 255});    // green
  CHECK(rgb_to_hsv(Rgb{0, 255, 255}) == Hsv{90, 255, 255});  // cyan
  CHECK(rgb_to_hsv(Rgb{0, 0, 255}) == Hsv{120, 255, 255});   // blue
  CHECK(rgb_to_hsv(Rgb{255, 0, 255}) == Hsv{150, 255, 255}); // magenta
}

TEST_CASE("rgb_to_hsv matches the hand-checked mid-gamut pixel") {
  CHECK(rgb_to_hsv(Rgb{10, 200, 150}) == Hsv{82, 242, 200});
}

TEST_CASE("grayscale pixels have zero saturation and zero hue") {
  for (int c = 0; c <= 255; ++c) {
    const Hsv hsv = rgb_to_hsv(Rgb{static_cast<std::uint8_t>(c),
                                   static_cast<std::uint8_t>(c),
                                   static_cast<std::uint8_t>(c)});
    CHECK(hsv.h == 0);
    CHECK(hsv.s == 0);
    CHECK(hsv.v == c);
  }
}

TEST_CASE("rgb_to_hsv equals the floating-point reference on random triples") {
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 10000; ++i) {
    const Rgb px{static_cast<std::uint8_t>(byte(rng)),
                 static_cast<std::uint8_t>(byte(rng)),
                 static_cast<std::uint8_t>(byte(rng))};
    const Hsv got = rgb_to_hsv(px);
    const Hsv want = oracle::rgb_to_hsv(px);
    REQUIRE(got == want);
    CHECK(got.v == std::max({px.r, px.g, px.b}));
  }
}

TEST_CASE("frame conversion is per-pixel and pure") {
  RgbFrame frame(4, 3);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 4; ++x) {
      frame.at(x, y) = Rgb{static_cast<std::uint8_t>(byte(rng)),
                           static_cast<std::uint8_t>(byte(rng)),
                           static_cast<std::uint8_t>(byte(rng))};
    }
  }
  const HsvFrame a = rgb_to_hsv(frame);
  const HsvFrame b = rgb_to_hsv(frame);
  CHECK(a == b);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 4; ++x) {
      CHECK(a.at(x, y) == rgb_to_hsv(frame.at(x, y)));
    }
  }
}

TEST_CASE("sample_hue reads one pixel and validates coordinates") {
  RgbFrame frame(8, 6, Rgb{0, 255, 255});
  frame.at(2, 5) = Rgb{10, 200, 150};

  CHECK(sample_hue(frame, 3, 4) == 90);
  CHECK(sample_hue(frame, 2, 5) == 82);

  CHECK_THROWS_WITH_AS(sample_hue(frame, 8, 0), doctest::Contains("x coordinate"),
                       CoordinateError);
  CHECK_THROWS_WITH_AS(sample_hue(frame, 0, 6), doctest::Contains("y coordinate"),
                       CoordinateError);
  CHECK_THROWS_AS(sample_hue(frame, -1, 0), CoordinateError);
}

TEST_CASE("hsv_to_rgb inverts the conversion for saturated colors") {
  // Exact hue/sat/val recovery at full value for every hue and a spread of
  // saturations. This keeps synthetic scenes addressable by hue.
  for (int s : {32, 64, 128, 200, 255}) {
    for (int h = 0; h < 180; ++h) {
      const Hsv in{static_cast<std::uint8_t>(h), static_cast<std::uint8_t>(s), 255};
      const Hsv back = rgb_to_hsv(hsv_to_rgb(in));
      REQUIRE(back.h == h);
      REQUIRE(back.v == 255);
    }
  }
  CHECK(hsv_to_rgb(Hsv{77, 255, 255}) == Rgb{0, 255, 145});
}

TEST_CASE("image construction rejects degenerate dimensions") {
  CHECK_THROWS_AS(RgbFrame(0, 5), ParameterError);
  CHECK_THROWS_AS(RgbFrame(5, 0), ParameterError);
  CHECK_NOTHROW(RgbFrame(1, 1));
}
