// SPDX-License-Identifier: Apache-2.0
#include "scorpio/detection.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "scorpio/colorspace.hpp"
#include "scorpio/synth.hpp"

using namespace scorpio;

TEST_CASE("ingest_detections parses line-delimited records in order") {
  CHECK(ingest_detections("").empty());
  CHECK(ingest_detections("\n  \n\t\n").empty());

  const std::string two =
      R"({"frame":0,"x":10,"y":10,"w":40,"h":30,"score":0.9,"source":"yolo"})"
      "\n\n"
      R"({"frame":2,"x":1,"y":2,"w":3,"h":4,"score":0.25,"source":"hcc"})"
      "\n";
  const auto dets = ingest_detections(two);
  REQUIRE(dets.size() == 2);
  CHECK(dets[0] == Detection{0, BBox{10, 10, 40, 30}, 0.9, "yolo"});
  CHECK(dets[1] == Detection{2, BBox{1, 2, 3, 4}, 0.25, "hcc"});
}

TEST_CASE("ingest_detections reports 1-based line numbers on bad input") {
  const std::string good =
      R"({"frame":0,"x":0,"y":0,"w":1,"h":1,"score":0.5,"source":"a"})";

  SUBCASE("malformed record") {
    try {
      ingest_detections(good + "\n" + good + "\nnot json\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("score outside [0,1]") {
    const std::string bad =
        R"({"frame":0,"x":0,"y":0,"w":1,"h":1,"score":1.5,"source":"a"})";
    try {
      ingest_detections(good + "\n" + bad + "\n");
      FAIL("expected RecordError");
    } catch (const RecordError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("score") != std::string::npos);
    }
  }
  SUBCASE("missing and malformed fields") {
    CHECK_THROWS_AS(
        ingest_detections(R"({"frame":0,"x":0,"y":0,"w":1,"h":1,"score":0.5})"),
        RecordError);
    CHECK_THROWS_AS(
        ingest_detections(
            R"({"frame":0,"x":0,"y":0,"w":0,"h":1,"score":0.5,"source":"a"})"),
        RecordError);
    CHECK_THROWS_AS(
        ingest_detections(
            R"({"frame":-1,"x":0,"y":0,"w":1,"h":1,"score":0.5,"source":"a"})"),
        RecordError);
    CHECK_THROWS_AS(ingest_detections("[1,2,3]"), ParseError);
  }
  SUBCASE("unknown extra fields are tolerated") {
    const std::string extra =
        R"({"frame":0,"x":0,"y":0,"w":1,"h":1,"score":0.5,"source":"a","fluor_area":9})";
    CHECK(ingest_detections(extra).size() == 1);
  }
}

TEST_CASE("blob_detect finds 8-connected components above the area floor") {
  SUBCASE("empty mask yields nothing") {
    CHECK(blob_detect(BinaryMask(16, 16), 1).empty());
  }
  SUBCASE("a solid block is reported with density 1") {
    BinaryMask m(16, 16);
    for (int y = 3; y < 8; ++y)
      for (int x = 2; x < 7; ++x) m.set(x, y, true);
    const auto dets = blob_detect(m, 1);
    REQUIRE(dets.size() == 1);
    CHECK(dets[0].bbox == BBox{2, 3, 5, 5});
    CHECK(dets[0].score == 1.0);
    CHECK(dets[0].source == "blob");
    CHECK(dets[0].frame == 0);
  }
  SUBCASE("min_area filters small components") {
    BinaryMask m(32, 32);
    for (int y = 2; y < 12; ++y)
      for (int x = 2; x < 12; ++x) m.set(x, y, true);  // area 100
    m.set(20, 20, true);
    m.set(21, 20, true);
    m.set(20, 21, true);  // area 3
    const auto dets = blob_detect(m, 40);
    REQUIRE(dets.size() == 1);
    CHECK(dets[0].bbox.area() == 100);
  }
  SUBCASE("diagonal contact joins components") {
    BinaryMask m(8, 8);
    m.set(2, 2, true);
    m.set(3, 3, true);
    CHECK(blob_detect(m, 1).size() == 1);
  }
  SUBCASE("frame index is carried through") {
    BinaryMask m(4, 4);
    m.set(1, 1, true);
    CHECK(blob_detect(m, 1, 17)[0].frame == 17);
  }
}

TEST_CASE("blob_detect agrees with the flood-fill oracle on random masks") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 28);
    const BinaryMask m = oracle::random_mask(rng, dim(rng), dim(rng), 0.35);
    const auto want = oracle::components(m);
    const auto got = blob_detect(m, 1);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].bbox == BBox{want[i].x, want[i].y, want[i].w, want[i].h});
      CHECK(got[i].score == doctest::Approx(static_cast<double>(want[i].area) /
                                            got[i].bbox.area()));
      CHECK(got[i].bbox.x >= 0);
      CHECK(got[i].bbox.y >= 0);
      CHECK(got[i].bbox.x + got[i].bbox.w <= m.width());
      CHECK(got[i].bbox.y + got[i].bbox.h <= m.height());
    }
  }
}

namespace {

/// One synthetic frame with an in-band blob for gate tests.
RgbFrame blob_frame(int hue) {
  SceneSpec spec;
  spec.width = 64;
  spec.height = 48;
  spec.blobs.push_back(EllipseSpec{32, 24, 9, 9, hue, 255, 255});
  return synth_scene(spec);
}

}  // namespace

TEST_CASE("dual_validate confirms candidates by in-band evidence") {
  const HueBand band = make_band(73, 82);
  const MorphSchedule cleanup;  // identity: keep the geometry exact

  const RgbFrame in_band = blob_frame(77);
  const RgbFrame out_of_band = blob_frame(30);
  const std::vector<Detection> cand{{0, BBox{23, 15, 19, 19}, 0.9, "hcc"}};

  SUBCASE("no in-band pixels means rejection") {
    CHECK(dual_validate(out_of_band, cand, band, cleanup, 40, 0.05).empty());
  }
  SUBCASE("a covered blob passes with the exact density") {
    const auto out = dual_validate(in_band, cand, band, cleanup, 40, 0.05);
    REQUIRE(out.size() == 1);
    // Count the in-band pixels inside the bbox independently.
    long long want_area = 0;
    for (int y = 15; y < 34; ++y)
      for (int x = 23; x < 42; ++x)
        if (oracle::in_ellipse(x, y, 32, 24, 9, 9)) ++want_area;
    CHECK(out[0].fluor_area == want_area);
    CHECK(out[0].fluor_density ==
          doctest::Approx(static_cast<double>(want_area) / (19 * 19)));
    CHECK(out[0].combined_score == doctest::Approx(0.9));  // density ≫ floor
    CHECK(out[0].detection == cand[0]);
  }
  SUBCASE("degenerate gate passes everything") {
    const auto out = dual_validate(out_of_band, cand, band, cleanup, 0, 0.0);
    REQUIRE(out.size() == 1);
    CHECK(out[0].combined_score == doctest::Approx(cand[0].score));
  }
  SUBCASE("an out-of-frame candidate names its index") {
    const std::vector<Detection> bad{cand[0], {0, BBox{60, 40, 10, 10}, 0.5, "hcc"}};
    CHECK_THROWS_WITH_AS(dual_validate(in_band, bad, band, cleanup, 0, 0.0),
                         doctest::Contains("candidate 1"), ValidationError);
  }
}

TEST_CASE("the gate filters without inventing or reordering") {
  const HueBand band = make_band(73, 82);
  const RgbFrame frame = blob_frame(77);
  std::vector<Detection> cand;
  cand.push_back({0, BBox{23, 15, 19, 19}, 0.9, "a"});  // covers the blob
  cand.push_back({0, BBox{0, 0, 4, 4}, 0.8, "b"});      // background corner
  cand.push_back({0, BBox{22, 14, 21, 21}, 0.7, "c"});  // covers the blob too

  const auto out = dual_validate(frame, cand, band, MorphSchedule{}, 40, 0.05);
  REQUIRE(out.size() == 2);
  CHECK(out[0].detection.source == "a");
  CHECK(out[1].detection.source == "c");

  for (const auto& v : out) {
    CHECK(v.combined_score <= v.detection.score + 1e-12);
    CHECK(v.fluor_area <= v.detection.bbox.area());
  }
}

TEST_CASE("relaxing the gate never rejects previously passing candidates") {
  const RgbFrame frame = blob_frame(77);
  std::vector<Detection> cand;
  for (int i = 0; i < 6; ++i) {
    cand.push_back({0, BBox{20 + i, 12 + i, 15, 15}, 0.5, "sweep"});
  }
  const auto strict = dual_validate(frame, cand, make_band(75, 79), MorphSchedule{},
                                    60, 0.2);
  const auto relaxed = dual_validate(frame, cand, make_band(73, 82), MorphSchedule{},
                                     30, 0.05);
  for (const auto& s : strict) {
    const bool still = std::any_of(relaxed.begin(), relaxed.end(), [&](const auto& r) {
      return r.detection == s.detection;
    });
    CHECK(still);
  }
  CHECK(strict.size() <= relaxed.size());
}
