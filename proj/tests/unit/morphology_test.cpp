// SPDX-License-Identifier: Apache-2.0
#include "scorpio/morphology.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace scorpio;

namespace {

BinaryMask full(int w, int h) {
  BinaryMask m(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) m.set(x, y, true);
  return m;
}

/// 1-px-thick hollow square ring (a thin-contour distractor).
BinaryMask hollow_ring(int size, int inset) {
  BinaryMask m(size, size);
  const int lo = inset, hi = size - 1 - inset;
  for (int i = lo; i <= hi; ++i) {
    m.set(i, lo, true);
    m.set(i, hi, true);
    m.set(lo, i, true);
    m.set(hi, i, true);
  }
  return m;
}

}  // namespace

TEST_CASE("erode removes isolated pixels and shrinks borders") {
  BinaryMask single(9, 9);
  single.set(4, 4, true);
  CHECK(erode(single).count() == 0);

  const BinaryMask shrunk = erode(full(10, 10));
  CHECK(shrunk.count() == 8 * 8);
  for (int y = 0; y < 10; ++y) {
    for (int x = 0; x < 10; ++x) {
      CHECK(shrunk.get(x, y) == (x >= 1 && x <= 8 && y >= 1 && y <= 8));
    }
  }
}

TEST_CASE("dilate grows pixels and clips at frame bounds") {
  BinaryMask single(11, 11);
  single.set(5, 5, true);
  const BinaryMask grown = dilate(single);
  CHECK(grown.count() == 9);
  for (int y = 4; y <= 6; ++y)
    for (int x = 4; x <= 6; ++x) CHECK(grown.get(x, y));

  BinaryMask corner(8, 8);
  corner.set(0, 0, true);
  const BinaryMask clipped = dilate(corner);
  CHECK(clipped.count() == 4);
  CHECK(clipped.get(0, 0));
  CHECK(clipped.get(1, 1));
}

TEST_CASE("erode and dilate match the brute-force window oracle") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dim(1, 32);
    const BinaryMask m = oracle::random_mask(rng, dim(rng), dim(rng));
    CHECK(erode(m) == oracle::erode(m));
    CHECK(dilate(m) == oracle::dilate(m));
  }
}

TEST_CASE("apply_schedule composes steps left to right") {
  std::mt19937 rng(7);
  const BinaryMask m = oracle::random_mask(rng, 24, 18);

  SUBCASE("empty schedule is the identity") {
    CHECK(apply_schedule(m, MorphSchedule{}) == m);
  }
  SUBCASE("a single counted step equals repeated single ops") {
    BinaryMask by_hand = m;
    for (int i = 0; i < 3; ++i) by_hand = dilate(by_hand);
    CHECK(apply_schedule(m, MorphSchedule{{{MorphOp::Dilate, 3}}}) == by_hand);
  }
  SUBCASE("steps chain across ops") {
    const MorphSchedule sched{{{MorphOp::Dilate, 2}, {MorphOp::Erode, 1}}};
    CHECK(apply_schedule(m, sched) == erode(dilate(dilate(m))));
  }
  SUBCASE("non-positive counts are rejected") {
    CHECK_THROWS_AS(apply_schedule(m, MorphSchedule{{{MorphOp::Erode, 0}}}),
                    ParameterError);
  }
}

TEST_CASE("the default cleanup keeps solid blobs and kills thin rings") {
  const MorphSchedule cleanup = MorphSchedule::default_cleanup();
  REQUIRE(format_schedule(cleanup) == "dilate:2,erode:6,dilate:8");

  SUBCASE("a 1-px hollow ring dies") {
    const BinaryMask ring = hollow_ring(40, 6);
    REQUIRE(ring.count() > 0);
    CHECK(apply_schedule(ring, cleanup).count() == 0);
  }
  SUBCASE("a solid 15x15 blob survives and overlaps its origin") {
    BinaryMask blob(64, 64);
    for (int y = 20; y < 35; ++y)
      for (int x = 20; x < 35; ++x) blob.set(x, y, true);
    const BinaryMask out = apply_schedule(blob, cleanup);
    REQUIRE(out.count() > 0);
    long long overlap = 0;
    for (int y = 20; y < 35; ++y)
      for (int x = 20; x < 35; ++x) overlap += out.get(x, y);
    CHECK(overlap > 0);
  }
  SUBCASE("the composition matches the oracle step for step") {
    std::mt19937 rng(99);
    BinaryMask m = oracle::random_mask(rng, 32, 32, 0.6);
    BinaryMask want = m;
    for (int i = 0; i < 2; ++i) want = oracle::dilate(want);
    for (int i = 0; i < 6; ++i) want = oracle::erode(want);
    for (int i = 0; i < 8; ++i) want = oracle::dilate(want);
    CHECK(apply_schedule(m, cleanup) == want);
  }
}

TEST_CASE("morphology invariants hold on random masks") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> dim(2, 32);
    const int w = dim(rng), h = dim(rng);
    const BinaryMask b = oracle::random_mask(rng, w, h, 0.55);

    // Derive a ⊆ b by clearing random pixels of b.
    BinaryMask a = b;
    std::bernoulli_distribution drop(0.3);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        if (a.get(x, y) && drop(rng)) a.set(x, y, false);

    CHECK(oracle::subset(erode(a), erode(b)));    // monotone
    CHECK(oracle::subset(dilate(a), dilate(b)));  // monotone

    // Opening never adds pixels.
    BinaryMask opened = b;
    for (int k = 0; k < 2; ++k) opened = erode(opened);
    for (int k = 0; k < 2; ++k) opened = dilate(opened);
    CHECK(oracle::subset(opened, b));

    CHECK(dilate(BinaryMask(w, h)).count() == 0);  // empty stays empty
  }
}

TEST_CASE("schedule text form round-trips") {
  const MorphSchedule sched = parse_schedule("dilate:2,erode:6,dilate:8");
  CHECK(sched == MorphSchedule::default_cleanup());
  CHECK(parse_schedule(format_schedule(sched)) == sched);

  CHECK_THROWS_AS(parse_schedule("open:3"), ParameterError);
  CHECK_THROWS_AS(parse_schedule("erode:0"), ParameterError);
  CHECK_THROWS_AS(parse_schedule("erode"), ParameterError);
  CHECK_THROWS_AS(parse_schedule("erode:two"), ParameterError);
  CHECK(parse_schedule("").steps.empty());
}
