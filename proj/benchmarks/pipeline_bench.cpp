// SPDX-License-Identifier: Apache-2.0
// Microbenchmarks over the pipeline's hot stages, run on a synthetic frame
// with realistic content (one blob, one ring distractor, mild noise).

#include <benchmark/benchmark.h>

#include "scorpio/colorspace.hpp"
#include "scorpio/config.hpp"
#include "scorpio/detection.hpp"
#include "scorpio/fluorescence.hpp"
#include "scorpio/morphology.hpp"
#include "scorpio/synth.hpp"

namespace {

scorpio::RgbFrame bench_frame(int side) {
  scorpio::SceneSpec spec;
  spec.width = side;
  spec.height = side;
  spec.blobs.push_back({side / 3, side / 2, side / 12, side / 12, 77, 255, 255});
  spec.rings.push_back({2 * side / 3, side / 2, side / 8, 77, 2});
  spec.noise_seed = 7;
  spec.noise_amplitude = 24;
  return scorpio::synth_scene(spec);
}

void BM_RgbToHsv(benchmark::State& state) {
  const scorpio::RgbFrame frame = bench_frame(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scorpio::rgb_to_hsv(frame));
  }
  state.SetItemsProcessed(state.iterations() * frame.pixel_count());
}
BENCHMARK(BM_RgbToHsv)->Arg(256)->Arg(512);

void BM_BandMask(benchmark::State& state) {
  const scorpio::HsvFrame hsv =
      scorpio::rgb_to_hsv(bench_frame(static_cast<int>(state.range(0))));
  const scorpio::HueBand band = scorpio::make_band(73, 82);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scorpio::band_mask(hsv, band));
  }
  state.SetItemsProcessed(state.iterations() * hsv.pixel_count());
}
BENCHMARK(BM_BandMask)->Arg(256)->Arg(512);

scorpio::BinaryMask bench_mask(int side) {
  return scorpio::band_mask(scorpio::rgb_to_hsv(bench_frame(side)),
                            scorpio::make_band(73, 82));
}

void BM_Erode(benchmark::State& state) {
  const scorpio::BinaryMask mask = bench_mask(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scorpio::erode(mask));
  }
  state.SetItemsProcessed(state.iterations() * mask.pixel_count());
}
BENCHMARK(BM_Erode)->Arg(256)->Arg(512);

void BM_Dilate(benchmark::State& state) {
  const scorpio::BinaryMask mask = bench_mask(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scorpio::dilate(mask));
  }
  state.SetItemsProcessed(state.iterations() * mask.pixel_count());
}
BENCHMARK(BM_Dilate)->Arg(256)->Arg(512);

void BM_DefaultSchedule(benchmark::State& state) {
  const scorpio::BinaryMask mask = bench_mask(static_cast<int>(state.range(0)));
  const scorpio::MorphSchedule schedule = scorpio::MorphSchedule::default_cleanup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(scorpio::apply_schedule(mask, schedule));
  }
  state.SetItemsProcessed(state.iterations() * mask.pixel_count());
}
BENCHMARK(BM_DefaultSchedule)->Arg(256)->Arg(512);

void BM_BlobDetect(benchmark::State& state) {
  const scorpio::BinaryMask mask = scorpio::apply_schedule(
      bench_mask(static_cast<int>(state.range(0))),
      scorpio::MorphSchedule::default_cleanup());
  for (auto _ : state) {
    benchmark::DoNotOptimize(scorpio::blob_detect(mask, 40));
  }
  state.SetItemsProcessed(state.iterations() * mask.pixel_count());
}
BENCHMARK(BM_BlobDetect)->Arg(256)->Arg(512);

void BM_DualValidate(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const scorpio::RgbFrame frame = bench_frame(side);
  const scorpio::PipelineConfig cfg;
  const std::vector<scorpio::Detection> candidates{
      {0,
       {side / 3 - side / 12, side / 2 - side / 12, side / 6 + 1, side / 6 + 1},
       0.9,
       "yolo"}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(scorpio::dual_validate(frame, candidates, cfg.band(),
                                                    cfg.morph_schedule, cfg.min_area,
                                                    cfg.min_density));
  }
  state.SetItemsProcessed(state.iterations() * frame.pixel_count());
}
BENCHMARK(BM_DualValidate)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
