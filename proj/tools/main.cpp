// SPDX-License-Identifier: Apache-2.0
// scorpio — command-line front end for the fluorescence-validated detection
// pipeline. Every subcommand is a thin adapter over the core library; all
// output is deterministic for identical inputs.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "scorpio/colorspace.hpp"
#include "scorpio/config.hpp"
#include "scorpio/detection.hpp"
#include "scorpio/fluorescence.hpp"
#include "scorpio/image_io.hpp"
#include "scorpio/logs.hpp"
#include "scorpio/metrics.hpp"
#include "scorpio/morphology.hpp"
#include "scorpio/synth.hpp"
#include "scorpio/temporal.hpp"

#include "CLI11.hpp"

namespace fs = std::filesystem;

namespace {

scorpio::PipelineConfig load_cfg(const std::string& config_path) {
  if (config_path.empty()) return scorpio::PipelineConfig{};
  return scorpio::load_config(config_path);
}

bool frame_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".ppm";
}

/// Expands the frame arguments: an explicit file stands for itself, a
/// directory contributes its frame_*.png / frame_*.ppm members in name order
/// (frame_%06d zero-padding makes that the frame-index order). The position
/// in the returned list is the frame index.
std::vector<fs::path> collect_frames(const std::vector<std::string>& args) {
  std::vector<fs::path> frames;
  for (const std::string& arg : args) {
    const fs::path p(arg);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (!entry.is_regular_file()) continue;
        const fs::path& fp = entry.path();
        if (fp.filename().string().rfind("frame_", 0) == 0 && frame_extension(fp)) {
          found.push_back(fp);
        }
      }
      std::sort(found.begin(), found.end());
      frames.insert(frames.end(), found.begin(), found.end());
    } else {
      frames.push_back(p);
    }
  }
  if (frames.empty()) {
    throw scorpio::IoError("no input frames found");
  }
  return frames;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    scorpio::write_text_file(text, out_path);
  }
}

std::string fixed6(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fluorescence-validated nocturnal arachnid detection pipeline"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  // --- probe: hue of one pixel ----------------------------------------------
  struct {
    std::string image;
    int x = 0;
    int y = 0;
  } probe;
  auto* probe_cmd = app.add_subcommand("probe", "Print the hue (half-degrees, 0-179) "
                                                "of one pixel");
  probe_cmd->add_option("image", probe.image, "PNG or PPM frame")->required();
  probe_cmd->add_option("x", probe.x, "pixel column")->required();
  probe_cmd->add_option("y", probe.y, "pixel row")->required();
  probe_cmd->callback([&] {
    const scorpio::RgbFrame frame = scorpio::load_frame(probe.image);
    std::printf("%d\n", scorpio::sample_hue(frame, probe.x, probe.y));
  });

  // --- calibrate: hue samples -> band ---------------------------------------
  struct {
    std::string samples;
  } calibrate;
  auto* calibrate_cmd =
      app.add_subcommand("calibrate", "Derive the hue band (mean ± sd) from a file "
                                      "of probed hue samples");
  calibrate_cmd->add_option("samples", calibrate.samples, "whitespace-separated hue samples")
      ->required();
  calibrate_cmd->callback([&] {
    const std::vector<int> samples = scorpio::read_hue_samples(calibrate.samples);
    const scorpio::HueBand band =
        scorpio::stats_to_band(scorpio::hue_stats(samples));
    std::printf("%d %d\n", band.lo, band.hi);
  });

  // --- mask: frame -> fluorescence mask -------------------------------------
  struct {
    std::string image;
    std::string out;
    std::string config;
  } mask;
  auto* mask_cmd = app.add_subcommand("mask", "Write the fluorescence color mask of a "
                                              "frame as PGM");
  mask_cmd->add_option("image", mask.image, "PNG or PPM frame")->required();
  mask_cmd->add_option("-o,--out", mask.out, "output PGM path")->required();
  mask_cmd->add_option("-c,--config", mask.config, "pipeline config JSON");
  mask_cmd->callback([&] {
    const scorpio::PipelineConfig cfg = load_cfg(mask.config);
    const scorpio::RgbFrame frame = scorpio::load_frame(mask.image);
    const scorpio::BinaryMask m =
        scorpio::band_mask(scorpio::rgb_to_hsv(frame), cfg.band());
    scorpio::save_mask(m, mask.out);
  });

  // --- clean: mask -> morphologically cleaned mask --------------------------
  struct {
    std::string mask_path;
    std::string out;
    std::string config;
    std::string schedule;
  } clean;
  auto* clean_cmd = app.add_subcommand("clean", "Apply the morphology cleanup "
                                                "schedule to a PGM mask");
  clean_cmd->add_option("mask", clean.mask_path, "input PGM mask")->required();
  clean_cmd->add_option("-o,--out", clean.out, "output PGM path")->required();
  clean_cmd->add_option("-c,--config", clean.config, "pipeline config JSON");
  clean_cmd->add_option("-s,--schedule", clean.schedule,
                        "schedule override, e.g. dilate:2,erode:6,dilate:8");
  clean_cmd->callback([&] {
    const scorpio::PipelineConfig cfg = load_cfg(clean.config);
    const scorpio::MorphSchedule schedule = clean.schedule.empty()
                                                ? cfg.morph_schedule
                                                : scorpio::parse_schedule(clean.schedule);
    scorpio::BinaryMask m = scorpio::load_mask(clean.mask_path);
    scorpio::save_mask(scorpio::apply_schedule(std::move(m), schedule), clean.out);
  });

  // --- detect: frames -> blob detection log ---------------------------------
  struct {
    std::vector<std::string> frames;
    std::string out;
    std::string config;
  } detect;
  auto* detect_cmd = app.add_subcommand("detect", "Run mask, cleanup and blob "
                                                  "detection over frames; emit a "
                                                  "line-delimited detection log");
  detect_cmd->add_option("frames", detect.frames, "frame files or directories")
      ->required();
  detect_cmd->add_option("-o,--out", detect.out, "output log path (default stdout)");
  detect_cmd->add_option("-c,--config", detect.config, "pipeline config JSON");
  detect_cmd->callback([&] {
    const scorpio::PipelineConfig cfg = load_cfg(detect.config);
    const auto paths = collect_frames(detect.frames);
    std::vector<scorpio::Detection> all;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const scorpio::RgbFrame frame = scorpio::load_frame(paths[i]);
      const scorpio::BinaryMask cleaned = scorpio::apply_schedule(
          scorpio::band_mask(scorpio::rgb_to_hsv(frame), cfg.band()),
          cfg.morph_schedule);
      auto dets =
          scorpio::blob_detect(cleaned, cfg.min_area, static_cast<int>(i));
      all.insert(all.end(), dets.begin(), dets.end());
    }
    emit(scorpio::serialize_detections(all), detect.out);
  });

  // --- validate: frames + detections -> validated log -----------------------
  struct {
    std::vector<std::string> frames;
    std::string detections;
    std::string out;
    std::string config;
  } validate;
  auto* validate_cmd =
      app.add_subcommand("validate", "Confirm shape-detector candidates against the "
                                     "fluorescence mask (dual validation)");
  validate_cmd->add_option("frames", validate.frames, "frame files or directories")
      ->required();
  validate_cmd->add_option("-d,--detections", validate.detections,
                           "line-delimited detection log")
      ->required();
  validate_cmd->add_option("-o,--out", validate.out, "output log path (default stdout)");
  validate_cmd->add_option("-c,--config", validate.config, "pipeline config JSON");
  validate_cmd->callback([&] {
    const scorpio::PipelineConfig cfg = load_cfg(validate.config);
    const auto paths = collect_frames(validate.frames);
    const std::vector<scorpio::Detection> dets =
        scorpio::read_detection_log(validate.detections);

    std::map<int, std::vector<scorpio::Detection>> by_frame;
    for (const scorpio::Detection& d : dets) {
      if (d.frame >= static_cast<int>(paths.size())) {
        throw scorpio::ValidationError(
            "detection references frame " + std::to_string(d.frame) + " but only " +
            std::to_string(paths.size()) + " frames were provided");
      }
      by_frame[d.frame].push_back(d);
    }

    // Frames are processed independently; emitting in map order keeps the
    // output sorted by frame index regardless of log order.
    std::vector<scorpio::ValidatedDetection> all;
    for (const auto& [frame_idx, candidates] : by_frame) {
      const scorpio::RgbFrame frame = scorpio::load_frame(paths[frame_idx]);
      auto validated =
          scorpio::dual_validate(frame, candidates, cfg.band(), cfg.morph_schedule,
                                 cfg.min_area, cfg.min_density);
      all.insert(all.end(), validated.begin(), validated.end());
    }
    emit(scorpio::serialize_validated(all), validate.out);
  });

  // --- blocks: validated log -> temporal verdicts ---------------------------
  struct {
    std::string validated;
    int frames = 0;
    std::string out;
    std::string config;
    int block_size = 0;
  } blocks;
  auto* blocks_cmd = app.add_subcommand("blocks", "Aggregate validated detections "
                                                  "into fixed-size frame blocks and "
                                                  "report the block recall");
  blocks_cmd->add_option("validated", blocks.validated, "validated detection log")
      ->required();
  blocks_cmd->add_option("-n,--frames", blocks.frames, "total frame count")->required();
  blocks_cmd->add_option("-o,--out", blocks.out, "verdict table output path");
  blocks_cmd->add_option("-c,--config", blocks.config, "pipeline config JSON");
  blocks_cmd->add_option("-b,--block-size", blocks.block_size,
                         "frames per block (overrides config)");
  blocks_cmd->callback([&] {
    const scorpio::PipelineConfig cfg = load_cfg(blocks.config);
    const int block_size = blocks.block_size > 0 ? blocks.block_size : cfg.block_size;
    if (blocks.frames < 1) {
      throw scorpio::ParameterError("--frames must be >= 1");
    }
    const auto validated = scorpio::read_validated_log(blocks.validated);
    std::vector<bool> positive(static_cast<std::size_t>(blocks.frames), false);
    for (const scorpio::ValidatedDetection& v : validated) {
      if (v.detection.frame >= blocks.frames) {
        throw scorpio::ValidationError(
            "validated record references frame " + std::to_string(v.detection.frame) +
            " but --frames is " + std::to_string(blocks.frames));
      }
      positive[static_cast<std::size_t>(v.detection.frame)] = true;
    }
    const auto verdicts = scorpio::group_blocks(positive, block_size);
    if (!blocks.out.empty()) {
      scorpio::write_text_file(scorpio::block_verdicts_table(verdicts), blocks.out);
    }
    std::printf("recall %s\n", fixed6(scorpio::block_recall(verdicts)).c_str());
  });

  // --- eval: predictions + truth -> metrics table ---------------------------
  struct {
    std::string predictions;
    std::string truth;
    std::string out;
  } eval;
  auto* eval_cmd = app.add_subcommand("eval", "Score frame-level predictions against "
                                              "ground truth (confusion matrix and "
                                              "metrics)");
  eval_cmd->add_option("-p,--predictions", eval.predictions,
                       "predicted frame,label file")
      ->required();
  eval_cmd->add_option("-t,--truth", eval.truth, "ground-truth frame,label file")
      ->required();
  eval_cmd->add_option("-o,--out", eval.out, "also write the table to this path");
  eval_cmd->callback([&] {
    auto pred = scorpio::read_frame_labels(eval.predictions);
    auto truth = scorpio::read_frame_labels(eval.truth);
    const auto by_frame = [](const scorpio::FrameLabel& a,
                             const scorpio::FrameLabel& b) { return a.frame < b.frame; };
    std::stable_sort(pred.begin(), pred.end(), by_frame);
    std::stable_sort(truth.begin(), truth.end(), by_frame);
    if (pred.size() != truth.size()) {
      throw scorpio::ParameterError(
          "prediction and truth files differ in length (" +
          std::to_string(pred.size()) + " vs " + std::to_string(truth.size()) + ")");
    }
    std::vector<bool> p(pred.size()), t(truth.size());
    for (std::size_t i = 0; i < pred.size(); ++i) {
      if (pred[i].frame != truth[i].frame) {
        throw scorpio::ParameterError("frame index mismatch at row " +
                                      std::to_string(i) + ": " +
                                      std::to_string(pred[i].frame) + " vs " +
                                      std::to_string(truth[i].frame));
      }
      p[i] = pred[i].label;
      t[i] = truth[i].label;
    }
    const scorpio::ConfusionMatrix cm = scorpio::frame_confusion(p, t);
    const std::string table = scorpio::metrics_table(cm, scorpio::compute_metrics(cm));
    std::fputs(table.c_str(), stdout);
    if (!eval.out.empty()) {
      scorpio::write_text_file(table, eval.out);
    }
  });

  // --- roc: scored labels -> curve ------------------------------------------
  struct {
    std::string scored;
    std::string out;
  } roc;
  auto* roc_cmd = app.add_subcommand("roc", "Sweep thresholds over scored labels; "
                                            "print the AUC and optionally the curve "
                                            "points");
  roc_cmd->add_option("scored", roc.scored, "score,label file")->required();
  roc_cmd->add_option("-o,--out", roc.out, "fpr,tpr table output path");
  roc_cmd->callback([&] {
    const auto samples = scorpio::read_scored_labels(roc.scored);
    const scorpio::RocCurve curve = scorpio::roc(samples);
    if (!roc.out.empty()) {
      scorpio::write_text_file(scorpio::roc_points_table(curve), roc.out);
    }
    std::printf("auc %s\n", fixed6(curve.auc).c_str());
  });

  // --- synth: scene document -> rendered frame ------------------------------
  struct {
    std::string scene;
    std::string out;
  } synth;
  auto* synth_cmd = app.add_subcommand("synth", "Render a synthetic scene document "
                                                "to a PNG or PPM frame");
  synth_cmd->add_option("scene", synth.scene, "scene JSON document")->required();
  synth_cmd->add_option("-o,--out", synth.out, "output image path (.png or .ppm)")
      ->required();
  synth_cmd->callback([&] {
    scorpio::save_frame(scorpio::synth_scene(scorpio::load_scene(synth.scene)),
                        synth.out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // normalize all usage failures to exit 1
  } catch (const scorpio::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
