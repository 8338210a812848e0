// Copyright 2026 The Neurometry Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef NEUROMETRY_PIPELINE_HPP_
#define NEUROMETRY_PIPELINE_HPP_

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "neurometry/accuracy.hpp"
#include "neurometry/annotations.hpp"
#include "neurometry/error.hpp"
#include "neurometry/image.hpp"
#include "neurometry/image_io.hpp"
#include "neurometry/mask.hpp"
#include "neurometry/matching.hpp"
#include "neurometry/metrics.hpp"
#include "neurometry/morphometry.hpp"
#include "neurometry/overlay.hpp"
#include "neurometry/report.hpp"
#include "neurometry/synth.hpp"

namespace neurometry {

namespace fs = std::filesystem;

/// Shared command-line knobs. The working resolution defaults to 640x640;
/// pass resize_enabled = false to stay at native resolution.
struct PipelineOptions {
  double threshold = 0.5;
  int connectivity = 8;
  bool resize_enabled = true;
  int resize_w = 640;
  int resize_h = 640;
  bool per_image_mean = false;
  int jobs = 1;
};

namespace detail {

inline std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string() + ": cannot open file");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(path.string() + ": cannot open for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw Error(path.string() + ": write failed");
  }
}

/// Stems of all regular files in dir whose extension is in exts. A stem
/// appearing with two eligible extensions is ambiguous and rejected.
inline std::map<std::string, fs::path> index_by_stem(
    const fs::path& dir, const std::set<std::string>& exts) {
  if (!fs::is_directory(dir)) {
    throw Error(dir.string() + ": not a directory");
  }
  std::map<std::string, fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path p = entry.path();
    if (!exts.count(p.extension().string())) continue;
    const std::string stem = p.stem().string();
    if (!out.emplace(stem, p).second) {
      throw Error(dir.string() + ": ambiguous stem '" + stem +
                  "' (multiple eligible files)");
    }
  }
  return out;
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be
/// written to pre-sized slots so the merge order never depends on the
/// schedule.
template <typename Fn>
inline void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ingestion.
// ---------------------------------------------------------------------------

struct LoadedInstances {
  int width = 0;
  int height = 0;
  std::vector<Instance> instances;
};

/// Reads instance masks from a polygon annotation JSON, a single-raster RLE
/// JSON (split into instances by connected components), or a 0/255 PGM mask
/// raster (also component-split).
inline LoadedInstances load_instances(const fs::path& path, int connectivity) {
  const std::string ext = path.extension().string();
  LoadedInstances out;
  if (ext == ".pgm") {
    const RawImage raw = read_pgm(path);
    BinaryMask mask(raw.width, raw.height);
    for (std::size_t i = 0; i < raw.samples.size(); ++i) {
      mask.bits[i] = raw.samples[i] > 0 ? 1 : 0;
    }
    out.width = raw.width;
    out.height = raw.height;
    out.instances = connected_components(mask, connectivity);
    return out;
  }
  if (ext != ".json") {
    throw ParseError(path.string() + ": unsupported annotation format");
  }
  const std::string text = detail::read_text_file(path);
  bool is_rle = false;
  try {
    const auto doc = nlohmann::json::parse(text);
    is_rle = doc.is_object() && doc.contains("runs");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": malformed JSON: " + e.what());
  }
  try {
    if (is_rle) {
      const BinaryMask mask = parse_rle_json(text);
      out.width = mask.width;
      out.height = mask.height;
      out.instances = connected_components(mask, connectivity);
    } else {
      const AnnotationSet set = parse_annotations(text);
      out.width = set.image_width;
      out.height = set.image_height;
      for (const auto& poly : set.instances) {
        const BinaryMask mask = rasterize(poly, set.image_width, set.image_height);
        if (area(mask) == 0) continue;  // fully out-of-frame annotation
        out.instances.push_back(make_instance(poly.id, mask));
      }
    }
  } catch (const Error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return out;
}

/// Loads, normalizes and (optionally) resizes one image.
inline GrayImage prepare_image(const fs::path& path,
                               const PipelineOptions& opts) {
  GrayImage gray = normalize_to_u8(load_grayscale(path));
  if (opts.resize_enabled) {
    gray = resize(gray, opts.resize_w, opts.resize_h, ResizeMode::kBilinear);
  }
  return gray;
}

/// Brings loaded instances to the working resolution. Instances whose mask
/// becomes empty after the nearest resample are dropped and reported.
inline std::vector<Instance> prepare_instances(
    const LoadedInstances& loaded, const PipelineOptions& opts,
    const std::string& stem, const std::string& source,
    std::vector<std::string>& warnings) {
  std::vector<Instance> out;
  out.reserve(loaded.instances.size());
  for (const auto& inst : loaded.instances) {
    if (!opts.resize_enabled) {
      out.push_back(inst);
      continue;
    }
    BinaryMask resized =
        resize_nearest(inst.mask, opts.resize_w, opts.resize_h);
    if (area(resized) == 0) {
      warnings.push_back(stem + ": " + source + " instance " +
                         std::to_string(inst.id) + " dropped (empty after resize to " +
                         std::to_string(opts.resize_w) + "x" +
                         std::to_string(opts.resize_h) + ")");
      continue;
    }
    out.push_back(make_instance(inst.id, std::move(resized)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// measure: images + annotations -> measurements.csv
// ---------------------------------------------------------------------------

inline int run_measure(const fs::path& images_dir,
                       const fs::path& annotations_dir, const fs::path& out_dir,
                       const PipelineOptions& opts, std::ostream& err) {
  struct ImageOutcome {
    bool failed = false;
    std::string error;
    std::vector<MeasurementRecord> records;
    std::vector<std::string> warnings;
  };

  std::map<std::string, fs::path> images, annotations;
  try {
    images = detail::index_by_stem(images_dir, {".pgm", ".png"});
    annotations = detail::index_by_stem(annotations_dir, {".json", ".pgm"});
    fs::create_directories(out_dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::vector<std::string> stems;
  std::vector<ImageOutcome> outcomes;
  for (const auto& [stem, path] : images) stems.push_back(stem);
  for (const auto& [stem, path] : annotations) {
    if (!images.count(stem)) stems.push_back(stem);
  }
  std::sort(stems.begin(), stems.end());
  outcomes.resize(stems.size());

  detail::parallel_for(stems.size(), opts.jobs, [&](std::size_t i) {
    const std::string& stem = stems[i];
    ImageOutcome& res = outcomes[i];
    try {
      const auto img_it = images.find(stem);
      const auto ann_it = annotations.find(stem);
      if (img_it == images.end()) {
        throw Error("no image file for stem '" + stem + "'");
      }
      if (ann_it == annotations.end()) {
        throw Error("no annotation file for stem '" + stem + "'");
      }
      const GrayImage gray = prepare_image(img_it->second, opts);
      const LoadedInstances loaded =
          load_instances(ann_it->second, opts.connectivity);
      const auto instances =
          prepare_instances(loaded, opts, stem, "gt", res.warnings);
      if (!instances.empty() &&
          (instances[0].mask.width != gray.width ||
           instances[0].mask.height != gray.height)) {
        throw Error("annotation canvas " + std::to_string(loaded.width) + "x" +
                    std::to_string(loaded.height) + " does not match image " +
                    std::to_string(gray.width) + "x" +
                    std::to_string(gray.height));
      }
      for (const auto& [id, meas] : measure_all(instances, gray)) {
        res.records.push_back({stem, id, "gt", meas});
      }
    } catch (const std::exception& e) {
      res.failed = true;
      res.error = e.what();
    }
  });

  std::vector<MeasurementRecord> records;
  bool any_failed = false;
  for (std::size_t i = 0; i < stems.size(); ++i) {
    if (outcomes[i].failed) {
      any_failed = true;
      err << "error: " << stems[i] << ": " << outcomes[i].error << "\n";
      continue;
    }
    for (const auto& w : outcomes[i].warnings) err << "warning: " << w << "\n";
    records.insert(records.end(), outcomes[i].records.begin(),
                   outcomes[i].records.end());
  }
  try {
    detail::write_text_file(out_dir / "measurements.csv", to_csv(records));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return any_failed ? 1 : 0;
}

// ---------------------------------------------------------------------------
// evaluate: gt + pred + images -> metrics.csv, accuracy.csv, report.json,
// overlays/*.png
// ---------------------------------------------------------------------------

inline int run_evaluate(const fs::path& gt_dir, const fs::path& pred_dir,
                        const fs::path& images_dir, const fs::path& out_dir,
                        const PipelineOptions& opts, std::ostream& err) {
  struct ImageOutcome {
    bool failed = false;
    std::string error;
    MatchCounts counts;
    std::vector<MeasurementRecord> records;
    std::vector<std::pair<Measurements, Measurements>> accuracy_pairs;
    std::vector<std::string> warnings;
  };

  std::map<std::string, fs::path> gt_files, pred_files, image_files;
  try {
    gt_files = detail::index_by_stem(gt_dir, {".json", ".pgm"});
    pred_files = detail::index_by_stem(pred_dir, {".json", ".pgm"});
    image_files = detail::index_by_stem(images_dir, {".pgm", ".png"});
    fs::create_directories(out_dir / "overlays");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::set<std::string> stem_set;
  for (const auto& [stem, path] : gt_files) stem_set.insert(stem);
  for (const auto& [stem, path] : pred_files) stem_set.insert(stem);
  const std::vector<std::string> stems(stem_set.begin(), stem_set.end());
  std::vector<ImageOutcome> outcomes(stems.size());

  detail::parallel_for(stems.size(), opts.jobs, [&](std::size_t i) {
    const std::string& stem = stems[i];
    ImageOutcome& res = outcomes[i];
    try {
      const auto gt_it = gt_files.find(stem);
      const auto pred_it = pred_files.find(stem);
      const auto img_it = image_files.find(stem);
      if (gt_it == gt_files.end()) {
        throw Error("no ground-truth file for stem '" + stem + "'");
      }
      if (pred_it == pred_files.end()) {
        throw Error("no prediction file for stem '" + stem + "'");
      }
      if (img_it == image_files.end()) {
        throw Error("no image file for stem '" + stem + "'");
      }
      const GrayImage gray = prepare_image(img_it->second, opts);
      const auto gt_loaded = load_instances(gt_it->second, opts.connectivity);
      const auto pred_loaded = load_instances(pred_it->second, opts.connectivity);
      const auto gt = prepare_instances(gt_loaded, opts, stem, "gt", res.warnings);
      const auto pred =
          prepare_instances(pred_loaded, opts, stem, "pred", res.warnings);
      for (const auto& inst : gt) {
        if (inst.mask.width != gray.width || inst.mask.height != gray.height) {
          throw Error("ground-truth canvas does not match image " +
                      std::to_string(gray.width) + "x" +
                      std::to_string(gray.height));
        }
      }
      for (const auto& inst : pred) {
        if (inst.mask.width != gray.width || inst.mask.height != gray.height) {
          throw Error("prediction canvas does not match image " +
                      std::to_string(gray.width) + "x" +
                      std::to_string(gray.height));
        }
      }

      const MatchResult match = match_instances(gt, pred, opts.threshold);
      res.counts = match_counts(match);
      BinaryMask gt_union(gray.width, gray.height);
      BinaryMask pred_union(gray.width, gray.height);
      for (const auto& inst : gt) {
        for (std::size_t k = 0; k < gt_union.bits.size(); ++k) {
          gt_union.bits[k] |= inst.mask.bits[k];
        }
      }
      for (const auto& inst : pred) {
        for (std::size_t k = 0; k < pred_union.bits.size(); ++k) {
          pred_union.bits[k] |= inst.mask.bits[k];
        }
      }
      std::int64_t agree = 0;
      for (std::size_t k = 0; k < gt_union.bits.size(); ++k) {
        agree += gt_union.bits[k] == pred_union.bits[k];
      }
      res.counts.pixel_agreements = agree;
      res.counts.pixel_total = static_cast<std::int64_t>(gt_union.bits.size());

      std::map<int, Measurements> gt_meas, pred_meas;
      for (const auto& [id, meas] : measure_all(gt, gray)) {
        res.records.push_back({stem, id, "gt", meas});
        gt_meas[id] = meas;
      }
      for (const auto& [id, meas] : measure_all(pred, gray)) {
        res.records.push_back({stem, id, "pred", meas});
        pred_meas[id] = meas;
      }
      for (const auto& pair : match.pairs) {
        res.accuracy_pairs.emplace_back(gt_meas.at(pair.gt_id),
                                        pred_meas.at(pair.pred_id));
      }
      const RgbImage overlay = render_overlay(gray, match, gt, pred);
      write_png_rgb(overlay, out_dir / "overlays" / (stem + ".png"));
    } catch (const std::exception& e) {
      res.failed = true;
      res.error = e.what();
    }
  });

  ReportBundle bundle;
  bundle.aggregation = opts.per_image_mean ? "per_image_mean" : "micro";
  bundle.threshold = opts.threshold;
  MatchCounts total;
  std::vector<std::pair<Measurements, Measurements>> all_pairs;
  for (std::size_t i = 0; i < stems.size(); ++i) {
    const ImageOutcome& res = outcomes[i];
    if (res.failed) {
      bundle.failures.push_back({stems[i], res.error});
      continue;
    }
    PerImageMetrics pim;
    pim.image_id = stems[i];
    pim.counts = res.counts;
    pim.metrics = segmentation_metrics(res.counts);
    bundle.per_image.push_back(std::move(pim));
    bundle.measurements.insert(bundle.measurements.end(), res.records.begin(),
                               res.records.end());
    bundle.warnings.insert(bundle.warnings.end(), res.warnings.begin(),
                           res.warnings.end());
    total += res.counts;
    all_pairs.insert(all_pairs.end(), res.accuracy_pairs.begin(),
                     res.accuracy_pairs.end());
  }

  if (opts.per_image_mean && !bundle.per_image.empty()) {
    // Mean of per-image metrics, skipping fields undefined in an image.
    SegMetrics mean;
    auto average = [&](auto field, const char* name) {
      double sum = 0.0;
      std::int64_t n = 0;
      for (const auto& pim : bundle.per_image) {
        bool undef = false;
        for (const auto& u : pim.metrics.undefined) {
          if (u == name) undef = true;
        }
        if (undef) continue;
        sum += pim.metrics.*field;
        ++n;
      }
      if (n == 0) {
        mean.undefined.push_back(name);
        return 0.0;
      }
      return sum / static_cast<double>(n);
    };
    mean.precision = average(&SegMetrics::precision, "precision");
    mean.recall = average(&SegMetrics::recall, "recall");
    mean.f1 = average(&SegMetrics::f1, "f1");
    mean.iou_accuracy = average(&SegMetrics::iou_accuracy, "iou_accuracy");
    mean.sq = average(&SegMetrics::sq, "sq");
    mean.rq = average(&SegMetrics::rq, "rq");
    mean.pq = average(&SegMetrics::pq, "pq");
    mean.pixel_accuracy = average(&SegMetrics::pixel_accuracy, "pixel_accuracy");
    bundle.dataset = std::move(mean);
  } else {
    bundle.dataset = segmentation_metrics(total);
  }

  if (!all_pairs.empty()) {
    bundle.accuracy_defined = true;
    bundle.accuracy = measurement_accuracy(all_pairs);
  }

  int code = bundle.failures.empty() ? 0 : 1;
  for (const auto& f : bundle.failures) {
    err << "error: " << f.image_id << ": " << f.error << "\n";
  }
  for (const auto& w : bundle.warnings) err << "warning: " << w << "\n";
  try {
    detail::write_text_file(out_dir / "metrics.csv",
                            to_metrics_csv(bundle.dataset));
    detail::write_text_file(out_dir / "accuracy.csv",
                            to_accuracy_csv(bundle.accuracy));
    detail::write_text_file(out_dir / "report.json", to_report_json(bundle));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}

// ---------------------------------------------------------------------------
// synth: config -> images/, gt/, pred/ fixture tree
// ---------------------------------------------------------------------------

struct SynthConfig {
  int scenes = 1;
  SceneConfig scene;
  bool has_perturb = false;
  PerturbSpec perturb;
};

inline SynthConfig parse_synth_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed config JSON: ") + e.what());
  }
  SynthConfig cfg;
  auto get_int = [&doc](const char* key, int fallback) {
    if (!doc.contains(key)) return fallback;
    if (!doc[key].is_number_integer()) {
      throw ParseError(std::string("config field '") + key +
                       "' must be an integer");
    }
    return doc[key].get<int>();
  };
  auto get_range = [&doc](const char* key, int lo_fallback, int hi_fallback) {
    if (!doc.contains(key)) return std::pair<int, int>{lo_fallback, hi_fallback};
    const auto& j = doc[key];
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer()) {
      throw ParseError(std::string("config field '") + key +
                       "' must be a [lo, hi] integer pair");
    }
    return std::pair<int, int>{j[0].get<int>(), j[1].get<int>()};
  };

  cfg.scenes = get_int("scenes", 1);
  if (cfg.scenes < 1) {
    throw ParseError("config field 'scenes' must be >= 1");
  }
  cfg.scene.width = get_int("width", cfg.scene.width);
  cfg.scene.height = get_int("height", cfg.scene.height);
  cfg.scene.n_cells = get_int("n_cells", cfg.scene.n_cells);
  std::tie(cfg.scene.soma_radius_min, cfg.scene.soma_radius_max) = get_range(
      "soma_radius", cfg.scene.soma_radius_min, cfg.scene.soma_radius_max);
  std::tie(cfg.scene.neurites_min, cfg.scene.neurites_max) = get_range(
      "neurites_per_cell", cfg.scene.neurites_min, cfg.scene.neurites_max);
  std::tie(cfg.scene.neurite_length_min, cfg.scene.neurite_length_max) =
      get_range("neurite_length", cfg.scene.neurite_length_min,
                cfg.scene.neurite_length_max);
  cfg.scene.neurite_thickness =
      get_int("neurite_thickness", cfg.scene.neurite_thickness);
  std::tie(cfg.scene.foreground_min, cfg.scene.foreground_max) = get_range(
      "foreground_intensity", cfg.scene.foreground_min, cfg.scene.foreground_max);
  cfg.scene.background_level =
      get_int("background_level", cfg.scene.background_level);
  cfg.scene.noise_amplitude =
      get_int("noise_amplitude", cfg.scene.noise_amplitude);
  if (doc.contains("seed")) {
    cfg.scene.seed = doc["seed"].get<std::uint64_t>();
  }
  cfg.scene.validate();

  if (doc.contains("perturb")) {
    const auto& jp = doc["perturb"];
    if (!jp.is_object()) {
      throw ParseError("config field 'perturb' must be an object");
    }
    cfg.has_perturb = true;
    auto p_int = [&jp](const char* key, int fallback) {
      if (!jp.contains(key)) return fallback;
      if (!jp[key].is_number_integer()) {
        throw ParseError(std::string("config field 'perturb.") + key +
                         "' must be an integer");
      }
      return jp[key].get<int>();
    };
    auto p_double = [&jp](const char* key, double fallback) {
      if (!jp.contains(key)) return fallback;
      if (!jp[key].is_number()) {
        throw ParseError(std::string("config field 'perturb.") + key +
                         "' must be a number");
      }
      return jp[key].get<double>();
    };
    cfg.perturb.dilate_px = p_int("dilate_px", 0);
    cfg.perturb.erode_px = p_int("erode_px", 0);
    cfg.perturb.drop_prob = p_double("drop_prob", 0.0);
    cfg.perturb.split_prob = p_double("split_prob", 0.0);
    cfg.perturb.spurious_count = p_int("spurious_count", 0);
    cfg.perturb.seed = jp.contains("seed") ? jp["seed"].get<std::uint64_t>()
                                           : cfg.scene.seed;
    cfg.perturb.validate();
  }
  return cfg;
}

inline std::string scene_stem(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "scene_%03d", index);
  return std::string(buf);
}

inline int run_synth(const fs::path& config_path, const fs::path& out_dir,
                     std::ostream& err) {
  SynthConfig cfg;
  try {
    cfg = parse_synth_config(detail::read_text_file(config_path));
    fs::create_directories(out_dir / "images");
    fs::create_directories(out_dir / "gt");
    fs::create_directories(out_dir / "pred");
  } catch (const std::exception& e) {
    err << "error: " << config_path.string() << ": " << e.what() << "\n";
    return 1;
  }

  for (int s = 0; s < cfg.scenes; ++s) {
    const std::string stem = scene_stem(s);
    try {
      SceneConfig scene_cfg = cfg.scene;
      scene_cfg.seed = SplitMix64::derive(cfg.scene.seed, static_cast<std::uint64_t>(s));
      const Scene scene = generate_scene(scene_cfg);

      write_pgm(scene.image, out_dir / "images" / (stem + ".pgm"));

      const AnnotationSet gt_set = to_annotation_set(
          scene.instances, scene_cfg.width, scene_cfg.height);
      detail::write_text_file(out_dir / "gt" / (stem + ".json"),
                              serialize_annotations(gt_set));

      std::vector<Instance> pred = scene.instances;
      if (cfg.has_perturb) {
        PerturbSpec spec = cfg.perturb;
        spec.seed = SplitMix64::derive(cfg.perturb.seed, static_cast<std::uint64_t>(s));
        pred = perturb(scene.instances, spec, scene_cfg.width, scene_cfg.height);
      }
      BinaryMask pred_union(scene_cfg.width, scene_cfg.height);
      for (const auto& inst : pred) {
        for (std::size_t k = 0; k < pred_union.bits.size(); ++k) {
          pred_union.bits[k] |= inst.mask.bits[k];
        }
      }
      detail::write_text_file(out_dir / "pred" / (stem + ".json"),
                              serialize_rle_json(pred_union));
    } catch (const std::exception& e) {
      err << "error: " << stem << ": " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace neurometry

#endif  // NEUROMETRY_PIPELINE_HPP_
