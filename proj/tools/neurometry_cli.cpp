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
//
// Command-line front end: converts annotations to masks, measures cell
// morphology, and scores predictions against ground truth.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "neurometry/pipeline.hpp"

namespace {

struct ResizeFlag {
  bool enabled = true;
  int w = 640;
  int h = 640;
};

bool parse_resize(const std::string& text, ResizeFlag& out) {
  if (text == "none") {
    out.enabled = false;
    return true;
  }
  int w = 0, h = 0;
  char trailer = 0;
  if (std::sscanf(text.c_str(), "%dx%d%c", &w, &h, &trailer) != 2 || w < 1 ||
      h < 1) {
    return false;
  }
  out.enabled = true;
  out.w = w;
  out.h = h;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"neuron instance segmentation evaluation and morphometry"};
  app.require_subcommand(1);

  double threshold = 0.5;
  int connectivity = 8;
  std::string resize_text = "640x640";
  bool per_image = false;
  int jobs = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--threshold", threshold,
                    "IoU threshold for matching (default 0.5)")
        ->check(CLI::Range(0.0, 0.999999));
    cmd->add_option("--connectivity", connectivity,
                    "component connectivity for raster predictions")
        ->check(CLI::IsMember({4, 8}));
    cmd->add_option("--resize", resize_text,
                    "working resolution WxH, or 'none' (default 640x640)");
    cmd->add_flag("--per-image", per_image,
                  "aggregate dataset metrics as per-image means");
    cmd->add_option("--jobs", jobs, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
  };

  std::string images_dir, annotations_dir, gt_dir, pred_dir, out_dir,
      config_path;

  CLI::App* measure =
      app.add_subcommand("measure", "measure cells from annotations");
  measure->add_option("--images", images_dir, "image directory")->required();
  measure->add_option("--annotations", annotations_dir,
                      "annotation directory")->required();
  measure->add_option("--out", out_dir, "output directory")->required();
  add_common(measure);

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "score predictions against ground truth");
  evaluate->add_option("--gt", gt_dir, "ground-truth directory")->required();
  evaluate->add_option("--pred", pred_dir, "prediction directory")->required();
  evaluate->add_option("--images", images_dir, "image directory")->required();
  evaluate->add_option("--out", out_dir, "output directory")->required();
  add_common(evaluate);

  CLI::App* synth =
      app.add_subcommand("synth", "generate a synthetic fixture tree");
  synth->add_option("--config", config_path, "scene config JSON")->required();
  synth->add_option("--out", out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  ResizeFlag rz;
  if (!parse_resize(resize_text, rz)) {
    std::cerr << "error: --resize expects WxH or 'none', got '" << resize_text
              << "'\n";
    return 1;
  }
  neurometry::PipelineOptions opts;
  opts.threshold = threshold;
  opts.connectivity = connectivity;
  opts.resize_enabled = rz.enabled;
  opts.resize_w = rz.w;
  opts.resize_h = rz.h;
  opts.per_image_mean = per_image;
  opts.jobs = jobs;

  try {
    if (measure->parsed()) {
      return neurometry::run_measure(images_dir, annotations_dir, out_dir,
                                     opts, std::cerr);
    }
    if (evaluate->parsed()) {
      return neurometry::run_evaluate(gt_dir, pred_dir, images_dir, out_dir,
                                      opts, std::cerr);
    }
    return neurometry::run_synth(config_path, out_dir, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
