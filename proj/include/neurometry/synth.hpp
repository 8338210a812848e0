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
#ifndef NEUROMETRY_SYNTH_HPP_
#define NEUROMETRY_SYNTH_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "neurometry/error.hpp"
#include "neurometry/image.hpp"
#include "neurometry/mask.hpp"
#include "neurometry/rng.hpp"
#include "neurometry/util.hpp"

namespace neurometry {

/// Seeded synthetic scene: elliptical somas with straight thick neurites on
/// a noisy background. Stands in for real microscopy so expected outcomes
/// are computable.
struct SceneConfig {
  int width = 256;
  int height = 256;
  int n_cells = 6;
  int soma_radius_min = 8;
  int soma_radius_max = 14;
  int neurites_min = 0;
  int neurites_max = 3;
  int neurite_length_min = 10;
  int neurite_length_max = 30;
  int neurite_thickness = 3;
  int foreground_min = 140;
  int foreground_max = 220;
  int background_level = 20;
  int noise_amplitude = 10;
  std::uint64_t seed = 1;

  void validate() const {
    auto fail = [](const std::string& field, const std::string& why) {
      throw InvalidArgument("SceneConfig." + field + ": " + why);
    };
    if (width < 32) fail("width", "must be >= 32");
    if (height < 32) fail("height", "must be >= 32");
    if (n_cells < 0) fail("n_cells", "must be >= 0");
    if (soma_radius_min < 1 || soma_radius_min > soma_radius_max) {
      fail("soma_radius", "range is empty or below 1");
    }
    if (neurites_min < 0 || neurites_min > neurites_max) {
      fail("neurites_per_cell", "range is empty or negative");
    }
    if (neurite_length_min < 1 || neurite_length_min > neurite_length_max) {
      fail("neurite_length", "range is empty or below 1");
    }
    if (neurite_thickness < 1) fail("neurite_thickness", "must be >= 1");
    if (foreground_min < 0 || foreground_max > 255 ||
        foreground_min > foreground_max) {
      fail("foreground_intensity", "range must lie within [0,255]");
    }
    if (background_level < 0 || background_level > 255) {
      fail("background_level", "must lie within [0,255]");
    }
    if (noise_amplitude < 0 || noise_amplitude > 255) {
      fail("noise_amplitude", "must lie within [0,255]");
    }
  }
};

/// Controlled degradations modeling real failure modes: dropped detections,
/// boundary growth/shrink, over-segmentation splits, spurious blobs.
struct PerturbSpec {
  int dilate_px = 0;
  int erode_px = 0;
  double drop_prob = 0.0;
  double split_prob = 0.0;
  int spurious_count = 0;
  std::uint64_t seed = 1;

  void validate() const {
    auto fail = [](const std::string& field, const std::string& why) {
      throw InvalidArgument("PerturbSpec." + field + ": " + why);
    };
    if (dilate_px < 0) fail("dilate_px", "must be >= 0");
    if (erode_px < 0) fail("erode_px", "must be >= 0");
    if (dilate_px > 0 && erode_px > 0) {
      fail("dilate_px/erode_px", "must not both be nonzero");
    }
    if (drop_prob < 0.0 || drop_prob > 1.0) fail("drop_prob", "must be in [0,1]");
    if (split_prob < 0.0 || split_prob > 1.0) {
      fail("split_prob", "must be in [0,1]");
    }
    if (spurious_count < 0) fail("spurious_count", "must be >= 0");
  }
};

struct Scene {
  GrayImage image;
  std::vector<Instance> instances;
};

namespace detail {

inline void fill_ellipse(BinaryMask& mask, int cx, int cy, int rx, int ry) {
  const int w = mask.width, h = mask.height;
  for (int r = std::max(0, cy - ry); r <= std::min(h - 1, cy + ry); ++r) {
    for (int c = std::max(0, cx - rx); c <= std::min(w - 1, cx + rx); ++c) {
      const double ex = static_cast<double>(c - cx) / rx;
      const double ey = static_cast<double>(r - cy) / ry;
      if (ex * ex + ey * ey <= 1.0) mask.set(r, c);
    }
  }
}

inline void fill_segment(BinaryMask& mask, double x0, double y0, double x1,
                         double y1, double half_width) {
  const int w = mask.width, h = mask.height;
  const int lo_r = std::max(0, static_cast<int>(std::floor(std::min(y0, y1) - half_width - 1)));
  const int hi_r = std::min(h - 1, static_cast<int>(std::ceil(std::max(y0, y1) + half_width + 1)));
  const int lo_c = std::max(0, static_cast<int>(std::floor(std::min(x0, x1) - half_width - 1)));
  const int hi_c = std::min(w - 1, static_cast<int>(std::ceil(std::max(x0, x1) + half_width + 1)));
  const double dx = x1 - x0, dy = y1 - y0;
  const double len2 = dx * dx + dy * dy;
  for (int r = lo_r; r <= hi_r; ++r) {
    for (int c = lo_c; c <= hi_c; ++c) {
      double t = len2 > 0.0 ? ((c - x0) * dx + (r - y0) * dy) / len2 : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      const double px = x0 + t * dx, py = y0 + t * dy;
      const double dist2 = (c - px) * (c - px) + (r - py) * (r - py);
      if (dist2 <= half_width * half_width) mask.set(r, c);
    }
  }
}

}  // namespace detail

/// Generates one scene. Fully deterministic: draw order is (1) per-pixel
/// noise, row-major; (2) per cell, per attempt: rx, ry, cx, cy, neurite
/// count, per-neurite angle and length, then the cell's base intensity on
/// acceptance. Placement keeps a Chebyshev gap >= 4 between cells (rejection
/// sampling, 100 attempts per cell) so exported union rasters split back
/// into the same instances under 8-connectivity; the z-order occlusion pass
/// below is the hard disjointness guarantee for any remaining overlap.
inline Scene generate_scene(const SceneConfig& cfg) {
  cfg.validate();
  SplitMix64 rng(cfg.seed);
  const int w = cfg.width, h = cfg.height;

  std::vector<int> noise(static_cast<std::size_t>(w) * h, 0);
  for (auto& n : noise) {
    n = static_cast<int>(rng.next_int(-cfg.noise_amplitude, cfg.noise_amplitude));
  }

  Scene scene;
  std::vector<int> base_intensity;
  BinaryMask blocked(w, h);  // union of accepted cells, dilated by 3
  constexpr int kMaxAttempts = 100;

  for (int cell = 0; cell < cfg.n_cells; ++cell) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
      const int rx = static_cast<int>(rng.next_int(cfg.soma_radius_min, cfg.soma_radius_max));
      const int ry = static_cast<int>(rng.next_int(cfg.soma_radius_min, cfg.soma_radius_max));
      const int n_neurites = static_cast<int>(rng.next_int(cfg.neurites_min, cfg.neurites_max));
      struct NeuriteDraw {
        double angle;
        int length;
      };
      std::vector<NeuriteDraw> neurites(n_neurites);
      // Soma must fit fully inside the canvas; draws still happen first so
      // the stream layout does not depend on the canvas check.
      const bool fits = 2 * rx + 3 <= w && 2 * ry + 3 <= h;
      const int cx = fits ? static_cast<int>(rng.next_int(rx + 1, w - 2 - rx)) : 0;
      const int cy = fits ? static_cast<int>(rng.next_int(ry + 1, h - 2 - ry)) : 0;
      for (auto& nd : neurites) {
        nd.angle = rng.next_double() * 2.0 * std::numbers::pi;
        nd.length = static_cast<int>(rng.next_int(cfg.neurite_length_min, cfg.neurite_length_max));
      }
      if (!fits) continue;

      BinaryMask candidate(w, h);
      detail::fill_ellipse(candidate, cx, cy, rx, ry);
      for (const auto& nd : neurites) {
        const double x1 = cx + nd.length * std::cos(nd.angle);
        const double y1 = cy + nd.length * std::sin(nd.angle);
        detail::fill_segment(candidate, cx, cy, x1, y1,
                             cfg.neurite_thickness / 2.0);
      }
      bool clear = true;
      for (std::size_t i = 0; i < candidate.bits.size() && clear; ++i) {
        if (candidate.bits[i] && blocked.bits[i]) clear = false;
      }
      if (!clear) continue;

      const BinaryMask dilated = dilate(candidate, 3);
      for (std::size_t i = 0; i < blocked.bits.size(); ++i) {
        blocked.bits[i] |= dilated.bits[i];
      }
      Instance inst;
      inst.id = static_cast<int>(scene.instances.size()) + 1;
      inst.mask = std::move(candidate);
      scene.instances.push_back(std::move(inst));
      base_intensity.push_back(
          static_cast<int>(rng.next_int(cfg.foreground_min, cfg.foreground_max)));
      placed = true;
    }
    if (!placed) {
      throw Error("generate_scene: canvas too small to place cell " +
                  std::to_string(cell + 1) + " of " +
                  std::to_string(cfg.n_cells) + " (placed " +
                  std::to_string(scene.instances.size()) + ") after " +
                  std::to_string(kMaxAttempts) + " attempts");
    }
  }

  // Z-order occlusion: later-drawn pixels are removed from earlier masks.
  BinaryMask later_union(w, h);
  for (auto it = scene.instances.rbegin(); it != scene.instances.rend(); ++it) {
    for (std::size_t i = 0; i < it->mask.bits.size(); ++i) {
      const std::uint8_t own = it->mask.bits[i];
      it->mask.bits[i] = own & static_cast<std::uint8_t>(~later_union.bits[i]);
      later_union.bits[i] |= own;
    }
  }
  for (auto& inst : scene.instances) {
    inst.bbox = bounding_box(inst.mask);  // throws if occlusion emptied a cell
  }

  scene.image.width = w;
  scene.image.height = h;
  scene.image.pixels.resize(static_cast<std::size_t>(w) * h);
  for (std::size_t i = 0; i < scene.image.pixels.size(); ++i) {
    scene.image.pixels[i] = static_cast<std::uint8_t>(
        std::clamp(cfg.background_level + noise[i], 0, 255));
  }
  for (std::size_t k = 0; k < scene.instances.size(); ++k) {
    const auto& mask = scene.instances[k].mask;
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
      if (mask.bits[i]) {
        scene.image.pixels[i] = static_cast<std::uint8_t>(
            std::clamp(base_intensity[k] + noise[i], 0, 255));
      }
    }
  }
  return scene;
}

/// Applies the perturbation model to ground truth. Per instance, in id
/// order: one uniform draw decides dropping; survivors are dilated or
/// eroded; one more draw decides splitting at the bbox midline of the longer
/// axis. Spurious blobs (disks, radius 2..4) are appended last. Output ids
/// are renumbered 1..n in emission order.
inline std::vector<Instance> perturb(const std::vector<Instance>& gt,
                                     const PerturbSpec& spec, int width,
                                     int height) {
  spec.validate();
  SplitMix64 rng(spec.seed);
  std::vector<BinaryMask> out_masks;

  for (const auto& inst : gt) {
    if (rng.next_double() < spec.drop_prob) continue;
    BinaryMask m = inst.mask;
    if (spec.dilate_px > 0) m = dilate(m, spec.dilate_px);
    if (spec.erode_px > 0) m = erode(m, spec.erode_px);
    if (area(m) == 0) continue;  // eroded away: a missed small cell
    if (rng.next_double() < spec.split_prob) {
      const BBox box = bounding_box(m);
      BinaryMask a(m.width, m.height), b(m.width, m.height);
      const bool horizontal_cut = box.h >= box.w;
      const int cut = horizontal_cut ? box.y + box.h / 2 : box.x + box.w / 2;
      for (int r = 0; r < m.height; ++r) {
        for (int c = 0; c < m.width; ++c) {
          if (!m.at(r, c)) continue;
          const bool first = horizontal_cut ? r < cut : c < cut;
          (first ? a : b).set(r, c);
        }
      }
      if (area(a) > 0 && area(b) > 0) {
        out_masks.push_back(std::move(a));
        out_masks.push_back(std::move(b));
      } else {
        out_masks.push_back(std::move(m));
      }
    } else {
      out_masks.push_back(std::move(m));
    }
  }
  for (int k = 0; k < spec.spurious_count; ++k) {
    const int radius = static_cast<int>(rng.next_int(2, 4));
    const int cx = static_cast<int>(rng.next_int(0, width - 1));
    const int cy = static_cast<int>(rng.next_int(0, height - 1));
    BinaryMask blob(width, height);
    detail::fill_ellipse(blob, cx, cy, radius, radius);
    out_masks.push_back(std::move(blob));
  }

  std::vector<Instance> out;
  out.reserve(out_masks.size());
  for (auto& m : out_masks) {
    out.push_back(make_instance(static_cast<int>(out.size()) + 1, std::move(m)));
  }
  return out;
}

}  // namespace neurometry

#endif  // NEUROMETRY_SYNTH_HPP_
