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
#ifndef NEUROMETRY_MASK_HPP_
#define NEUROMETRY_MASK_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "neurometry/error.hpp"
#include "neurometry/image.hpp"

namespace neurometry {

/// Row-major boolean raster marking one instance's pixels.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;  // 0 or 1

  BinaryMask() = default;
  BinaryMask(int w, int h)
      : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

  bool at(int row, int col) const {
    return bits[static_cast<std::size_t>(row) * width + col] != 0;
  }
  void set(int row, int col, bool v = true) {
    bits[static_cast<std::size_t>(row) * width + col] = v ? 1 : 0;
  }
  bool same_size(const BinaryMask& o) const {
    return width == o.width && height == o.height;
  }

  bool operator==(const BinaryMask&) const = default;
};

/// Tight axis-aligned box over a mask's foreground; (x, y) is the top-left
/// foreground column/row.
struct BBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool intersects(const BBox& o) const {
    return x < o.x + o.w && o.x < x + w && y < o.y + o.h && o.y < y + h;
  }

  bool operator==(const BBox&) const = default;
};

/// One segmented cell: id, its mask on the full canvas, and the cached bbox.
struct Instance {
  int id = 0;
  BinaryMask mask;
  BBox bbox;

  bool operator==(const Instance&) const = default;
};

inline std::int64_t area(const BinaryMask& mask) {
  std::int64_t n = 0;
  for (const auto b : mask.bits) n += b;
  return n;
}

inline BBox bounding_box(const BinaryMask& mask) {
  int min_r = mask.height, max_r = -1, min_c = mask.width, max_c = -1;
  for (int r = 0; r < mask.height; ++r) {
    const std::uint8_t* row = mask.bits.data() +
                              static_cast<std::size_t>(r) * mask.width;
    for (int c = 0; c < mask.width; ++c) {
      if (row[c]) {
        min_r = std::min(min_r, r);
        max_r = std::max(max_r, r);
        min_c = std::min(min_c, c);
        max_c = std::max(max_c, c);
      }
    }
  }
  if (max_r < 0) {
    throw InvalidArgument("bounding_box: empty mask");
  }
  return BBox{min_c, min_r, max_c - min_c + 1, max_r - min_r + 1};
}

inline Instance make_instance(int id, BinaryMask mask) {
  Instance inst;
  inst.id = id;
  inst.bbox = bounding_box(mask);  // throws on empty
  inst.mask = std::move(mask);
  return inst;
}

/// |a ∩ b| / |a ∪ b|. Two empty masks score 0, not 1: an empty prediction is
/// never a perfect match.
inline double iou(const BinaryMask& a, const BinaryMask& b) {
  if (!a.same_size(b)) {
    throw InvalidArgument("iou: mask dimensions differ (" +
                          std::to_string(a.width) + "x" +
                          std::to_string(a.height) + " vs " +
                          std::to_string(b.width) + "x" +
                          std::to_string(b.height) + ")");
  }
  std::int64_t inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    inter += a.bits[i] & b.bits[i];
    uni += a.bits[i] | b.bits[i];
  }
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

/// Intersection count restricted to the overlap of two bboxes. Matching uses
/// this to skip the full-canvas scan for far-apart instances.
inline std::int64_t intersection_area(const BinaryMask& a, const BBox& box_a,
                                      const BinaryMask& b, const BBox& box_b) {
  const int x0 = std::max(box_a.x, box_b.x);
  const int y0 = std::max(box_a.y, box_b.y);
  const int x1 = std::min(box_a.x + box_a.w, box_b.x + box_b.w);
  const int y1 = std::min(box_a.y + box_a.h, box_b.y + box_b.h);
  std::int64_t inter = 0;
  for (int r = y0; r < y1; ++r) {
    const std::uint8_t* ra = a.bits.data() + static_cast<std::size_t>(r) * a.width;
    const std::uint8_t* rb = b.bits.data() + static_cast<std::size_t>(r) * b.width;
    for (int c = x0; c < x1; ++c) inter += ra[c] & rb[c];
  }
  return inter;
}

/// Maximal connected foreground regions. Ids are assigned in raster-scan
/// order of each component's first pixel, starting at 1, so results are
/// byte-stable across runs and platforms.
inline std::vector<Instance> connected_components(const BinaryMask& mask,
                                                  int connectivity = 8) {
  if (connectivity != 4 && connectivity != 8) {
    throw InvalidArgument("connected_components: connectivity must be 4 or 8");
  }
  const int w = mask.width, h = mask.height;
  std::vector<Instance> out;
  std::vector<std::uint8_t> visited(mask.bits.size(), 0);
  std::vector<int> stack;

  static constexpr int dr8[] = {-1, -1, -1, 0, 0, 1, 1, 1};
  static constexpr int dc8[] = {-1, 0, 1, -1, 1, -1, 0, 1};
  static constexpr int dr4[] = {-1, 0, 0, 1};
  static constexpr int dc4[] = {0, -1, 1, 0};
  const int* dr = connectivity == 8 ? dr8 : dr4;
  const int* dc = connectivity == 8 ? dc8 : dc4;
  const int ndirs = connectivity;

  int next_id = 1;
  for (int r0 = 0; r0 < h; ++r0) {
    for (int c0 = 0; c0 < w; ++c0) {
      const std::size_t i0 = static_cast<std::size_t>(r0) * w + c0;
      if (!mask.bits[i0] || visited[i0]) continue;

      BinaryMask comp(w, h);
      int min_r = r0, max_r = r0, min_c = c0, max_c = c0;
      visited[i0] = 1;
      comp.bits[i0] = 1;
      stack.clear();
      stack.push_back(static_cast<int>(i0));
      while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        const int r = i / w, c = i % w;
        min_r = std::min(min_r, r);
        max_r = std::max(max_r, r);
        min_c = std::min(min_c, c);
        max_c = std::max(max_c, c);
        for (int d = 0; d < ndirs; ++d) {
          const int nr = r + dr[d], nc = c + dc[d];
          if (nr < 0 || nr >= h || nc < 0 || nc >= w) continue;
          const std::size_t ni = static_cast<std::size_t>(nr) * w + nc;
          if (mask.bits[ni] && !visited[ni]) {
            visited[ni] = 1;
            comp.bits[ni] = 1;
            stack.push_back(static_cast<int>(ni));
          }
        }
      }
      Instance inst;
      inst.id = next_id++;
      inst.bbox = BBox{min_c, min_r, max_c - min_c + 1, max_r - min_r + 1};
      inst.mask = std::move(comp);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

/// Nearest-neighbor resample with the same center alignment as image resize.
inline BinaryMask resize_nearest(const BinaryMask& mask, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) {
    throw InvalidArgument("resize_nearest: target dimensions must be >= 1");
  }
  if (out_w == mask.width && out_h == mask.height) return mask;
  BinaryMask out(out_w, out_h);
  std::vector<int> col_map(out_w);
  for (int c = 0; c < out_w; ++c) {
    col_map[c] = detail::nearest_index(c, mask.width, out_w);
  }
  for (int r = 0; r < out_h; ++r) {
    const int sr = detail::nearest_index(r, mask.height, out_h);
    const std::uint8_t* src =
        mask.bits.data() + static_cast<std::size_t>(sr) * mask.width;
    std::uint8_t* dst = out.bits.data() + static_cast<std::size_t>(r) * out_w;
    for (int c = 0; c < out_w; ++c) dst[c] = src[col_map[c]];
  }
  return out;
}

// Square-structuring-element morphology (separable min/max passes). Pixels
// outside the canvas count as background.

inline BinaryMask dilate(const BinaryMask& mask, int radius) {
  if (radius <= 0) return mask;
  const int w = mask.width, h = mask.height;
  BinaryMask tmp(w, h), out(w, h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      std::uint8_t v = 0;
      for (int k = std::max(0, c - radius); k <= std::min(w - 1, c + radius); ++k) {
        v |= mask.bits[static_cast<std::size_t>(r) * w + k];
      }
      tmp.bits[static_cast<std::size_t>(r) * w + c] = v;
    }
  }
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      std::uint8_t v = 0;
      for (int k = std::max(0, r - radius); k <= std::min(h - 1, r + radius); ++k) {
        v |= tmp.bits[static_cast<std::size_t>(k) * w + c];
      }
      out.bits[static_cast<std::size_t>(r) * w + c] = v;
    }
  }
  return out;
}

inline BinaryMask erode(const BinaryMask& mask, int radius) {
  if (radius <= 0) return mask;
  const int w = mask.width, h = mask.height;
  BinaryMask tmp(w, h), out(w, h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      std::uint8_t v = 1;
      for (int k = c - radius; k <= c + radius; ++k) {
        if (k < 0 || k >= w) {
          v = 0;
          break;
        }
        v &= mask.bits[static_cast<std::size_t>(r) * w + k];
        if (!v) break;
      }
      tmp.bits[static_cast<std::size_t>(r) * w + c] = v;
    }
  }
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      std::uint8_t v = 1;
      for (int k = r - radius; k <= r + radius; ++k) {
        if (k < 0 || k >= h) {
          v = 0;
          break;
        }
        v &= tmp.bits[static_cast<std::size_t>(k) * w + c];
        if (!v) break;
      }
      out.bits[static_cast<std::size_t>(r) * w + c] = v;
    }
  }
  return out;
}

/// Foreground pixels 4-adjacent to background (the canvas border counts as
/// background). This is the boundary drawn in overlays.
inline BinaryMask boundary(const BinaryMask& mask) {
  const int w = mask.width, h = mask.height;
  BinaryMask out(w, h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!mask.at(r, c)) continue;
      const bool edge = r == 0 || r == h - 1 || c == 0 || c == w - 1 ||
                        !mask.at(r - 1, c) || !mask.at(r + 1, c) ||
                        !mask.at(r, c - 1) || !mask.at(r, c + 1);
      if (edge) out.set(r, c);
    }
  }
  return out;
}

}  // namespace neurometry

#endif  // NEUROMETRY_MASK_HPP_
