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
#ifndef NEUROMETRY_IMAGE_HPP_
#define NEUROMETRY_IMAGE_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "neurometry/error.hpp"
#include "neurometry/util.hpp"

namespace neurometry {

/// Decoded raster straight from a file: 8- or 16-bit integer samples,
/// row-major, grayscale (color sources are reduced to luma at decode time).
struct RawImage {
  int width = 0;
  int height = 0;
  int bit_depth = 8;  // 8 or 16
  std::vector<std::uint16_t> samples;

  bool operator==(const RawImage&) const = default;
};

/// Working grayscale raster on the 0..255 scale. All intensity statistics
/// are taken from this representation.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int row, int col) const {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }

  bool operator==(const GrayImage&) const = default;
};

enum class ResizeMode { kBilinear, kNearest };

/// Linear min-max stretch to [0,255], rounding half away from zero.
/// A constant image maps to all zeros (the degenerate-range rule).
inline GrayImage normalize_to_u8(const RawImage& img) {
  if (img.samples.empty()) {
    throw InvalidArgument("normalize_to_u8: empty image");
  }
  const auto [mn_it, mx_it] =
      std::minmax_element(img.samples.begin(), img.samples.end());
  const double mn = *mn_it;
  const double mx = *mx_it;

  GrayImage out;
  out.width = img.width;
  out.height = img.height;
  out.pixels.resize(img.samples.size());
  if (mx == mn) {
    std::fill(out.pixels.begin(), out.pixels.end(), std::uint8_t{0});
    return out;
  }
  const double scale = 255.0 / (mx - mn);
  for (std::size_t i = 0; i < img.samples.size(); ++i) {
    out.pixels[i] = round_to_u8((img.samples[i] - mn) * scale);
  }
  return out;
}

namespace detail {

/// Center-aligned source coordinate for output index i:
///   src = (i + 0.5) * (in / out) - 0.5, clamped to [0, in - 1].
inline double source_coord(int i, int in_size, int out_size) {
  const double scale = static_cast<double>(in_size) / out_size;
  double s = (i + 0.5) * scale - 0.5;
  if (s < 0.0) s = 0.0;
  const double hi = in_size - 1.0;
  if (s > hi) s = hi;
  return s;
}

/// Nearest source index under the same center alignment.
inline int nearest_index(int i, int in_size, int out_size) {
  const double s = source_coord(i, in_size, out_size);
  int idx = static_cast<int>(std::floor(s + 0.5));
  if (idx < 0) idx = 0;
  if (idx > in_size - 1) idx = in_size - 1;
  return idx;
}

}  // namespace detail

/// Resample to out_w x out_h. Bilinear is for intensity images; nearest is
/// for mask rasters (it never invents new values).
inline GrayImage resize(const GrayImage& img, int out_w, int out_h,
                        ResizeMode mode) {
  if (out_w < 1 || out_h < 1) {
    throw InvalidArgument("resize: target dimensions must be >= 1, got " +
                          std::to_string(out_w) + "x" + std::to_string(out_h));
  }
  if (out_w == img.width && out_h == img.height) {
    return img;
  }
  GrayImage out;
  out.width = out_w;
  out.height = out_h;
  out.pixels.resize(static_cast<std::size_t>(out_w) * out_h);

  if (mode == ResizeMode::kNearest) {
    std::vector<int> col_map(out_w);
    for (int c = 0; c < out_w; ++c) {
      col_map[c] = detail::nearest_index(c, img.width, out_w);
    }
    for (int r = 0; r < out_h; ++r) {
      const int sr = detail::nearest_index(r, img.height, out_h);
      for (int c = 0; c < out_w; ++c) {
        out.pixels[static_cast<std::size_t>(r) * out_w + c] =
            img.at(sr, col_map[c]);
      }
    }
    return out;
  }

  for (int r = 0; r < out_h; ++r) {
    const double sy = detail::source_coord(r, img.height, out_h);
    const int y0 = static_cast<int>(sy);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double fy = sy - y0;
    for (int c = 0; c < out_w; ++c) {
      const double sx = detail::source_coord(c, img.width, out_w);
      const int x0 = static_cast<int>(sx);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const double fx = sx - x0;
      const double top = img.at(y0, x0) * (1.0 - fx) + img.at(y0, x1) * fx;
      const double bot = img.at(y1, x0) * (1.0 - fx) + img.at(y1, x1) * fx;
      out.pixels[static_cast<std::size_t>(r) * out_w + c] =
          round_to_u8(top * (1.0 - fy) + bot * fy);
    }
  }
  return out;
}

}  // namespace neurometry

#endif  // NEUROMETRY_IMAGE_HPP_
