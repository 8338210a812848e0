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
#ifndef NEUROMETRY_IMAGE_IO_HPP_
#define NEUROMETRY_IMAGE_IO_HPP_

#include <png.h>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "neurometry/error.hpp"
#include "neurometry/image.hpp"
#include "neurometry/util.hpp"

namespace neurometry {

// ---------------------------------------------------------------------------
// PGM (P2 ASCII / P5 binary), maxval <= 65535.
// ---------------------------------------------------------------------------

namespace detail {

inline int pgm_next_token_int(std::istream& in, const std::string& path,
                              const char* what) {
  // Skips whitespace and '#' comments, then reads one non-negative integer.
  for (;;) {
    const int c = in.peek();
    if (c == EOF) {
      throw ParseError(path + ": truncated PGM header, expected " +
                       std::string(what));
    }
    if (c == '#') {
      std::string line;
      std::getline(in, line);
      continue;
    }
    if (std::isspace(c)) {
      in.get();
      continue;
    }
    break;
  }
  long long v = 0;
  if (!(in >> v) || v < 0 || v > 1000000000) {
    throw ParseError(path + ": invalid PGM header value for " +
                     std::string(what));
  }
  return static_cast<int>(v);
}

}  // namespace detail

inline RawImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string() + ": cannot open file");
  }
  char magic[2] = {0, 0};
  in.read(magic, 2);
  const bool ascii = magic[0] == 'P' && magic[1] == '2';
  const bool binary = magic[0] == 'P' && magic[1] == '5';
  if (!ascii && !binary) {
    throw ParseError(path.string() + ": not a PGM file (expected P2 or P5)");
  }
  const int width = detail::pgm_next_token_int(in, path.string(), "width");
  const int height = detail::pgm_next_token_int(in, path.string(), "height");
  const int maxval = detail::pgm_next_token_int(in, path.string(), "maxval");
  if (width < 1 || height < 1) {
    throw ParseError(path.string() + ": invalid PGM dimensions " +
                     std::to_string(width) + "x" + std::to_string(height));
  }
  if (maxval < 1 || maxval > 65535) {
    throw ParseError(path.string() + ": PGM maxval out of range: " +
                     std::to_string(maxval));
  }

  RawImage img;
  img.width = width;
  img.height = height;
  img.bit_depth = maxval > 255 ? 16 : 8;
  const std::size_t n = static_cast<std::size_t>(width) * height;
  img.samples.resize(n);

  if (ascii) {
    for (std::size_t i = 0; i < n; ++i) {
      long long v;
      if (!(in >> v)) {
        throw ParseError(path.string() + ": truncated PGM data at sample " +
                         std::to_string(i));
      }
      if (v < 0 || v > maxval) {
        throw ParseError(path.string() + ": PGM sample " + std::to_string(v) +
                         " exceeds maxval " + std::to_string(maxval));
      }
      img.samples[i] = static_cast<std::uint16_t>(v);
    }
    return img;
  }

  // P5: exactly one whitespace byte separates the header from the raster.
  in.get();
  const int bytes_per_sample = maxval > 255 ? 2 : 1;
  std::vector<unsigned char> buf(n * bytes_per_sample);
  in.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(buf.size()));
  if (static_cast<std::size_t>(in.gcount()) != buf.size()) {
    throw ParseError(path.string() + ": truncated PGM raster data");
  }
  if (bytes_per_sample == 1) {
    for (std::size_t i = 0; i < n; ++i) img.samples[i] = buf[i];
  } else {
    // Big-endian per the netpbm spec.
    for (std::size_t i = 0; i < n; ++i) {
      img.samples[i] =
          static_cast<std::uint16_t>((buf[2 * i] << 8) | buf[2 * i + 1]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (img.samples[i] > maxval) {
      throw ParseError(path.string() + ": PGM sample exceeds maxval");
    }
  }
  return img;
}

/// Writes an 8-bit P5 PGM.
inline void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(path.string() + ": cannot open for writing");
  }
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) {
    throw Error(path.string() + ": write failed");
  }
}

// ---------------------------------------------------------------------------
// PNG via libpng: grayscale / RGB, 8- or 16-bit; alpha is dropped.
// ---------------------------------------------------------------------------

namespace detail {

struct PngReadCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* fp = nullptr;
  ~PngReadCloser() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
  }
};

struct PngWriteCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* fp = nullptr;
  ~PngWriteCloser() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (fp) std::fclose(fp);
  }
};

}  // namespace detail

inline RawImage read_png(const std::filesystem::path& path) {
  detail::PngReadCloser ctx;
  ctx.fp = std::fopen(path.string().c_str(), "rb");
  if (!ctx.fp) {
    throw ParseError(path.string() + ": cannot open file");
  }
  ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                   nullptr);
  if (!ctx.png) throw Error(path.string() + ": libpng init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw Error(path.string() + ": libpng init failed");

  std::vector<unsigned char> data;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(ctx.png))) {
    throw ParseError(path.string() + ": corrupt or truncated PNG");
  }

  png_init_io(ctx.png, ctx.fp);
  png_read_info(ctx.png, ctx.info);

  const png_uint_32 width = png_get_image_width(ctx.png, ctx.info);
  const png_uint_32 height = png_get_image_height(ctx.png, ctx.info);
  const int bit_depth = png_get_bit_depth(ctx.png, ctx.info);
  const int color_type = png_get_color_type(ctx.png, ctx.info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) {
    throw ParseError(path.string() +
                     ": palette PNGs are not supported (grayscale/RGB only)");
  }
  if (bit_depth != 8 && bit_depth != 16) {
    throw ParseError(path.string() + ": unsupported PNG bit depth " +
                     std::to_string(bit_depth) + " (8 or 16 only)");
  }
  if (color_type & PNG_COLOR_MASK_ALPHA) {
    png_set_strip_alpha(ctx.png);
  }
  png_set_interlace_handling(ctx.png);
  png_read_update_info(ctx.png, ctx.info);

  const int channels = png_get_channels(ctx.png, ctx.info);
  if (channels != 1 && channels != 3) {
    throw ParseError(path.string() + ": unsupported PNG channel layout");
  }
  const std::size_t rowbytes = png_get_rowbytes(ctx.png, ctx.info);
  data.resize(rowbytes * height);
  rows.resize(height);
  for (png_uint_32 r = 0; r < height; ++r) {
    rows[r] = data.data() + static_cast<std::size_t>(r) * rowbytes;
  }
  png_read_image(ctx.png, rows.data());
  png_read_end(ctx.png, nullptr);

  RawImage img;
  img.width = static_cast<int>(width);
  img.height = static_cast<int>(height);
  img.bit_depth = bit_depth;
  img.samples.resize(static_cast<std::size_t>(width) * height);

  const int bytes = bit_depth / 8;
  auto sample_at = [&](const unsigned char* p) -> std::uint32_t {
    // PNG multi-byte samples are big-endian.
    return bytes == 1 ? p[0]
                      : static_cast<std::uint32_t>((p[0] << 8) | p[1]);
  };
  for (png_uint_32 r = 0; r < height; ++r) {
    const unsigned char* row = rows[r];
    for (png_uint_32 c = 0; c < width; ++c) {
      const unsigned char* px = row + (static_cast<std::size_t>(c) * channels) * bytes;
      std::uint32_t value;
      if (channels == 1) {
        value = sample_at(px);
      } else {
        const double lum = 0.299 * sample_at(px) +
                           0.587 * sample_at(px + bytes) +
                           0.114 * sample_at(px + 2 * bytes);
        value = static_cast<std::uint32_t>(round_half_away(lum));
      }
      img.samples[static_cast<std::size_t>(r) * width + c] =
          static_cast<std::uint16_t>(value);
    }
  }
  return img;
}

/// Interleaved 8-bit RGB raster, used for overlay rendering.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // 3 bytes per pixel, row-major

  void set(int row, int col, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    const std::size_t i = (static_cast<std::size_t>(row) * width + col) * 3;
    pixels[i] = r;
    pixels[i + 1] = g;
    pixels[i + 2] = b;
  }

  bool operator==(const RgbImage&) const = default;
};

inline void write_png_rgb(const RgbImage& img,
                          const std::filesystem::path& path) {
  detail::PngWriteCloser ctx;
  ctx.fp = std::fopen(path.string().c_str(), "wb");
  if (!ctx.fp) {
    throw Error(path.string() + ": cannot open for writing");
  }
  ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                    nullptr);
  if (!ctx.png) throw Error(path.string() + ": libpng init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw Error(path.string() + ": libpng init failed");

  std::vector<png_bytep> rows(img.height);
  if (setjmp(png_jmpbuf(ctx.png))) {
    throw Error(path.string() + ": PNG write failed");
  }
  png_init_io(ctx.png, ctx.fp);
  png_set_IHDR(ctx.png, ctx.info, img.width, img.height, 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(ctx.png, ctx.info);
  for (int r = 0; r < img.height; ++r) {
    rows[r] = const_cast<png_bytep>(img.pixels.data() +
                                    static_cast<std::size_t>(r) * img.width * 3);
  }
  png_write_image(ctx.png, rows.data());
  png_write_end(ctx.png, nullptr);
}

// ---------------------------------------------------------------------------
// Format dispatch.
// ---------------------------------------------------------------------------

/// Loads a PGM or PNG file as a grayscale raster. Color inputs are reduced
/// with luma = round(0.299 R + 0.587 G + 0.114 B).
inline RawImage load_grayscale(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) {
    throw ParseError(path.string() + ": cannot open file");
  }
  unsigned char magic[2] = {0, 0};
  probe.read(reinterpret_cast<char*>(magic), 2);
  probe.close();
  if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5')) {
    return read_pgm(path);
  }
  if (magic[0] == 0x89 && magic[1] == 'P') {
    return read_png(path);
  }
  throw ParseError(path.string() +
                   ": unsupported format (PGM P2/P5 or PNG expected)");
}

}  // namespace neurometry

#endif  // NEUROMETRY_IMAGE_IO_HPP_
