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
#include <png.h>

#include <doctest.h>

#include <fstream>
#include <string>
#include <vector>

#include "neurometry/image_io.hpp"
#include "neurometry/rng.hpp"
#include "support/oracles.hpp"

using neurometry::RawImage;
using neurometry::RgbImage;
using neurometry::SplitMix64;
using testsupport::TempDir;

namespace {

void write_file(const std::filesystem::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

// Test-side 16-bit grayscale PNG writer; the library only writes RGB8.
void write_png_gray16(const std::vector<std::uint16_t>& samples, int w, int h,
                      const std::filesystem::path& path) {
  std::FILE* fp = std::fopen(path.string().c_str(), "wb");
  REQUIRE(fp != nullptr);
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  REQUIRE(setjmp(png_jmpbuf(png)) == 0);
  png_init_io(png, fp);
  png_set_IHDR(png, info, w, h, 16, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<unsigned char> row(static_cast<std::size_t>(w) * 2);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const std::uint16_t v = samples[static_cast<std::size_t>(r) * w + c];
      row[2 * c] = static_cast<unsigned char>(v >> 8);
      row[2 * c + 1] = static_cast<unsigned char>(v & 0xFF);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

}  // namespace

TEST_CASE("P2 PGM decodes to the literal sample list") {
  TempDir tmp("pgm_p2");
  const auto p = tmp.path() / "a.pgm";
  write_file(p, "P2\n# tiny fixture\n2 2\n255\n0 10 20 30\n");
  const RawImage img = neurometry::read_pgm(p);
  CHECK(img.width == 2);
  CHECK(img.height == 2);
  CHECK(img.bit_depth == 8);
  CHECK(img.samples == std::vector<std::uint16_t>{0, 10, 20, 30});
}

TEST_CASE("P5 PGM round-trips through the writer") {
  TempDir tmp("pgm_p5");
  SplitMix64 rng(5);
  const auto img = testsupport::random_image(rng, 13, 7);
  const auto p = tmp.path() / "b.pgm";
  neurometry::write_pgm(img, p);
  const RawImage back = neurometry::read_pgm(p);
  CHECK(back.width == img.width);
  CHECK(back.height == img.height);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    CHECK(back.samples[i] == img.pixels[i]);
  }
}

TEST_CASE("16-bit P5 PGM reads big-endian samples") {
  TempDir tmp("pgm_16");
  const auto p = tmp.path() / "c.pgm";
  std::string bytes = "P5\n2 1\n65535\n";
  bytes.push_back(static_cast<char>(0x01));  // 0x0102 = 258
  bytes.push_back(static_cast<char>(0x02));
  bytes.push_back(static_cast<char>(0xFF));  // 0xFFFF = 65535
  bytes.push_back(static_cast<char>(0xFF));
  write_file(p, bytes);
  const RawImage img = neurometry::read_pgm(p);
  CHECK(img.bit_depth == 16);
  CHECK(img.samples == std::vector<std::uint16_t>{258, 65535});
}

TEST_CASE("PGM errors carry the path and the reason") {
  TempDir tmp("pgm_err");
  const auto trunc = tmp.path() / "trunc.pgm";
  write_file(trunc, "P5\n4 4\n255\nab");
  CHECK_THROWS_WITH_AS(neurometry::read_pgm(trunc),
                       doctest::Contains("truncated"), neurometry::ParseError);

  const auto bad = tmp.path() / "bad.pgm";
  write_file(bad, "P7\n2 2\n255\n");
  CHECK_THROWS_AS(neurometry::read_pgm(bad), neurometry::ParseError);

  CHECK_THROWS_AS(neurometry::read_pgm(tmp.path() / "missing.pgm"),
                  neurometry::ParseError);
}

TEST_CASE("RGB PNG pixels reduce to luma") {
  TempDir tmp("png_rgb");
  RgbImage img;
  img.width = 2;
  img.height = 1;
  img.pixels = {255, 255, 255,  // white -> 255
                100, 50, 0};    // 29.9 + 29.35 + 0 = 59.25 -> 59
  const auto p = tmp.path() / "rgb.png";
  neurometry::write_png_rgb(img, p);
  const RawImage back = neurometry::load_grayscale(p);
  CHECK(back.bit_depth == 8);
  CHECK(back.samples == std::vector<std::uint16_t>{255, 59});
}

TEST_CASE("gray channel survives an RGB round-trip exactly") {
  TempDir tmp("png_gray_rt");
  SplitMix64 rng(6);
  RgbImage img;
  img.width = 9;
  img.height = 6;
  img.pixels.resize(9 * 6 * 3);
  std::vector<std::uint16_t> expect;
  for (int i = 0; i < 9 * 6; ++i) {
    const auto v = static_cast<std::uint8_t>(rng.next_int(0, 255));
    img.pixels[3 * i] = img.pixels[3 * i + 1] = img.pixels[3 * i + 2] = v;
    expect.push_back(v);
  }
  const auto p = tmp.path() / "gray.png";
  neurometry::write_png_rgb(img, p);
  CHECK(neurometry::load_grayscale(p).samples == expect);
}

TEST_CASE("16-bit grayscale PNG decodes exact samples") {
  TempDir tmp("png_16");
  const std::vector<std::uint16_t> samples = {0, 1, 255, 256, 40000, 65535};
  const auto p = tmp.path() / "g16.png";
  write_png_gray16(samples, 3, 2, p);
  const RawImage img = neurometry::load_grayscale(p);
  CHECK(img.bit_depth == 16);
  CHECK(img.width == 3);
  CHECK(img.height == 2);
  CHECK(img.samples == samples);
}

TEST_CASE("16-bit RGB PNG reduces to 16-bit luma") {
  TempDir tmp("png_rgb16");
  const auto p = tmp.path() / "rgb16.png";
  // One pixel, R=40000 G=20000 B=1000:
  // 0.299*40000 + 0.587*20000 + 0.114*1000 = 11960 + 11740 + 114 = 23814.
  std::FILE* fp = std::fopen(p.string().c_str(), "wb");
  REQUIRE(fp != nullptr);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  REQUIRE(setjmp(png_jmpbuf(png)) == 0);
  png_init_io(png, fp);
  png_set_IHDR(png, info, 1, 1, 16, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const std::uint16_t rgb[3] = {40000, 20000, 1000};
  unsigned char row[6];
  for (int i = 0; i < 3; ++i) {
    row[2 * i] = static_cast<unsigned char>(rgb[i] >> 8);
    row[2 * i + 1] = static_cast<unsigned char>(rgb[i] & 0xFF);
  }
  png_write_row(png, row);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);

  const RawImage img = neurometry::load_grayscale(p);
  CHECK(img.bit_depth == 16);
  CHECK(img.samples == std::vector<std::uint16_t>{23814});
}

TEST_CASE("load_grayscale dispatches on magic bytes, not extension") {
  TempDir tmp("dispatch");
  const auto p = tmp.path() / "actually_pgm.dat";
  write_file(p, "P2\n1 1\n255\n42\n");
  CHECK(neurometry::load_grayscale(p).samples ==
        std::vector<std::uint16_t>{42});

  const auto bad = tmp.path() / "noise.bin";
  write_file(bad, "zzzz");
  CHECK_THROWS_WITH_AS(neurometry::load_grayscale(bad),
                       doctest::Contains("unsupported format"),
                       neurometry::ParseError);
}

TEST_CASE("corrupt PNG raises a parse error naming the file") {
  TempDir tmp("png_bad");
  const auto p = tmp.path() / "bad.png";
  std::string bytes = "\x89PNG\r\n";
  bytes += "garbage";
  write_file(p, bytes);
  CHECK_THROWS_AS(neurometry::load_grayscale(p), neurometry::ParseError);
}
