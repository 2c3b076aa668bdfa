// Copyright 2026 The Quatcomp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <limits>

#include "quatcomp/error.hpp"
#include "quatcomp/imaging.hpp"
#include "quatcomp/png_io.hpp"
#include "test_support.hpp"

namespace quatcomp {
namespace {

using testing::Rng;

RgbImage random_image(std::size_t w, std::size_t h, Rng& rng) {
  RgbImage img(w, h);
  std::uniform_int_distribution<int> d(0, 255);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(d(rng));
  return img;
}

RgbImage constant_image(std::size_t w, std::size_t h, std::uint8_t v) {
  RgbImage img(w, h);
  std::fill(img.pixels.begin(), img.pixels.end(), v);
  return img;
}

TEST(ImageEncoding, PurePixelMapping) {
  RgbImage img(2, 1);
  img.at(0, 0, 0) = 255;
  img.at(0, 1, 1) = 7;
  img.at(0, 1, 2) = 9;
  const auto q = image_to_quaternion(img);
  ASSERT_EQ(q.rows(), 1u);
  ASSERT_EQ(q.cols(), 2u);
  EXPECT_EQ(q(0, 0), Quaternion(0, 255, 0, 0));
  EXPECT_EQ(q(0, 1), Quaternion(0, 0, 7, 9));
  EXPECT_EQ(frobenius_norm(image_to_quaternion(RgbImage(5, 4))), 0.0);
}

TEST(ImageEncoding, RoundTrip) {
  Rng rng(71);
  const auto img = random_image(13, 7, rng);
  EXPECT_EQ(quaternion_to_image(image_to_quaternion(img)), img);
}

TEST(ImageEncoding, DecodeRoundsClampsAndDropsRealPart) {
  QuaternionMatrix q(1, 4);
  q(0, 0) = {0, 255, 0, 0};
  q(0, 1) = {0, 300, -20, 12.6};
  q(0, 2) = {5, 10, 0, 0};
  q(0, 3) = {0, 0.5, 1.5, 2.4999};
  const auto img = quaternion_to_image(q);
  EXPECT_EQ(img.width, 4u);
  EXPECT_EQ(img.height, 1u);
  EXPECT_EQ(img.at(0, 0, 0), 255);
  EXPECT_EQ(img.at(0, 1, 0), 255);
  EXPECT_EQ(img.at(0, 1, 1), 0);
  EXPECT_EQ(img.at(0, 1, 2), 13);
  EXPECT_EQ(img.at(0, 2, 0), 10);
  EXPECT_EQ(img.at(0, 2, 1), 0);
  EXPECT_EQ(img.at(0, 3, 2), 2);
}

TEST(GenMask, ExactCounts) {
  EXPECT_EQ(gen_mask(300, 300, 0.2, 1).observed_count(), 18000u);
  EXPECT_EQ(gen_mask(300, 300, 0.15, 42).observed_count(), 13500u);
  EXPECT_EQ(gen_mask(7, 9, 1.0, 3), MaskMatrix::ones(7, 9));
  EXPECT_EQ(gen_mask(7, 9, 0.0, 3).observed_count(), 0u);
  for (double sr : {0.1, 0.25, 0.35, 0.45, 0.5})
    EXPECT_EQ(gen_mask(100, 100, sr, 9).observed_count(),
              static_cast<std::size_t>(std::floor(sr * 10000 + 1e-7)));
}

TEST(GenMask, SeedDeterminism) {
  EXPECT_EQ(gen_mask(40, 30, 0.3, 5), gen_mask(40, 30, 0.3, 5));
  EXPECT_NE(gen_mask(40, 30, 0.3, 5), gen_mask(40, 30, 0.3, 6));
  EXPECT_THROW(gen_mask(4, 4, 1.5, 0), DomainError);
  EXPECT_THROW(gen_mask(4, 4, -0.1, 0), DomainError);
}

TEST(ApplyMask, ZerosUnobservedPixels) {
  Rng rng(72);
  const auto img = random_image(6, 5, rng);
  const auto mask = gen_mask(5, 6, 0.5, 1);
  const auto out = apply_mask(img, mask);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 6; ++c)
      for (std::size_t ch = 0; ch < 3; ++ch)
        EXPECT_EQ(out.at(r, c, ch), mask.observed(r, c) ? img.at(r, c, ch) : 0);
  EXPECT_THROW(apply_mask(img, gen_mask(6, 5, 0.5, 1)), DimensionError);
}

TEST(Metrics, Psnr) {
  Rng rng(73);
  const auto a = random_image(16, 16, rng);
  EXPECT_EQ(psnr(a, a), std::numeric_limits<double>::infinity());
  EXPECT_NEAR(psnr(constant_image(8, 8, 0), constant_image(8, 8, 255)), 0.0, 1e-12);
  EXPECT_NEAR(psnr(constant_image(8, 8, 100), constant_image(8, 8, 110)),
              10.0 * std::log10(255.0 * 255.0 / 100.0), 1e-12);
  EXPECT_THROW(psnr(a, constant_image(8, 16, 0)), DimensionError);
}

TEST(Metrics, Ssim) {
  Rng rng(74);
  for (int t = 0; t < 5; ++t) {
    const auto a = random_image(32, 24, rng);
    const auto b = random_image(32, 24, rng);
    EXPECT_DOUBLE_EQ(ssim(a, a), 1.0);
    EXPECT_NEAR(ssim(a, b), ssim(b, a), 1e-12);
    EXPECT_LT(ssim(a, b), 0.2);
  }
  const auto small = random_image(5, 4, rng);
  EXPECT_DOUBLE_EQ(ssim(small, small), 1.0);
  const auto report = evaluate(small, small);
  EXPECT_EQ(report.psnr_db, std::numeric_limits<double>::infinity());
  EXPECT_DOUBLE_EQ(report.ssim, 1.0);
}

TEST(PngIo, RoundTrip) {
  Rng rng(75);
  const auto dir = testing::scratch_dir("png_io");
  const auto img = random_image(17, 11, rng);
  write_png_rgb(dir / "a.png", img);
  EXPECT_EQ(read_png_rgb(dir / "a.png"), img);

  const auto mask = gen_mask(11, 17, 0.4, 2);
  write_mask_png(dir / "m.png", mask);
  EXPECT_EQ(read_mask_png(dir / "m.png"), mask);
}

TEST(PngIo, Errors) {
  const auto dir = testing::scratch_dir("png_err");
  EXPECT_THROW(read_png_rgb(dir / "missing.png"), IoError);
  std::ofstream(dir / "bad.png") << "not a png";
  EXPECT_THROW(read_png_rgb(dir / "bad.png"), IoError);
  EXPECT_THROW(read_mask_png(dir / "bad.png"), IoError);
}

TEST(PngIo, BundledImages) {
  for (const char* name : {"astronaut300.png", "chelsea300.png"}) {
    const auto img = read_png_rgb(testing::data_dir() / name);
    EXPECT_EQ(img.width, 300u);
    EXPECT_EQ(img.height, 300u);
  }
}

}  // namespace
}  // namespace quatcomp
