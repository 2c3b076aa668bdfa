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

#ifndef QUATCOMP_IMAGING_HPP_
#define QUATCOMP_IMAGING_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "quatcomp/quaternion_matrix.hpp"

namespace quatcomp {

/// 8-bit RGB image, pixels interleaved R, G, B in row-major order.
struct RgbImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;

  RgbImage() = default;
  RgbImage(std::size_t w, std::size_t h)
      : width(w), height(h), pixels(w * h * 3, 0) {}

  std::uint8_t& at(std::size_t row, std::size_t col, std::size_t channel) {
    return pixels[(row * width + col) * 3 + channel];
  }
  std::uint8_t at(std::size_t row, std::size_t col, std::size_t channel) const {
    return pixels[(row * width + col) * 3 + channel];
  }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

/// Pixel (R, G, B) at (row, col) becomes R i + G j + B k.
QuaternionMatrix image_to_quaternion(const RgbImage& img);

/// Drops the real part, clamps i, j, k components to [0, 255] and rounds
/// half to even.
RgbImage quaternion_to_image(const QuaternionMatrix& a);

/// Exactly floor(sr * rows * cols) observed entries at positions drawn by a
/// seeded Fisher-Yates shuffle (mt19937_64). Throws DomainError unless
/// 0 <= sr <= 1.
MaskMatrix gen_mask(std::size_t rows, std::size_t cols, double sr,
                    std::uint64_t seed);

/// Zeroes all three channels of unobserved pixels.
RgbImage apply_mask(const RgbImage& img, const MaskMatrix& mask);

/// 10 log10(255^2 / MSE) over all pixels and channels; +infinity for
/// identical images. Throws DimensionError on size mismatch.
double psnr(const RgbImage& ref, const RgbImage& test);

/// Mean SSIM (11x11 Gaussian window, sigma 1.5, K1 = 0.01, K2 = 0.03,
/// L = 255) per channel over fully contained windows, averaged over the
/// three channels. Images smaller than the window use the largest odd
/// window that fits. Throws DimensionError on size mismatch.
double ssim(const RgbImage& ref, const RgbImage& test);

struct MetricReport {
  double psnr_db = 0.0;
  double ssim = 0.0;
};

MetricReport evaluate(const RgbImage& ref, const RgbImage& test);

}  // namespace quatcomp

#endif  // QUATCOMP_IMAGING_HPP_
