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

#include "quatcomp/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "quatcomp/error.hpp"

namespace quatcomp {

namespace {

void require_same_size(const char* op, const RgbImage& a, const RgbImage& b) {
  if (a.width != b.width || a.height != b.height) {
    throw DimensionError(std::string(op) + ": image sizes differ (" +
                         std::to_string(a.width) + "x" +
                         std::to_string(a.height) + " vs " +
                         std::to_string(b.width) + "x" +
                         std::to_string(b.height) + ")");
  }
}

std::uint8_t to_byte(double v) {
  const double clamped = std::clamp(v, 0.0, 255.0);
  return static_cast<std::uint8_t>(std::nearbyint(clamped));
}

std::vector<double> gaussian_kernel(std::size_t size, double sigma) {
  std::vector<double> k(size);
  const double center = static_cast<double>(size - 1) / 2.0;
  for (std::size_t i = 0; i < size; ++i) {
    const double d = static_cast<double>(i) - center;
    k[i] = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  const double total = std::accumulate(k.begin(), k.end(), 0.0);
  for (double& v : k) v /= total;
  return k;
}

// Separable "valid" filtering of a height x width plane.
std::vector<double> filter_valid(const std::vector<double>& plane,
                                 std::size_t height, std::size_t width,
                                 const std::vector<double>& kernel) {
  const std::size_t w = kernel.size();
  const std::size_t out_h = height - w + 1;
  const std::size_t out_w = width - w + 1;
  std::vector<double> rows(height * out_w);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < out_w; ++c) {
      double acc = 0.0;
      for (std::size_t t = 0; t < w; ++t) acc += kernel[t] * plane[r * width + c + t];
      rows[r * out_w + c] = acc;
    }
  }
  std::vector<double> out(out_h * out_w);
  for (std::size_t r = 0; r < out_h; ++r) {
    for (std::size_t c = 0; c < out_w; ++c) {
      double acc = 0.0;
      for (std::size_t t = 0; t < w; ++t) acc += kernel[t] * rows[(r + t) * out_w + c];
      out[r * out_w + c] = acc;
    }
  }
  return out;
}

double ssim_channel(const RgbImage& a, const RgbImage& b, std::size_t channel,
                    const std::vector<double>& kernel) {
  const std::size_t h = a.height;
  const std::size_t w = a.width;
  std::vector<double> x(h * w), y(h * w), xx(h * w), yy(h * w), xy(h * w);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const std::size_t n = r * w + c;
      x[n] = a.at(r, c, channel);
      y[n] = b.at(r, c, channel);
      xx[n] = x[n] * x[n];
      yy[n] = y[n] * y[n];
      xy[n] = x[n] * y[n];
    }
  }
  const auto mx = filter_valid(x, h, w, kernel);
  const auto my = filter_valid(y, h, w, kernel);
  const auto mxx = filter_valid(xx, h, w, kernel);
  const auto myy = filter_valid(yy, h, w, kernel);
  const auto mxy = filter_valid(xy, h, w, kernel);

  constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
  constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);
  double total = 0.0;
  for (std::size_t n = 0; n < mx.size(); ++n) {
    const double var_x = mxx[n] - mx[n] * mx[n];
    const double var_y = myy[n] - my[n] * my[n];
    const double cov = mxy[n] - mx[n] * my[n];
    total += ((2.0 * mx[n] * my[n] + kC1) * (2.0 * cov + kC2)) /
             ((mx[n] * mx[n] + my[n] * my[n] + kC1) * (var_x + var_y + kC2));
  }
  return total / static_cast<double>(mx.size());
}

}  // namespace

QuaternionMatrix image_to_quaternion(const RgbImage& img) {
  QuaternionMatrix out(img.height, img.width);
  for (std::size_t r = 0; r < img.height; ++r) {
    for (std::size_t c = 0; c < img.width; ++c) {
      out(r, c) = {0.0, static_cast<double>(img.at(r, c, 0)),
                   static_cast<double>(img.at(r, c, 1)),
                   static_cast<double>(img.at(r, c, 2))};
    }
  }
  return out;
}

RgbImage quaternion_to_image(const QuaternionMatrix& a) {
  RgbImage img(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Quaternion& q = a(r, c);
      img.at(r, c, 0) = to_byte(q.a1);
      img.at(r, c, 1) = to_byte(q.a2);
      img.at(r, c, 2) = to_byte(q.a3);
    }
  }
  return img;
}

MaskMatrix gen_mask(std::size_t rows, std::size_t cols, double sr,
                    std::uint64_t seed) {
  if (!(sr >= 0.0 && sr <= 1.0)) {
    throw DomainError("gen_mask: sampling rate must lie in [0, 1]");
  }
  const std::size_t total = rows * cols;
  // The small bias keeps decimal rates such as 0.15 * 90000 from rounding
  // down one entry.
  const auto count = std::min(
      total, static_cast<std::size_t>(
                 std::floor(sr * static_cast<double>(total) + 1e-7)));
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
    std::swap(order[i], order[j]);
  }
  std::vector<std::uint8_t> entries(total, 0);
  for (std::size_t i = 0; i < count; ++i) entries[order[i]] = 1;
  return MaskMatrix(rows, cols, std::move(entries));
}

RgbImage apply_mask(const RgbImage& img, const MaskMatrix& mask) {
  if (mask.rows() != img.height || mask.cols() != img.width) {
    throw DimensionError("apply_mask: mask and image sizes differ");
  }
  RgbImage out = img;
  for (std::size_t r = 0; r < img.height; ++r) {
    for (std::size_t c = 0; c < img.width; ++c) {
      if (!mask.observed(r, c)) {
        for (std::size_t ch = 0; ch < 3; ++ch) out.at(r, c, ch) = 0;
      }
    }
  }
  return out;
}

double psnr(const RgbImage& ref, const RgbImage& test) {
  require_same_size("psnr", ref, test);
  if (ref.pixels.empty()) throw DimensionError("psnr: empty images");
  double sse = 0.0;
  for (std::size_t n = 0; n < ref.pixels.size(); ++n) {
    const double d = static_cast<double>(ref.pixels[n]) - test.pixels[n];
    sse += d * d;
  }
  if (sse == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sse / static_cast<double>(ref.pixels.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const RgbImage& ref, const RgbImage& test) {
  require_same_size("ssim", ref, test);
  if (ref.pixels.empty()) throw DimensionError("ssim: empty images");
  std::size_t window = 11;
  const std::size_t fit = std::min(ref.width, ref.height);
  if (fit < window) window = fit % 2 == 1 ? fit : fit - 1;
  const auto kernel = gaussian_kernel(window, 1.5);
  double total = 0.0;
  for (std::size_t ch = 0; ch < 3; ++ch) total += ssim_channel(ref, test, ch, kernel);
  return total / 3.0;
}

MetricReport evaluate(const RgbImage& ref, const RgbImage& test) {
  return {psnr(ref, test), ssim(ref, test)};
}

}  // namespace quatcomp
