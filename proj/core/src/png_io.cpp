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

#include "quatcomp/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "quatcomp/error.hpp"

namespace quatcomp {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) {
    throw IoError("cannot open '" + path.string() + "': " + std::strerror(errno));
  }
  return f;
}

[[noreturn]] void png_error_fn(png_structp png, png_const_charp msg) {
  auto* slot = static_cast<std::string*>(png_get_error_ptr(png));
  if (slot) *slot = msg;
  png_longjmp(png, 1);
}

void png_warning_fn(png_structp, png_const_charp) {}

// Decodes to 8-bit rows with `channels` = 1 (gray) or 3 (RGB).
std::vector<std::uint8_t> decode(const std::filesystem::path& path,
                                 int channels, std::size_t& width,
                                 std::size_t& height) {
  FilePtr file = open_file(path, "rb");
  png_byte sig[8];
  if (std::fread(sig, 1, 8, file.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
    throw IoError("'" + path.string() + "' is not a PNG file");
  }
  std::string err;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &err,
                                           png_error_fn, png_warning_fn);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("libpng: out of memory");
  }
  std::vector<std::uint8_t> data;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("decoding '" + path.string() + "': " + err);
  }
  png_init_io(png, file.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  const png_byte color = png_get_color_type(png, info);
  if (png_get_bit_depth(png, info) == 16) png_set_strip_16(png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(png, info) < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  png_set_strip_alpha(png);
  const bool is_gray = (color & PNG_COLOR_MASK_COLOR) == 0;
  if (channels == 3 && is_gray) png_set_gray_to_rgb(png);
  if (channels == 1 && !is_gray) png_set_rgb_to_gray_fixed(png, 1, -1, -1);
  png_read_update_info(png, info);

  width = png_get_image_width(png, info);
  height = png_get_image_height(png, info);
  const std::size_t stride = png_get_rowbytes(png, info);
  if (stride != width * static_cast<std::size_t>(channels)) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("'" + path.string() + "': unsupported PNG layout");
  }
  data.resize(stride * height);
  rows.resize(height);
  for (std::size_t r = 0; r < height; ++r) rows[r] = data.data() + r * stride;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return data;
}

void encode(const std::filesystem::path& path, const std::uint8_t* data,
            std::size_t width, std::size_t height, int color_type,
            int channels) {
  FilePtr file = open_file(path, "wb");
  std::string err;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &err,
                                            png_error_fn, png_warning_fn);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw IoError("libpng: out of memory");
  }
  std::vector<png_bytep> rows(height);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("encoding '" + path.string() + "': " + err);
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(width),
               static_cast<png_uint_32>(height), 8, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const std::size_t stride = width * static_cast<std::size_t>(channels);
  for (std::size_t r = 0; r < height; ++r) {
    rows[r] = const_cast<png_bytep>(data + r * stride);
  }
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  if (std::fflush(file.get()) != 0) {
    throw IoError("writing '" + path.string() + "': " + std::strerror(errno));
  }
}

}  // namespace

RgbImage read_png_rgb(const std::filesystem::path& path) {
  RgbImage img;
  img.pixels = decode(path, 3, img.width, img.height);
  return img;
}

void write_png_rgb(const std::filesystem::path& path, const RgbImage& img) {
  if (img.pixels.size() != img.width * img.height * 3 || img.pixels.empty()) {
    throw IoError("write_png_rgb: image buffer does not match its size");
  }
  encode(path, img.pixels.data(), img.width, img.height, PNG_COLOR_TYPE_RGB, 3);
}

MaskMatrix read_mask_png(const std::filesystem::path& path) {
  std::size_t width = 0;
  std::size_t height = 0;
  const auto gray = decode(path, 1, width, height);
  std::vector<std::uint8_t> entries(gray.size());
  for (std::size_t n = 0; n < gray.size(); ++n) entries[n] = gray[n] >= 128 ? 1 : 0;
  return MaskMatrix(height, width, std::move(entries));
}

void write_mask_png(const std::filesystem::path& path, const MaskMatrix& mask) {
  if (mask.rows() == 0 || mask.cols() == 0) {
    throw IoError("write_mask_png: empty mask");
  }
  std::vector<std::uint8_t> gray(mask.entries().size());
  for (std::size_t n = 0; n < gray.size(); ++n) gray[n] = mask.entries()[n] ? 255 : 0;
  encode(path, gray.data(), mask.cols(), mask.rows(), PNG_COLOR_TYPE_GRAY, 1);
}

}  // namespace quatcomp
