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

#ifndef QUATCOMP_PNG_IO_HPP_
#define QUATCOMP_PNG_IO_HPP_

#include <filesystem>

#include "quatcomp/imaging.hpp"
#include "quatcomp/quaternion_matrix.hpp"

namespace quatcomp {

// All functions throw IoError on failure.

/// Any 8/16-bit PNG (gray, palette, alpha) is converted to 8-bit RGB.
RgbImage read_png_rgb(const std::filesystem::path& path);
void write_png_rgb(const std::filesystem::path& path, const RgbImage& img);

/// Single-channel mask: 0 = missing, 255 = observed. On read, gray >= 128
/// counts as observed; color inputs are converted to gray first.
MaskMatrix read_mask_png(const std::filesystem::path& path);
void write_mask_png(const std::filesystem::path& path, const MaskMatrix& mask);

}  // namespace quatcomp

#endif  // QUATCOMP_PNG_IO_HPP_
