// Copyright 2026 The viewsel Authors.
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

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "viewsel/geometry.hpp"

namespace viewsel {

/// Row-major RGB grid, components in [0, 1]. Channels are stored as Vec3
/// (x = r, y = g, z = b).
class ColorImage {
 public:
  ColorImage() = default;
  ColorImage(std::size_t width, std::size_t height, Vec3 fill = {})
      : width_(width), height_(height), pixels_(width * height, fill) {
    check_component(fill);
  }

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  const Vec3& at(std::size_t col, std::size_t row) const { return pixels_[row * width_ + col]; }
  const Vec3& operator[](std::size_t i) const { return pixels_[i]; }

  void set(std::size_t col, std::size_t row, Vec3 rgb) {
    check_component(rgb);
    pixels_[row * width_ + col] = rgb;
  }
  void set(std::size_t i, Vec3 rgb) {
    check_component(rgb);
    pixels_[i] = rgb;
  }

  bool same_shape(const ColorImage& o) const { return width_ == o.width_ && height_ == o.height_; }
  bool operator==(const ColorImage&) const = default;

 private:
  static void check_component(const Vec3& c) {
    for (int k = 0; k < 3; ++k)
      if (!std::isfinite(c[k]) || c[k] < 0.0 || c[k] > 1.0)
        throw std::invalid_argument("color component outside [0, 1]");
  }

  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<Vec3> pixels_;
};

}  // namespace viewsel
