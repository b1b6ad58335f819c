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

// Netpbm color images: P6 (binary) and P3 (text), maxval 255.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>

#include "viewsel/image.hpp"
#include "viewsel/io/file.hpp"

namespace viewsel::io {

namespace detail {

class PpmCursor {
 public:
  PpmCursor(const std::string& data, const std::string& origin) : data_(data), origin_(origin) {}

  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      if (std::isspace(static_cast<unsigned char>(data_[pos_]))) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  unsigned long number() {
    skip_space_and_comments();
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(data_[pos_] - '0');
      if (v > 1'000'000'000UL) throw InputError(origin_ + ": PPM value too large");
      ++pos_;
    }
    if (pos_ == start) throw InputError(origin_ + ": truncated or malformed PPM");
    return v;
  }

  std::size_t& pos() { return pos_; }
  const std::string& data() const { return data_; }

 private:
  const std::string& data_;
  const std::string& origin_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ColorImage decode_ppm(const std::string& data, const std::string& origin = "<memory>") {
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '3' && data[1] != '6'))
    throw InputError(origin + ": unsupported image format (expected P3 or P6)");
  const bool binary = data[1] == '6';
  detail::PpmCursor cur(data, origin);
  cur.pos() = 2;
  const auto width = cur.number();
  const auto height = cur.number();
  const auto maxval = cur.number();
  if (width == 0 || height == 0) throw InputError(origin + ": PPM has zero size");
  if (maxval != 255) throw InputError(origin + ": only maxval 255 is supported");

  ColorImage img(width, height);
  const std::size_t n = width * height;
  if (binary) {
    // exactly one whitespace byte separates the header from the raster
    if (cur.pos() >= data.size() || !std::isspace(static_cast<unsigned char>(data[cur.pos()])))
      throw InputError(origin + ": truncated PPM header");
    const std::size_t start = cur.pos() + 1;
    if (data.size() - start < 3 * n) throw InputError(origin + ": truncated PPM payload");
    for (std::size_t i = 0; i < n; ++i) {
      auto c = [&](std::size_t k) { return static_cast<unsigned char>(data[start + 3 * i + k]) / 255.0; };
      img.set(i, {c(0), c(1), c(2)});
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      double c[3];
      for (double& v : c) {
        const auto raw = cur.number();
        if (raw > 255) throw InputError(origin + ": PPM sample exceeds maxval");
        v = static_cast<double>(raw) / 255.0;
      }
      img.set(i, {c[0], c[1], c[2]});
    }
  }
  return img;
}

inline ColorImage read_ppm(const std::string& path) { return decode_ppm(read_file(path), path); }

/// P6 encoding, each component rounded to the nearest of 256 levels.
inline std::string encode_ppm(const ColorImage& img) {
  std::string out = "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  out.reserve(out.size() + 3 * img.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    for (int k = 0; k < 3; ++k) out.push_back(static_cast<char>(static_cast<std::uint8_t>(std::lround(img[i][k] * 255.0))));
  return out;
}

inline void write_ppm(const ColorImage& img, const std::string& path) { write_file(path, encode_ppm(img)); }

}  // namespace viewsel::io
