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

// Consistency losses between views: semantic (macro), color (micro) in a
// pairwise and a variance form, and the photometric reconstruction loss.

#include <array>
#include <span>
#include <stdexcept>

#include "viewsel/distances.hpp"
#include "viewsel/image.hpp"

namespace viewsel {

/// Semantic consistency loss; same value as semantic_distance.
inline double l_macro(const FeatureVector& a, const FeatureVector& b) { return semantic_distance(a, b); }

inline void require_same_shape(const ColorImage& a, const ColorImage& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("image dimensions differ");
}

/// Σ over pixels of ‖a(p) − b(p)‖.
inline double l_micro_pairwise(const ColorImage& a, const ColorImage& b) {
  require_same_shape(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += norm(a[i] - b[i]);
  return s;
}

/// Mean color of each channel over all pixels.
inline Vec3 mean_color(const ColorImage& img) {
  if (img.size() == 0) throw std::invalid_argument("empty image");
  Vec3 s;
  for (std::size_t i = 0; i < img.size(); ++i) s += img[i];
  return s * (1.0 / static_cast<double>(img.size()));
}

/// Population variance, across images, of each image's scalar mean color
/// (pixel mean, then channel mean).
inline double l_micro_variance(std::span<const ColorImage> images) {
  if (images.empty()) throw std::invalid_argument("l_micro_variance needs at least one image");
  std::vector<double> means;
  for (const auto& img : images) {
    const Vec3 m = mean_color(img);
    means.push_back((m.x + m.y + m.z) / 3.0);
  }
  double mu = 0.0;
  for (double m : means) mu += m;
  mu /= static_cast<double>(means.size());
  double var = 0.0;
  for (double m : means) var += (m - mu) * (m - mu);
  return var / static_cast<double>(means.size());
}

/// Per-channel variant: population variance of each channel's mean color.
inline std::array<double, 3> l_micro_variance_per_channel(std::span<const ColorImage> images) {
  if (images.empty()) throw std::invalid_argument("l_micro_variance needs at least one image");
  std::vector<Vec3> means;
  Vec3 mu;
  for (const auto& img : images) {
    means.push_back(mean_color(img));
    mu += means.back();
  }
  mu = mu * (1.0 / static_cast<double>(means.size()));
  std::array<double, 3> var{};
  for (const auto& m : means)
    for (int k = 0; k < 3; ++k) var[static_cast<std::size_t>(k)] += (m[k] - mu[k]) * (m[k] - mu[k]);
  for (auto& v : var) v /= static_cast<double>(means.size());
  return var;
}

/// Σ over pixels of ‖rendered(p) − truth(p)‖².
inline double nerf_photometric_loss(const ColorImage& rendered, const ColorImage& truth) {
  require_same_shape(rendered, truth);
  double s = 0.0;
  for (std::size_t i = 0; i < rendered.size(); ++i) s += squared_norm(rendered[i] - truth[i]);
  return s;
}

}  // namespace viewsel
