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

#include <gtest/gtest.h>

#include <vector>

#include "viewsel/losses.hpp"
#include "viewsel/rng.hpp"

namespace viewsel {
namespace {

ColorImage random_image(Rng& rng, std::size_t w, std::size_t h) {
  ColorImage img(w, h);
  for (std::size_t i = 0; i < img.size(); ++i) img.set(i, {rng.uniform(), rng.uniform(), rng.uniform()});
  return img;
}

TEST(LMacro, MatchesCosineCases) {
  const FeatureVector v({0.3, -1.0, 2.0});
  EXPECT_EQ(l_macro(v, v), 0.0);
  EXPECT_DOUBLE_EQ(l_macro(FeatureVector({1.0, 0.0}), FeatureVector({0.0, 4.0})), 1.0);
  EXPECT_DOUBLE_EQ(l_macro(FeatureVector({1.0, 2.0}), FeatureVector({-2.0, -4.0})), 2.0);
}

TEST(LMicroPairwise, HandCases) {
  const ColorImage black(1, 1), red(1, 1, {1, 0, 0});
  EXPECT_EQ(l_micro_pairwise(black, red), 1.0);
  ColorImage a(2, 1), b(2, 1);
  b.set(0, 0, {0.3, 0, 0});
  b.set(1, 0, {0, 0.4, 0});
  EXPECT_DOUBLE_EQ(l_micro_pairwise(a, b), 0.7);
}

TEST(LMicroVariance, HandCases) {
  const ColorImage one(3, 2, {0.1, 0.5, 0.9});
  EXPECT_EQ(l_micro_variance(std::vector{one}), 0.0);
  EXPECT_EQ(l_micro_variance(std::vector{one, one, one}), 0.0);
  const ColorImage a(2, 2, {0.2, 0.2, 0.2}), b(2, 2, {0.4, 0.4, 0.4});
  EXPECT_NEAR(l_micro_variance(std::vector{a, b}), 0.01, 1e-15);
  const auto per = l_micro_variance_per_channel(std::vector{a, b});
  for (double v : per) EXPECT_NEAR(v, 0.01, 1e-15);
}

TEST(LMicroVariance, ScalarAveragesChannelsBeforeVariance) {
  const ColorImage a(1, 1, {1, 0, 0}), b(1, 1, {0, 1, 0});
  EXPECT_EQ(l_micro_variance(std::vector{a, b}), 0.0);
  const auto per = l_micro_variance_per_channel(std::vector{a, b});
  EXPECT_DOUBLE_EQ(per[0], 0.25);
  EXPECT_DOUBLE_EQ(per[1], 0.25);
  EXPECT_EQ(per[2], 0.0);
}

TEST(NerfPhotometricLoss, HandCases) {
  const ColorImage black(1, 1);
  EXPECT_EQ(nerf_photometric_loss(black, black), 0.0);
  EXPECT_EQ(nerf_photometric_loss(black, ColorImage(1, 1, {1, 0, 0})), 1.0);
  EXPECT_EQ(nerf_photometric_loss(black, ColorImage(1, 1, {1, 1, 0})), 2.0);
}

TEST(Losses, SymmetricNonnegativeZeroIffEqual) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_image(rng, 5, 4);
    auto b = random_image(rng, 5, 4);
    EXPECT_EQ(l_micro_pairwise(a, b), l_micro_pairwise(b, a));
    EXPECT_EQ(nerf_photometric_loss(a, b), nerf_photometric_loss(b, a));
    EXPECT_GT(l_micro_pairwise(a, b), 0.0);
    EXPECT_GT(nerf_photometric_loss(a, b), 0.0);
    EXPECT_EQ(l_micro_pairwise(a, a), 0.0);
    EXPECT_EQ(nerf_photometric_loss(a, a), 0.0);
    b = a;
    b.set(7, {0.5, 0.5, 0.5});
    if (!(a == b)) {
      EXPECT_GT(l_micro_pairwise(a, b), 0.0);
    }
    EXPECT_GE(l_micro_variance(std::vector{a, b}), 0.0);
  }
}

TEST(Losses, ShapeAndEmptyErrors) {
  const ColorImage a(2, 2), b(2, 3);
  EXPECT_THROW(l_micro_pairwise(a, b), std::invalid_argument);
  EXPECT_THROW(nerf_photometric_loss(a, b), std::invalid_argument);
  EXPECT_THROW(l_micro_variance(std::vector<ColorImage>{}), std::invalid_argument);
  EXPECT_THROW(l_micro_variance(std::vector{ColorImage{}}), std::invalid_argument);
  EXPECT_THROW(ColorImage(1, 1, {1.5, 0, 0}), std::invalid_argument);
}

}  // namespace
}  // namespace viewsel
