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

#include <cmath>
#include <numbers>
#include <vector>

#include "viewsel/renderer.hpp"
#include "viewsel/verify.hpp"

namespace viewsel {
namespace {

Mat3 look_at_origin(const Vec3& eye) {
  const Vec3 back = normalized(eye);
  const Vec3 right = normalized(Vec3{-back.y, back.x, 0.0});
  const Vec3 up{back.y * right.z - back.z * right.y, back.z * right.x - back.x * right.z,
                back.x * right.y - back.y * right.x};
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    r(i, 0) = right[i];
    r(i, 1) = up[i];
    r(i, 2) = back[i];
  }
  return r;
}

const Vec3 kDir = normalized(Vec3{1.0, 0.2, -0.1});

TEST(RenderRay, EmptySceneIsBlack) {
  RenderConfig cfg;
  const auto scene = scenes::empty();
  for (int i = 0; i < 10; ++i) EXPECT_EQ(render_ray(scene, Ray({0.1 * i, 0, 0}, kDir), cfg), Vec3{});
}

TEST(RenderRay, HomogeneousMediumConvergesToClosedForm) {
  RenderConfig cfg;
  cfg.n_samples = 256;
  for (double s : {0.5, 1.0, 2.0}) {
    const auto c = render_ray(scenes::homogeneous(s), Ray({0, 0, 0}, kDir), cfg);
    const double exact = 1.0 - std::exp(-s);  // ∫₀¹ s·e^{−st} dt
    for (int k = 0; k < 3; ++k) EXPECT_LE(std::abs(c[k] - exact), 1e-3);
  }
}

TEST(RenderRay, TwoNodeCaseIsHandEvaluable) {
  const auto scene = scenes::gradient(0.8);
  const Ray ray({0.1, -0.2, 0.3}, kDir);
  const std::vector<double> nodes{0.0, 1.0};
  const auto out = render_ray_nodes(scene, ray, nodes);
  const double sigma0 = scene.density(ray.origin());
  const Vec3 c0 = scene.color(ray.origin(), kDir);
  for (int k = 0; k < 3; ++k) EXPECT_DOUBLE_EQ(out.rgb[k], (1.0 - std::exp(-sigma0)) * c0[k]);
}

TEST(RenderRay, TransmittanceAndColorBounds) {
  Rng rng(12);
  const auto scene = scenes::gradient(3.0);
  RenderConfig cfg;
  cfg.n_samples = 48;
  cfg.stratified = true;
  for (int i = 0; i < 200; ++i) {
    const Vec3 o{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Vec3 d = direction_from_angles({rng.uniform(-1.5, 1.5), rng.uniform(0, 6.28)});
    const auto nodes = sample_nodes(cfg, static_cast<std::uint64_t>(i));
    const auto out = render_ray_nodes(scene, Ray(o, d), nodes);
    ASSERT_EQ(out.transmittance.size(), nodes.size() + 1);
    EXPECT_EQ(out.transmittance.front(), 1.0);
    for (std::size_t k = 1; k < out.transmittance.size(); ++k) {
      EXPECT_GT(out.transmittance[k], 0.0);
      EXPECT_LE(out.transmittance[k], out.transmittance[k - 1]);
    }
    for (int k = 0; k < 3; ++k) {
      EXPECT_GE(out.rgb[k], 0.0);
      EXPECT_LE(out.rgb[k], 1.0 - out.transmittance.back() + 1e-12);
    }
  }
}

TEST(RenderRay, NodesOutsideUnitIntervalRejected) {
  const std::vector<double> bad{0.0, 1.5};
  EXPECT_THROW(render_ray_nodes(scenes::ball(), Ray({0, 0, 0}, kDir), bad), std::invalid_argument);
  RenderConfig cfg;
  cfg.n_samples = 1;
  EXPECT_THROW(render_ray(scenes::ball(), Ray({0, 0, 0}, kDir), cfg), std::invalid_argument);
}

TEST(RenderImage, EmptySceneIsBlackAndSinglePixelIsOpticalAxis) {
  const Vec3 eye{1.2, 0.4, 0.6};
  const CameraPose pose(eye, look_at_origin(eye));
  RenderConfig cfg;
  const auto black = render_image(scenes::empty(), pose, 0.7, 8, 6, cfg);
  for (std::size_t i = 0; i < black.size(); ++i) EXPECT_EQ(black[i], Vec3{});

  const auto scene = scenes::gradient();
  const auto one = render_image(scene, pose, 0.7, 1, 1, cfg);
  const Vec3 axis = *pose.rotation * Vec3{0, 0, -1};
  const Vec3 expect = render_ray(scene, Ray(eye, normalized(axis)), cfg);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(one[0][k], expect[k], 1e-15);
  EXPECT_GT(one[0].x, 0.0);
}

TEST(RenderImage, MirroredSceneAndPoseMirrorTheImage) {
  const Mat3 m{{-1, 0, 0, 0, 1, 0, 0, 0, 1}};
  const auto base = scenes::gradient();
  SyntheticScene mirrored = base;
  mirrored.density = [&](const Vec3& x) { return base.density(m * x); };
  mirrored.color = [&](const Vec3& x, const Vec3& d) { return base.color(m * x, m * d); };

  const Vec3 eye{1.1, 0.7, 0.5};
  const CameraPose pose(eye, look_at_origin(eye));
  const CameraPose mpose(m * eye, m * *pose.rotation * m);
  RenderConfig cfg;
  cfg.n_samples = 32;
  const std::size_t w = 9, h = 7;
  const auto img = render_image(base, pose, 0.8, w, h, cfg);
  const auto mimg = render_image(mirrored, mpose, 0.8, w, h, cfg);
  for (std::size_t row = 0; row < h; ++row)
    for (std::size_t col = 0; col < w; ++col)
      for (int k = 0; k < 3; ++k) EXPECT_NEAR(mimg.at(col, row)[k], img.at(w - 1 - col, row)[k], 1e-6);
}

TEST(RenderImage, StratifiedIsDeterministicPerSeed) {
  const Vec3 eye{1.0, -0.9, 0.4};
  const CameraPose pose(eye, look_at_origin(eye));
  RenderConfig cfg;
  cfg.stratified = true;
  cfg.seed = 5;
  const auto a = render_image(scenes::gradient(), pose, 0.7, 32, 24, cfg);
  const auto b = render_image(scenes::gradient(), pose, 0.7, 32, 24, cfg);
  EXPECT_EQ(a, b);
  cfg.seed = 6;
  EXPECT_NE(a, render_image(scenes::gradient(), pose, 0.7, 32, 24, cfg));
}

TEST(RenderImage, Errors) {
  RenderConfig cfg;
  EXPECT_THROW(render_image(scenes::ball(), CameraPose({1, 0, 0}), 0.7, 4, 4, cfg), std::invalid_argument);
  const CameraPose pose({1, 0, 0}, Mat3::identity());
  EXPECT_THROW(render_image(scenes::ball(), pose, std::numbers::pi, 4, 4, cfg), std::invalid_argument);
}

TEST(SceneLipschitz, RandomProbingStaysWithinCertifiedConstant) {
  for (const auto& scene : {scenes::ball(1.0), scenes::ball(2.5), scenes::gradient(1.0), scenes::gradient(0.2)}) {
    const auto p = probe_lipschitz(scene, 10'000, 3);
    EXPECT_LE(p.max(), scene.lipschitz_const * (1.0 + 1e-9)) << scene.name;
    EXPECT_GT(p.max(), 0.0);
  }
}

TEST(LipschitzBoundCheck, TrivialScenesGiveZeroRatio) {
  RenderConfig cfg;
  std::vector<std::pair<CameraPose, CameraPose>> pairs{{CameraPose({0, 0, 0}), CameraPose({0.1, 0, 0})}};
  EXPECT_EQ(lipschitz_bound_check(scenes::empty(), pairs, kDir, cfg).max_ratio, 0.0);
  const auto pairs2 = verify::same_direction_pairs(kDir, 50, 1e-3, 0.3, 1);
  const auto rep = lipschitz_bound_check(scenes::homogeneous(1.5, {0.3, 0.6, 0.9}), pairs2, kDir, cfg);
  EXPECT_EQ(rep.max_ratio, 0.0);
}

TEST(LipschitzBoundCheck, CertifiedScenesPass) {
  RenderConfig cfg;
  for (const auto& scene : {scenes::ball(1.0), scenes::gradient(1.0), scenes::gradient(3.0)}) {
    const auto pairs = verify::same_direction_pairs(kDir, 100, 1e-3, 0.3, 2);
    const auto rep = lipschitz_bound_check(scene, pairs, kDir, cfg);
    EXPECT_TRUE(rep.pass) << scene.name << " " << rep.max_ratio << " vs " << rep.bound;
    EXPECT_GT(rep.max_ratio, 0.0);
  }
}

TEST(LipschitzBoundCheck, ZeroSeparationRejected) {
  RenderConfig cfg;
  std::vector<std::pair<CameraPose, CameraPose>> pairs{{CameraPose({0, 0, 0}), CameraPose({0, 0, 0})}};
  EXPECT_THROW(lipschitz_bound_check(scenes::ball(), pairs, kDir, cfg), std::invalid_argument);
}

}  // namespace
}  // namespace viewsel
