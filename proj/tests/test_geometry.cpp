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

#include <numbers>

#include "viewsel/geometry.hpp"
#include "viewsel/rng.hpp"

namespace viewsel {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_vec_near(const Vec3& a, const Vec3& b, double tol) {
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
  EXPECT_NEAR(a.z, b.z, tol);
}

TEST(DirectionFromAngles, AxisAndPoleCases) {
  expect_vec_near(direction_from_angles({0.0, 0.0}), {1, 0, 0}, 1e-15);
  expect_vec_near(direction_from_angles({kPi / 2, 0.0}), {0, 0, 1}, 1e-15);
  expect_vec_near(direction_from_angles({0.0, kPi / 2}), {0, 1, 0}, 1e-15);
}

TEST(DirectionFromAngles, UnitLengthForRandomAngles) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const DirectionAngles a{rng.uniform(-kPi / 2, kPi / 2), rng.uniform(0.0, 2 * kPi)};
    EXPECT_NEAR(norm(direction_from_angles(a)), 1.0, 1e-9);
  }
}

TEST(RayPoint, Examples) {
  const Ray r({0, 0, 0}, {1, 0, 0});
  EXPECT_EQ(ray_point(r, 0.0), (Vec3{0, 0, 0}));
  EXPECT_EQ(ray_point(r, 2.0), (Vec3{2, 0, 0}));
  EXPECT_EQ(ray_point(Ray({1, 1, 1}, {0, 0, 1}), 0.5), (Vec3{1, 1, 1.5}));
}

TEST(RayPoint, RejectsNegativeParameter) {
  const Ray r({0, 0, 0}, {1, 0, 0});
  EXPECT_THROW(ray_point(r, -1e-12), std::invalid_argument);
}

TEST(RayPoint, AffineInParameter) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 o{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Vec3 d = direction_from_angles({rng.uniform(-1.5, 1.5), rng.uniform(0, 6.28)});
    const Ray r(o, d);
    const double s = rng.uniform(0, 10), t = rng.uniform(0, 10);
    const Vec3 diff = ray_point(r, s + t) - ray_point(r, s);
    const double scale = 1.0 + norm(o) + s + t;
    expect_vec_near(diff, d * t, 1e-12 * scale);
  }
}

TEST(Ray, RejectsNonUnitDirection) {
  EXPECT_THROW(Ray({0, 0, 0}, {2, 0, 0}), std::invalid_argument);
  EXPECT_THROW(Ray({0, 0, 0}, {0, 0, 0}), std::invalid_argument);
}

TEST(CameraPose, RejectsNonOrthonormalRotation) {
  Mat3 r;
  r(0, 0) = 2.0;
  EXPECT_THROW(CameraPose({0, 0, 0}, r), std::invalid_argument);
  Mat3 flip;
  flip(2, 2) = -1.0;  // orthonormal but det = −1
  EXPECT_THROW(CameraPose({0, 0, 0}, flip), std::invalid_argument);
  EXPECT_NO_THROW(CameraPose({0, 0, 0}, Mat3::identity()));
}

}  // namespace
}  // namespace viewsel
