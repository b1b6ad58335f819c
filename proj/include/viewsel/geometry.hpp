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

// Geometric value types shared by every module. World frame is
// right-handed and z-up; directions are parameterized by an elevation
// angle theta above the xy-plane and an azimuth phi.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace viewsel {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr bool operator==(const Vec3&) const = default;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline double squared_norm(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(squared_norm(v)); }

inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero vector");
  return v * (1.0 / n);
}

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static constexpr Mat3 identity() { return {}; }

  constexpr double operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
  constexpr double& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }

  constexpr Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  constexpr Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }

  constexpr Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  constexpr double determinant() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }

  constexpr bool operator==(const Mat3&) const = default;
};

/// True when RᵀR = I entrywise and det R = 1, both within `tol`.
inline bool is_rotation(const Mat3& r, double tol = 1e-6) {
  const Mat3 rtr = r.transposed() * r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(rtr(i, j) - (i == j ? 1.0 : 0.0)) > tol) return false;
  return std::abs(r.determinant() - 1.0) <= tol;
}

struct DirectionAngles {
  double theta = 0.0;  // elevation, radians
  double phi = 0.0;    // azimuth in [0, 2pi)
};

/// Unit vector (cos θ cos φ, cos θ sin φ, sin θ).
inline Vec3 direction_from_angles(const DirectionAngles& a) {
  const double ct = std::cos(a.theta);
  return {ct * std::cos(a.phi), ct * std::sin(a.phi), std::sin(a.theta)};
}

struct CameraPose {
  Vec3 position;
  std::optional<Mat3> rotation;  // world-from-camera

  CameraPose() = default;
  explicit CameraPose(Vec3 p) : position(p) {}
  CameraPose(Vec3 p, Mat3 r) : position(p), rotation(r) {
    if (!is_rotation(r)) throw std::invalid_argument("camera rotation is not orthonormal with det 1");
  }
};

class Ray {
 public:
  Ray(Vec3 origin, Vec3 direction) : origin_(origin), direction_(direction) {
    if (!is_finite(origin) || !is_finite(direction))
      throw std::invalid_argument("ray origin and direction must be finite");
    if (std::abs(norm(direction) - 1.0) > 1e-9) throw std::invalid_argument("ray direction must be unit length");
  }

  const Vec3& origin() const { return origin_; }
  const Vec3& direction() const { return direction_; }

 private:
  Vec3 origin_;
  Vec3 direction_;
};

/// origin + t·direction for t ≥ 0.
inline Vec3 ray_point(const Ray& ray, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("ray parameter must be nonnegative");
  return ray.origin() + ray.direction() * t;
}

}  // namespace viewsel
