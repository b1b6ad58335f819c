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

// Discrete volume rendering over analytic scenes. A ray is sampled at
// nodes t_1 < … < t_N in [0, 1] with t_{N+1} = 1; interval δ_i =
// t_{i+1} − t_i, opacity α_i = 1 − exp(−σ_i δ_i), transmittance
// T_i = exp(−Σ_{j<i} σ_j δ_j), and Ĉ = Σ T_i α_i c_i.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "viewsel/geometry.hpp"
#include "viewsel/image.hpp"
#include "viewsel/rng.hpp"

namespace viewsel {

/// Analytic density σ(x) ≥ 0 and color c(x, d) ∈ [0,1]³ with a joint
/// Lipschitz constant over positions and directions.
struct SyntheticScene {
  std::string name;
  std::function<double(const Vec3&)> density;
  std::function<Vec3(const Vec3&, const Vec3&)> color;
  double lipschitz_const = 0.0;
};

namespace scenes {

inline SyntheticScene empty() {
  return {"empty", [](const Vec3&) { return 0.0; }, [](const Vec3&, const Vec3&) { return Vec3{}; }, 0.0};
}

/// σ ≡ s everywhere, constant color.
inline SyntheticScene homogeneous(double s, Vec3 rgb = {1.0, 1.0, 1.0}) {
  if (!(s >= 0.0)) throw std::invalid_argument("density must be nonnegative");
  return {"homogeneous", [s](const Vec3&) { return s; }, [rgb](const Vec3&, const Vec3&) { return rgb; }, 0.0};
}

/// σ(x) = s₀·max(0, 1 − ‖x‖) with constant color; L = s₀.
inline SyntheticScene ball(double s0 = 1.0, Vec3 rgb = {0.9, 0.6, 0.3}) {
  if (!(s0 >= 0.0)) throw std::invalid_argument("density must be nonnegative");
  return {"ball", [s0](const Vec3& x) { return s0 * std::max(0.0, 1.0 - norm(x)); },
          [rgb](const Vec3&, const Vec3&) { return rgb; }, s0};
}

/// Ball density with c_k(x, d) = ½ + ¼·tanh(x_k) + ¼·tanh(d_k); L = max(s₀, ½).
inline SyntheticScene gradient(double s0 = 1.0) {
  if (!(s0 >= 0.0)) throw std::invalid_argument("density must be nonnegative");
  return {"gradient", [s0](const Vec3& x) { return s0 * std::max(0.0, 1.0 - norm(x)); },
          [](const Vec3& x, const Vec3& d) {
            return Vec3{0.5 + 0.25 * std::tanh(x.x) + 0.25 * std::tanh(d.x),
                        0.5 + 0.25 * std::tanh(x.y) + 0.25 * std::tanh(d.y),
                        0.5 + 0.25 * std::tanh(x.z) + 0.25 * std::tanh(d.z)};
          },
          std::max(s0, 0.5)};
}

inline SyntheticScene by_name(const std::string& name) {
  if (name == "empty") return empty();
  if (name == "homogeneous") return homogeneous(1.0);
  if (name == "ball") return ball();
  if (name == "gradient") return gradient();
  throw std::invalid_argument("unknown scene '" + name + "' (empty, homogeneous, ball, gradient)");
}

}  // namespace scenes

struct RenderConfig {
  static constexpr double t_near = 0.0;
  static constexpr double t_far = 1.0;

  int n_samples = 64;
  bool stratified = false;
  std::uint64_t seed = 0;

  void validate() const {
    if (n_samples < 2) throw std::invalid_argument("render needs at least 2 samples per ray");
  }
};

/// Sample nodes on [0, 1): t_i = (i − 1)/N, or jittered uniformly inside
/// each bin when stratified.
inline std::vector<double> sample_nodes(const RenderConfig& cfg, std::uint64_t stream = 0) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(cfg.n_samples);
  std::vector<double> t(n);
  const double h = (RenderConfig::t_far - RenderConfig::t_near) / static_cast<double>(n);
  if (!cfg.stratified) {
    for (std::size_t i = 0; i < n; ++i) t[i] = RenderConfig::t_near + h * static_cast<double>(i);
    return t;
  }
  Rng rng(derive_seed(cfg.seed, stream));
  for (std::size_t i = 0; i < n; ++i) t[i] = RenderConfig::t_near + h * (static_cast<double>(i) + rng.uniform());
  return t;
}

struct RayRender {
  Vec3 rgb;
  std::vector<double> transmittance;  // T_1 … T_{N+1}
};

/// Renders one ray at explicit nodes (non-decreasing, within [0, 1]).
inline RayRender render_ray_nodes(const SyntheticScene& scene, const Ray& ray, std::span<const double> nodes) {
  if (nodes.empty()) throw std::invalid_argument("render needs at least one node");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] < RenderConfig::t_near || nodes[i] > RenderConfig::t_far)
      throw std::invalid_argument("render node outside [0, 1]");
    if (i > 0 && nodes[i] < nodes[i - 1]) throw std::invalid_argument("render nodes must be non-decreasing");
  }
  RayRender out;
  out.transmittance.reserve(nodes.size() + 1);
  double optical_depth = 0.0;
  out.transmittance.push_back(1.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double next = i + 1 < nodes.size() ? nodes[i + 1] : RenderConfig::t_far;
    const double delta = next - nodes[i];
    const Vec3 x = ray_point(ray, nodes[i]);
    const double sigma = scene.density(x);
    const double alpha = 1.0 - std::exp(-sigma * delta);
    const double t_i = std::exp(-optical_depth);
    out.rgb += scene.color(x, ray.direction()) * (t_i * alpha);
    optical_depth += sigma * delta;
    out.transmittance.push_back(std::exp(-optical_depth));
  }
  return out;
}

inline Vec3 render_ray(const SyntheticScene& scene, const Ray& ray, const RenderConfig& cfg, std::uint64_t stream = 0) {
  const auto nodes = sample_nodes(cfg, stream);
  return render_ray_nodes(scene, ray, nodes).rgb;
}

inline Vec3 clamp_unit(Vec3 c) {
  return {std::clamp(c.x, 0.0, 1.0), std::clamp(c.y, 0.0, 1.0), std::clamp(c.z, 0.0, 1.0)};
}

/// World-space direction through pixel (col, row) of a pinhole camera that
/// looks down its local −z axis with +y up; fov is the horizontal angle.
inline Vec3 pixel_direction(const Mat3& world_from_camera, double fov, std::size_t width, std::size_t height,
                            std::size_t col, std::size_t row) {
  const double half = std::tan(0.5 * fov);
  const double aspect = static_cast<double>(height) / static_cast<double>(width);
  const double u = (2.0 * (static_cast<double>(col) + 0.5) / static_cast<double>(width) - 1.0) * half;
  const double v = (1.0 - 2.0 * (static_cast<double>(row) + 0.5) / static_cast<double>(height)) * half * aspect;
  return normalized(world_from_camera * Vec3{u, v, -1.0});
}

inline ColorImage render_image(const SyntheticScene& scene, const CameraPose& pose, double fov, std::size_t width,
                               std::size_t height, const RenderConfig& cfg) {
  if (!pose.rotation) throw std::invalid_argument("render_image needs a camera rotation");
  if (!(fov > 0.0 && fov < std::numbers::pi)) throw std::invalid_argument("field of view must lie in (0, pi)");
  if (width == 0 || height == 0) throw std::invalid_argument("image must have positive size");
  cfg.validate();

  ColorImage img(width, height);
  const std::size_t total = width * height;
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t col = i % width, row = i / width;
      const Ray ray(pose.position, pixel_direction(*pose.rotation, fov, width, height, col, row));
      img.set(i, clamp_unit(render_ray(scene, ray, cfg, i)));
    }
  };
  const std::size_t n_threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, total / 256));
  if (n_threads <= 1) {
    work(0, total);
    return img;
  }
  std::vector<std::jthread> threads;
  const std::size_t chunk = (total + n_threads - 1) / n_threads;
  for (std::size_t b = 0; b < total; b += chunk) threads.emplace_back(work, b, std::min(total, b + chunk));
  return img;
}

struct LipschitzReport {
  double max_ratio = 0.0;
  double bound = 0.0;  // 3·L
  bool pass = false;
  std::vector<double> ratios;
};

/// Checks ‖Ĉ(r) − Ĉ(r̄)‖ ≤ 3L‖o − ō‖ for rays that share `direction` and
/// sample nodes, so the direction-dependent constant vanishes.
inline LipschitzReport lipschitz_bound_check(const SyntheticScene& scene,
                                             std::span<const std::pair<CameraPose, CameraPose>> pose_pairs,
                                             const Vec3& direction, const RenderConfig& cfg) {
  const auto nodes = sample_nodes(cfg);
  LipschitzReport rep;
  rep.bound = 3.0 * scene.lipschitz_const;
  for (const auto& [a, b] : pose_pairs) {
    const double sep = norm(a.position - b.position);
    if (!(sep > 0.0)) throw std::invalid_argument("pose pair has zero positional separation");
    const Vec3 ca = render_ray_nodes(scene, Ray(a.position, direction), nodes).rgb;
    const Vec3 cb = render_ray_nodes(scene, Ray(b.position, direction), nodes).rgb;
    const double ratio = norm(ca - cb) / sep;
    rep.ratios.push_back(ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
  }
  rep.pass = rep.max_ratio <= rep.bound;
  return rep;
}

struct LipschitzProbe {
  double density = 0.0;             // max |σ(x) − σ(y)| / ‖x − y‖
  double color_position = 0.0;      // max ‖c(x,d) − c(y,d)‖ / ‖x − y‖
  double color_direction = 0.0;     // max ‖c(x,d) − c(x,e)‖ / ‖d − e‖
  double max() const { return std::max({density, color_position, color_direction}); }
};

/// Randomized finite-difference estimate of the scene's Lipschitz ratios
/// over points in the cube [−radius, radius]³ and unit directions.
inline LipschitzProbe probe_lipschitz(const SyntheticScene& scene, std::size_t n_pairs, std::uint64_t seed,
                                      double radius = 1.5) {
  Rng rng(seed);
  auto point = [&] { return Vec3{rng.uniform(-radius, radius), rng.uniform(-radius, radius), rng.uniform(-radius, radius)}; };
  auto unit = [&] {
    for (;;) {
      const Vec3 v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const double n = norm(v);
      if (n > 1e-3 && n <= 1.0) return v * (1.0 / n);
    }
  };
  LipschitzProbe p;
  for (std::size_t k = 0; k < n_pairs; ++k) {
    const Vec3 x = point();
    // half the pairs are close together to probe local slopes
    const Vec3 y = (k % 2 == 0) ? point() : x + unit() * rng.uniform(1e-6, 1e-2);
    const Vec3 d = unit();
    const Vec3 e = (k % 2 == 0) ? unit() : normalized(d + unit() * rng.uniform(1e-6, 1e-2));
    const double dx = norm(x - y);
    const double dd = norm(d - e);
    if (dx > 0.0) {
      p.density = std::max(p.density, std::abs(scene.density(x) - scene.density(y)) / dx);
      p.color_position = std::max(p.color_position, norm(scene.color(x, d) - scene.color(y, d)) / dx);
    }
    if (dd > 0.0) p.color_direction = std::max(p.color_direction, norm(scene.color(x, d) - scene.color(x, e)) / dd);
  }
  return p;
}

}  // namespace viewsel
