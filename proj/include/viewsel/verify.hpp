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

// Numerical certificates for the three structural claims the planner
// relies on: pixel distance is affine in squared camera distance, greedy
// selection is a 2-approximation of the max-min optimum, and rendered
// color varies at most 3L per unit of camera displacement.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "viewsel/distances.hpp"
#include "viewsel/renderer.hpp"
#include "viewsel/rng.hpp"
#include "viewsel/selection.hpp"

namespace viewsel::verify {

// --- pixel distance vs camera distance ------------------------------------

struct AffineCheckConfig {
  RayModel model{0.0, std::numbers::pi / 3.0, 2.0, 3.0};
  int pairs = 6;
  std::int64_t ray_samples = 200'000;
  int quad = 64;
  std::uint64_t seed = 0;
  double tol = 0.02;  // relative slope tolerance
  double min_r_squared = 0.999;
  double min_sq_sep = 0.01;
  double max_sq_sep = 4.0;
};

struct AffineCheckReport {
  std::vector<std::pair<double, double>> samples;  // (‖Δo‖², estimate)
  AffineFit fit;
  double expected_slope = 0.0;
  double slope_rel_error = 0.0;
  bool pass = false;
};

/// Pose pairs are offset within the horizontal plane. For T1 ≠ T2 a
/// vertical offset adds a term linear in Δo_z (the elevation band is not
/// symmetric about 0), so only horizontal separations isolate the
/// quadratic dependence.
inline std::vector<std::pair<CameraPose, CameraPose>> horizontal_pose_pairs(int pairs, double min_sq, double max_sq,
                                                                            std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<CameraPose, CameraPose>> out;
  for (int k = 0; k < pairs; ++k) {
    const double sq = pairs == 1 ? min_sq : min_sq + (max_sq - min_sq) * k / static_cast<double>(pairs - 1);
    const double az = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Vec3 base{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const Vec3 offset = Vec3{std::cos(az), std::sin(az), 0.0} * std::sqrt(sq);
    out.emplace_back(CameraPose(base), CameraPose(base + offset));
  }
  return out;
}

inline AffineCheckReport check_affine_pixel_distance(const AffineCheckConfig& cfg) {
  cfg.model.validate();
  AffineCheckReport rep;
  const auto pairs = horizontal_pose_pairs(cfg.pairs, cfg.min_sq_sep, cfg.max_sq_sep, cfg.seed);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [a, b] = pairs[k];
    const double est =
        pixel_distance_monte_carlo(a, b, cfg.model, cfg.ray_samples, cfg.quad, derive_seed(cfg.seed, k + 1));
    rep.samples.emplace_back(squared_camera_distance(a, b), est);
  }
  rep.fit = fit_affine_relation(rep.samples);
  rep.expected_slope = cfg.model.t1_len * cfg.model.t2_len;
  rep.slope_rel_error = std::abs(rep.fit.slope - rep.expected_slope) / rep.expected_slope;
  rep.pass = rep.slope_rel_error <= cfg.tol && rep.fit.r_squared >= cfg.min_r_squared;
  return rep;
}

// --- greedy approximation ratio --------------------------------------------

struct RandomInstance {
  std::vector<ViewRecord> initial;
  std::vector<ViewRecord> candidates;
};

/// Views uniform in the unit cube; ids "i0…" and "c00…".
inline RandomInstance random_cube_instance(std::size_t n_initial, std::size_t pool, std::uint64_t seed) {
  Rng rng(seed);
  RandomInstance inst;
  auto make = [&](const std::string& id, ViewStatus status) {
    ViewRecord v;
    v.id = id;
    v.pose = CameraPose(Vec3{rng.uniform(), rng.uniform(), rng.uniform()});
    v.status = status;
    return v;
  };
  for (std::size_t i = 0; i < n_initial; ++i) inst.initial.push_back(make("i" + std::to_string(i), ViewStatus::training));
  for (std::size_t i = 0; i < pool; ++i) {
    std::string id = std::to_string(i);
    id = "c" + std::string(id.size() < 3 ? 3 - id.size() : 0, '0') + id;
    inst.candidates.push_back(make(id, ViewStatus::candidate));
  }
  return inst;
}

struct RatioBatteryConfig {
  std::size_t instances = 500;
  std::size_t pool = 12;
  std::size_t count = 4;
  std::size_t initial = 1;
  std::uint64_t seed = 7;
};

struct RatioBatteryReport {
  double min_ratio = 0.0;
  double mean_ratio = 0.0;
  std::size_t violations = 0;           // ratio < 0.5
  std::size_t monotonic_violations = 0;  // δ_{i+1} > δ_i
  std::size_t optimal_hits = 0;          // ratio == 1
  bool pass = false;
};

inline bool separations_non_increasing(const SelectionResult& r) {
  for (std::size_t i = 1; i < r.separations.size(); ++i)
    if (r.separations[i] > r.separations[i - 1]) return false;
  return true;
}

inline RatioBatteryReport check_greedy_ratio(const RatioBatteryConfig& cfg) {
  RatioBatteryReport rep;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  const RayModel model;
  double sum = 0.0;
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const auto inst = random_cube_instance(cfg.initial, cfg.pool, derive_seed(cfg.seed, i));
    const auto g = greedy_select(inst.initial, inst.candidates, DistanceMetric::euclidean(), model, cfg.count);
    const auto o = brute_force_optimal(inst.initial, inst.candidates, DistanceMetric::euclidean(), model, cfg.count);
    const double ratio = approximation_ratio(g, o);
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    sum += ratio;
    if (ratio < 0.5) ++rep.violations;
    if (ratio == 1.0) ++rep.optimal_hits;
    if (!separations_non_increasing(g)) ++rep.monotonic_violations;
  }
  rep.mean_ratio = cfg.instances ? sum / static_cast<double>(cfg.instances) : 0.0;
  rep.pass = rep.violations == 0 && rep.monotonic_violations == 0;
  return rep;
}

// --- color vs camera displacement ------------------------------------------

struct ColorBoundConfig {
  std::string scene = "gradient";
  std::size_t pairs = 100;
  std::uint64_t seed = 0;
  int samples = 64;
  double min_sep = 1e-3;
  double max_sep = 0.3;
};

struct ColorBoundReport {
  LipschitzReport check;
  double lipschitz_const = 0.0;
};

/// Same-direction ray pairs that cross the unit ball: origins near −d/2,
/// separations log-uniform in [min_sep, max_sep].
inline std::vector<std::pair<CameraPose, CameraPose>> same_direction_pairs(const Vec3& direction, std::size_t n,
                                                                           double min_sep, double max_sep,
                                                                           std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<CameraPose, CameraPose>> out;
  auto unit = [&] {
    for (;;) {
      const Vec3 v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const double len = norm(v);
      if (len > 1e-3 && len <= 1.0) return v * (1.0 / len);
    }
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Vec3 base =
        direction * -0.5 + Vec3{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
    const double sep = std::exp(rng.uniform(std::log(min_sep), std::log(max_sep)));
    out.emplace_back(CameraPose(base), CameraPose(base + unit() * sep));
  }
  return out;
}

inline ColorBoundReport check_color_bound(const ColorBoundConfig& cfg) {
  const auto scene = scenes::by_name(cfg.scene);
  Rng rng(cfg.seed);
  const Vec3 direction = direction_from_angles({rng.uniform(-1.2, 1.2), rng.uniform(0.0, 2.0 * std::numbers::pi)});
  const auto pairs = same_direction_pairs(direction, cfg.pairs, cfg.min_sep, cfg.max_sep, derive_seed(cfg.seed, 1));
  RenderConfig rc;
  rc.n_samples = cfg.samples;
  ColorBoundReport rep;
  rep.check = lipschitz_bound_check(scene, pairs, direction, rc);
  rep.lipschitz_const = scene.lipschitz_const;
  return rep;
}

}  // namespace viewsel::verify
