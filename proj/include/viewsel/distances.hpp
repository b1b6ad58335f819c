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

// Distances between views: cosine distance between semantic embeddings,
// the expected squared distance between the ray ensembles of two cameras
// (closed form and Monte-Carlo), and the view-to-set reduction used by
// every selection strategy.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "viewsel/geometry.hpp"
#include "viewsel/rng.hpp"
#include "viewsel/view.hpp"

namespace viewsel {

/// Ray ensemble of one image: elevations uniform in [theta_low, theta_high],
/// azimuths uniform in [0, 2π), travel lengths t1_len (first view) and
/// t2_len (second view).
struct RayModel {
  double theta_low = 0.0;
  double theta_high = std::numbers::pi / 3.0;
  double t1_len = 1.0;
  double t2_len = 1.0;

  void validate() const {
    if (!std::isfinite(theta_low) || !std::isfinite(theta_high) || theta_low > theta_high)
      throw std::invalid_argument("ray model needs theta_low <= theta_high");
    if (!(t1_len > 0.0) || !(t2_len > 0.0) || !std::isfinite(t1_len) || !std::isfinite(t2_len))
      throw std::invalid_argument("ray model travel lengths must be positive and finite");
  }
};

enum class MetricKind { SemanticOnly, PixelEuclidean, PixelSquared, Weighted };

inline const char* to_string(MetricKind k) {
  switch (k) {
    case MetricKind::SemanticOnly: return "semantic";
    case MetricKind::PixelEuclidean: return "euclidean";
    case MetricKind::PixelSquared: return "squared";
    case MetricKind::Weighted: return "weighted";
  }
  return "unknown";
}

struct DistanceMetric {
  MetricKind kind = MetricKind::PixelEuclidean;
  double lambda = 0.0;       // Weighted only
  double pixel_scale = 1.0;  // Weighted only: divisor for the camera distance term

  static DistanceMetric semantic() { return {MetricKind::SemanticOnly}; }
  static DistanceMetric euclidean() { return {MetricKind::PixelEuclidean}; }
  static DistanceMetric squared() { return {MetricKind::PixelSquared}; }
  static DistanceMetric weighted(double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be nonnegative");
    return {MetricKind::Weighted, lambda};
  }

  bool needs_features() const { return kind == MetricKind::SemanticOnly || kind == MetricKind::Weighted; }
  /// Only the Euclidean camera distance is a metric in the triangle-inequality sense.
  bool is_metric() const { return kind == MetricKind::PixelEuclidean; }
};

// --- semantic -------------------------------------------------------------

/// 1 − cos(a, b), in [0, 2].
inline double semantic_distance(const FeatureVector& a, const FeatureVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("feature dimension mismatch");
  if (a.dim() == 0) throw std::invalid_argument("feature vector has zero norm");
  const auto av = a.values();
  const auto bv = b.values();
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    ab += av[i] * bv[i];
    aa += av[i] * av[i];
    bb += bv[i] * bv[i];
  }
  if (!(aa > 0.0) || !(bb > 0.0)) throw std::invalid_argument("feature vector has zero norm");
  // sqrt(aa * bb) rather than |a||b| so that identical inputs give exactly 1.
  const double cosine = std::clamp(ab / std::sqrt(aa * bb), -1.0, 1.0);
  return 1.0 - cosine;
}

// --- pixel space ----------------------------------------------------------

inline double squared_camera_distance(const CameraPose& a, const CameraPose& b) {
  return squared_norm(a.position - b.position);
}

inline double camera_distance(const CameraPose& a, const CameraPose& b) {
  return std::sqrt(squared_camera_distance(a, b));
}

/// T1·T2·‖o − ō‖², the pose-dependent part of the pixel space distance.
/// The additive constant depends only on the ray model and is omitted.
inline double pixel_distance_closed_form(const CameraPose& a, const CameraPose& b, const RayModel& model) {
  model.validate();
  return model.t1_len * model.t2_len * squared_camera_distance(a, b);
}

/// Trapezoid nodes/weights on [0, length] reduced to the three moments
/// Σw, Σw·t, Σw·t² needed for a quadratic integrand.
struct TrapezoidMoments {
  double w = 0.0;
  double wt = 0.0;
  double wtt = 0.0;

  static TrapezoidMoments on(double length, int n_nodes) {
    if (n_nodes < 2) throw std::invalid_argument("trapezoid rule needs at least 2 nodes");
    const double h = length / static_cast<double>(n_nodes - 1);
    TrapezoidMoments m;
    for (int i = 0; i < n_nodes; ++i) {
      const double t = h * static_cast<double>(i);
      const double wi = (i == 0 || i == n_nodes - 1) ? 0.5 * h : h;
      m.w += wi;
      m.wt += wi * t;
      m.wtt += wi * t * t;
    }
    return m;
  }
};

/// Trapezoid approximation of ∫₀^{T1}∫₀^{T2} ‖offset + t1·d1 − t2·d2‖² dt2 dt1
/// on an n_quad × n_quad grid. The integrand is a quadratic polynomial in
/// (t1, t2), so the double sum separates into per-axis moments.
inline double ray_pair_integral(const Vec3& offset, const Vec3& d1, const Vec3& d2, const TrapezoidMoments& m1,
                                const TrapezoidMoments& m2) {
  return m1.w * m2.w * squared_norm(offset) + 2.0 * m2.w * m1.wt * dot(offset, d1) -
         2.0 * m1.w * m2.wt * dot(offset, d2) + m2.w * m1.wtt * squared_norm(d1) +
         m1.w * m2.wtt * squared_norm(d2) - 2.0 * m1.wt * m2.wt * dot(d1, d2);
}

/// Monte-Carlo estimate of the pixel space distance between two cameras:
/// the expectation over independent direction draws of the ray-pair
/// integral. Deterministic for a fixed seed.
inline double pixel_distance_monte_carlo(const CameraPose& a, const CameraPose& b, const RayModel& model,
                                         std::int64_t n_ray_pairs, int n_quad, std::uint64_t seed) {
  model.validate();
  if (n_ray_pairs < 1) throw std::invalid_argument("n_ray_pairs must be at least 1");
  if (n_quad < 2) throw std::invalid_argument("n_quad must be at least 2");

  const auto m1 = TrapezoidMoments::on(model.t1_len, n_quad);
  const auto m2 = TrapezoidMoments::on(model.t2_len, n_quad);
  const Vec3 offset = a.position - b.position;
  constexpr double two_pi = 2.0 * std::numbers::pi;

  Rng rng(seed);
  double sum = 0.0;
  for (std::int64_t k = 0; k < n_ray_pairs; ++k) {
    const double th1 = rng.uniform(model.theta_low, model.theta_high);
    const double ph1 = rng.uniform(0.0, two_pi);
    const double th2 = rng.uniform(model.theta_low, model.theta_high);
    const double ph2 = rng.uniform(0.0, two_pi);
    const Vec3 d1 = direction_from_angles({th1, ph1});
    const Vec3 d2 = direction_from_angles({th2, ph2});
    sum += ray_pair_integral(offset, d1, d2, m1, m2);
  }
  return sum / static_cast<double>(n_ray_pairs);
}

struct AffineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope·x + intercept over (x, y) samples.
inline AffineFit fit_affine_relation(std::span<const std::pair<double, double>> samples) {
  std::vector<double> xs;
  for (const auto& [x, y] : samples) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw std::invalid_argument("affine fit sample is not finite");
    xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  if (std::unique(xs.begin(), xs.end()) - xs.begin() < 3)
    throw std::invalid_argument("affine fit needs at least 3 distinct abscissae");

  const double n = static_cast<double>(samples.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : samples) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : samples) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  // r² is undefined for a constant response.
  if (!(syy > 0.0)) throw std::invalid_argument("affine fit response has zero variance");

  AffineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (const auto& [x, y] : samples) {
    const double r = y - (fit.slope * x + fit.intercept);
    ss_res += r * r;
  }
  fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

// --- view-level reductions --------------------------------------------------

/// Max pairwise Euclidean camera distance over a pool; 1 when the pool is degenerate.
inline double pool_pixel_scale(std::span<const ViewRecord> pool) {
  double best = 0.0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      best = std::max(best, camera_distance(pool[i].pose, pool[j].pose));
  return best > 0.0 ? best : 1.0;
}

/// Copy of `metric` whose Weighted pixel term is normalized by `pool`.
inline DistanceMetric normalized_for_pool(DistanceMetric metric, std::span<const ViewRecord> pool) {
  if (metric.kind == MetricKind::Weighted) metric.pixel_scale = pool_pixel_scale(pool);
  return metric;
}

inline const FeatureVector& feature_of(const ViewRecord& v) {
  if (!v.feature) throw std::invalid_argument("view '" + v.id + "' has no semantic feature");
  return *v.feature;
}

inline double pairwise_distance(const ViewRecord& a, const ViewRecord& b, const DistanceMetric& metric,
                                const RayModel& model) {
  switch (metric.kind) {
    case MetricKind::SemanticOnly:
      return semantic_distance(feature_of(a), feature_of(b));
    case MetricKind::PixelEuclidean:
      return camera_distance(a.pose, b.pose);
    case MetricKind::PixelSquared:
      return pixel_distance_closed_form(a.pose, b.pose, model);
    case MetricKind::Weighted:
      return semantic_distance(feature_of(a), feature_of(b)) +
             metric.lambda * camera_distance(a.pose, b.pose) / metric.pixel_scale;
  }
  throw std::logic_error("unhandled metric kind");
}

/// Minimum pairwise distance from `view` to any of `refs`.
inline double set_distance(const ViewRecord& view, std::span<const ViewRecord> refs, const DistanceMetric& metric,
                           const RayModel& model) {
  if (refs.empty()) throw std::invalid_argument("set_distance needs a nonempty reference set");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : refs) best = std::min(best, pairwise_distance(view, r, metric, model));
  return best;
}

}  // namespace viewsel
