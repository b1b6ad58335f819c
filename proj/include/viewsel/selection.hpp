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

// Sparse view sampling. Every strategy picks views one at a time so that
// each new view is as far as possible (under some distance) from all views
// already known; the max-min separation of the final set is within a
// factor 2 of the exhaustive optimum when the distance is a metric.
//
// Ties are always broken towards the lexicographically smallest view id.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "viewsel/distances.hpp"
#include "viewsel/hash.hpp"
#include "viewsel/rng.hpp"
#include "viewsel/view.hpp"

namespace viewsel {

struct SelectionResult {
  std::vector<std::string> order;
  std::vector<double> separations;  // δ_i, one per pick
  double delta_tilde = std::numeric_limits<double>::infinity();
  std::string strategy;
  std::string metric;
  std::optional<std::uint64_t> seed;
  std::uint64_t instance = 0;
};

struct OracleResult {
  std::vector<std::string> subset;  // sorted ids
  double delta_star = 0.0;
  std::uint64_t evaluated_subsets = 0;
  std::uint64_t instance = 0;
};

namespace detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline std::vector<std::size_t> indices_by_id(std::span<const ViewRecord> views) {
  std::vector<std::size_t> idx(views.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return views[a].id < views[b].id; });
  return idx;
}

inline void validate_instance(std::span<const ViewRecord> initial, std::span<const ViewRecord> candidates,
                              std::size_t count, bool need_features) {
  if (count > candidates.size())
    throw std::invalid_argument("requested " + std::to_string(count) + " views from a pool of " +
                                std::to_string(candidates.size()));
  std::vector<ViewRecord> all(initial.begin(), initial.end());
  all.insert(all.end(), candidates.begin(), candidates.end());
  require_unique_ids(all);
  if (need_features) require_features(all);
}

inline std::vector<ViewRecord> concat(std::span<const ViewRecord> a, std::span<const ViewRecord> b) {
  std::vector<ViewRecord> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline double finalize_delta(const std::vector<double>& seps) {
  double d = kInf;
  for (double s : seps) d = std::min(d, s);
  return d;
}

}  // namespace detail

/// Fingerprint of a selection instance: views (ids and positions), pick
/// count and metric kind. Order-independent within each view list.
inline std::uint64_t instance_fingerprint(std::span<const ViewRecord> initial, std::span<const ViewRecord> candidates,
                                          std::size_t count, const DistanceMetric& metric) {
  Fnv1a h;
  for (auto views : {initial, candidates}) {
    h.u64(views.size());
    for (std::size_t i : detail::indices_by_id(views)) {
      const auto& v = views[i];
      h.field(v.id).f64(v.pose.position.x).f64(v.pose.position.y).f64(v.pose.position.z);
    }
  }
  h.u64(count).u64(static_cast<std::uint64_t>(metric.kind)).f64(metric.lambda);
  return h.digest();
}

/// Greedy max-min selection: each of `count` iterations adds the candidate
/// whose minimum distance to initial ∪ already-picked views is largest.
/// δ_i is that max-min value; with an empty initial set the first pick is
/// unconstrained and δ₁ = +∞.
inline SelectionResult greedy_select(std::span<const ViewRecord> initial, std::span<const ViewRecord> candidates,
                                     DistanceMetric metric, const RayModel& model, std::size_t count) {
  detail::validate_instance(initial, candidates, count, metric.needs_features());
  model.validate();
  const auto pool = detail::concat(initial, candidates);
  metric = normalized_for_pool(metric, pool);

  SelectionResult result;
  result.strategy = "greedy";
  result.metric = to_string(metric.kind);
  result.instance = instance_fingerprint(initial, candidates, count, metric);

  auto remaining = detail::indices_by_id(candidates);
  std::vector<double> min_dist(candidates.size(), detail::kInf);
  if (!initial.empty())
    for (std::size_t c : remaining) min_dist[c] = set_distance(candidates[c], initial, metric, model);

  for (std::size_t it = 0; it < count; ++it) {
    std::size_t best_pos = 0;
    for (std::size_t p = 1; p < remaining.size(); ++p)
      if (min_dist[remaining[p]] > min_dist[remaining[best_pos]]) best_pos = p;
    const std::size_t picked = remaining[best_pos];
    result.order.push_back(candidates[picked].id);
    result.separations.push_back(min_dist[picked]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_pos));
    for (std::size_t c : remaining)
      min_dist[c] = std::min(min_dist[c], pairwise_distance(candidates[c], candidates[picked], metric, model));
  }
  result.delta_tilde = detail::finalize_delta(result.separations);
  return result;
}

inline double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

inline constexpr double kMaxOracleSubsets = 1e6;

/// Exhaustive max-min separation over all `count`-subsets of the candidates.
/// A subset's separation is the minimum distance over pairs inside
/// subset ∪ initial that involve at least one subset member; pairs among
/// initial views are fixed and ignored. Ties go to the lexicographically
/// smallest sorted id tuple.
inline OracleResult brute_force_optimal(std::span<const ViewRecord> initial, std::span<const ViewRecord> candidates,
                                        DistanceMetric metric, const RayModel& model, std::size_t count) {
  detail::validate_instance(initial, candidates, count, metric.needs_features());
  model.validate();
  if (count == 0) throw std::invalid_argument("oracle needs count >= 1");
  if (binomial(candidates.size(), count) > kMaxOracleSubsets)
    throw std::invalid_argument("oracle enumeration exceeds the 1e6 subset guard");
  const auto pool = detail::concat(initial, candidates);
  metric = normalized_for_pool(metric, pool);

  const auto order = detail::indices_by_id(candidates);
  const std::size_t m = order.size();
  std::vector<double> to_initial(m, detail::kInf);
  std::vector<double> dist(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& vi = candidates[order[i]];
    if (!initial.empty()) to_initial[i] = set_distance(vi, initial, metric, model);
    for (std::size_t j = i + 1; j < m; ++j)
      dist[i * m + j] = dist[j * m + i] = pairwise_distance(vi, candidates[order[j]], metric, model);
  }

  OracleResult result;
  result.instance = instance_fingerprint(initial, candidates, count, metric);
  std::vector<std::size_t> comb(count);
  std::iota(comb.begin(), comb.end(), std::size_t{0});
  std::vector<std::size_t> best_comb;
  double best = -1.0;
  for (;;) {
    double sep = detail::kInf;
    for (std::size_t a = 0; a < count; ++a) {
      sep = std::min(sep, to_initial[comb[a]]);
      for (std::size_t b = a + 1; b < count; ++b) sep = std::min(sep, dist[comb[a] * m + comb[b]]);
    }
    ++result.evaluated_subsets;
    if (sep > best) {
      best = sep;
      best_comb = comb;
    }
    // next combination in lexicographic order
    std::size_t i = count;
    while (i > 0 && comb[i - 1] == m - count + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < count; ++j) comb[j] = comb[j - 1] + 1;
  }
  result.delta_star = best;
  for (std::size_t c : best_comb) result.subset.push_back(candidates[order[c]].id);
  return result;
}

/// δ̃ / δ*. 1 when both are zero (or both unbounded).
inline double approximation_ratio(const SelectionResult& greedy, const OracleResult& oracle) {
  if (greedy.instance != oracle.instance)
    throw std::invalid_argument("greedy and oracle results come from different instances");
  if (greedy.delta_tilde == oracle.delta_star) return 1.0;
  return greedy.delta_tilde / oracle.delta_star;
}

enum class FirstCriterion { semantic, pixel };

struct SequentialOptions {
  FirstCriterion first = FirstCriterion::semantic;
  std::size_t shortlist_k = 20;
  DistanceMetric pixel = DistanceMetric::euclidean();
  bool shortlist_once = false;  // one shortlist for the whole call instead of one per pick
};

/// Two-stage selection: rank remaining candidates by the first criterion,
/// keep the top `shortlist_k`, then pick greedily by the second criterion
/// inside the shortlist. δ_i records the second-criterion value.
inline SelectionResult sequential_select(std::span<const ViewRecord> initial, std::span<const ViewRecord> candidates,
                                         const SequentialOptions& opt, const RayModel& model, std::size_t count) {
  detail::validate_instance(initial, candidates, count, true);
  model.validate();
  if (opt.shortlist_k < count)
    throw std::invalid_argument("shortlist of " + std::to_string(opt.shortlist_k) + " is smaller than the " +
                                std::to_string(count) + " remaining picks");
  const auto pool = detail::concat(initial, candidates);
  const DistanceMetric sem = DistanceMetric::semantic();
  const DistanceMetric pix = normalized_for_pool(opt.pixel, pool);
  const DistanceMetric& first = opt.first == FirstCriterion::semantic ? sem : pix;
  const DistanceMetric& second = opt.first == FirstCriterion::semantic ? pix : sem;

  SelectionResult result;
  result.strategy = opt.first == FirstCriterion::semantic ? "s-then-p" : "p-then-s";
  result.metric = std::string(to_string(first.kind)) + ">" + to_string(second.kind);
  result.instance = instance_fingerprint(initial, candidates, count, second);

  std::vector<ViewRecord> refs(initial.begin(), initial.end());
  auto remaining = detail::indices_by_id(candidates);

  auto score = [&](std::size_t c, const DistanceMetric& m) {
    return refs.empty() ? detail::kInf : set_distance(candidates[c], refs, m, model);
  };
  auto shortlist_of = [&](std::vector<std::size_t> pool_idx) {
    std::vector<double> s(candidates.size());
    for (std::size_t c : pool_idx) s[c] = score(c, first);
    std::stable_sort(pool_idx.begin(), pool_idx.end(), [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });
    pool_idx.resize(std::min(opt.shortlist_k, pool_idx.size()));
    std::sort(pool_idx.begin(), pool_idx.end(),
              [&](std::size_t a, std::size_t b) { return candidates[a].id < candidates[b].id; });
    return pool_idx;
  };

  std::vector<std::size_t> shortlist;
  if (opt.shortlist_once) shortlist = shortlist_of(remaining);

  for (std::size_t it = 0; it < count; ++it) {
    if (!opt.shortlist_once) shortlist = shortlist_of(remaining);
    std::size_t best_pos = 0;
    double best = -1.0;
    for (std::size_t p = 0; p < shortlist.size(); ++p) {
      const double s = score(shortlist[p], second);
      if (s > best) {
        best = s;
        best_pos = p;
      }
    }
    const std::size_t picked = shortlist[best_pos];
    result.order.push_back(candidates[picked].id);
    result.separations.push_back(best);
    refs.push_back(candidates[picked]);
    shortlist.erase(shortlist.begin() + static_cast<std::ptrdiff_t>(best_pos));
    remaining.erase(std::find(remaining.begin(), remaining.end(), picked));
  }
  result.delta_tilde = detail::finalize_delta(result.separations);
  return result;
}

/// `count` candidates uniformly without replacement. δ_i is reported
/// under `report_metric` against initial ∪ earlier picks.
inline SelectionResult random_select(std::span<const ViewRecord> initial, std::span<const ViewRecord> candidates,
                                     DistanceMetric report_metric, const RayModel& model, std::size_t count,
                                     std::uint64_t seed) {
  detail::validate_instance(initial, candidates, count, report_metric.needs_features());
  model.validate();
  const auto pool = detail::concat(initial, candidates);
  report_metric = normalized_for_pool(report_metric, pool);

  SelectionResult result;
  result.strategy = "random";
  result.metric = to_string(report_metric.kind);
  result.seed = seed;
  result.instance = instance_fingerprint(initial, candidates, count, report_metric);

  auto idx = detail::indices_by_id(candidates);
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<ViewRecord> refs(initial.begin(), initial.end());
  for (std::size_t i = 0; i < count; ++i) {
    const auto& v = candidates[idx[i]];
    result.order.push_back(v.id);
    result.separations.push_back(refs.empty() ? detail::kInf : set_distance(v, refs, report_metric, model));
    refs.push_back(v);
  }
  result.delta_tilde = detail::finalize_delta(result.separations);
  return result;
}

enum class BaselineKind { random, fvs, semantic_only, weighted };

/// Comparison strategies: random, furthest view sampling (Euclidean camera
/// distance), semantic-only greedy, and semantic + λ·pixel greedy.
inline SelectionResult baseline_select(BaselineKind kind, double lambda, std::span<const ViewRecord> initial,
                                       std::span<const ViewRecord> candidates, const RayModel& model,
                                       std::size_t count, std::uint64_t seed) {
  SelectionResult r;
  switch (kind) {
    case BaselineKind::random:
      return random_select(initial, candidates, DistanceMetric::euclidean(), model, count, seed);
    case BaselineKind::fvs:
      r = greedy_select(initial, candidates, DistanceMetric::euclidean(), model, count);
      r.strategy = "fvs";
      return r;
    case BaselineKind::semantic_only:
      r = greedy_select(initial, candidates, DistanceMetric::semantic(), model, count);
      r.strategy = "semantic";
      return r;
    case BaselineKind::weighted:
      r = greedy_select(initial, candidates, DistanceMetric::weighted(lambda), model, count);
      r.strategy = "weighted";
      return r;
  }
  throw std::logic_error("unhandled baseline kind");
}

}  // namespace viewsel
