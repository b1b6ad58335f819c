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

// Named strategies and the train-render-evaluate-pick acquisition loop.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "viewsel/distances.hpp"
#include "viewsel/rng.hpp"
#include "viewsel/selection.hpp"
#include "viewsel/view.hpp"

namespace viewsel {

enum class StrategyKind { greedy_pixel, greedy_semantic, s_then_p, p_then_s, weighted, fvs, random };

inline StrategyKind parse_strategy(const std::string& name) {
  static const std::map<std::string, StrategyKind> kinds{
      {"greedy-pixel", StrategyKind::greedy_pixel}, {"greedy-semantic", StrategyKind::greedy_semantic},
      {"semantic", StrategyKind::greedy_semantic},  {"s-then-p", StrategyKind::s_then_p},
      {"p-then-s", StrategyKind::p_then_s},         {"weighted", StrategyKind::weighted},
      {"fvs", StrategyKind::fvs},                   {"random", StrategyKind::random}};
  auto it = kinds.find(name);
  if (it == kinds.end()) throw std::invalid_argument("unknown strategy '" + name + "'");
  return it->second;
}

struct StrategySpec {
  StrategyKind kind = StrategyKind::greedy_pixel;
  DistanceMetric pixel = DistanceMetric::euclidean();  // euclidean or squared
  double lambda = 0.1;
  std::size_t shortlist_k = 20;
  bool shortlist_once = false;
  std::uint64_t seed = 0;

  bool needs_features() const {
    return kind == StrategyKind::greedy_semantic || kind == StrategyKind::s_then_p ||
           kind == StrategyKind::p_then_s || kind == StrategyKind::weighted;
  }
};

inline SelectionResult run_strategy(const StrategySpec& spec, std::span<const ViewRecord> initial,
                                    std::span<const ViewRecord> candidates, const RayModel& model,
                                    std::size_t count) {
  SelectionResult r;
  switch (spec.kind) {
    case StrategyKind::greedy_pixel:
      r = greedy_select(initial, candidates, spec.pixel, model, count);
      r.strategy = "greedy-pixel";
      return r;
    case StrategyKind::greedy_semantic:
      r = baseline_select(BaselineKind::semantic_only, 0.0, initial, candidates, model, count, spec.seed);
      r.strategy = "greedy-semantic";
      return r;
    case StrategyKind::fvs:
      return baseline_select(BaselineKind::fvs, 0.0, initial, candidates, model, count, spec.seed);
    case StrategyKind::weighted:
      return baseline_select(BaselineKind::weighted, spec.lambda, initial, candidates, model, count, spec.seed);
    case StrategyKind::random:
      return random_select(initial, candidates, spec.pixel, model, count, spec.seed);
    case StrategyKind::s_then_p:
    case StrategyKind::p_then_s: {
      SequentialOptions opt;
      opt.first = spec.kind == StrategyKind::s_then_p ? FirstCriterion::semantic : FirstCriterion::pixel;
      opt.shortlist_k = spec.shortlist_k;
      opt.pixel = spec.pixel;
      opt.shortlist_once = spec.shortlist_once;
      return sequential_select(initial, candidates, opt, model, count);
    }
  }
  throw std::logic_error("unhandled strategy kind");
}

struct RoundSchedule {
  std::size_t initial_count = 4;
  std::size_t per_round = 4;
  std::size_t rounds = 4;

  static RoundSchedule setting_one() { return {4, 4, 4}; }
  static RoundSchedule setting_two() { return {2, 2, 4}; }

  void validate() const {
    if (initial_count < 1 || per_round < 1) throw std::invalid_argument("schedule counts must be at least 1");
  }
  std::size_t total() const { return initial_count + per_round * rounds; }
};

using FeatureTable = std::unordered_map<std::string, FeatureVector>;

/// Supplies the semantic features valid in a given round (0-based). In a
/// real pipeline these come from renders of the current model, so they may
/// change between rounds.
using RoundFeatures = std::function<FeatureTable(std::size_t round)>;

struct ActiveLoopResult {
  std::vector<std::string> initial;
  std::vector<SelectionResult> rounds;
  std::vector<std::string> roster;  // initial followed by every acquisition in order
};

/// Runs `schedule.rounds` acquisitions of `schedule.per_round` views. Views
/// named in `initial_ids` start as training views; every pick becomes a
/// reference view for later rounds. Random strategies use an independent
/// seed per round derived from spec.seed.
inline ActiveLoopResult run_active_loop(const RoundSchedule& schedule, const StrategySpec& spec,
                                        std::span<const ViewRecord> views,
                                        const std::vector<std::string>& initial_ids, const RayModel& model,
                                        const RoundFeatures& features) {
  schedule.validate();
  require_unique_ids(views);
  if (initial_ids.size() != schedule.initial_count)
    throw std::invalid_argument("initial set has " + std::to_string(initial_ids.size()) + " views, schedule wants " +
                                std::to_string(schedule.initial_count));
  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < views.size(); ++i) by_id.emplace(views[i].id, i);
  for (const auto& id : initial_ids)
    if (!by_id.contains(id)) throw std::invalid_argument("initial view '" + id + "' not in the view set");

  ActiveLoopResult out;
  out.initial = initial_ids;
  out.roster = initial_ids;
  std::unordered_set<std::string> acquired(initial_ids.begin(), initial_ids.end());
  if (acquired.size() != initial_ids.size()) throw std::invalid_argument("initial set repeats a view id");

  for (std::size_t round = 0; round < schedule.rounds; ++round) {
    FeatureTable table;
    if (spec.needs_features()) table = features ? features(round) : FeatureTable{};

    std::vector<ViewRecord> refs, candidates;
    for (const auto& v : views) {
      ViewRecord r = v;
      if (spec.needs_features()) {
        auto it = table.find(v.id);
        if (it == table.end())
          throw std::invalid_argument("round " + std::to_string(round) + " has no feature for view '" + v.id + "'");
        r.feature = it->second;
      }
      if (acquired.contains(v.id)) {
        r.status = ViewStatus::training;
        refs.push_back(std::move(r));
      } else {
        r.status = ViewStatus::candidate;
        candidates.push_back(std::move(r));
      }
    }
    if (candidates.size() < schedule.per_round)
      throw std::invalid_argument("candidate pool exhausted in round " + std::to_string(round));

    StrategySpec round_spec = spec;
    round_spec.seed = derive_seed(spec.seed, round);
    auto result = run_strategy(round_spec, refs, candidates, model, schedule.per_round);
    for (const auto& id : result.order) {
      acquired.insert(id);
      out.roster.push_back(id);
    }
    out.rounds.push_back(std::move(result));
  }
  return out;
}

}  // namespace viewsel
