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

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "viewsel/geometry.hpp"

namespace viewsel {

/// Semantic embedding of one view. Entries finite, norm strictly positive.
class FeatureVector {
 public:
  FeatureVector() = default;
  explicit FeatureVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("feature vector must have positive dimension");
    double sq = 0.0;
    for (double v : values_) {
      if (!std::isfinite(v)) throw std::invalid_argument("feature vector has a non-finite entry");
      sq += v * v;
    }
    if (!(sq > 0.0)) throw std::invalid_argument("feature vector has zero norm");
    norm_ = std::sqrt(sq);
  }

  std::size_t dim() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double norm() const { return norm_; }

  bool operator==(const FeatureVector& o) const { return values_ == o.values_; }

 private:
  std::vector<double> values_;
  double norm_ = 0.0;
};

enum class ViewStatus { training, candidate, acquired };

inline const char* to_string(ViewStatus s) {
  switch (s) {
    case ViewStatus::training: return "training";
    case ViewStatus::candidate: return "candidate";
    case ViewStatus::acquired: return "acquired";
  }
  return "unknown";
}

struct ViewRecord {
  std::string id;
  CameraPose pose;
  std::optional<FeatureVector> feature;
  ViewStatus status = ViewStatus::candidate;
};

/// Throws if two records share an id.
inline void require_unique_ids(std::span<const ViewRecord> views) {
  std::unordered_set<std::string> seen;
  for (const auto& v : views)
    if (!seen.insert(v.id).second) throw std::invalid_argument("duplicate view id: " + v.id);
}

/// Throws unless every view carries a feature and all features share one dimension.
inline void require_features(std::span<const ViewRecord> views) {
  std::size_t dim = 0;
  for (const auto& v : views) {
    if (!v.feature) throw std::invalid_argument("view '" + v.id + "' has no semantic feature");
    if (dim == 0) dim = v.feature->dim();
    if (v.feature->dim() != dim) throw std::invalid_argument("feature dimensions differ within the view set");
  }
}

}  // namespace viewsel
