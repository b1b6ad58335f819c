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

// JSON reports. Keys are emitted in sorted order and doubles in shortest
// round-trip form, so identical runs produce identical bytes. Unbounded
// separations (first pick with no reference views) are written as null.
//
// Selection report schema:
//   command      subcommand name
//   flags        every option value used
//   fingerprint  FNV-1a over the bytes of every input file, hex
//   strategy, metric, seed, schedule {initial_count, per_round, rounds}
//   initial      initial view ids
//   rounds       [{order, separations, delta_tilde, strategy, metric, seed}]
//   roster       initial ids followed by every pick, in order

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "viewsel/hash.hpp"
#include "viewsel/io/file.hpp"
#include "viewsel/selection.hpp"

namespace viewsel::io {

using Json = nlohmann::json;

inline Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline Json to_json(const SelectionResult& r) {
  Json seps = Json::array();
  for (double s : r.separations) seps.push_back(finite_or_null(s));
  Json j{{"order", r.order},
         {"separations", seps},
         {"delta_tilde", finite_or_null(r.delta_tilde)},
         {"strategy", r.strategy},
         {"metric", r.metric}};
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  return j;
}

inline Json to_json(const OracleResult& r) {
  return Json{{"subset", r.subset},
              {"delta_star", finite_or_null(r.delta_star)},
              {"evaluated_subsets", r.evaluated_subsets}};
}

/// Fingerprint over the contents of the given files, in order.
inline std::uint64_t files_fingerprint(const std::vector<std::string>& paths) {
  Fnv1a h;
  for (const auto& p : paths) h.field(read_file(p));
  return h.digest();
}

inline std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace viewsel::io
