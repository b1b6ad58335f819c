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

// Blender-synthetic camera documents:
//   {"camera_angle_x": fov, "frames": [{"file_path": "./train/r_0",
//                                       "transform_matrix": [[4x4]]}, …]}
// The transform is camera-to-world; its translation column is the camera
// center and its upper-left 3x3 block the world-from-camera rotation.

#include <Eigen/Dense>

#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "viewsel/geometry.hpp"
#include "viewsel/io/file.hpp"
#include "viewsel/view.hpp"

namespace viewsel::io {

struct TransformsDocument {
  std::optional<double> camera_angle_x;
  std::vector<ViewRecord> views;
  std::vector<std::string> warnings;
};

/// Nearest orthonormal matrix (polar factor UVᵀ of the SVD).
inline Mat3 nearest_rotation(const Mat3& r) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = r(i, j);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix3d q = svd.matrixU() * svd.matrixV().transpose();
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = q(i, j);
  return out;
}

inline TransformsDocument parse_transforms_text(const std::string& text, const std::string& origin = "<memory>") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(origin + ": malformed transforms document: " + e.what());
  }
  auto fail = [&](const std::string& what) { return InputError(origin + ": " + what); };
  if (!doc.is_object() || !doc.contains("frames") || !doc["frames"].is_array())
    throw fail("transforms document needs a 'frames' array");

  TransformsDocument out;
  if (doc.contains("camera_angle_x")) {
    if (!doc["camera_angle_x"].is_number()) throw fail("camera_angle_x must be a number");
    out.camera_angle_x = doc["camera_angle_x"].get<double>();
  }
  std::size_t index = 0;
  for (const auto& frame : doc["frames"]) {
    const std::string where = "frame " + std::to_string(index++);
    if (!frame.is_object() || !frame.contains("file_path") || !frame["file_path"].is_string())
      throw fail(where + " has no file_path");
    if (!frame.contains("transform_matrix")) throw fail(where + " has no transform_matrix");
    const auto& tm = frame["transform_matrix"];
    if (!tm.is_array() || tm.size() != 4) throw fail(where + ": transform_matrix must be 4x4");
    double m[4][4];
    for (int i = 0; i < 4; ++i) {
      if (!tm[i].is_array() || tm[i].size() != 4) throw fail(where + ": transform_matrix must be 4x4");
      for (int j = 0; j < 4; ++j) {
        if (!tm[i][j].is_number()) throw fail(where + ": transform_matrix entries must be numbers");
        m[i][j] = tm[i][j].get<double>();
        if (!std::isfinite(m[i][j])) throw fail(where + ": non-finite transform entry");
      }
    }
    ViewRecord v;
    v.id = std::filesystem::path(frame["file_path"].get<std::string>()).stem().string();
    if (v.id.empty()) throw fail(where + ": empty file_path stem");
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = m[i][j];
    const double det = r.determinant();
    if (!(det > 0.0)) throw fail(where + " ('" + v.id + "'): rotation determinant is not positive");
    if (!is_rotation(r)) {
      out.warnings.push_back(where + " ('" + v.id + "'): rotation not orthonormal, projected to nearest rotation");
      r = nearest_rotation(r);
    }
    v.pose = CameraPose({m[0][3], m[1][3], m[2][3]}, r);
    v.status = ViewStatus::candidate;
    out.views.push_back(std::move(v));
  }
  try {
    require_unique_ids(out.views);
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
  return out;
}

inline TransformsDocument parse_transforms(const std::string& path) {
  return parse_transforms_text(read_file(path), path);
}

inline std::string serialize_transforms(const TransformsDocument& doc) {
  nlohmann::ordered_json out;
  if (doc.camera_angle_x) out["camera_angle_x"] = *doc.camera_angle_x;
  out["frames"] = nlohmann::ordered_json::array();
  for (const auto& v : doc.views) {
    const Mat3 r = v.pose.rotation.value_or(Mat3::identity());
    const Vec3& p = v.pose.position;
    nlohmann::ordered_json frame;
    frame["file_path"] = "./" + v.id + ".png";
    frame["transform_matrix"] = {{r(0, 0), r(0, 1), r(0, 2), p.x},
                                 {r(1, 0), r(1, 1), r(1, 2), p.y},
                                 {r(2, 0), r(2, 1), r(2, 2), p.z},
                                 {0.0, 0.0, 0.0, 1.0}};
    out["frames"].push_back(std::move(frame));
  }
  return out.dump(2) + "\n";
}

inline void write_transforms(const TransformsDocument& doc, const std::string& path) {
  write_file(path, serialize_transforms(doc));
}

}  // namespace viewsel::io
