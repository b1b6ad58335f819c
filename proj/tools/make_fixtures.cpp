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

// Writes the checked-in test fixtures: a 100-view camera document on a
// sphere around the origin, a base embeddings table and one table per
// acquisition round. Views fall into 5 azimuth sectors whose embeddings
// share a sector prototype plus a view-specific perturbation.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "viewsel/io/embeddings.hpp"
#include "viewsel/io/transforms.hpp"
#include "viewsel/rng.hpp"

using namespace viewsel;

namespace {

Mat3 look_at_origin(const Vec3& eye) {
  // camera looks down its −z axis, world z is up
  const Vec3 back = normalized(eye);
  Vec3 right{-back.y, back.x, 0.0};
  right = norm(right) > 1e-9 ? normalized(right) : Vec3{1, 0, 0};
  const Vec3 up{back.y * right.z - back.z * right.y, back.z * right.x - back.x * right.z,
                back.x * right.y - back.y * right.x};
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    r(i, 0) = right[i];
    r(i, 1) = up[i];
    r(i, 2) = back[i];
  }
  return r;
}

io::EmbeddingTable embeddings_for(const std::vector<ViewRecord>& views, std::uint64_t seed, std::size_t dim) {
  Rng rng(seed);
  std::vector<std::vector<double>> protos(5, std::vector<double>(dim));
  Rng proto_rng(1234);
  for (auto& p : protos)
    for (auto& x : p) x = proto_rng.uniform(-1.0, 1.0);
  io::EmbeddingTable table;
  for (std::size_t i = 0; i < views.size(); ++i) {
    const auto& pos = views[i].pose.position;
    double az = std::atan2(pos.y, pos.x);
    if (az < 0) az += 2.0 * std::numbers::pi;
    const auto sector = static_cast<std::size_t>(az / (2.0 * std::numbers::pi) * 5.0) % 5;
    std::vector<double> f = protos[sector];
    for (auto& x : f) x += rng.uniform(-0.3, 0.3);
    // unit-normalize like the embedding utility does
    double n = 0.0;
    for (double x : f) n += x * x;
    n = std::sqrt(n);
    for (auto& x : f) x /= n;
    table.emplace(views[i].id, FeatureVector(std::move(f)));
  }
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : ".";
  io::TransformsDocument doc;
  doc.camera_angle_x = 0.6911112070083618;
  Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    const double az = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double el = rng.uniform(0.1, 1.2);
    const double radius = 1.5;
    const Vec3 eye = direction_from_angles({el, az}) * radius;
    ViewRecord v;
    v.id = "r_" + std::to_string(i);
    v.pose = CameraPose(eye, look_at_origin(eye));
    doc.views.push_back(std::move(v));
  }
  io::write_transforms(doc, dir + "/transforms_100.json");
  io::write_embeddings(embeddings_for(doc.views, 1, 8), dir + "/embeddings_100.csv");
  for (int r = 0; r < 4; ++r)
    io::write_embeddings(embeddings_for(doc.views, 100 + static_cast<std::uint64_t>(r), 8),
                         dir + "/round_" + std::to_string(r) + ".csv");
  std::printf("wrote fixtures to %s\n", dir.c_str());
  return 0;
}
