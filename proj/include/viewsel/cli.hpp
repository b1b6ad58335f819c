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

// Command-line front end. Exit codes: 0 success or check passed, 1 check
// failed, 2 bad input (unreadable file, malformed document, invalid flag
// combination).

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "viewsel/active_loop.hpp"
#include "viewsel/distances.hpp"
#include "viewsel/io/embeddings.hpp"
#include "viewsel/io/file.hpp"
#include "viewsel/io/ppm.hpp"
#include "viewsel/io/report.hpp"
#include "viewsel/io/transforms.hpp"
#include "viewsel/losses.hpp"
#include "viewsel/renderer.hpp"
#include "viewsel/selection.hpp"
#include "viewsel/verify.hpp"

namespace viewsel::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

namespace detail {

using io::InputError;
using io::Json;

inline std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::vector<double> parse_numbers(const std::string& s, std::size_t expected, const std::string& flag) {
  std::vector<double> out;
  for (const auto& part : split_list(s)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size()) throw InputError(flag + ": '" + part + "' is not a number");
    out.push_back(v);
  }
  if (out.size() != expected)
    throw InputError(flag + " expects " + std::to_string(expected) + " comma-separated values");
  return out;
}

struct SelectOptions {
  std::string transforms;
  std::string embeddings;
  std::string initial;
  std::string strategy = "greedy-pixel";
  std::string metric = "euclidean";
  double lambda = 0.1;
  std::size_t shortlist = 20;
  bool shortlist_once = false;
  std::size_t count = 4;
  std::uint64_t seed = 0;
  double t1 = 1.0;
  double t2 = 1.0;
  std::string theta_band = "0,1.0471975511965976";
  std::string out;

  void add_to(CLI::App* app, bool with_strategy) {
    app->add_option("--transforms", transforms, "camera transforms document")->required();
    app->add_option("--embeddings", embeddings, "embeddings table (id,f0,...)");
    app->add_option("--initial", initial, "comma-separated initial view ids");
    if (with_strategy)
      app->add_option("--strategy", strategy,
                      "greedy-pixel|greedy-semantic|s-then-p|p-then-s|weighted|fvs|random");
    app->add_option("--metric", metric, with_strategy ? "pixel metric: euclidean|squared"
                                                      : "euclidean|squared|semantic|weighted");
    app->add_option("--lambda", lambda, "weight of the pixel term for weighted selection");
    app->add_option("--shortlist", shortlist, "shortlist size for s-then-p / p-then-s");
    app->add_flag("--shortlist-once", shortlist_once, "compute the shortlist once per call instead of per pick");
    app->add_option("--count", count, "views to select");
    app->add_option("--seed", seed, "random seed");
    app->add_option("--t1", t1, "ray travel length of the first view");
    app->add_option("--t2", t2, "ray travel length of the second view");
    app->add_option("--theta-band", theta_band, "elevation band LO,HI in radians");
    app->add_option("--out", out, "report path")->required();
  }

  Json flags() const {
    return Json{{"transforms", transforms}, {"embeddings", embeddings}, {"initial", initial},
                {"strategy", strategy},     {"metric", metric},         {"lambda", lambda},
                {"shortlist", shortlist},   {"shortlist_once", shortlist_once},
                {"count", count},           {"seed", seed},             {"t1", t1},
                {"t2", t2},                 {"theta_band", theta_band}, {"out", out}};
  }

  RayModel model() const {
    const auto band = parse_numbers(theta_band, 2, "--theta-band");
    RayModel m{band[0], band[1], t1, t2};
    m.validate();
    return m;
  }

  DistanceMetric pixel_metric() const {
    if (metric == "euclidean") return DistanceMetric::euclidean();
    if (metric == "squared") return DistanceMetric::squared();
    throw InputError("--metric must be euclidean or squared for this strategy");
  }

  DistanceMetric any_metric() const {
    if (metric == "semantic") return DistanceMetric::semantic();
    if (metric == "weighted") return DistanceMetric::weighted(lambda);
    return pixel_metric();
  }

  StrategySpec spec() const {
    StrategySpec s;
    s.kind = parse_strategy(strategy);
    s.pixel = pixel_metric();
    s.lambda = lambda;
    s.shortlist_k = shortlist;
    s.shortlist_once = shortlist_once;
    s.seed = seed;
    return s;
  }
};

struct LoadedViews {
  io::TransformsDocument doc;
  std::vector<ViewRecord> initial;
  std::vector<ViewRecord> candidates;
  std::vector<std::string> inputs;  // files read, for the fingerprint
};

inline void attach_features(std::vector<ViewRecord>& views, const io::EmbeddingTable& table) {
  for (auto& v : views) {
    auto it = table.find(v.id);
    if (it != table.end()) v.feature = it->second;
  }
}

inline LoadedViews load_views(const SelectOptions& o, std::ostream& err) {
  LoadedViews lv;
  lv.doc = io::parse_transforms(o.transforms);
  lv.inputs.push_back(o.transforms);
  for (const auto& w : lv.doc.warnings) err << "warning: " << w << "\n";
  if (!o.embeddings.empty()) {
    attach_features(lv.doc.views, io::parse_embeddings(o.embeddings));
    lv.inputs.push_back(o.embeddings);
  }
  const auto ids = split_list(o.initial);
  const std::set<std::string> wanted(ids.begin(), ids.end());
  std::set<std::string> found;
  for (auto v : lv.doc.views) {
    if (wanted.contains(v.id)) {
      v.status = ViewStatus::training;
      found.insert(v.id);
      lv.initial.push_back(std::move(v));
    } else {
      lv.candidates.push_back(std::move(v));
    }
  }
  for (const auto& id : wanted)
    if (!found.contains(id)) throw InputError("--initial names unknown view '" + id + "'");
  return lv;
}

inline std::vector<std::string> ids_of(const std::vector<ViewRecord>& views) {
  std::vector<std::string> out;
  for (const auto& v : views) out.push_back(v.id);
  return out;
}

inline int cmd_select(const SelectOptions& o, std::ostream& out, std::ostream& err) {
  const auto lv = load_views(o, err);
  const auto spec = o.spec();
  const auto result = run_strategy(spec, lv.initial, lv.candidates, o.model(), o.count);

  auto roster = ids_of(lv.initial);
  roster.insert(roster.end(), result.order.begin(), result.order.end());
  Json report{{"command", "select"},
              {"flags", o.flags()},
              {"fingerprint", io::hex64(io::files_fingerprint(lv.inputs))},
              {"strategy", result.strategy},
              {"metric", result.metric},
              {"seed", o.seed},
              {"schedule", nullptr},
              {"initial", ids_of(lv.initial)},
              {"rounds", Json::array({io::to_json(result)})},
              {"roster", roster}};
  io::write_file(o.out, io::dump_report(report));
  out << "selected " << result.order.size() << " views, delta_tilde " << result.delta_tilde << "\n";
  return kOk;
}

struct ActiveLoopOptions {
  std::string schedule = "4,4,4";
  std::string round_embeddings;
};

inline std::string round_path(const std::string& tmpl, std::size_t round) {
  std::string p = tmpl;
  const std::string key = "{round}";
  for (auto pos = p.find(key); pos != std::string::npos; pos = p.find(key))
    p.replace(pos, key.size(), std::to_string(round));
  return p;
}

inline int cmd_active_loop(const SelectOptions& o, const ActiveLoopOptions& a, std::ostream& out,
                           std::ostream& err) {
  const auto nums = parse_numbers(a.schedule, 3, "--schedule");
  for (double n : nums)
    if (n < 0 || n != std::floor(n)) throw InputError("--schedule values must be nonnegative integers");
  const RoundSchedule schedule{static_cast<std::size_t>(nums[0]), static_cast<std::size_t>(nums[1]),
                               static_cast<std::size_t>(nums[2])};
  schedule.validate();

  auto lv = load_views(o, err);
  std::vector<ViewRecord> views = lv.doc.views;
  std::vector<std::string> initial_ids = ids_of(lv.initial);
  if (o.initial.empty()) {
    if (views.size() < schedule.initial_count) throw InputError("fewer views than the initial count");
    initial_ids.clear();
    for (std::size_t i = 0; i < schedule.initial_count; ++i) initial_ids.push_back(views[i].id);
  } else {
    // keep the user's order
    initial_ids = split_list(o.initial);
  }

  const auto spec = o.spec();
  std::vector<FeatureTable> per_round;
  if (spec.needs_features()) {
    if (a.round_embeddings.empty() && o.embeddings.empty())
      throw InputError("strategy needs --round-embeddings or --embeddings");
    for (std::size_t r = 0; r < schedule.rounds; ++r) {
      const std::string path = a.round_embeddings.empty() ? o.embeddings : round_path(a.round_embeddings, r);
      per_round.push_back(io::parse_embeddings(path));
      lv.inputs.push_back(path);
    }
  }
  const auto result = run_active_loop(schedule, spec, views, initial_ids, o.model(),
                                      [&](std::size_t r) { return per_round.at(r); });

  Json rounds = Json::array();
  for (const auto& r : result.rounds) rounds.push_back(io::to_json(r));
  Json flags = o.flags();
  flags["schedule"] = a.schedule;
  flags["round_embeddings"] = a.round_embeddings;
  Json report{{"command", "active-loop"},
              {"flags", flags},
              {"fingerprint", io::hex64(io::files_fingerprint(lv.inputs))},
              {"strategy", o.strategy},
              {"metric", o.metric},
              {"seed", o.seed},
              {"schedule",
               {{"initial_count", schedule.initial_count}, {"per_round", schedule.per_round}, {"rounds", schedule.rounds}}},
              {"initial", result.initial},
              {"rounds", rounds},
              {"roster", result.roster}};
  io::write_file(o.out, io::dump_report(report));
  out << "roster of " << result.roster.size() << " views after " << schedule.rounds << " rounds\n";
  return kOk;
}

inline int cmd_oracle(const SelectOptions& o, std::ostream& out, std::ostream& err) {
  const auto lv = load_views(o, err);
  const auto metric = o.any_metric();
  const auto model = o.model();
  const auto greedy = greedy_select(lv.initial, lv.candidates, metric, model, o.count);
  const auto oracle = brute_force_optimal(lv.initial, lv.candidates, metric, model, o.count);
  const double ratio = approximation_ratio(greedy, oracle);
  const bool certified = metric.is_metric();
  const bool pass = !certified || ratio >= 0.5;
  Json report{{"command", "oracle"},
              {"flags", o.flags()},
              {"fingerprint", io::hex64(io::files_fingerprint(lv.inputs))},
              {"metric", to_string(metric.kind)},
              {"greedy", io::to_json(greedy)},
              {"oracle", io::to_json(oracle)},
              {"ratio", io::finite_or_null(ratio)},
              {"certified", certified},
              {"pass", pass}};
  io::write_file(o.out, io::dump_report(report));
  out << "delta* " << oracle.delta_star << ", greedy " << greedy.delta_tilde << ", ratio " << ratio << "\n";
  return pass ? kOk : kCheckFailed;
}

inline void maybe_write(const std::string& path, const Json& report) {
  if (!path.empty()) io::write_file(path, io::dump_report(report));
}

struct AffineCheckOptions {
  double t1 = 2.0, t2 = 3.0;
  std::string theta_band = "0,1.0471975511965976";
  int pairs = 6;
  std::int64_t ray_samples = 200'000;
  int quad = 64;
  std::uint64_t seed = 0;
  double tol = 0.02;
  std::string out;
};

inline int cmd_verify_affine(const AffineCheckOptions& o, std::ostream& out) {
  const auto band = parse_numbers(o.theta_band, 2, "--theta-band");
  verify::AffineCheckConfig cfg;
  cfg.model = RayModel{band[0], band[1], o.t1, o.t2};
  cfg.pairs = o.pairs;
  cfg.ray_samples = o.ray_samples;
  cfg.quad = o.quad;
  cfg.seed = o.seed;
  cfg.tol = o.tol;
  const auto rep = verify::check_affine_pixel_distance(cfg);
  Json samples = Json::array();
  for (const auto& [x, y] : rep.samples) samples.push_back({x, y});
  Json report{{"command", "verify-lemma1"},
              {"flags",
               {{"t1", o.t1}, {"t2", o.t2}, {"theta_band", o.theta_band}, {"pairs", o.pairs},
                {"ray_samples", o.ray_samples}, {"quad", o.quad}, {"seed", o.seed}, {"tol", o.tol}}},
              {"samples", samples},
              {"slope", rep.fit.slope},
              {"intercept", rep.fit.intercept},
              {"r_squared", rep.fit.r_squared},
              {"expected_slope", rep.expected_slope},
              {"slope_rel_error", rep.slope_rel_error},
              {"pass", rep.pass}};
  maybe_write(o.out, report);
  out << "slope " << rep.fit.slope << " (expected " << rep.expected_slope << "), intercept " << rep.fit.intercept
      << ", r^2 " << rep.fit.r_squared << (rep.pass ? " PASS" : " FAIL") << "\n";
  return rep.pass ? kOk : kCheckFailed;
}

struct RatioCheckOptions {
  std::size_t instances = 500, pool = 12, count = 4;
  std::uint64_t seed = 7;
  std::string out;
};

inline int cmd_verify_ratio(const RatioCheckOptions& o, std::ostream& out) {
  verify::RatioBatteryConfig cfg{o.instances, o.pool, o.count, 1, o.seed};
  if (o.count > o.pool) throw InputError("--count exceeds --pool");
  const auto rep = verify::check_greedy_ratio(cfg);
  Json report{{"command", "verify-lemma2"},
              {"flags", {{"instances", o.instances}, {"pool", o.pool}, {"count", o.count}, {"seed", o.seed}}},
              {"min_ratio", io::finite_or_null(rep.min_ratio)},
              {"mean_ratio", rep.mean_ratio},
              {"violations", rep.violations},
              {"monotonic_violations", rep.monotonic_violations},
              {"optimal_hits", rep.optimal_hits},
              {"pass", rep.pass}};
  maybe_write(o.out, report);
  out << "min ratio " << rep.min_ratio << ", mean " << rep.mean_ratio << ", violations " << rep.violations
      << (rep.pass ? " PASS" : " FAIL") << "\n";
  return rep.pass ? kOk : kCheckFailed;
}

struct ColorBoundOptions {
  std::string scene = "gradient";
  std::size_t pairs = 100;
  std::uint64_t seed = 0;
  int samples = 64;
  std::string out;
};

inline int cmd_verify_color_bound(const ColorBoundOptions& o, std::ostream& out) {
  verify::ColorBoundConfig cfg;
  cfg.scene = o.scene;
  cfg.pairs = o.pairs;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  const auto rep = verify::check_color_bound(cfg);
  Json report{{"command", "verify-lemma3"},
              {"flags", {{"scene", o.scene}, {"pairs", o.pairs}, {"seed", o.seed}, {"samples", o.samples}}},
              {"lipschitz_const", rep.lipschitz_const},
              {"max_ratio", rep.check.max_ratio},
              {"bound", rep.check.bound},
              {"pass", rep.check.pass}};
  maybe_write(o.out, report);
  out << "max ratio " << rep.check.max_ratio << " vs bound " << rep.check.bound
      << (rep.check.pass ? " PASS" : " FAIL") << "\n";
  return rep.check.pass ? kOk : kCheckFailed;
}

struct RenderOptions {
  std::string scene = "gradient";
  std::string transforms;
  std::size_t pose_index = 0;
  std::string size = "64x64";
  int samples = 64;
  std::uint64_t seed = 0;
  bool stratified = false;
  double fov = 0.0;
  double position_scale = 1.0;
  std::string out;
};

inline int cmd_render(const RenderOptions& o, std::ostream& out, std::ostream& err) {
  const auto doc = io::parse_transforms(o.transforms);
  for (const auto& w : doc.warnings) err << "warning: " << w << "\n";
  if (o.pose_index >= doc.views.size())
    throw InputError("--pose-index " + std::to_string(o.pose_index) + " out of range (" +
                     std::to_string(doc.views.size()) + " views)");
  const auto x = o.size.find('x');
  if (x == std::string::npos) throw InputError("--size must look like WxH");
  std::size_t w = 0, h = 0;
  try {
    w = std::stoul(o.size.substr(0, x));
    h = std::stoul(o.size.substr(x + 1));
  } catch (const std::exception&) {
    throw InputError("--size must look like WxH");
  }
  const double fov = o.fov > 0.0 ? o.fov : doc.camera_angle_x.value_or(0.6911112070083618);
  CameraPose pose = doc.views[o.pose_index].pose;
  pose.position = pose.position * o.position_scale;
  RenderConfig cfg;
  cfg.n_samples = o.samples;
  cfg.seed = o.seed;
  cfg.stratified = o.stratified;
  const auto img = render_image(scenes::by_name(o.scene), pose, fov, w, h, cfg);
  io::write_ppm(img, o.out);
  out << "rendered " << w << "x" << h << " view '" << doc.views[o.pose_index].id << "'\n";
  return kOk;
}

struct LossesOptions {
  std::string images;
  std::string embeddings;
  std::string pairs;
  std::string out;
};

inline std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline int cmd_losses(const LossesOptions& o, std::ostream& out) {
  std::unordered_map<std::string, ColorImage> images;
  for (const auto& path : split_list(o.images)) {
    const std::string id = std::filesystem::path(path).stem().string();
    if (!images.emplace(id, io::read_ppm(path)).second) throw InputError("two images share the id '" + id + "'");
  }
  io::EmbeddingTable table;
  if (!o.embeddings.empty()) table = io::parse_embeddings(o.embeddings);

  std::string csv =
      "id_a,id_b,l_macro,l_micro_pairwise,l_micro_variance,l_micro_variance_r,l_micro_variance_g,"
      "l_micro_variance_b,l_nerf\n";
  const auto pairs = split_list(o.pairs);
  if (pairs.empty()) throw InputError("--pairs names no pairs");
  for (const auto& p : pairs) {
    const auto colon = p.find(':');
    if (colon == std::string::npos) throw InputError("pair '" + p + "' must look like idA:idB");
    const std::string a = p.substr(0, colon), b = p.substr(colon + 1);
    auto ia = images.find(a), ib = images.find(b);
    if (ia == images.end() || ib == images.end()) throw InputError("pair '" + p + "' names an unknown image");
    std::string macro;
    if (!table.empty()) {
      auto fa = table.find(a), fb = table.find(b);
      if (fa == table.end() || fb == table.end()) throw InputError("pair '" + p + "' has no embedding");
      macro = fmt_double(l_macro(fa->second, fb->second));
    }
    const std::vector<ColorImage> both{ia->second, ib->second};
    const auto per_channel = l_micro_variance_per_channel(both);
    csv += a + "," + b + "," + macro + "," + fmt_double(l_micro_pairwise(ia->second, ib->second)) + "," +
           fmt_double(l_micro_variance(both)) + "," + fmt_double(per_channel[0]) + "," + fmt_double(per_channel[1]) +
           "," + fmt_double(per_channel[2]) + "," + fmt_double(nerf_photometric_loss(ia->second, ib->second)) + "\n";
  }
  if (o.out.empty())
    out << csv;
  else
    io::write_file(o.out, csv);
  return kOk;
}

}  // namespace detail

/// Runs the CLI on `args` (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"viewsel: informative view selection and verification", "viewsel"};
  app.require_subcommand(1);

  detail::SelectOptions select_opts, loop_opts, oracle_opts;
  detail::ActiveLoopOptions loop_extra;
  detail::AffineCheckOptions l1;
  detail::RatioCheckOptions l2;
  detail::ColorBoundOptions l3;
  detail::RenderOptions ro;
  detail::LossesOptions lo;

  auto* select = app.add_subcommand("select", "select views from a candidate pool");
  select_opts.add_to(select, true);

  auto* loop = app.add_subcommand("active-loop", "multi-round acquisition");
  loop_opts.add_to(loop, true);
  loop->add_option("--schedule", loop_extra.schedule, "INIT,PER,ROUNDS");
  loop->add_option("--round-embeddings", loop_extra.round_embeddings,
                   "per-round embeddings path; '{round}' is replaced by the 0-based round");

  auto* oracle = app.add_subcommand("oracle", "exhaustive optimum and greedy ratio");
  oracle_opts.add_to(oracle, false);

  auto* v1 = app.add_subcommand("verify-lemma1", "pixel distance is affine in squared camera distance");
  v1->add_option("--t1", l1.t1);
  v1->add_option("--t2", l1.t2);
  v1->add_option("--theta-band", l1.theta_band, "LO,HI radians");
  v1->add_option("--pairs", l1.pairs);
  v1->add_option("--ray-samples", l1.ray_samples);
  v1->add_option("--quad", l1.quad);
  v1->add_option("--seed", l1.seed);
  v1->add_option("--tol", l1.tol, "relative slope tolerance");
  v1->add_option("--out", l1.out);

  auto* v2 = app.add_subcommand("verify-lemma2", "greedy max-min ratio battery");
  v2->add_option("--instances", l2.instances);
  v2->add_option("--pool", l2.pool);
  v2->add_option("--count", l2.count);
  v2->add_option("--seed", l2.seed);
  v2->add_option("--out", l2.out);

  auto* v3 = app.add_subcommand("verify-lemma3", "color difference vs camera displacement bound");
  v3->add_option("--scene", l3.scene);
  v3->add_option("--pairs", l3.pairs);
  v3->add_option("--seed", l3.seed);
  v3->add_option("--samples", l3.samples);
  v3->add_option("--out", l3.out);

  auto* render = app.add_subcommand("render", "render a synthetic scene from a camera pose");
  render->add_option("--scene", ro.scene);
  render->add_option("--transforms", ro.transforms)->required();
  render->add_option("--pose-index", ro.pose_index);
  render->add_option("--size", ro.size, "WxH");
  render->add_option("--samples", ro.samples);
  render->add_option("--seed", ro.seed);
  render->add_flag("--stratified", ro.stratified);
  render->add_option("--fov", ro.fov, "horizontal field of view, radians (default: camera_angle_x)");
  render->add_option("--position-scale", ro.position_scale, "multiplier applied to the camera position");
  render->add_option("--out", ro.out)->required();

  auto* losses = app.add_subcommand("losses", "consistency losses between image pairs, as CSV");
  losses->add_option("--images", lo.images, "comma-separated PPM paths; ids are file stems")->required();
  losses->add_option("--embeddings", lo.embeddings);
  losses->add_option("--pairs", lo.pairs, "idA:idB,...")->required();
  losses->add_option("--out", lo.out);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (select->parsed()) return detail::cmd_select(select_opts, out, err);
    if (loop->parsed()) return detail::cmd_active_loop(loop_opts, loop_extra, out, err);
    if (oracle->parsed()) return detail::cmd_oracle(oracle_opts, out, err);
    if (v1->parsed()) return detail::cmd_verify_affine(l1, out);
    if (v2->parsed()) return detail::cmd_verify_ratio(l2, out);
    if (v3->parsed()) return detail::cmd_verify_color_bound(l3, out);
    if (render->parsed()) return detail::cmd_render(ro, out, err);
    if (losses->parsed()) return detail::cmd_losses(lo, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace viewsel::cli
