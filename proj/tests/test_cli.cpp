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

#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "viewsel/cli.hpp"

namespace viewsel::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

const std::string kFixtures = VIEWSEL_FIXTURE_DIR;
const std::string kTransforms = kFixtures + "/transforms_100.json";
const std::string kEmbeddings = kFixtures + "/embeddings_100.csv";
const std::string kRounds = kFixtures + "/round_{round}.csv";

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("viewsel_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "viewsel");
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  Json report(const std::string& name) const { return Json::parse(io::read_file(path(name))); }

  std::vector<std::string> roster(const std::string& name) const {
    return report(name)["roster"].get<std::vector<std::string>>();
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, FvsAndGreedyPixelProduceIdenticalRosters) {
  const std::vector<std::string> common{"select", "--transforms", kTransforms, "--initial", "r_0,r_50", "--count", "6"};
  auto a = common, b = common;
  a.insert(a.end(), {"--strategy", "fvs", "--out", path("fvs.json")});
  b.insert(b.end(), {"--strategy", "greedy-pixel", "--out", path("greedy.json")});
  ASSERT_EQ(run(a), kOk) << err_.str();
  ASSERT_EQ(run(b), kOk) << err_.str();
  EXPECT_EQ(roster("fvs.json"), roster("greedy.json"));
  EXPECT_EQ(roster("fvs.json").size(), 8u);
}

TEST_F(CliTest, SelectReportCarriesFlagsAndFingerprint) {
  ASSERT_EQ(run({"select", "--transforms", kTransforms, "--embeddings", kEmbeddings, "--initial", "r_3",
                 "--strategy", "s-then-p", "--shortlist", "10", "--count", "5", "--out", path("r.json")}),
            kOk)
      << err_.str();
  const auto r = report("r.json");
  EXPECT_EQ(r["command"], "select");
  EXPECT_EQ(r["flags"]["shortlist"], 10);
  EXPECT_EQ(r["fingerprint"].get<std::string>().size(), 16u);
  const auto ids = r["roster"].get<std::vector<std::string>>();
  EXPECT_EQ(ids.size(), 6u);
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
  EXPECT_EQ(ids.front(), "r_3");
}

TEST_F(CliTest, FingerprintTracksInputBytes) {
  const auto copy = path("emb.csv");
  fs::copy_file(kEmbeddings, copy);
  const std::vector<std::string> args{"select", "--transforms", kTransforms, "--embeddings", copy,
                                      "--strategy", "greedy-semantic", "--count", "3", "--out", path("a.json")};
  ASSERT_EQ(run(args), kOk) << err_.str();
  const auto before = report("a.json")["fingerprint"];
  io::write_file(copy, io::read_file(copy) + "\n");
  ASSERT_EQ(run(args), kOk) << err_.str();
  EXPECT_NE(report("a.json")["fingerprint"], before);
}

TEST_F(CliTest, ActiveLoopSettingsYieldExpectedRosterSizes) {
  for (const auto& [schedule, size] : std::vector<std::pair<std::string, std::size_t>>{{"4,4,4", 20}, {"2,2,4", 10}}) {
    ASSERT_EQ(run({"active-loop", "--transforms", kTransforms, "--round-embeddings", kRounds, "--strategy", "p-then-s",
                   "--schedule", schedule, "--out", path("loop.json")}),
              kOk)
        << err_.str();
    const auto ids = roster("loop.json");
    EXPECT_EQ(ids.size(), size);
    EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), size);
    EXPECT_EQ(report("loop.json")["rounds"].size(), 4u);
  }
}

TEST_F(CliTest, SeededRunsAreByteIdentical) {
  const std::vector<std::string> args{"active-loop", "--transforms", kTransforms, "--round-embeddings", kRounds,
                                      "--strategy", "random", "--seed", "11", "--out", path("x.json")};
  ASSERT_EQ(run(args), kOk);
  const auto first = io::read_file(path("x.json"));
  ASSERT_EQ(run(args), kOk);
  EXPECT_EQ(io::read_file(path("x.json")), first);
  auto other = args;
  other[8] = "12";
  ASSERT_EQ(run(other), kOk);
  EXPECT_NE(io::read_file(path("x.json")), first);
}

TEST_F(CliTest, OracleReportsRatio) {
  auto doc = io::parse_transforms(kTransforms);
  doc.views.resize(14);
  io::write_transforms(doc, path("small.json"));
  ASSERT_EQ(run({"oracle", "--transforms", path("small.json"), "--initial", "r_0", "--count", "4", "--out",
                 path("o.json")}),
            kOk)
      << err_.str();
  const auto r = report("o.json");
  EXPECT_GE(r["ratio"].get<double>(), 0.5);
  EXPECT_EQ(r["oracle"]["evaluated_subsets"], 715);
  EXPECT_TRUE(r["certified"].get<bool>());
  EXPECT_EQ(run({"oracle", "--transforms", kTransforms, "--count", "6", "--out", path("big.json")}), kInputError);
}

TEST_F(CliTest, VerifySubcommandsExitCodes) {
  EXPECT_EQ(run({"verify-lemma2", "--instances", "40", "--seed", "7", "--out", path("l2.json")}), kOk);
  EXPECT_TRUE(report("l2.json")["pass"].get<bool>());
  EXPECT_EQ(run({"verify-lemma3", "--scene", "ball", "--pairs", "20", "--out", path("l3.json")}), kOk);
  EXPECT_EQ(run({"verify-lemma1", "--ray-samples", "20000", "--quad", "16", "--out", path("l1.json")}), kOk)
      << out_.str();
  EXPECT_EQ(run({"verify-lemma1", "--ray-samples", "20000", "--quad", "16", "--tol", "0"}), kCheckFailed);
  EXPECT_EQ(run({"verify-lemma2", "--pool", "3", "--count", "4"}), kInputError);
}

TEST_F(CliTest, RenderWritesDeterministicPpm) {
  const std::vector<std::string> args{"render", "--scene", "ball", "--transforms", kTransforms, "--pose-index", "7",
                                      "--size", "12x9", "--samples", "32", "--stratified", "--seed", "3",
                                      "--out", path("v.ppm")};
  ASSERT_EQ(run(args), kOk) << err_.str();
  const auto img = io::read_ppm(path("v.ppm"));
  EXPECT_EQ(img.width(), 12u);
  EXPECT_EQ(img.height(), 9u);
  const auto first = io::read_file(path("v.ppm"));
  ASSERT_EQ(run(args), kOk);
  EXPECT_EQ(io::read_file(path("v.ppm")), first);
  EXPECT_EQ(run({"render", "--transforms", kTransforms, "--pose-index", "100", "--out", path("w.ppm")}), kInputError);
  EXPECT_EQ(run({"render", "--transforms", kTransforms, "--size", "12", "--out", path("w.ppm")}), kInputError);
  EXPECT_EQ(run({"render", "--scene", "teapot", "--transforms", kTransforms, "--out", path("w.ppm")}), kInputError);
}

TEST_F(CliTest, LossesTable) {
  ColorImage a(1, 1), b(1, 1, {1, 1, 0});
  io::write_ppm(a, path("a.ppm"));
  io::write_ppm(b, path("b.ppm"));
  io::write_file(path("e.csv"), "id,f0,f1\na,1,0\nb,0,2\n");
  ASSERT_EQ(run({"losses", "--images", path("a.ppm") + "," + path("b.ppm"), "--embeddings", path("e.csv"),
                 "--pairs", "a:b,a:a", "--out", path("l.csv")}),
            kOk)
      << err_.str();
  EXPECT_EQ(io::read_file(path("l.csv")),
            "id_a,id_b,l_macro,l_micro_pairwise,l_micro_variance,l_micro_variance_r,l_micro_variance_g,"
            "l_micro_variance_b,l_nerf\n"
            "a,b,1,1.4142135623730951,0.1111111111111111,0.25,0.25,0,2\n"
            "a,a,0,0,0,0,0,0,0\n");
  EXPECT_EQ(run({"losses", "--images", path("a.ppm"), "--pairs", "a:z"}), kInputError);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({}), kInputError);
  EXPECT_EQ(run({"bogus"}), kInputError);
  EXPECT_EQ(run({"--help"}), kOk);
  EXPECT_EQ(run({"select", "--transforms", kFixtures + "/missing.json", "--out", path("m.json")}), kInputError);
  EXPECT_EQ(run({"select", "--transforms", kTransforms, "--initial", "nope", "--out", path("m.json")}), kInputError);
  EXPECT_EQ(run({"select", "--transforms", kTransforms, "--strategy", "greedy-semantic", "--out", path("m.json")}),
            kInputError);
  EXPECT_EQ(run({"select", "--transforms", kTransforms, "--strategy", "sideways", "--out", path("m.json")}),
            kInputError);
  EXPECT_EQ(run({"select", "--transforms", kTransforms, "--theta-band", "1", "--out", path("m.json")}), kInputError);
  EXPECT_EQ(run({"active-loop", "--transforms", kTransforms, "--schedule", "4,4", "--out", path("m.json")}),
            kInputError);
  EXPECT_EQ(run({"active-loop", "--transforms", kTransforms, "--schedule", "4,40,4", "--out", path("m.json")}),
            kInputError);
  EXPECT_FALSE(fs::exists(path("m.json")));
}

}  // namespace
}  // namespace viewsel::cli
