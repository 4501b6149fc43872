// Copyright 2026 The inv3412 Authors.
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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "inv3412/json_io.hpp"

namespace inv3412 {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("inv3412_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliRun run(const std::string& args, const std::string& env = "") {
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + INV3412_CLI + std::string(" ") + args +
                            " 2>" + err.string();
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err);
    return r;
  }

  fs::path dir_;
};

TEST_F(Cli, GenfunMotzkinJson) {
  const CliRun r = run("genfun --r 0 --order 12 --format json");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["content_hash"], content_hash(j["data"].dump()));
  EXPECT_EQ(j["config"]["r"], 0);
  const auto& first = j["data"]["results"][0];
  EXPECT_EQ(first["kind"], "I");
  EXPECT_EQ(first["series"][12], "15511");
  EXPECT_EQ(j["data"]["results"].size(), 4u);
}

TEST_F(Cli, GenfunText) {
  const CliRun r = run("genfun --r 1 --order 8");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("I_1(x) = (-1 + 2*x)/(2*x^2 - 2*x^3) + (1 - 2*x - 2*x^2)/(2*x^2)*sqrt(1 - 2*x - 3*x^2)^(-1)"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("series: 0, 0, 0, 0, 1, 5, 20, 70, 231"), std::string::npos);
  const CliRun paper = run("genfun --r 2 --style paper --order 8");
  ASSERT_EQ(paper.code, 0);
  EXPECT_NE(paper.out.find("G_2(x) ="), std::string::npos) << paper.out;
  EXPECT_NE(paper.out.find("sqrt(1 - 2*x - 3*x^2)^(-3)"), std::string::npos) << paper.out;
}

TEST_F(Cli, Shapes) {
  const CliRun two = run("shapes --r 2 --format json");
  ASSERT_EQ(two.code, 0) << two.err;
  const auto j = nlohmann::json::parse(two.out);
  ASSERT_EQ(j["data"].size(), 2u);
  EXPECT_EQ(j["data"][0]["shape"], nlohmann::json({3, 4, 1, 2}));
  EXPECT_EQ(j["data"][1]["shape"], nlohmann::json({3, 5, 1, 6, 2, 4}));
  const CliRun one = run("shapes --r 1");
  EXPECT_NE(one.out.find("3412  s=4 c=1 f=3 dd=1 d=0"), std::string::npos) << one.out;
  const CliRun three = run("shapes --r 3 --format csv");
  EXPECT_NE(three.out.find("35172846,8,3,5,3,0,"), std::string::npos) << three.out;
}

TEST_F(Cli, Table) {
  const CliRun r = run("table --n 5 --r 1 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("I,1,0,0,0,0,1,5\r\n"), std::string::npos) << r.out;
  EXPECT_EQ(run("table --n 12 --r 6 --golden --format json").code, 0);
}

// The published parity table has cells that brute force contradicts; the
// diff report must name exactly those cells and exit 1.
TEST_F(Cli, ParityGoldenDiffsAreReported) {
  const CliRun r = run("table --n 12 --r 6 --parity --golden --format json");
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  const auto& diffs = j["data"]["golden_diffs"];
  ASSERT_FALSE(diffs.empty());
  for (const auto& d : diffs) EXPECT_EQ(d["table"], "E");
  // E_0(3): of 123, 132, 213, 321 only the identity is even
  EXPECT_EQ(diffs[0]["r"], 0);
  EXPECT_EQ(diffs[0]["n"], 3);
  EXPECT_EQ(diffs[0]["actual"], "1");
}

TEST_F(Cli, VerifyPassesAndFaultFails) {
  const CliRun ok = run("verify --r 2 --n 9");
  EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
  EXPECT_NE(ok.out.find("PASS"), std::string::npos);
  const CliRun bad = run("verify --r 1 --n 8 --inject-fault 3412:2,2:free");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("pi = "), std::string::npos) << bad.out;
  EXPECT_NE(bad.err.find("fault injected"), std::string::npos);
}

TEST_F(Cli, Classify) {
  const CliRun r = run("classify 3412 --validate --n 8");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("f=3 dd=1 d=0"), std::string::npos);
  EXPECT_NE(r.out.find("pass"), std::string::npos);
  EXPECT_EQ(run("classify 21").code, 0);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("genfun --format xml").code, 2);
  EXPECT_EQ(run("genfun --r 9").code, 2);
  EXPECT_EQ(run("verify --n 8 --order 5").code, 2);
  EXPECT_EQ(run("classify 2341").code, 2);
  EXPECT_EQ(run("classify 1324").code, 2);
  EXPECT_EQ(run("shapes --r 1 --inject-fault nonsense").code, 2);
  EXPECT_EQ(run("genfun --threads 0").code, 2);
}

TEST_F(Cli, ResourceCaps) {
  EXPECT_EQ(run("table --n 14").code, 3);
  EXPECT_EQ(run("table --n 17 --allow-large-n").code, 3);
  EXPECT_EQ(run("genfun --r 8 --allow-large-r").code, 3);
}

TEST_F(Cli, EnvironmentAndPrecedence) {
  const CliRun env = run("shapes --format json", "INV3412_R=1");
  ASSERT_EQ(env.code, 0);
  EXPECT_EQ(nlohmann::json::parse(env.out)["data"].size(), 1u);
  const CliRun flag = run("shapes --r 2 --format json", "INV3412_R=1");
  EXPECT_EQ(nlohmann::json::parse(flag.out)["data"].size(), 2u);
  const CliRun fmt = run("table --n 4 --r 0", "INV3412_FORMAT=csv");
  EXPECT_EQ(fmt.out.rfind("series,r,0,1,2,3,4\r\n", 0), 0u) << fmt.out;
}

TEST_F(Cli, FilesCarryConfigAndHash) {
  const fs::path csv = dir_ / "t.csv";
  ASSERT_EQ(run("table --n 6 --r 2 --format csv --output " + csv.string()).code, 0);
  const auto meta = nlohmann::json::parse(slurp(csv.string() + ".meta.json"));
  EXPECT_EQ(meta["content_hash"], content_hash(slurp(csv)));
  EXPECT_EQ(meta["config"]["n"], 6);
  const fs::path js = dir_ / "g.json";
  ASSERT_EQ(run("genfun --r 1 --order 6 --format json --output " + js.string()).code, 0);
  const auto j = nlohmann::json::parse(slurp(js));
  EXPECT_EQ(j["content_hash"], content_hash(j["data"].dump()));
  const fs::path txt = dir_ / "s.txt";
  ASSERT_EQ(run("shapes --r 1 --output " + txt.string()).code, 0);
  EXPECT_EQ(slurp(txt).rfind("# config: ", 0), 0u);
}

TEST_F(Cli, ArtifactsIndependentOfThreads) {
  for (const std::string args : {"genfun --r 2 --order 20 --format json", "shapes --r 4 --format json",
                                 "table --n 10 --r 3 --parity --format json",
                                 "verify --r 2 --n 9 --format json"}) {
    const CliRun a = run(args + " --threads 1");
    const CliRun b = run(args + " --threads 4");
    ASSERT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

}  // namespace
}  // namespace inv3412
