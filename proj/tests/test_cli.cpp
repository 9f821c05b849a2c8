// Copyright 2026 The admlab Authors.
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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "admlab/admissibility.hpp"
#include "admlab/decision_problem.hpp"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("admlab_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path;
  }

  CliResult run(const std::string& args) {
    const fs::path out = dir_ / "stdout";
    const fs::path err = dir_ / "stderr";
    const std::string cmd = std::string(ADMLAB_CLI_PATH) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path dir_;
};

TEST_F(Cli, CertifyPrintsTheUniformPrior) {
  const auto file = write("p.json", R"({"theta":["t1","t2"],"procedures":["a","b"],
      "risk":[["0","1"],["1","0"]],"allow_mixtures":true})");
  const auto r = run("certify " + file.string() + " --delta a");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["prior"], (Json{{"t1", "1/2"}, {"t2", "1/2"}}));
}

TEST_F(Cli, DominatedExitsOne) {
  const auto file = write("p.json", R"({"theta":["t1","t2"],"procedures":["a","b","c"],
      "risk":[["0","1","2"],["1","0","2"]],"allow_mixtures":true})");
  const auto r = run("check " + file.string() + " --delta c");
  EXPECT_EQ(r.code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["dominated"], true);
  EXPECT_EQ(j["dominating_mixture"], (Json{{"a", "1/2"}, {"b", "1/2"}}));
}

TEST_F(Cli, InputErrorsExitTwo) {
  const auto bad = write("bad.json", R"({"theta":["t1"],"procedures":["a"],"risk":[["x"]]})");
  auto r = run("check " + bad.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("risk[0][0]"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());

  EXPECT_EQ(run("check " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("gd excess --alpha 0.9").code, 2);
  const auto ok = write("ok.json", R"({"theta":["t1"],"procedures":["a"],"risk":[["1"]]})");
  EXPECT_EQ(run("stein " + ok.string() + " --delta a --theta nope --eps 1").code, 2);
}

TEST_F(Cli, VersionAndHelp) {
  const auto r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.1.0"), std::string::npos);
  EXPECT_EQ(run("--help").code, 0);
}

// Files produced by gen load back and agree with the library's verdicts.
TEST_F(Cli, GenCheckRoundTrip) {
  for (int seed = 0; seed < 100; ++seed) {
    const std::size_t m = 1 + seed % 5;
    const std::size_t k = 1 + (seed / 5) % 5;
    const auto g = run("gen --theta " + std::to_string(m) + " --procs " + std::to_string(k) +
                       " --seed " + std::to_string(seed));
    ASSERT_EQ(g.code, 0) << g.err;
    const auto file = write("gen.json", g.out);
    const auto c = run("check " + file.string());
    ASSERT_EQ(c.code, 0) << c.err;
    const auto problem = admlab::random_problem(m, k, seed);
    EXPECT_EQ(admlab::load_problem(g.out), problem);
    Json expected = Json::array();
    for (std::size_t d : admlab::admissible_set(problem)) {
      expected.push_back(problem.proc_labels()[d]);
    }
    EXPECT_EQ(Json::parse(c.out)["admissible"], expected) << seed;
  }
}

TEST_F(Cli, BlythCsv) {
  const auto r = run("gd blyth --samples 50000 --betas 1e-1,1e-2,1e-3");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "beta,excess_mean,excess_se,mass_bound,ratio");
  double previous = 1e300;
  int rows = 0;
  while (std::getline(in, line)) {
    const double ratio = std::stod(line.substr(line.rfind(',') + 1));
    EXPECT_LT(ratio, previous);
    previous = ratio;
    ++rows;
  }
  EXPECT_EQ(rows, 3);

  const auto slow = run("gd blyth --alpha 0.49 --samples 1000 --betas 1e-1,1e-2");
  EXPECT_NE(slow.err.find("slow convergence"), std::string::npos);
}

}  // namespace
