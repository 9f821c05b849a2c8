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

#include <json.hpp>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "admlab/admlab.h"

namespace {

using Json = nlohmann::json;

struct ProblemDeleter {
  void operator()(admlab_problem* p) const { admlab_problem_free(p); }
};
struct ReportDeleter {
  void operator()(admlab_report* r) const { admlab_report_free(r); }
};
using ProblemPtr = std::unique_ptr<admlab_problem, ProblemDeleter>;
using ReportPtr = std::unique_ptr<admlab_report, ReportDeleter>;

constexpr const char* kDominated = R"({"theta":["t1","t2"],"procedures":["a","b","c"],
  "risk":[["0","1","2"],["1","0","2"]],"allow_mixtures":true})";

ProblemPtr load(const char* text) {
  admlab_problem* p = nullptr;
  EXPECT_EQ(admlab_problem_load(text, &p), ADMLAB_OK) << admlab_last_error();
  return ProblemPtr(p);
}

Json parse(const admlab_report* r) {
  EXPECT_STREQ(admlab_report_format(r), "application/json");
  return Json::parse(admlab_report_text(r));
}

TEST(CApi, VersionAndLoadErrors) {
  EXPECT_STREQ(admlab_version(), "0.1.0");
  admlab_problem* p = nullptr;
  EXPECT_EQ(admlab_problem_load("{", &p), ADMLAB_INPUT_ERROR);
  EXPECT_EQ(p, nullptr);
  EXPECT_NE(std::string(admlab_last_error()).find("problem file"), std::string::npos);
  EXPECT_EQ(admlab_problem_load_file("/nonexistent/problem.json", &p), ADMLAB_INPUT_ERROR);
  EXPECT_EQ(admlab_problem_load(nullptr, &p), ADMLAB_INPUT_ERROR);
}

TEST(CApi, CheckVerdicts) {
  const auto p = load(kDominated);
  EXPECT_EQ(admlab_problem_num_thetas(p.get()), 2u);
  EXPECT_EQ(admlab_problem_num_procs(p.get()), 3u);
  admlab_report* r = nullptr;
  ASSERT_EQ(admlab_check(p.get(), "c", &r), ADMLAB_NEGATIVE);
  ReportPtr hold(r);
  const Json j = parse(r);
  EXPECT_EQ(j["dominated"], true);
  EXPECT_EQ(j["dominating_mixture"], (Json{{"a", "1/2"}, {"b", "1/2"}}));

  ASSERT_EQ(admlab_check(p.get(), nullptr, &r), ADMLAB_OK);
  hold.reset(r);
  EXPECT_EQ(parse(r)["admissible"], (Json{"a", "b"}));

  EXPECT_EQ(admlab_check(p.get(), "zz", &r), ADMLAB_INPUT_ERROR);
  EXPECT_NE(std::string(admlab_last_error()).find("zz"), std::string::npos);
}

TEST(CApi, CertifyWitnessSteinGame) {
  const auto p = load(R"({"theta":["t1","t2"],"procedures":["a","b"],
      "risk":[["0","1"],["1","0"]],"allow_mixtures":true})");
  admlab_report* r = nullptr;
  ASSERT_EQ(admlab_certify(p.get(), "a", &r), ADMLAB_OK);
  ReportPtr hold(r);
  EXPECT_EQ(parse(r)["prior"], (Json{{"t1", "1/2"}, {"t2", "1/2"}}));

  ASSERT_EQ(admlab_witness(p.get(), "a", &r), ADMLAB_OK);
  hold.reset(r);
  EXPECT_EQ(parse(r)["validated"], true);

  ASSERT_EQ(admlab_stein(p.get(), "a", "t1", "1/10", &r), ADMLAB_OK);
  hold.reset(r);
  EXPECT_EQ(parse(r)["feasible"], true);
  EXPECT_EQ(admlab_stein(p.get(), "a", "t1", "-1", &r), ADMLAB_INPUT_ERROR);

  ASSERT_EQ(admlab_game(p.get(), "a", "t1", "2", &r), ADMLAB_OK);
  hold.reset(r);
  const Json g = parse(r);
  EXPECT_EQ(g["lower"], g["upper"]);
  EXPECT_EQ(admlab_game(p.get(), "a", "t1", "0", &r), ADMLAB_INPUT_ERROR);
}

TEST(CApi, DominatedProcedureHasNoCertificateOrWitness) {
  const auto p = load(kDominated);
  admlab_report* r = nullptr;
  ASSERT_EQ(admlab_certify(p.get(), "c", &r), ADMLAB_NEGATIVE);
  ReportPtr hold(r);
  ASSERT_EQ(admlab_witness(p.get(), "c", &r), ADMLAB_NEGATIVE);
  hold.reset(r);
  EXPECT_TRUE(parse(r).contains("reason"));
}

TEST(CApi, NsWithInlinePriorAndFamilies) {
  const auto p = load(kDominated);
  admlab_report* r = nullptr;
  ASSERT_EQ(admlab_ns(p.get(), "a", "t1=1 - eps,t2=eps", "singletons", "blyth", nullptr, nullptr,
                      &r),
            ADMLAB_OK)
      << admlab_last_error();
  ReportPtr hold(r);
  EXPECT_EQ(parse(r)["holds"], true);
  ASSERT_EQ(admlab_ns(p.get(), "c", "t1=1/2,t2=1/2", "t1;t1,t2", "stein", "1/10", nullptr, &r),
            ADMLAB_NEGATIVE);
  hold.reset(r);
  EXPECT_EQ(admlab_ns(p.get(), "a", "t1=1,t1=0", "whole", "stein", nullptr, nullptr, &r),
            ADMLAB_INPUT_ERROR);
  EXPECT_EQ(admlab_ns(p.get(), "a", "t1=1/2,t2=1/2", "t9", "stein", nullptr, nullptr, &r),
            ADMLAB_INPUT_ERROR);
  EXPECT_EQ(admlab_ns(p.get(), "a", "t1=1/2,t2=1/2", "whole", "bogus", nullptr, nullptr, &r),
            ADMLAB_INPUT_ERROR);
}

TEST(CApi, GenerateAndSaveRoundTrip) {
  admlab_problem* p = nullptr;
  ASSERT_EQ(admlab_problem_generate(3, 4, 42, 1, &p), ADMLAB_OK);
  ProblemPtr hold(p);
  admlab_report* r = nullptr;
  ASSERT_EQ(admlab_problem_save(p, &r), ADMLAB_OK);
  ReportPtr saved(r);
  const auto again = load(admlab_report_text(r));
  admlab_report* r2 = nullptr;
  ASSERT_EQ(admlab_problem_save(again.get(), &r2), ADMLAB_OK);
  ReportPtr saved2(r2);
  EXPECT_STREQ(admlab_report_text(r), admlab_report_text(r2));
  EXPECT_EQ(admlab_problem_generate(0, 4, 1, 1, &p), ADMLAB_INPUT_ERROR);
}

admlab_gd_config small_config(admlab_gd_kind kind) {
  admlab_gd_config c;
  admlab_gd_config_init(&c);
  c.kind = kind;
  c.samples = 20000;
  return c;
}

TEST(CApi, GraybillDealDrivers) {
  admlab_report* r = nullptr;
  auto risk = small_config(ADMLAB_GD_RISK);
  ASSERT_EQ(admlab_gd(&risk, &r), ADMLAB_OK) << admlab_last_error();
  ReportPtr hold(r);
  EXPECT_TRUE(parse(r).contains("variance_floor"));

  auto excess = small_config(ADMLAB_GD_EXCESS);
  ASSERT_EQ(admlab_gd(&excess, &r), ADMLAB_OK);
  hold.reset(r);
  EXPECT_EQ(parse(r)["holds"], true);

  auto blyth = small_config(ADMLAB_GD_BLYTH);
  const double betas[] = {1e-1, 1e-2, 1e-3};
  blyth.betas = betas;
  blyth.num_betas = 3;
  ASSERT_EQ(admlab_gd(&blyth, &r), ADMLAB_OK);
  hold.reset(r);
  EXPECT_STREQ(admlab_report_format(r), "text/csv");

  auto bad = small_config(ADMLAB_GD_EXCESS);
  bad.alpha = 0.7;
  EXPECT_EQ(admlab_gd(&bad, &r), ADMLAB_INPUT_ERROR);
  auto bad_phi = small_config(ADMLAB_GD_DIFF);
  bad_phi.phi0 = "nope";
  EXPECT_EQ(admlab_gd(&bad_phi, &r), ADMLAB_INPUT_ERROR);
  EXPECT_EQ(admlab_gd(nullptr, &r), ADMLAB_INPUT_ERROR);
}

TEST(CApi, LastErrorIsPerThread) {
  admlab_problem* p = nullptr;
  EXPECT_EQ(admlab_problem_load("[", &p), ADMLAB_INPUT_ERROR);
  std::string other;
  std::thread([&] { other = admlab_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(admlab_last_error()), "");
}

}  // namespace
