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

// Command-line front end over the admlab C API.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "admlab/admlab.h"

namespace {

struct ProblemHandle {
  admlab_problem* ptr = nullptr;
  ~ProblemHandle() { admlab_problem_free(ptr); }
};

struct ReportHandle {
  admlab_report* ptr = nullptr;
  ~ReportHandle() { admlab_report_free(ptr); }
};

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

// Prints the payload on stdout and any diagnostic on stderr.
int finish(admlab_status status, const ReportHandle& report) {
  if (report.ptr != nullptr) std::fputs(admlab_report_text(report.ptr), stdout);
  if (status == ADMLAB_INPUT_ERROR || status == ADMLAB_INTERNAL_ERROR) {
    std::fprintf(stderr, "admlab: %s\n", admlab_last_error());
  }
  return static_cast<int>(status);
}

std::vector<double> parse_doubles(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(',', pos);
    const std::string item = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "malformed number '" + item + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admissibility workbench for finite decision problems and the Graybill-Deal study"};
  app.require_subcommand(1);
  app.set_version_flag("--version", admlab_version());

  std::string problem_path;
  std::optional<std::string> delta;
  std::optional<std::string> theta;
  std::optional<std::string> eps;
  std::optional<std::string> rho;
  std::optional<std::string> prior;
  std::string family = "singletons";
  std::string mode = "blyth";
  std::string gamma = "1";

  auto* check = app.add_subcommand("check", "Dominance and admissibility verdict");
  check->add_option("problem", problem_path, "Problem file (JSON)")->required();
  check->add_option("--delta", delta, "Procedure to test; omit for the admissible set");

  auto* certify = app.add_subcommand("certify", "Everywhere-positive Bayes certificate");
  certify->add_option("problem", problem_path, "Problem file (JSON)")->required();
  certify->add_option("--delta", delta, "Procedure to certify")->required();

  auto* witness = app.add_subcommand("witness", "Finite witness set with validation margin");
  witness->add_option("problem", problem_path, "Problem file (JSON)")->required();
  witness->add_option("--delta", delta, "Procedure")->required();

  auto* stein = app.add_subcommand("stein", "Stein's condition at one parameter");
  stein->add_option("problem", problem_path, "Problem file (JSON)")->required();
  stein->add_option("--delta", delta, "Procedure")->required();
  stein->add_option("--theta", theta, "Parameter label")->required();
  stein->add_option("--eps", eps, "Positive rational tolerance")->required();

  auto* ns = app.add_subcommand("ns", "Stein or Blyth condition for an infinitesimal prior");
  ns->add_option("problem", problem_path, "Problem file (JSON)")->required();
  ns->add_option("--delta", delta, "Procedure")->required();
  ns->add_option("--prior", prior, "Named prior or list like 't1=1 - eps,t2=eps'")->required();
  ns->add_option("--family", family, "'singletons', 'whole', or sets like 't1;t1,t2'");
  ns->add_option("--mode", mode, "stein or blyth")->check(CLI::IsMember({"stein", "blyth"}));
  ns->add_option("--eps", eps, "Tolerance for stein mode (default 1)");
  ns->add_option("--rho", rho, "Rate for blyth mode (default: smallest prior weight)");

  auto* game = app.add_subcommand("game", "Value of the derived zero-sum game");
  game->add_option("problem", problem_path, "Problem file (JSON)")->required();
  game->add_option("--delta", delta, "Procedure")->required();
  game->add_option("--theta0", theta, "Distinguished parameter")->required();
  game->add_option("--gamma", gamma, "Positive rational weight");

  std::size_t gen_thetas = 4;
  std::size_t gen_procs = 4;
  std::uint64_t seed = 1;
  bool no_mixtures = false;
  auto* gen = app.add_subcommand("gen", "Emit a random problem file");
  gen->add_option("--theta", gen_thetas, "Number of parameters")->check(CLI::PositiveNumber);
  gen->add_option("--procs", gen_procs, "Number of procedures")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_flag("--no-mixtures", no_mixtures, "Disallow randomized procedures");

  admlab_gd_config cfg;
  admlab_gd_config_init(&cfg);
  std::string gd_kind;
  std::string betas_text = "1e-1,1e-2,1e-3,1e-4";
  std::string rect_text = "1,2,1,2";
  std::string phi0 = cfg.phi0;
  std::string phi1 = cfg.phi1;
  auto* gd = app.add_subcommand("gd", "Graybill-Deal risk, excess, prior mass and Blyth drivers");
  gd->add_option("kind", gd_kind, "risk, diff, excess, mass or blyth")
      ->required()
      ->check(CLI::IsMember({"risk", "diff", "excess", "mass", "blyth"}));
  gd->add_option("--mu", cfg.mu, "Common mean");
  gd->add_option("--sigma1-sq", cfg.sigma1_sq, "Variance of the first sample");
  gd->add_option("--sigma2-sq", cfg.sigma2_sq, "Variance of the second sample");
  gd->add_option("--n", cfg.n, "Per-sample size");
  gd->add_option("--alpha", cfg.alpha, "Inverse-gamma shape");
  gd->add_option("--beta", cfg.beta, "Inverse-gamma scale");
  gd->add_option("--betas", betas_text, "Decreasing scales for blyth, comma separated");
  gd->add_option("--rect", rect_text, "Rectangle a1,b1,a2,b2");
  gd->add_option("--phi0", phi0, "gd, bayes, oracle, zero, half or one");
  gd->add_option("--phi1", phi1, "gd, bayes, oracle, zero, half or one");
  gd->add_option("--seed", cfg.seed, "Monte Carlo seed");
  gd->add_option("--samples", cfg.samples, "Monte Carlo draws per estimate");
  gd->add_option("--shards", cfg.shards, "Fixed work split (affects the draws)");
  gd->add_option("--threads", cfg.threads, "Worker threads (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ADMLAB_INPUT_ERROR;
  }

  ReportHandle report;

  if (*gen) {
    ProblemHandle problem;
    admlab_status st =
        admlab_problem_generate(gen_thetas, gen_procs, seed, no_mixtures ? 0 : 1, &problem.ptr);
    if (st == ADMLAB_OK) st = admlab_problem_save(problem.ptr, &report.ptr);
    return finish(st, report);
  }

  if (*gd) {
    std::vector<double> betas;
    std::vector<double> rect;
    try {
      betas = parse_doubles(betas_text, "--betas");
      rect = parse_doubles(rect_text, "--rect");
      if (rect.size() != 4) throw CLI::ValidationError("--rect", "expected four numbers");
    } catch (const CLI::Error& e) {
      std::fprintf(stderr, "admlab: %s\n", e.what());
      return ADMLAB_INPUT_ERROR;
    }
    cfg.a1 = rect[0];
    cfg.b1 = rect[1];
    cfg.a2 = rect[2];
    cfg.b2 = rect[3];
    cfg.betas = betas.data();
    cfg.num_betas = betas.size();
    cfg.phi0 = phi0.c_str();
    cfg.phi1 = phi1.c_str();
    if (gd_kind == "risk") cfg.kind = ADMLAB_GD_RISK;
    if (gd_kind == "diff") cfg.kind = ADMLAB_GD_DIFF;
    if (gd_kind == "excess") cfg.kind = ADMLAB_GD_EXCESS;
    if (gd_kind == "mass") cfg.kind = ADMLAB_GD_MASS;
    if (gd_kind == "blyth") {
      cfg.kind = ADMLAB_GD_BLYTH;
      if (1.0 - 2.0 * cfg.alpha < 0.1) {
        std::fprintf(stderr, "admlab: slow convergence, ratios shrink like beta^%.3g\n",
                     1.0 - 2.0 * cfg.alpha);
      }
    }
    return finish(admlab_gd(&cfg, &report.ptr), report);
  }

  ProblemHandle problem;
  const admlab_status loaded = admlab_problem_load_file(problem_path.c_str(), &problem.ptr);
  if (loaded != ADMLAB_OK) {
    std::fprintf(stderr, "admlab: %s: %s\n", problem_path.c_str(), admlab_last_error());
    return static_cast<int>(loaded);
  }
  const admlab_problem* p = problem.ptr;
  admlab_status st = ADMLAB_INTERNAL_ERROR;
  if (*check) {
    st = admlab_check(p, opt(delta), &report.ptr);
  } else if (*certify) {
    st = admlab_certify(p, opt(delta), &report.ptr);
  } else if (*witness) {
    st = admlab_witness(p, opt(delta), &report.ptr);
  } else if (*stein) {
    st = admlab_stein(p, opt(delta), opt(theta), opt(eps), &report.ptr);
  } else if (*ns) {
    st = admlab_ns(p, opt(delta), opt(prior), family.c_str(), mode.c_str(), opt(eps), opt(rho),
                   &report.ptr);
  } else if (*game) {
    st = admlab_game(p, opt(delta), opt(theta), gamma.c_str(), &report.ptr);
  }
  return finish(st, report);
}
