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

#include "admlab/admlab.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "admlab/admissibility.hpp"
#include "admlab/errors.hpp"
#include "admlab/game.hpp"
#include "admlab/graybill_deal.hpp"
#include "admlab/report.hpp"

struct admlab_problem {
  admlab::DecisionProblem problem;
};

struct admlab_report {
  std::string text;
  const char* format = "application/json";
};

namespace {

using admlab::report::Json;

thread_local std::string g_last_error;

admlab_status fail(admlab_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body and maps exceptions onto status codes. Input-shaped failures
// (parse errors, unknown labels, violated preconditions) are input errors.
admlab_status guarded(const std::function<admlab_status()>& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const admlab::InputError& e) {
    return fail(ADMLAB_INPUT_ERROR, e.what());
  } catch (const admlab::PreconditionError& e) {
    return fail(ADMLAB_INPUT_ERROR, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(ADMLAB_INPUT_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ADMLAB_INPUT_ERROR, e.what());
  } catch (const std::out_of_range& e) {
    return fail(ADMLAB_INPUT_ERROR, e.what());
  } catch (const std::overflow_error& e) {
    return fail(ADMLAB_INPUT_ERROR, e.what());
  } catch (const std::domain_error& e) {
    return fail(ADMLAB_INPUT_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ADMLAB_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(ADMLAB_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(ADMLAB_INTERNAL_ERROR, "unknown failure");
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) throw admlab::InputError(std::string(what) + " must not be null");
}

admlab_status emit(const Json& json, admlab_report** out, bool positive) {
  auto* r = new admlab_report;
  r->text = json.dump(2) + "\n";
  *out = r;
  return positive ? ADMLAB_OK : ADMLAB_NEGATIVE;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

admlab::Rational positive_rational(const char* text, const char* what) {
  require(text, what);
  const auto v = admlab::parse_rational(text);
  if (v <= 0) throw admlab::InputError(std::string(what) + ": must be positive");
  return v;
}

admlab::HyperPrior parse_prior(const admlab::DecisionProblem& p, const std::string& text) {
  if (text.find('=') == std::string::npos) {
    const auto it = p.priors().find(trim(text));
    if (it == p.priors().end()) throw admlab::InputError("prior: unknown prior '" + text + "'");
    return it->second;
  }
  std::vector<admlab::LCNumber> w(p.num_thetas());
  std::vector<bool> seen(p.num_thetas(), false);
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw admlab::InputError("prior: expected label=weight in '" + item + "'");
    const std::size_t t = p.theta_index(trim(item.substr(0, eq)));
    if (seen[t]) throw admlab::InputError("prior: duplicate label '" + trim(item.substr(0, eq)) + "'");
    seen[t] = true;
    w[t] = admlab::LCNumber::parse(trim(item.substr(eq + 1)));
  }
  return admlab::HyperPrior(std::move(w));
}

admlab::BFamily parse_family(const admlab::DecisionProblem& p, const std::string& text) {
  const std::string s = trim(text);
  if (s == "singletons") return admlab::BFamily::singletons(p.num_thetas());
  if (s == "whole") {
    std::vector<std::size_t> all(p.num_thetas());
    for (std::size_t t = 0; t < all.size(); ++t) all[t] = t;
    return admlab::BFamily({all});
  }
  std::vector<std::vector<std::size_t>> sets;
  if (s.empty()) return admlab::BFamily(sets);
  for (const auto& group : split(s, ';')) {
    std::vector<std::size_t> set;
    for (const auto& label : split(group, ',')) set.push_back(p.theta_index(trim(label)));
    sets.push_back(std::move(set));
  }
  return admlab::BFamily(std::move(sets));
}

admlab::gd::PhiFn make_phi(const char* name, const admlab_gd_config& cfg) {
  const std::string n = name == nullptr ? "" : name;
  if (n == "gd") return [](double a, double b) { return admlab::gd::phi_gd(a, b); };
  if (n == "bayes") {
    const admlab::gd::GDPriorParams prior{cfg.alpha, cfg.beta, cfg.n};
    prior.validate();
    return [prior](double a, double b) { return admlab::gd::phi_bayes(a, b, prior); };
  }
  if (n == "oracle") {
    const double tp = cfg.sigma1_sq / (cfg.sigma1_sq + cfg.sigma2_sq);
    return [tp](double, double) { return tp; };
  }
  if (n == "zero") return [](double, double) { return 0.0; };
  if (n == "half") return [](double, double) { return 0.5; };
  if (n == "one") return [](double, double) { return 1.0; };
  throw admlab::InputError("phi: unknown choice '" + n + "'");
}

admlab::McConfig mc_config(const admlab_gd_config& cfg) {
  if (cfg.samples < 2) throw admlab::InputError("samples: at least 2 required");
  if (cfg.shards == 0) throw admlab::InputError("shards: must be positive");
  admlab::McConfig mc;
  mc.samples = cfg.samples;
  mc.seed = cfg.seed;
  mc.shards = cfg.shards;
  mc.threads = cfg.threads;
  return mc;
}

}  // namespace

extern "C" {

const char* admlab_version(void) { return "0.1.0"; }

const char* admlab_last_error(void) { return g_last_error.c_str(); }

admlab_status admlab_problem_load(const char* json_text, admlab_problem** out) {
  return guarded([&] {
    require(json_text, "json_text");
    require(out, "out");
    *out = new admlab_problem{admlab::load_problem(json_text)};
    return ADMLAB_OK;
  });
}

admlab_status admlab_problem_load_file(const char* path, admlab_problem** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    std::ifstream in(path);
    if (!in) throw admlab::InputError(std::string("cannot open '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = new admlab_problem{admlab::load_problem(buf.str())};
    return ADMLAB_OK;
  });
}

admlab_status admlab_problem_generate(size_t num_thetas, size_t num_procs, uint64_t seed,
                                      int allow_mixtures, admlab_problem** out) {
  return guarded([&] {
    require(out, "out");
    if (num_thetas == 0 || num_procs == 0) {
      throw admlab::InputError("generated problems need at least one parameter and procedure");
    }
    *out = new admlab_problem{
        admlab::random_problem(num_thetas, num_procs, seed, allow_mixtures != 0)};
    return ADMLAB_OK;
  });
}

admlab_status admlab_problem_save(const admlab_problem* problem, admlab_report** out) {
  return guarded([&] {
    require(problem, "problem");
    require(out, "out");
    *out = new admlab_report{admlab::save_problem(problem->problem), "application/json"};
    return ADMLAB_OK;
  });
}

size_t admlab_problem_num_thetas(const admlab_problem* problem) {
  return problem == nullptr ? 0 : problem->problem.num_thetas();
}

size_t admlab_problem_num_procs(const admlab_problem* problem) {
  return problem == nullptr ? 0 : problem->problem.num_procs();
}

void admlab_problem_free(admlab_problem* problem) { delete problem; }

admlab_status admlab_check(const admlab_problem* problem, const char* delta, admlab_report** out) {
  return guarded([&] {
    require(problem, "problem");
    require(out, "out");
    const auto& p = problem->problem;
    if (delta == nullptr) {
      return emit(admlab::report::admissible_set(p, admlab::admissible_set(p)), out, true);
    }
    const std::size_t d = p.proc_index(delta);
    if (!p.allow_mixtures()) {
      Json j;
      j["delta"] = delta;
      bool dominated = false;
      Json by = Json::array();
      for (std::size_t o = 0; o < p.num_procs(); ++o) {
        if (admlab::dominates(p, o, d)) {
          dominated = true;
          by.push_back(p.proc_labels()[o]);
        }
      }
      j["admissible"] = !dominated;
      j["dominated"] = dominated;
      j["dominated_by"] = by;
      return emit(j, out, !dominated);
    }
    const auto h = admlab::dominated_in_hull(p, d);
    return emit(admlab::report::hull(p, d, h), out, !h.dominated);
  });
}

admlab_status admlab_certify(const admlab_problem* problem, const char* delta,
                             admlab_report** out) {
  return guarded([&] {
    require(problem, "problem");
    require(delta, "delta");
    require(out, "out");
    const auto& p = problem->problem;
    const std::size_t d = p.proc_index(delta);
    const auto r = admlab::positive_prior_certificate(p, d);
    const bool ok = std::holds_alternative<admlab::Certificate>(r);
    return emit(admlab::report::certificate(p, d, r), out, ok);
  });
}

admlab_status admlab_witness(const admlab_problem* problem, const char* delta,
                             admlab_report** out) {
  return guarded([&] {
    require(problem, "problem");
    require(delta, "delta");
    require(out, "out");
    const auto& p = problem->problem;
    const std::size_t d = p.proc_index(delta);
    if (!p.allow_mixtures()) throw admlab::PreconditionError("witness sets need mixtures");
    const auto h = admlab::dominated_in_hull(p, d);
    if (h.dominated || h.risk_equal) {
      Json j;
      j["delta"] = delta;
      j["witness_set"] = nullptr;
      j["reason"] = h.dominated ? "dominated by a mixture" : "risk equal to a mixture";
      j["dominating_mixture"] = h.mixture ? admlab::report::mixture(p, *h.mixture) : Json(nullptr);
      return emit(j, out, false);
    }
    const auto w = admlab::witness_set(p, d);
    const auto v = w.vacuous ? admlab::Rational(0) : admlab::witness_validation_value(p, d, w.thetas);
    const bool ok = w.vacuous || (v < 0 && v == -w.margin);
    return emit(admlab::report::witness(p, d, w, v), out, ok);
  });
}

admlab_status admlab_stein(const admlab_problem* problem, const char* delta, const char* theta0,
                           const char* eps, admlab_report** out) {
  return guarded([&] {
    require(problem, "problem");
    require(delta, "delta");
    require(theta0, "theta0");
    require(out, "out");
    const auto& p = problem->problem;
    const std::size_t d = p.proc_index(delta);
    const std::size_t t = p.theta_index(theta0);
    const auto e = positive_rational(eps, "eps");
    const auto s = admlab::stein_check(p, d, t, e);
    return emit(admlab::report::stein(p, d, t, e, s), out, s.feasible);
  });
}

admlab_status admlab_ns(const admlab_problem* problem, const char* delta, const char* prior,
                        const char* family, const char* mode, const char* eps, const char* rho,
                        admlab_report** out) {
  return guarded([&] {
    require(problem, "problem");
    require(delta, "delta");
    require(prior, "prior");
    require(out, "out");
    const auto& p = problem->problem;
    const std::size_t d = p.proc_index(delta);
    const auto pi = parse_prior(p, prior);
    const auto fam = parse_family(p, family == nullptr ? "singletons" : family);
    const std::string m = mode == nullptr ? "blyth" : mode;
    if (m == "stein") {
      const auto e = positive_rational(eps == nullptr ? "1" : eps, "eps");
      std::vector<admlab::NsSteinReport> rows;
      bool all = !fam.empty();
      for (const auto& set : fam.sets()) {
        rows.push_back(admlab::ns_stein_report(p, d, pi, set, e));
        all = all && rows.back().holds;
      }
      return emit(admlab::report::ns_stein(p, d, fam, rows, e), out, all);
    }
    if (m == "blyth") {
      const admlab::LCNumber r =
          rho == nullptr ? admlab::min_weight(pi) : admlab::LCNumber::parse(rho);
      if (r.sign() <= 0) throw admlab::InputError("rho: must be positive");
      const auto rep = admlab::ns_blyth_report(p, d, pi, r, fam);
      return emit(admlab::report::ns_blyth(p, d, fam, r, rep), out, rep.holds);
    }
    throw admlab::InputError("mode: expected 'stein' or 'blyth'");
  });
}

admlab_status admlab_game(const admlab_problem* problem, const char* delta, const char* theta0,
                          const char* gamma, admlab_report** out) {
  return guarded([&] {
    require(problem, "problem");
    require(delta, "delta");
    require(theta0, "theta0");
    require(gamma, "gamma");
    require(out, "out");
    const auto& p = problem->problem;
    const std::size_t d = p.proc_index(delta);
    const std::size_t t = p.theta_index(theta0);
    const auto g = admlab::parse_rational(gamma);
    const auto rep = admlab::derived_game_value(p, d, t, g);
    return emit(admlab::report::game(p, d, t, g, rep), out, rep.determined);
  });
}

void admlab_gd_config_init(admlab_gd_config* config) {
  if (config == nullptr) return;
  *config = admlab_gd_config{};
  config->kind = ADMLAB_GD_RISK;
  config->mu = 0.0;
  config->sigma1_sq = 1.0;
  config->sigma2_sq = 1.0;
  config->n = 5;
  config->alpha = 0.25;
  config->beta = 1e-3;
  config->a1 = 1.0;
  config->b1 = 2.0;
  config->a2 = 1.0;
  config->b2 = 2.0;
  config->betas = nullptr;
  config->num_betas = 0;
  config->phi0 = "gd";
  config->phi1 = "bayes";
  config->seed = 1;
  config->samples = 1'000'000;
  config->shards = 16;
  config->threads = 0;
}

admlab_status admlab_gd(const admlab_gd_config* config, admlab_report** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const auto& cfg = *config;
    const auto mc = mc_config(cfg);
    const admlab::gd::GDParams params{cfg.mu, cfg.sigma1_sq, cfg.sigma2_sq, cfg.n};
    const admlab::gd::GDPriorParams prior{cfg.alpha, cfg.beta, cfg.n};
    const admlab::gd::RectangleO rect{cfg.a1, cfg.b1, cfg.a2, cfg.b2};
    switch (cfg.kind) {
      case ADMLAB_GD_RISK: {
        const auto r = admlab::gd::risk_c1(params, make_phi(cfg.phi0, cfg), mc);
        const auto j = admlab::report::risk_c1(params, r);
        return emit(j, out, j["agree"].get<bool>());
      }
      case ADMLAB_GD_DIFF: {
        params.validate();
        const auto e = admlab::gd::risk_diff(params, make_phi(cfg.phi0, cfg),
                                             make_phi(cfg.phi1, cfg), mc);
        Json j;
        j["phi0"] = cfg.phi0 == nullptr ? "" : cfg.phi0;
        j["phi1"] = cfg.phi1 == nullptr ? "" : cfg.phi1;
        j["risk_diff"] = admlab::report::estimate(e);
        return emit(j, out, true);
      }
      case ADMLAB_GD_EXCESS: {
        const auto e = admlab::gd::excess_bayes_risk(prior, mc);
        const double bound = 2.0 * prior.beta;
        Json j;
        j["alpha"] = prior.alpha;
        j["beta"] = prior.beta;
        j["n"] = prior.n;
        j["excess"] = admlab::report::estimate(e);
        j["bound"] = bound;
        const bool holds = e.mean <= bound + 3.0 * e.std_error;
        j["holds"] = holds;
        return emit(j, out, holds);
      }
      case ADMLAB_GD_MASS: {
        const auto m = admlab::gd::prior_mass_bound(rect, prior, mc);
        return emit(admlab::report::mass(rect, prior, m), out, m.holds);
      }
      case ADMLAB_GD_BLYTH: {
        if (cfg.betas == nullptr || cfg.num_betas == 0) throw admlab::InputError("betas: empty list");
        const std::vector<double> betas(cfg.betas, cfg.betas + cfg.num_betas);
        const auto r = admlab::gd::blyth_sequence_report(cfg.alpha, cfg.n, betas, rect, mc);
        *out = new admlab_report{admlab::gd::to_csv(r), "text/csv"};
        return r.passed() ? ADMLAB_OK : ADMLAB_NEGATIVE;
      }
    }
    throw admlab::InputError("kind: unknown Graybill-Deal driver");
  });
}

const char* admlab_report_text(const admlab_report* report) {
  return report == nullptr ? "" : report->text.c_str();
}

const char* admlab_report_format(const admlab_report* report) {
  return report == nullptr ? "" : report->format;
}

void admlab_report_free(admlab_report* report) { delete report; }

}  // extern "C"
