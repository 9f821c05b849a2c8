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

#include "admlab/report.hpp"

#include <string>

namespace admlab::report {
namespace {

Json labels(const std::vector<std::string>& all, const std::vector<std::size_t>& picked) {
  Json out = Json::array();
  for (std::size_t i : picked) out.push_back(all[i]);
  return out;
}

}  // namespace

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json prior(const DecisionProblem& p, const Prior& prior) {
  Json out = Json::object();
  for (std::size_t t = 0; t < prior.size(); ++t) out[p.theta_labels()[t]] = to_string(prior[t]);
  return out;
}

Json hyper_prior(const DecisionProblem& p, const HyperPrior& prior) {
  Json out = Json::object();
  for (std::size_t t = 0; t < prior.size(); ++t) out[p.theta_labels()[t]] = prior[t].to_string();
  return out;
}

Json mixture(const DecisionProblem& p, const Mixture& m) {
  Json out = Json::object();
  for (std::size_t d = 0; d < m.size(); ++d) {
    if (m[d] != 0) out[p.proc_labels()[d]] = to_string(m[d]);
  }
  return out;
}

Json admissible_set(const DecisionProblem& p, const std::vector<std::size_t>& admissible) {
  Json out;
  out["allow_mixtures"] = p.allow_mixtures();
  out["admissible"] = labels(p.proc_labels(), admissible);
  return out;
}

Json hull(const DecisionProblem& p, std::size_t delta0, const HullDominance& h) {
  Json out;
  out["delta"] = p.proc_labels()[delta0];
  out["admissible"] = !h.dominated;
  out["dominated"] = h.dominated;
  out["total_slack"] = to_string(h.total_slack);
  out["risk_equal_to_mixture"] = h.risk_equal;
  out["dominating_mixture"] = h.mixture ? mixture(p, *h.mixture) : Json(nullptr);
  out["lp_iterations"] = h.lp_iterations;
  return out;
}

Json certificate(const DecisionProblem& p, std::size_t delta0, const CertificateResult& r) {
  Json out;
  out["delta"] = p.proc_labels()[delta0];
  if (const auto* cert = std::get_if<Certificate>(&r)) {
    out["certified"] = true;
    out["prior"] = prior(p, cert->prior);
    out["t_star"] = to_string(cert->min_weight);
    Json slacks = Json::object();
    for (std::size_t d = 0; d < cert->slacks.size(); ++d) {
      slacks[p.proc_labels()[d]] = to_string(cert->slacks[d]);
    }
    out["slacks"] = slacks;
    out["lp_iterations"] = cert->lp_iterations;
  } else {
    const auto& none = std::get<NoPositivePrior>(r);
    out["certified"] = false;
    out["t_star"] = none.t_star ? Json(to_string(*none.t_star)) : Json(nullptr);
    out["bayes_for_some_prior"] = none.t_star.has_value();
    out["forced_zero"] = labels(p.theta_labels(), none.forced_zero);
    out["dominating_mixture"] = none.dominating ? mixture(p, *none.dominating) : Json(nullptr);
    out["lp_iterations"] = none.lp_iterations;
  }
  return out;
}

Json witness(const DecisionProblem& p, std::size_t delta0, const WitnessSet& w,
             const Rational& validation) {
  Json out;
  out["delta"] = p.proc_labels()[delta0];
  out["witness_set"] = labels(p.theta_labels(), w.thetas);
  out["vacuous"] = w.vacuous;
  out["margin"] = to_string(w.margin);
  out["validation_value"] = to_string(validation);
  out["validated"] = w.vacuous || (validation < 0 && validation == -w.margin);
  out["iterations"] = w.iterations;
  Json sep = Json::object();
  for (std::size_t i = 0; i < w.separating_prior.size() && i < w.thetas.size(); ++i) {
    sep[p.theta_labels()[w.thetas[i]]] = to_string(w.separating_prior[i]);
  }
  out["separating_prior"] = sep;
  return out;
}

Json stein(const DecisionProblem& p, std::size_t delta0, std::size_t theta0, const Rational& eps,
           const SteinResult& s) {
  Json out;
  out["delta"] = p.proc_labels()[delta0];
  out["theta0"] = p.theta_labels()[theta0];
  out["eps"] = to_string(eps);
  out["feasible"] = s.feasible;
  out["prior"] = s.prior ? prior(p, *s.prior) : Json(nullptr);
  out["weight_at_theta0"] = to_string(s.weight_at_theta0);
  out["lp_iterations"] = s.lp_iterations;
  return out;
}

Json ns_stein(const DecisionProblem& p, std::size_t delta0, const BFamily& family,
              const std::vector<NsSteinReport>& per_set, const Rational& eps) {
  Json out;
  out["delta"] = p.proc_labels()[delta0];
  out["mode"] = "stein";
  out["eps"] = to_string(eps);
  bool all = !per_set.empty();
  Json sets = Json::array();
  for (std::size_t i = 0; i < per_set.size(); ++i) {
    Json row;
    row["set"] = labels(p.theta_labels(), family.sets()[i]);
    row["holds"] = per_set[i].holds;
    row["excess"] = per_set[i].excess.to_string();
    row["bound"] = per_set[i].bound.to_string();
    sets.push_back(row);
    all = all && per_set[i].holds;
  }
  out["holds"] = all;
  out["sets"] = sets;
  return out;
}

Json ns_blyth(const DecisionProblem& p, std::size_t delta0, const BFamily& family,
              const LCNumber& rho, const NsBlythReport& r) {
  Json out;
  out["delta"] = p.proc_labels()[delta0];
  out["mode"] = "blyth";
  out["rho"] = rho.to_string();
  out["holds"] = r.holds;
  out["mass_condition"] = r.mass_condition;
  out["ratio_condition"] = r.ratio_condition;
  out["excess"] = r.excess.to_string();
  out["ratio"] = r.ratio.to_string();
  Json sets = Json::array();
  for (std::size_t i = 0; i < family.sets().size(); ++i) {
    Json row;
    row["set"] = labels(p.theta_labels(), family.sets()[i]);
    const auto& c = i < r.constants.size() ? r.constants[i] : std::nullopt;
    row["constant"] = c ? Json(to_string(*c)) : Json(nullptr);
    sets.push_back(row);
  }
  out["sets"] = sets;
  return out;
}

Json game(const DecisionProblem& p, std::size_t delta0, std::size_t theta0, const Rational& gamma,
          const GameValueReport& g) {
  Json out;
  out["delta"] = p.proc_labels()[delta0];
  out["theta0"] = p.theta_labels()[theta0];
  out["gamma"] = to_string(gamma);
  out["lower"] = to_string(g.lower);
  out["upper"] = to_string(g.upper);
  out["determined"] = g.determined;
  out["lower_pure"] = to_string(g.lower_pure);
  out["optimal_prior"] = prior(p, g.optimal_prior);
  out["optimal_mixture"] = mixture(p, g.optimal_mixture);
  Json rows = Json::array();
  for (const auto& row : g.payoff) rows.push_back(rationals(row));
  out["payoff"] = rows;
  out["lp_iterations"] = g.lp_iterations;
  return out;
}

Json estimate(const MCEstimate& e) {
  Json out;
  out["mean"] = e.mean;
  out["std_error"] = e.std_error;
  out["n_samples"] = e.n_samples;
  out["seed"] = e.seed;
  return out;
}

Json risk_c1(const gd::GDParams& params, const gd::RiskC1Report& r) {
  Json out;
  out["mu"] = params.mu;
  out["sigma1_sq"] = params.sigma1_sq;
  out["sigma2_sq"] = params.sigma2_sq;
  out["n"] = params.n;
  out["direct"] = estimate(r.direct);
  out["analytic"] = estimate(r.analytic);
  out["bias"] = estimate(r.bias);
  out["variance_floor"] = r.variance_floor;
  out["joint_std_error"] = r.joint_std_error;
  out["agree"] = std::abs(r.direct.mean - r.analytic.mean) <= 3.0 * r.joint_std_error;
  return out;
}

Json mass(const gd::RectangleO& rect, const gd::GDPriorParams& prior, const gd::MassBound& m) {
  Json out;
  out["rectangle"] = {rect.a1, rect.b1, rect.a2, rect.b2};
  out["alpha"] = prior.alpha;
  out["beta"] = prior.beta;
  out["constant"] = m.constant;
  out["lower_bound"] = m.lower_bound;
  out["quadrature_mass"] = m.quadrature_mass;
  out["quadrature_error"] = m.quadrature_error;
  out["mc_mass"] = estimate(m.mc_mass);
  out["holds"] = m.holds;
  return out;
}

Json blyth(const gd::BlythReport& r) {
  Json out;
  out["alpha"] = r.alpha;
  out["n"] = r.n;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["beta"] = row.beta;
    j["excess"] = estimate(row.excess);
    j["mass_bound"] = row.mass_bound;
    j["ratio"] = row.ratio;
    j["ratio_se"] = row.ratio_se;
    rows.push_back(j);
  }
  out["rows"] = rows;
  out["shrink_factors"] = r.shrink_factors;
  out["decreasing"] = r.decreasing;
  out["final_bound_ok"] = r.final_bound_ok;
  out["slow_convergence"] = r.slow_convergence;
  out["passed"] = r.passed();
  return out;
}

}  // namespace admlab::report
