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

#include "admlab/admissibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "admlab/lp.hpp"

namespace admlab {

using lp::LinearProgram;
using lp::Sense;
using lp::Status;

bool dominates(const DecisionProblem& p, std::size_t challenger, std::size_t incumbent) {
  bool strict = false;
  for (std::size_t t = 0; t < p.num_thetas(); ++t) {
    const auto& a = p.risk(t, challenger);
    const auto& b = p.risk(t, incumbent);
    if (a > b) return false;
    if (a < b) strict = true;
  }
  return strict;
}

HullDominance dominated_in_hull(const DecisionProblem& p, std::size_t delta0) {
  if (!p.allow_mixtures()) throw PreconditionError("mixtures are disabled for this problem");
  const std::size_t k = p.num_procs();
  const std::size_t m = p.num_thetas();
  if (delta0 >= k) throw InputError("procedure index out of range");

  // Variables: λ_0..λ_{k-1}, s_0..s_{m-1}, and u in the tie-break stage.
  auto build = [&](std::size_t width) {
    LinearProgram program(width);
    for (std::size_t t = 0; t < m; ++t) {
      std::vector<Rational> row(width, Rational(0));
      for (std::size_t d = 0; d < k; ++d) row[d] = p.risk(t, d);
      row[k + t] = 1;
      program.add_constraint(std::move(row), Sense::kLessEqual, p.risk(t, delta0));
    }
    std::vector<Rational> simplex_row(width, Rational(0));
    for (std::size_t d = 0; d < k; ++d) simplex_row[d] = 1;
    program.add_constraint(std::move(simplex_row), Sense::kEqual, 1);
    return program;
  };

  LinearProgram program = build(k + m);
  for (std::size_t t = 0; t < m; ++t) program.set_objective(k + t, 1);
  const auto sol = lp::solve(program);
  if (sol.status != Status::kOptimal) {
    throw std::logic_error("dominance LP must be feasible and bounded");
  }
  HullDominance out;
  out.lp_iterations = sol.iterations;
  out.total_slack = sol.objective;
  out.dominated = sol.objective > 0;
  if (out.dominated) {
    // Among mixtures reaching the optimal total slack, spread the slack as
    // evenly as possible: maximize u with s_θ >= u.
    LinearProgram spread = build(k + m + 1);
    spread.set_objective(k + m, 1);
    std::vector<Rational> total(k + m + 1, Rational(0));
    for (std::size_t t = 0; t < m; ++t) {
      total[k + t] = 1;
      std::vector<Rational> row(k + m + 1, Rational(0));
      row[k + t] = -1;
      row[k + m] = 1;
      spread.add_constraint(std::move(row), Sense::kLessEqual, 0);
    }
    spread.add_constraint(std::move(total), Sense::kEqual, sol.objective);
    const auto even = lp::solve(spread);
    if (even.status != Status::kOptimal) {
      throw std::logic_error("slack-spreading LP must be feasible and bounded");
    }
    out.lp_iterations += even.iterations;
    out.mixture = Mixture(std::vector<Rational>(even.x.begin(), even.x.begin() + k));
  }
  out.risk_equal = risk_equal_to_mixture(p, delta0);
  return out;
}

bool risk_equal_to_mixture(const DecisionProblem& p, std::size_t delta0) {
  std::vector<std::size_t> others;
  for (std::size_t d = 0; d < p.num_procs(); ++d) {
    if (d != delta0) others.push_back(d);
  }
  if (others.empty()) return false;
  LinearProgram program(others.size());
  for (std::size_t t = 0; t < p.num_thetas(); ++t) {
    std::vector<Rational> row;
    for (auto d : others) row.push_back(p.risk(t, d));
    program.add_constraint(std::move(row), Sense::kEqual, p.risk(t, delta0));
  }
  program.add_constraint(std::vector<Rational>(others.size(), Rational(1)), Sense::kEqual, 1);
  return lp::solve(program).status == Status::kOptimal;
}

std::vector<std::size_t> admissible_set(const DecisionProblem& p) {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < p.num_procs(); ++d) {
    bool dominated = false;
    if (p.allow_mixtures()) {
      dominated = dominated_in_hull(p, d).dominated;
    } else {
      for (std::size_t e = 0; e < p.num_procs() && !dominated; ++e) {
        dominated = e != d && dominates(p, e, d);
      }
    }
    if (!dominated) out.push_back(d);
  }
  return out;
}

namespace {

// Rows Σ_θ π_θ (r(θ,δ₀) - r(θ,δ)) <= 0 for every δ ≠ δ₀, placed on the first
// m variables of a program with `width` columns.
void add_bayes_rows(const DecisionProblem& p, std::size_t delta0, std::size_t width,
                    LinearProgram& program) {
  const std::size_t m = p.num_thetas();
  for (std::size_t d = 0; d < p.num_procs(); ++d) {
    if (d == delta0) continue;
    std::vector<Rational> row(width, Rational(0));
    for (std::size_t t = 0; t < m; ++t) row[t] = p.risk(t, delta0) - p.risk(t, d);
    program.add_constraint(std::move(row), Sense::kLessEqual, 0);
  }
  std::vector<Rational> total(width, Rational(0));
  for (std::size_t t = 0; t < m; ++t) total[t] = 1;
  program.add_constraint(std::move(total), Sense::kEqual, 1);
}

std::vector<Rational> slacks_for(const DecisionProblem& p, const Prior& prior,
                                 std::size_t delta0) {
  const Rational base = bayes_risk(p, prior, delta0);
  std::vector<Rational> slacks;
  for (std::size_t d = 0; d < p.num_procs(); ++d) slacks.push_back(bayes_risk(p, prior, d) - base);
  return slacks;
}

// max t s.t. π_θ >= t, δ₀ Bayes under π.
lp::Solution max_min_weight_lp(const DecisionProblem& p, std::size_t delta0) {
  const std::size_t m = p.num_thetas();
  LinearProgram program(m + 1);
  program.set_free(m);
  program.set_objective(m, 1);
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<Rational> row(m + 1, Rational(0));
    row[t] = -1;
    row[m] = 1;
    program.add_constraint(std::move(row), Sense::kLessEqual, 0);
  }
  add_bayes_rows(p, delta0, m + 1, program);
  return lp::solve(program);
}

}  // namespace

CertificateResult positive_prior_certificate(const DecisionProblem& p, std::size_t delta0) {
  if (delta0 >= p.num_procs()) throw InputError("procedure index out of range");
  const std::size_t m = p.num_thetas();
  const auto sol = max_min_weight_lp(p, delta0);

  if (sol.status == Status::kOptimal && sol.objective > 0) {
    Prior prior(std::vector<Rational>(sol.x.begin(), sol.x.begin() + m));
    Certificate cert{prior, sol.objective, slacks_for(p, prior, delta0), sol.iterations};
    return cert;
  }

  NoPositivePrior out;
  out.lp_iterations = sol.iterations;
  if (sol.status == Status::kOptimal) {
    out.t_star = sol.objective;
    for (std::size_t theta = 0; theta < m; ++theta) {
      LinearProgram program(m);
      program.set_objective(theta, 1);
      add_bayes_rows(p, delta0, m, program);
      const auto best = lp::solve(program);
      out.lp_iterations += best.iterations;
      if (best.status == Status::kOptimal && best.objective == 0) out.forced_zero.push_back(theta);
    }
  }
  if (p.allow_mixtures()) {
    out.dominating = dominated_in_hull(p, delta0).mixture;
  } else {
    for (std::size_t d = 0; d < p.num_procs(); ++d) {
      if (d != delta0 && dominates(p, d, delta0)) {
        out.dominating = Mixture::point_mass(p.num_procs(), d);
        break;
      }
    }
  }
  return out;
}

bool verify_certificate(const DecisionProblem& p, std::size_t delta0, const Certificate& cert) {
  if (cert.prior.size() != p.num_thetas() || cert.slacks.size() != p.num_procs()) return false;
  Rational total = 0;
  Rational smallest = cert.prior[0];
  for (const auto& w : cert.prior.weights()) {
    total += w;
    smallest = std::min(smallest, w);
  }
  if (total != 1 || smallest <= 0 || smallest != cert.min_weight) return false;
  for (std::size_t d = 0; d < p.num_procs(); ++d) {
    Rational r_d = 0;
    Rational r_0 = 0;
    for (std::size_t t = 0; t < p.num_thetas(); ++t) {
      r_d += cert.prior[t] * p.risk(t, d);
      r_0 += cert.prior[t] * p.risk(t, delta0);
    }
    const Rational slack = r_d - r_0;
    if (slack != cert.slacks[d] || slack < 0) return false;
  }
  return true;
}

namespace {

// min v s.t. Σ λ_δ (r(θ,δ) - r(θ,δ₀)) <= v on Θ₀, λ a mixture of `others`.
lp::Solution restricted_margin_lp(const DecisionProblem& p, std::size_t delta0,
                                  const std::vector<std::size_t>& others,
                                  const std::vector<std::size_t>& thetas) {
  const std::size_t k = others.size();
  LinearProgram program(k + 1);
  program.set_free(k);
  program.set_objective(k, -1);
  for (auto t : thetas) {
    std::vector<Rational> row(k + 1, Rational(0));
    for (std::size_t i = 0; i < k; ++i) row[i] = p.risk(t, others[i]) - p.risk(t, delta0);
    row[k] = -1;
    program.add_constraint(std::move(row), Sense::kLessEqual, 0);
  }
  std::vector<Rational> simplex(k + 1, Rational(1));
  simplex[k] = 0;
  program.add_constraint(std::move(simplex), Sense::kEqual, 1);
  return lp::solve(program);
}

std::vector<std::size_t> others_than(const DecisionProblem& p, std::size_t delta0) {
  std::vector<std::size_t> others;
  for (std::size_t d = 0; d < p.num_procs(); ++d) {
    if (d != delta0) others.push_back(d);
  }
  return others;
}

}  // namespace

WitnessSet witness_set(const DecisionProblem& p, std::size_t delta0) {
  if (!p.allow_mixtures()) throw PreconditionError("witness sets require mixtures");
  if (delta0 >= p.num_procs()) throw InputError("procedure index out of range");
  WitnessSet out;
  const auto others = others_than(p, delta0);
  if (others.empty()) {
    out.vacuous = true;
    return out;
  }
  if (dominated_in_hull(p, delta0).dominated) {
    throw PreconditionError("procedure is not admissible among the mixtures");
  }
  if (risk_equal_to_mixture(p, delta0)) {
    throw PreconditionError("procedure has an equivalence in risk with a mixture");
  }

  std::vector<bool> chosen(p.num_thetas(), false);
  std::vector<Rational> lambda(others.size(), Rational(0));
  lambda[0] = 1;
  for (;;) {
    if (!out.thetas.empty()) {
      const auto sol = restricted_margin_lp(p, delta0, others, out.thetas);
      if (sol.status != Status::kOptimal) throw std::logic_error("restricted margin LP failed");
      out.margin = -sol.objective;
      if (out.margin > 0) break;
      lambda.assign(sol.x.begin(), sol.x.begin() + others.size());
    }
    // λ beats or ties δ₀ on Θ₀; add the parameter where it loses the most.
    std::optional<std::size_t> best;
    Rational best_gap = 0;
    for (std::size_t t = 0; t < p.num_thetas(); ++t) {
      if (chosen[t]) continue;
      Rational gap = -p.risk(t, delta0);
      for (std::size_t i = 0; i < others.size(); ++i) gap += lambda[i] * p.risk(t, others[i]);
      if (gap > best_gap) {
        best_gap = gap;
        best = t;
      }
    }
    if (!best) throw std::logic_error("no separating parameter for an admissible procedure");
    chosen[*best] = true;
    out.thetas.push_back(*best);
    ++out.iterations;
  }
  std::sort(out.thetas.begin(), out.thetas.end());

  // Dual side: a prior on Θ₀ under which every other procedure loses by margin.
  const std::size_t m0 = out.thetas.size();
  LinearProgram dual(m0 + 1);
  dual.set_free(m0);
  dual.set_objective(m0, 1);
  for (auto d : others) {
    std::vector<Rational> row(m0 + 1, Rational(0));
    for (std::size_t i = 0; i < m0; ++i) {
      row[i] = p.risk(out.thetas[i], delta0) - p.risk(out.thetas[i], d);
    }
    row[m0] = 1;
    dual.add_constraint(std::move(row), Sense::kLessEqual, 0);
  }
  std::vector<Rational> simplex(m0 + 1, Rational(1));
  simplex[m0] = 0;
  dual.add_constraint(std::move(simplex), Sense::kEqual, 1);
  const auto dual_sol = lp::solve(dual);
  if (dual_sol.status == Status::kOptimal) {
    out.separating_prior.assign(dual_sol.x.begin(), dual_sol.x.begin() + m0);
  }
  return out;
}

Rational witness_validation_value(const DecisionProblem& p, std::size_t delta0,
                                  const std::vector<std::size_t>& thetas) {
  const auto others = others_than(p, delta0);
  if (others.empty() || thetas.empty()) throw PreconditionError("nothing to validate");
  const std::size_t k = others.size();
  // max w s.t. w <= r(θ,δ₀) - Σ λ r(θ,·) for θ in Θ₀.
  LinearProgram program(k + 1);
  program.set_free(k);
  program.set_objective(k, 1);
  for (auto t : thetas) {
    std::vector<Rational> row(k + 1, Rational(0));
    for (std::size_t i = 0; i < k; ++i) row[i] = p.risk(t, others[i]);
    row[k] = 1;
    program.add_constraint(std::move(row), Sense::kLessEqual, p.risk(t, delta0));
  }
  std::vector<Rational> simplex(k + 1, Rational(1));
  simplex[k] = 0;
  program.add_constraint(std::move(simplex), Sense::kEqual, 1);
  const auto sol = lp::solve(program);
  if (sol.status != Status::kOptimal) throw std::logic_error("validation LP failed");
  return sol.objective;
}

SteinResult stein_check(const DecisionProblem& p, std::size_t delta0, std::size_t theta0,
                        const Rational& eps) {
  if (theta0 >= p.num_thetas()) throw InputError("parameter index out of range");
  if (delta0 >= p.num_procs()) throw InputError("procedure index out of range");
  if (eps <= 0) throw InputError("epsilon must be positive");
  const std::size_t m = p.num_thetas();
  LinearProgram program(m);
  program.set_objective(theta0, 1);
  for (std::size_t d = 0; d < p.num_procs(); ++d) {
    if (d == delta0) continue;
    std::vector<Rational> row(m, Rational(0));
    for (std::size_t t = 0; t < m; ++t) row[t] = p.risk(t, delta0) - p.risk(t, d);
    row[theta0] -= eps;
    program.add_constraint(std::move(row), Sense::kLessEqual, 0);
  }
  program.add_constraint(std::vector<Rational>(m, Rational(1)), Sense::kEqual, 1);
  const auto sol = lp::solve(program);

  SteinResult out;
  out.lp_iterations = sol.iterations;
  if (sol.status != Status::kOptimal) return out;
  out.weight_at_theta0 = sol.objective;
  out.feasible = sol.objective > 0;
  if (out.feasible) out.prior = Prior(sol.x);
  return out;
}

Rational excess_bayes_risk(const DecisionProblem& p, const Prior& prior, std::size_t delta0) {
  const Rational base = bayes_risk(p, prior, delta0);
  Rational best = 0;
  for (std::size_t d = 0; d < p.num_procs(); ++d) {
    Rational diff = base - bayes_risk(p, prior, d);
    if (diff > best) best = diff;
  }
  return best;
}

LCNumber excess_bayes_risk(const DecisionProblem& p, const HyperPrior& prior,
                           std::size_t delta0) {
  const LCNumber base = bayes_risk(p, prior, delta0);
  LCNumber best;
  for (std::size_t d = 0; d < p.num_procs(); ++d) {
    LCNumber diff = base - bayes_risk(p, prior, d);
    if (diff > best) best = diff;
  }
  return best;
}

BFamily::BFamily(std::vector<std::vector<std::size_t>> sets) : sets_(std::move(sets)) {
  for (const auto& s : sets_) {
    if (s.empty()) throw InputError("family members must be nonempty");
  }
}

BFamily BFamily::singletons(std::size_t num_thetas) {
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t t = 0; t < num_thetas; ++t) sets.push_back({t});
  return BFamily(std::move(sets));
}

DeterminingFamilyReport determining_family_report(const DecisionProblem& p,
                                                  const BFamily& family) {
  DeterminingFamilyReport out;
  out.determining = true;
  for (std::size_t a = 0; a < p.num_procs(); ++a) {
    for (std::size_t b = 0; b < p.num_procs(); ++b) {
      if (a == b) continue;
      bool improves = false;
      for (std::size_t t = 0; t < p.num_thetas() && !improves; ++t) {
        improves = p.risk(t, b) < p.risk(t, a);
      }
      if (!improves) continue;
      std::optional<Rational> best;
      for (const auto& set : family.sets()) {
        Rational gap = p.risk(set[0], a) - p.risk(set[0], b);
        for (auto t : set) gap = std::min(gap, Rational(p.risk(t, a) - p.risk(t, b)));
        if (gap > 0 && (!best || gap > *best)) best = gap;
      }
      if (!best) {
        out.determining = false;
        out.counterexample = std::make_pair(a, b);
        out.min_gap.reset();
        return out;
      }
      if (!out.min_gap || *best < *out.min_gap) out.min_gap = best;
    }
  }
  return out;
}

bool determining_family_check(const DecisionProblem& p, const BFamily& family) {
  return determining_family_report(p, family).determining;
}

LCNumber prior_mass(const HyperPrior& prior, const std::vector<std::size_t>& set) {
  LCNumber mass;
  for (auto t : set) mass += prior[t];
  return mass;
}

NsSteinReport ns_stein_report(const DecisionProblem& p, std::size_t delta0,
                              const HyperPrior& prior, const std::vector<std::size_t>& set,
                              const Rational& eps) {
  if (eps <= 0) throw InputError("epsilon must be positive");
  NsSteinReport out;
  out.excess = excess_bayes_risk(p, prior, delta0);
  out.bound = prior_mass(prior, set) * LCNumber::from_rational(eps);
  out.holds = out.excess <= out.bound;
  return out;
}

bool ns_stein_check(const DecisionProblem& p, std::size_t delta0, const HyperPrior& prior,
                    const std::vector<std::size_t>& set, const Rational& eps) {
  return ns_stein_report(p, delta0, prior, set, eps).holds;
}

NsBlythReport ns_blyth_report(const DecisionProblem& p, std::size_t delta0,
                              const HyperPrior& prior, const LCNumber& rho,
                              const BFamily& family) {
  if (rho.sign() <= 0) throw InputError("rho must be positive");
  NsBlythReport out;
  out.mass_condition = true;
  for (const auto& set : family.sets()) {
    const LCNumber mass = prior_mass(prior, set);
    std::optional<Rational> constant;
    if (mass.sign() > 0 && *rho.leading_exponent() >= *mass.leading_exponent()) {
      Rational c = 1;
      if (*rho.leading_exponent() == *mass.leading_exponent()) {
        const Rational ratio = rho.leading_coefficient() / mass.leading_coefficient();
        mpz_class ceil_value;
        mpz_cdiv_q(ceil_value.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
        c = std::max(Rational(ceil_value), Rational(1));
      }
      if (rho > LCNumber::from_rational(c) * mass) c += 1;
      constant = c;
    }
    if (!constant) out.mass_condition = false;
    out.constants.push_back(constant);
  }
  out.excess = excess_bayes_risk(p, prior, delta0);
  out.ratio = out.excess / rho;
  out.ratio_condition = approx_leq(out.ratio, LCNumber());
  out.holds = out.mass_condition && out.ratio_condition;
  return out;
}

bool ns_blyth_check(const DecisionProblem& p, std::size_t delta0, const HyperPrior& prior,
                    const LCNumber& rho, const BFamily& family) {
  return ns_blyth_report(p, delta0, prior, rho, family).holds;
}

HyperPrior infinitesimal_probe_prior(const DecisionProblem& p, std::size_t delta0) {
  const std::size_t m = p.num_thetas();
  std::vector<Rational> base(m, Rational(1, static_cast<unsigned long>(m)));
  const auto sol = max_min_weight_lp(p, delta0);
  if (sol.status == Status::kOptimal) base.assign(sol.x.begin(), sol.x.begin() + m);
  const LCNumber eps = LCNumber::eps(1);
  const Rational uniform(1, static_cast<unsigned long>(m));
  std::vector<LCNumber> weights;
  for (std::size_t t = 0; t < m; ++t) {
    weights.push_back(LCNumber::from_rational(base[t]) +
                      eps * LCNumber::from_rational(uniform - base[t]));
  }
  return HyperPrior(std::move(weights));
}

LCNumber min_weight(const HyperPrior& prior) {
  LCNumber best = prior[0];
  for (const auto& w : prior.weights()) {
    if (w < best) best = w;
  }
  return best;
}

}  // namespace admlab
