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

#include "admlab/game.hpp"

#include <stdexcept>

#include "admlab/lp.hpp"

namespace admlab {

using lp::LinearProgram;
using lp::Sense;
using lp::Status;

Rational shifted_risk(const DecisionProblem& p, std::size_t base, std::size_t theta,
                      std::size_t other) {
  return p.risk(theta, other) - p.risk(theta, base);
}

Rational shifted_risk(const DecisionProblem& p, std::size_t base, const Prior& prior,
                      std::size_t other) {
  return bayes_risk(p, prior, other) - bayes_risk(p, prior, base);
}

std::vector<std::vector<Rational>> derived_payoff(const DecisionProblem& p, std::size_t delta0,
                                                  std::size_t theta0, const Rational& gamma) {
  std::vector<std::vector<Rational>> payoff(p.num_thetas());
  for (std::size_t t = 0; t < p.num_thetas(); ++t) {
    for (std::size_t d = 0; d < p.num_procs(); ++d) {
      Rational v = shifted_risk(p, delta0, theta0, d) + gamma * shifted_risk(p, delta0, t, d);
      payoff[t].push_back(v);
    }
  }
  return payoff;
}

GameValueReport derived_game_value(const DecisionProblem& p, std::size_t delta0,
                                   std::size_t theta0, const Rational& gamma) {
  if (gamma <= 0) throw InputError("gamma must be positive");
  if (!p.allow_mixtures()) throw PreconditionError("the derived game needs mixtures");
  if (delta0 >= p.num_procs()) throw InputError("procedure index out of range");
  if (theta0 >= p.num_thetas()) throw InputError("parameter index out of range");

  const std::size_t m = p.num_thetas();
  const std::size_t k = p.num_procs();
  GameValueReport out;
  out.payoff = derived_payoff(p, delta0, theta0, gamma);

  // Minimizer: min v s.t. Σ_δ λ_δ M(θ,δ) <= v for every θ.
  LinearProgram upper(k + 1);
  upper.set_free(k);
  upper.set_objective(k, -1);
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<Rational> row(out.payoff[t]);
    row.push_back(-1);
    upper.add_constraint(std::move(row), Sense::kLessEqual, 0);
  }
  std::vector<Rational> lam_simplex(k + 1, Rational(1));
  lam_simplex[k] = 0;
  upper.add_constraint(std::move(lam_simplex), Sense::kEqual, 1);
  const auto up = lp::solve(upper);

  // Maximizer: max w s.t. w <= Σ_θ π_θ M(θ,δ) for every δ.
  LinearProgram lower(m + 1);
  lower.set_free(m);
  lower.set_objective(m, 1);
  for (std::size_t d = 0; d < k; ++d) {
    std::vector<Rational> row(m + 1, Rational(0));
    for (std::size_t t = 0; t < m; ++t) row[t] = -out.payoff[t][d];
    row[m] = 1;
    lower.add_constraint(std::move(row), Sense::kLessEqual, 0);
  }
  std::vector<Rational> pi_simplex(m + 1, Rational(1));
  pi_simplex[m] = 0;
  lower.add_constraint(std::move(pi_simplex), Sense::kEqual, 1);
  const auto lo = lp::solve(lower);

  if (up.status != Status::kOptimal || lo.status != Status::kOptimal) {
    throw std::logic_error("game LPs over simplices must be solvable");
  }
  out.upper = -up.objective;
  out.lower = lo.objective;
  out.determined = out.lower == out.upper;
  out.optimal_mixture = Mixture(std::vector<Rational>(up.x.begin(), up.x.begin() + k));
  out.optimal_prior = Prior(std::vector<Rational>(lo.x.begin(), lo.x.begin() + m));
  out.lp_iterations = up.iterations + lo.iterations;

  for (std::size_t t = 0; t < m; ++t) {
    Rational row_min = out.payoff[t][0];
    for (const auto& v : out.payoff[t]) row_min = std::min(row_min, v);
    if (t == 0 || row_min > out.lower_pure) out.lower_pure = row_min;
  }
  return out;
}

}  // namespace admlab
