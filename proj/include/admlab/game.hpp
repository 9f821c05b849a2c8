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

#ifndef ADMLAB_GAME_HPP_
#define ADMLAB_GAME_HPP_

#include <cstddef>
#include <vector>

#include "admlab/decision_problem.hpp"

namespace admlab {

/// r_δ(θ, δ′) = r(θ, δ′) - r(θ, δ).
Rational shifted_risk(const DecisionProblem& p, std::size_t base, std::size_t theta,
                      std::size_t other);
/// r_δ(π, δ′) = r(π, δ′) - r(π, δ).
Rational shifted_risk(const DecisionProblem& p, std::size_t base, const Prior& prior,
                      std::size_t other);

/// Payoff r^{θ₀,γ}(θ, δ) = r_{δ₀}(θ₀, δ) + γ r_{δ₀}(θ, δ), row-major by θ.
std::vector<std::vector<Rational>> derived_payoff(const DecisionProblem& p, std::size_t delta0,
                                                  std::size_t theta0, const Rational& gamma);

struct GameValueReport {
  /// sup over priors of inf over mixtures.
  Rational lower;
  /// inf over mixtures of sup over Θ.
  Rational upper;
  bool determined = false;
  /// sup over single parameters of inf over mixtures; <= lower.
  Rational lower_pure;
  Prior optimal_prior;
  Mixture optimal_mixture;
  std::vector<std::vector<Rational>> payoff;
  std::size_t lp_iterations = 0;
};

/// Value of the derived game with priors against mixtures, from two
/// separately solved LPs. Throws InputError for γ <= 0.
GameValueReport derived_game_value(const DecisionProblem& p, std::size_t delta0,
                                   std::size_t theta0, const Rational& gamma);

}  // namespace admlab

#endif  // ADMLAB_GAME_HPP_
