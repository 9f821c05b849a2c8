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

#ifndef ADMLAB_ADMISSIBILITY_HPP_
#define ADMLAB_ADMISSIBILITY_HPP_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "admlab/decision_problem.hpp"
#include "admlab/lc_number.hpp"

namespace admlab {

/// Risk no larger everywhere and strictly smaller somewhere.
bool dominates(const DecisionProblem& p, std::size_t challenger, std::size_t incumbent);

/// Procedures of 𝒟₁ not dominated within the declared class: by another
/// vertex when mixtures are disabled, by any mixture otherwise.
std::vector<std::size_t> admissible_set(const DecisionProblem& p);

struct HullDominance {
  bool dominated = false;
  /// An optimal dominating mixture when `dominated`.
  std::optional<Mixture> mixture;
  /// Optimal Σ_θ slack; positive exactly when dominated.
  Rational total_slack;
  /// Some mixture of the other procedures has exactly the risk of δ₀.
  bool risk_equal = false;
  std::size_t lp_iterations = 0;
};

/// Solves max Σ s_θ s.t. r(θ, λ) + s_θ <= r(θ, δ₀), s >= 0, λ a mixture.
HullDominance dominated_in_hull(const DecisionProblem& p, std::size_t delta0);

/// True when some mixture of 𝒟₁ \ {δ₀} has exactly δ₀'s risk function.
bool risk_equal_to_mixture(const DecisionProblem& p, std::size_t delta0);

struct Certificate {
  Prior prior;
  Rational min_weight;
  /// slack[δ] = r(π, δ) - r(π, δ₀), indexed like proc_labels().
  std::vector<Rational> slacks;
  std::size_t lp_iterations = 0;
};

struct NoPositivePrior {
  /// Largest attainable minimum weight when δ₀ is Bayes for some prior.
  std::optional<Rational> t_star;
  /// Parameters whose weight is forced to zero by Bayes optimality of δ₀.
  std::vector<std::size_t> forced_zero;
  /// A dominating mixture, if δ₀ is dominated in the hull.
  std::optional<Mixture> dominating;
  std::size_t lp_iterations = 0;
};

using CertificateResult = std::variant<Certificate, NoPositivePrior>;

/// Maximizes the smallest prior weight t subject to δ₀ being Bayes among 𝒟₁.
/// Returns a Certificate exactly when t* > 0.
CertificateResult positive_prior_certificate(const DecisionProblem& p, std::size_t delta0);

/// Recomputes slacks and minimum weight from scratch; true when the
/// certificate is internally consistent and all slacks are non-negative.
bool verify_certificate(const DecisionProblem& p, std::size_t delta0, const Certificate& cert);

struct WitnessSet {
  std::vector<std::size_t> thetas;
  /// min over mixtures λ of max over Θ₀ of r(θ, λ) - r(θ, δ₀).
  Rational margin;
  /// Cutting-plane rounds (one parameter added per round).
  std::size_t iterations = 0;
  /// δ₀ is the only procedure, so the empty set witnesses vacuously.
  bool vacuous = false;
  /// Optimal prior over Θ₀ from the validation LP's dual side.
  std::vector<Rational> separating_prior;
};

/// Finite Θ₀ on which δ₀ strictly beats every mixture of the other
/// procedures somewhere. Requires mixtures, δ₀ admissible and δ₀ not risk
/// equal to any such mixture; otherwise throws PreconditionError.
WitnessSet witness_set(const DecisionProblem& p, std::size_t delta0);

/// Independent check: max over mixtures of min over Θ₀ of
/// r(θ, δ₀) - r(θ, λ). Negative values certify the witness set.
Rational witness_validation_value(const DecisionProblem& p, std::size_t delta0,
                                  const std::vector<std::size_t>& thetas);

struct SteinResult {
  bool feasible = false;
  /// The prior maximizing π(θ₀) under the Stein constraints.
  std::optional<Prior> prior;
  Rational weight_at_theta0;
  std::size_t lp_iterations = 0;
};

/// Stein's condition at (θ₀, ε): is there a prior with π(θ₀) > 0 and
/// r(π, δ₀) - min_δ r(π, δ) <= π(θ₀)·ε?
SteinResult stein_check(const DecisionProblem& p, std::size_t delta0, std::size_t theta0,
                        const Rational& eps);

/// max_δ [r(π, δ₀) - r(π, δ)] over the vertices (equal to the hull value).
Rational excess_bayes_risk(const DecisionProblem& p, const Prior& prior, std::size_t delta0);
LCNumber excess_bayes_risk(const DecisionProblem& p, const HyperPrior& prior,
                           std::size_t delta0);

/// A family of nonempty subsets of Θ.
class BFamily {
 public:
  BFamily() = default;
  explicit BFamily(std::vector<std::vector<std::size_t>> sets);

  static BFamily singletons(std::size_t num_thetas);

  const std::vector<std::vector<std::size_t>>& sets() const { return sets_; }
  bool empty() const { return sets_.empty(); }

 private:
  std::vector<std::vector<std::size_t>> sets_;
};

struct DeterminingFamilyReport {
  bool determining = false;
  /// Smallest, over improving pairs, of the best uniform gap found.
  std::optional<Rational> min_gap;
  /// First improving pair (δ₀, δ₁) without a uniform gap, if any.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

DeterminingFamilyReport determining_family_report(const DecisionProblem& p,
                                                  const BFamily& family);
bool determining_family_check(const DecisionProblem& p, const BFamily& family);

LCNumber prior_mass(const HyperPrior& prior, const std::vector<std::size_t>& set);

struct NsSteinReport {
  bool holds = false;
  LCNumber excess;
  LCNumber bound;  // Π(B)·ε
};

NsSteinReport ns_stein_report(const DecisionProblem& p, std::size_t delta0,
                              const HyperPrior& prior, const std::vector<std::size_t>& set,
                              const Rational& eps);
bool ns_stein_check(const DecisionProblem& p, std::size_t delta0, const HyperPrior& prior,
                    const std::vector<std::size_t>& set, const Rational& eps);

struct NsBlythReport {
  bool holds = false;
  bool mass_condition = false;   // ρ̃ <= C·Π(B) for every B
  bool ratio_condition = false;  // excess / ρ̃ ⪅ 0
  LCNumber excess;
  LCNumber ratio;
  /// Chosen constant C for each member of the family (absent when none works).
  std::vector<std::optional<Rational>> constants;
};

NsBlythReport ns_blyth_report(const DecisionProblem& p, std::size_t delta0,
                              const HyperPrior& prior, const LCNumber& rho,
                              const BFamily& family);
bool ns_blyth_check(const DecisionProblem& p, std::size_t delta0, const HyperPrior& prior,
                    const LCNumber& rho, const BFamily& family);

/// Hyperprior used to probe δ₀ when no certificate exists: the Bayes prior
/// of largest minimum weight (uniform if δ₀ is Bayes for no prior), mixed
/// with an ε share of the uniform prior so that every parameter is charged.
HyperPrior infinitesimal_probe_prior(const DecisionProblem& p, std::size_t delta0);

/// Smallest weight of a hyperprior.
LCNumber min_weight(const HyperPrior& prior);

}  // namespace admlab

#endif  // ADMLAB_ADMISSIBILITY_HPP_
