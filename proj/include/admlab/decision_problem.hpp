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

#ifndef ADMLAB_DECISION_PROBLEM_HPP_
#define ADMLAB_DECISION_PROBLEM_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <type_traits>
#include <string>
#include <string_view>
#include <vector>

#include "admlab/lc_number.hpp"
#include "admlab/rational.hpp"

namespace admlab {

/// Probability weights over the parameter set, indexed like
/// DecisionProblem::theta_labels(). Weight is Rational for ordinary priors
/// and LCNumber for hyperpriors carrying infinitesimal mass.
template <typename Weight>
class BasicPrior {
 public:
  BasicPrior() = default;

  /// Throws InputError unless every weight is >= 0 and the weights sum to
  /// exactly one.
  explicit BasicPrior(std::vector<Weight> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw InputError("prior has no weights");
    Weight total{};
    for (const auto& w : weights_) {
      if (w < Weight{}) throw InputError("negative prior weight");
      total += w;
    }
    if (total != one()) throw InputError("prior weights do not sum to 1");
  }

  static BasicPrior dirac(std::size_t size, std::size_t at) {
    std::vector<Weight> w(size, Weight{});
    w.at(at) = one();
    return BasicPrior(std::move(w));
  }

  std::size_t size() const { return weights_.size(); }
  const Weight& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Weight>& weights() const { return weights_; }

  friend bool operator==(const BasicPrior&, const BasicPrior&) = default;

 private:
  static Weight one() {
    if constexpr (std::is_same_v<Weight, LCNumber>) {
      return LCNumber::from_rational(1);
    } else {
      return Weight(1);
    }
  }

  std::vector<Weight> weights_;
};

using Prior = BasicPrior<Rational>;
using HyperPrior = BasicPrior<LCNumber>;

/// Embeds an ordinary prior as a hyperprior.
HyperPrior to_hyper(const Prior& prior);

/// Randomization over the base procedures, indexed like proc_labels().
class Mixture {
 public:
  Mixture() = default;
  /// Throws InputError unless weights lie in [0,1] and sum to one.
  explicit Mixture(std::vector<Rational> weights);

  static Mixture point_mass(std::size_t size, std::size_t at);

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }

  friend bool operator==(const Mixture&, const Mixture&) = default;

 private:
  std::vector<Rational> weights_;
};

/// Finite decision problem: parameters Θ, base procedures 𝒟₁ and the risk
/// matrix r(θ, δ). Immutable once constructed.
class DecisionProblem {
 public:
  /// `risk` is row-major by θ: risk[θ][δ]. Validates sizes, label
  /// uniqueness and the lower bound (computed from the matrix when absent).
  DecisionProblem(std::vector<std::string> theta_labels, std::vector<std::string> proc_labels,
                  std::vector<std::vector<Rational>> risk, bool allow_mixtures,
                  std::optional<Rational> loss_lower_bound = std::nullopt);

  std::size_t num_thetas() const { return theta_labels_.size(); }
  std::size_t num_procs() const { return proc_labels_.size(); }
  const std::vector<std::string>& theta_labels() const { return theta_labels_; }
  const std::vector<std::string>& proc_labels() const { return proc_labels_; }
  bool allow_mixtures() const { return allow_mixtures_; }
  const Rational& loss_lower_bound() const { return lower_bound_; }

  /// Index lookups; throw InputError for unknown labels.
  std::size_t theta_index(std::string_view label) const;
  std::size_t proc_index(std::string_view label) const;

  const Rational& risk(std::size_t theta, std::size_t proc) const {
    return risk_[theta * proc_labels_.size() + proc];
  }
  /// Column of risks for one procedure, i.e. its risk function over Θ.
  std::vector<Rational> risk_function(std::size_t proc) const;

  const std::map<std::string, HyperPrior>& priors() const { return priors_; }
  void add_prior(std::string name, HyperPrior prior);

  friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;

 private:
  std::vector<std::string> theta_labels_;
  std::vector<std::string> proc_labels_;
  std::vector<Rational> risk_;
  bool allow_mixtures_ = true;
  Rational lower_bound_;
  std::map<std::string, HyperPrior> priors_;
};

/// r(θ, δ) by label.
Rational risk_at(const DecisionProblem& p, std::string_view theta, std::string_view proc);

/// Σ_δ m(δ) r(θ, δ). Throws PreconditionError when mixtures are disabled.
Rational mixture_risk(const DecisionProblem& p, std::size_t theta, const Mixture& m);

Rational bayes_risk(const DecisionProblem& p, const Prior& prior, std::size_t proc);
Rational bayes_risk(const DecisionProblem& p, const Prior& prior, const Mixture& m);
LCNumber bayes_risk(const DecisionProblem& p, const HyperPrior& prior, std::size_t proc);
LCNumber bayes_risk(const DecisionProblem& p, const HyperPrior& prior, const Mixture& m);

/// JSON problem file (fields theta, procedures, risk, allow_mixtures,
/// optional loss_lower_bound and priors). Errors carry the offending field.
DecisionProblem load_problem(std::string_view json_text);
std::string save_problem(const DecisionProblem& p);

/// Risks drawn i.i.d. from {0, 1/10, ..., 1}; deterministic in `seed`.
DecisionProblem random_problem(std::size_t num_thetas, std::size_t num_procs, std::uint64_t seed,
                               bool allow_mixtures = true);

inline constexpr int kRandomRiskGrid = 10;

}  // namespace admlab

#endif  // ADMLAB_DECISION_PROBLEM_HPP_
