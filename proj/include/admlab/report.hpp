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

#ifndef ADMLAB_REPORT_HPP_
#define ADMLAB_REPORT_HPP_

#include <cstddef>
#include <vector>

#include "admlab/admissibility.hpp"
#include "admlab/game.hpp"
#include "admlab/graybill_deal.hpp"
#include "json.hpp"

namespace admlab::report {

using Json = nlohmann::ordered_json;

// Exact values are rendered as "p/q" strings so that no precision is lost.

Json rationals(const std::vector<Rational>& values);
/// {"label": "p/q", ...} keyed by parameter label.
Json prior(const DecisionProblem& p, const Prior& prior);
Json hyper_prior(const DecisionProblem& p, const HyperPrior& prior);
/// Keyed by procedure label.
Json mixture(const DecisionProblem& p, const Mixture& m);

Json admissible_set(const DecisionProblem& p, const std::vector<std::size_t>& admissible);
Json hull(const DecisionProblem& p, std::size_t delta0, const HullDominance& h);
Json certificate(const DecisionProblem& p, std::size_t delta0, const CertificateResult& r);
Json witness(const DecisionProblem& p, std::size_t delta0, const WitnessSet& w,
             const Rational& validation);
Json stein(const DecisionProblem& p, std::size_t delta0, std::size_t theta0, const Rational& eps,
           const SteinResult& s);
Json ns_stein(const DecisionProblem& p, std::size_t delta0, const BFamily& family,
              const std::vector<NsSteinReport>& per_set, const Rational& eps);
Json ns_blyth(const DecisionProblem& p, std::size_t delta0, const BFamily& family,
              const LCNumber& rho, const NsBlythReport& r);
Json game(const DecisionProblem& p, std::size_t delta0, std::size_t theta0, const Rational& gamma,
          const GameValueReport& g);

Json estimate(const MCEstimate& e);
Json risk_c1(const gd::GDParams& params, const gd::RiskC1Report& r);
Json mass(const gd::RectangleO& rect, const gd::GDPriorParams& prior, const gd::MassBound& m);
Json blyth(const gd::BlythReport& r);

}  // namespace admlab::report

#endif  // ADMLAB_REPORT_HPP_
