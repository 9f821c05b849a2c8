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

#ifndef ADMLAB_TESTS_FIXTURES_HPP_
#define ADMLAB_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "admlab/decision_problem.hpp"

namespace admlab::test {

/// Builds a problem from risk functions, one per procedure: procs[d][θ].
/// Entries are rational strings. Labels are t1.. and d0...
inline DecisionProblem from_risk_functions(const std::vector<std::vector<std::string>>& procs,
                                           bool allow_mixtures = true) {
  const std::size_t m = procs.at(0).size();
  std::vector<std::string> thetas;
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < m; ++t) thetas.push_back("t" + std::to_string(t + 1));
  for (std::size_t d = 0; d < procs.size(); ++d) labels.push_back("d" + std::to_string(d));
  std::vector<std::vector<Rational>> risk(m, std::vector<Rational>(procs.size()));
  for (std::size_t d = 0; d < procs.size(); ++d) {
    for (std::size_t t = 0; t < m; ++t) risk[t][d] = parse_rational(procs[d].at(t));
  }
  return DecisionProblem(thetas, labels, risk, allow_mixtures);
}

inline Prior prior_of(const std::vector<std::string>& weights) {
  std::vector<Rational> w;
  for (const auto& s : weights) w.push_back(parse_rational(s));
  return Prior(w);
}

inline Mixture mixture_of(const std::vector<std::string>& weights) {
  std::vector<Rational> w;
  for (const auto& s : weights) w.push_back(parse_rational(s));
  return Mixture(w);
}

}  // namespace admlab::test

#endif  // ADMLAB_TESTS_FIXTURES_HPP_
