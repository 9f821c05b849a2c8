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

#ifndef ADMLAB_LP_HPP_
#define ADMLAB_LP_HPP_

#include <cstddef>
#include <vector>

#include "admlab/rational.hpp"

namespace admlab::lp {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

enum class Status { kOptimal, kInfeasible, kUnbounded };

/// maximize cᵀx subject to linear rows, x_j >= 0 unless marked free.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_variables);

  std::size_t num_variables() const { return num_variables_; }

  void set_objective(std::vector<Rational> coefficients);
  void set_objective(std::size_t variable, const Rational& coefficient);
  void set_free(std::size_t variable);
  void add_constraint(std::vector<Rational> coefficients, Sense sense, Rational rhs);

  struct Row {
    std::vector<Rational> coefficients;
    Sense sense;
    Rational rhs;
  };

  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<Row>& rows() const { return rows_; }
  bool is_free(std::size_t variable) const { return free_[variable]; }

 private:
  std::size_t num_variables_;
  std::vector<Rational> objective_;
  std::vector<bool> free_;
  std::vector<Row> rows_;
};

struct Solution {
  Status status = Status::kInfeasible;
  Rational objective;
  std::vector<Rational> x;
  std::size_t iterations = 0;
};

/// Exact two-phase dense-tableau simplex with Bland's rule, so it cannot
/// cycle. Intended for the small problems this library builds.
Solution solve(const LinearProgram& program);

}  // namespace admlab::lp

#endif  // ADMLAB_LP_HPP_
