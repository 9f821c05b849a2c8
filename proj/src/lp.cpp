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

#include "admlab/lp.hpp"

#include <stdexcept>

namespace admlab::lp {

LinearProgram::LinearProgram(std::size_t num_variables)
    : num_variables_(num_variables),
      objective_(num_variables, Rational(0)),
      free_(num_variables, false) {}

void LinearProgram::set_objective(std::vector<Rational> coefficients) {
  if (coefficients.size() != num_variables_) throw std::invalid_argument("objective size");
  objective_ = std::move(coefficients);
}

void LinearProgram::set_objective(std::size_t variable, const Rational& coefficient) {
  objective_.at(variable) = coefficient;
}

void LinearProgram::set_free(std::size_t variable) { free_.at(variable) = true; }

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Sense sense, Rational rhs) {
  if (coefficients.size() != num_variables_) throw std::invalid_argument("constraint size");
  rows_.push_back(Row{std::move(coefficients), sense, std::move(rhs)});
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<Rational>(cols, Rational(0))), rhs_(rows), basis_(rows), cols_(cols) {}

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  Rational& rhs(std::size_t i) { return rhs_[i]; }
  std::size_t& basis(std::size_t i) { return basis_[i]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / a_[r][c];
    for (auto& v : a_[r]) v *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < a_[i].size(); ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  /// Maximizes cost·x over the current basis. Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed,
                std::size_t& iterations) {
    const std::size_t n = cols();
    std::vector<bool> is_basic(n, false);
    for (;;) {
      std::fill(is_basic.begin(), is_basic.end(), false);
      for (auto b : basis_) is_basic[b] = true;

      std::size_t entering = n;
      for (std::size_t j = 0; j < n && entering == n; ++j) {
        if (!allowed[j] || is_basic[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i) {
          if (a_[i][j] != 0) reduced -= cost[basis_[i]] * a_[i][j];
        }
        if (reduced > 0) entering = j;
      }
      if (entering == n) return true;

      std::size_t leaving = rows();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][entering] <= 0) continue;
        Rational ratio = rhs_[i] / a_[i][entering];
        if (leaving == rows() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == rows()) return false;
      pivot(leaving, entering);
      ++iterations;
    }
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows(); ++i) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(cols(), Rational(0));
    for (std::size_t i = 0; i < rows(); ++i) x[basis_[i]] = rhs_[i];
    return x;
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

Solution solve(const LinearProgram& program) {
  const std::size_t n = program.num_variables();
  const auto& rows = program.rows();
  const std::size_t m = rows.size();

  // Column layout: structural (with a negative twin for free variables),
  // then one slack/surplus per inequality, then artificials.
  std::vector<std::size_t> pos_col(n);
  std::vector<std::size_t> neg_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (program.is_free(j)) neg_col[j] = cols++;
  }
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].sense != Sense::kEqual) slack_col[i] = cols++;
  }
  const std::size_t first_artificial = cols;
  std::vector<bool> flip(m, false);
  std::vector<std::size_t> artificial_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    flip[i] = rows[i].rhs < 0;
    Sense s = rows[i].sense;
    if (flip[i] && s != Sense::kEqual) s = s == Sense::kLessEqual ? Sense::kGreaterEqual : Sense::kLessEqual;
    if (s != Sense::kLessEqual) artificial_col[i] = cols++;
  }

  Tableau t(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational sign = flip[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& c = rows[i].coefficients[j];
      if (c == 0) continue;
      t.at(i, pos_col[j]) = sign * c;
      if (neg_col[j] != SIZE_MAX) t.at(i, neg_col[j]) = -sign * c;
    }
    t.rhs(i) = sign * rows[i].rhs;
    if (slack_col[i] != SIZE_MAX) {
      // ≤ rows carry +s, ≥ rows carry -s, both before flipping.
      const Rational s = rows[i].sense == Sense::kLessEqual ? 1 : -1;
      t.at(i, slack_col[i]) = sign * s;
    }
    if (artificial_col[i] != SIZE_MAX) {
      t.at(i, artificial_col[i]) = 1;
      t.basis(i) = artificial_col[i];
    } else {
      t.basis(i) = slack_col[i];
    }
  }

  Solution sol;
  std::vector<bool> all_allowed(cols, true);
  std::vector<Rational> phase1(cols, Rational(0));
  for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
  if (first_artificial < cols) {
    t.optimize(phase1, all_allowed, sol.iterations);
    if (t.value(phase1) < 0) {
      sol.status = Status::kInfeasible;
      return sol;
    }
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis(i) < first_artificial) {
        ++i;
        continue;
      }
      std::size_t replacement = SIZE_MAX;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (t.at(i, j) != 0) {
          replacement = j;
          break;
        }
      }
      if (replacement == SIZE_MAX) {
        t.erase_row(i);  // redundant equality
      } else {
        t.pivot(i, replacement);
        ++sol.iterations;
        ++i;
      }
    }
  }

  std::vector<Rational> phase2(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[pos_col[j]] = program.objective()[j];
    if (neg_col[j] != SIZE_MAX) phase2[neg_col[j]] = -program.objective()[j];
  }
  std::vector<bool> allowed(cols, false);
  for (std::size_t j = 0; j < first_artificial; ++j) allowed[j] = true;
  if (!t.optimize(phase2, allowed, sol.iterations)) {
    sol.status = Status::kUnbounded;
    return sol;
  }

  const auto primal = t.primal();
  sol.x.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    sol.x[j] = primal[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) sol.x[j] -= primal[neg_col[j]];
  }
  sol.objective = t.value(phase2);
  sol.status = Status::kOptimal;
  return sol;
}

}  // namespace admlab::lp
