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

#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <vector>

#include "admlab/lp.hpp"

namespace admlab::lp {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Exact Gaussian elimination; empty when the system is singular.
std::optional<std::vector<Rational>> solve_square(Matrix a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Best vertex of {x >= 0, Ax <= b} by enumerating every choice of n tight
// constraints. Only valid for bounded feasible regions.
std::optional<Rational> vertex_oracle(const Matrix& a, const std::vector<Rational>& b,
                                      const std::vector<Rational>& c) {
  const std::size_t n = c.size();
  Matrix rows = a;
  std::vector<Rational> rhs = b;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = -1;
    rows.push_back(e);
    rhs.push_back(0);
  }
  const std::size_t m = rows.size();
  std::optional<Rational> best;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    Matrix sa;
    std::vector<Rational> sb;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick[i]) {
        sa.push_back(rows[i]);
        sb.push_back(rhs[i]);
      }
    }
    const auto x = solve_square(sa, sb);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < m && feasible; ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += rows[i][j] * (*x)[j];
      feasible = lhs <= rhs[i];
    }
    if (!feasible) continue;
    Rational value = 0;
    for (std::size_t j = 0; j < n; ++j) value += c[j] * (*x)[j];
    if (!best || value > *best) best = value;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

TEST(Simplex, TextbookMaximum) {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 → 36 at (2, 6).
  LinearProgram lp(2);
  lp.set_objective({3, 5});
  lp.add_constraint({1, 0}, Sense::kLessEqual, 4);
  lp.add_constraint({0, 2}, Sense::kLessEqual, 12);
  lp.add_constraint({3, 2}, Sense::kLessEqual, 18);
  const auto s = solve(lp);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.objective, Rational(36));
  EXPECT_EQ(s.x, (std::vector<Rational>{2, 6}));
}

TEST(Simplex, EqualityGreaterEqualAndFreeVariables) {
  // max -x - y s.t. x + y >= 2, x - y = 1/2, y free → x = 5/4, y = 3/4.
  LinearProgram lp(2);
  lp.set_objective({-1, -1});
  lp.set_free(1);
  lp.add_constraint({1, 1}, Sense::kGreaterEqual, 2);
  lp.add_constraint({1, -1}, Sense::kEqual, make_rational(1, 2));
  const auto s = solve(lp);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.objective, Rational(-2));
  EXPECT_EQ(s.x[0], make_rational(5, 4));
  EXPECT_EQ(s.x[1], make_rational(3, 4));

  // A free variable that must go negative.
  LinearProgram neg(1);
  neg.set_free(0);
  neg.set_objective({1});
  neg.add_constraint({1}, Sense::kLessEqual, -3);
  const auto t = solve(neg);
  ASSERT_EQ(t.status, Status::kOptimal);
  EXPECT_EQ(t.x[0], Rational(-3));
}

TEST(Simplex, DetectsInfeasibleAndUnbounded) {
  LinearProgram infeasible(1);
  infeasible.add_constraint({1}, Sense::kLessEqual, 1);
  infeasible.add_constraint({1}, Sense::kGreaterEqual, 2);
  EXPECT_EQ(solve(infeasible).status, Status::kInfeasible);

  LinearProgram unbounded(2);
  unbounded.set_objective({1, 0});
  unbounded.add_constraint({-1, 1}, Sense::kLessEqual, 1);
  EXPECT_EQ(solve(unbounded).status, Status::kUnbounded);
}

TEST(Simplex, RedundantEqualitiesAndDegeneracy) {
  // Duplicate equality rows leave an artificial basic at zero.
  LinearProgram lp(3);
  lp.set_objective({1, 2, 3});
  lp.add_constraint({1, 1, 1}, Sense::kEqual, 1);
  lp.add_constraint({2, 2, 2}, Sense::kEqual, 2);
  lp.add_constraint({0, 0, 1}, Sense::kLessEqual, 0);
  const auto s = solve(lp);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.objective, Rational(2));
}

TEST(Simplex, NoConstraints) {
  LinearProgram lp(2);
  lp.set_objective({-1, 0});
  const auto s = solve(lp);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.objective, Rational(0));
}

TEST(SimplexProperty, AgreesWithVertexEnumeration) {
  std::mt19937_64 gen(77);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<long> rhs(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const std::size_t m = 2 + trial % 3;
    Matrix a;
    std::vector<Rational> b;
    LinearProgram lp(n);
    std::vector<Rational> c(n);
    for (auto& x : c) x = make_rational(coef(gen), 1 + trial % 3);
    lp.set_objective(c);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row(n);
      for (auto& x : row) x = coef(gen);
      a.push_back(row);
      b.push_back(rhs(gen));
      lp.add_constraint(row, Sense::kLessEqual, b.back());
    }
    // A box keeps the region bounded so the vertex oracle applies.
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> row(n, Rational(0));
      row[j] = 1;
      a.push_back(row);
      b.push_back(10);
      lp.add_constraint(row, Sense::kLessEqual, 10);
    }
    const auto s = solve(lp);
    const auto oracle = vertex_oracle(a, b, c);
    ASSERT_TRUE(oracle.has_value());
    ASSERT_EQ(s.status, Status::kOptimal) << trial;
    EXPECT_EQ(s.objective, *oracle) << trial;
    // The reported point is feasible and attains the objective.
    Rational value = 0;
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_GE(s.x[j], 0);
      value += c[j] * s.x[j];
    }
    EXPECT_EQ(value, s.objective);
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * s.x[j];
      EXPECT_LE(lhs, b[i]);
    }
  }
}

}  // namespace
}  // namespace admlab::lp
