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

#include "admlab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

namespace admlab {
namespace {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss–Legendre nodes on [-1, 1] by Newton iteration on P_n.
Rule gauss_legendre(int n) {
  Rule rule;
  for (int i = 1; i <= n; ++i) {
    double x = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes.push_back(x);
    rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

const Rule& fine_rule() {
  static const Rule r = gauss_legendre(8);
  return r;
}

const Rule& coarse_rule() {
  static const Rule r = gauss_legendre(4);
  return r;
}

double tensor(const Rule& rule, const std::function<double(double, double)>& f, double a1,
              double b1, double a2, double b2) {
  const double h1 = 0.5 * (b1 - a1);
  const double h2 = 0.5 * (b2 - a2);
  const double c1 = 0.5 * (a1 + b1);
  const double c2 = 0.5 * (a2 + b2);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      sum += rule.weights[i] * rule.weights[j] * f(c1 + h1 * rule.nodes[i], c2 + h2 * rule.nodes[j]);
    }
  }
  return sum * h1 * h2;
}

struct Region {
  double a1, b1, a2, b2;
  double value;
  double error;
  bool operator<(const Region& o) const { return error < o.error; }
};

Region evaluate(const std::function<double(double, double)>& f, double a1, double b1, double a2,
                double b2) {
  const double fine = tensor(fine_rule(), f, a1, b1, a2, b2);
  const double coarse = tensor(coarse_rule(), f, a1, b1, a2, b2);
  return {a1, b1, a2, b2, fine, std::abs(fine - coarse)};
}

}  // namespace

CubatureResult adaptive_cubature(const std::function<double(double, double)>& f, double a1,
                                 double b1, double a2, double b2, double rel_tol,
                                 std::size_t max_regions) {
  CubatureResult out;
  if (!(b1 > a1) || !(b2 > a2)) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Region> queue;
  const Region root = evaluate(f, a1, b1, a2, b2);
  queue.push(root);
  double value = root.value;
  double error = root.error;
  while (error > rel_tol * std::abs(value) && queue.size() < max_regions) {
    const Region worst = queue.top();
    queue.pop();
    value -= worst.value;
    error -= worst.error;
    const double m1 = 0.5 * (worst.a1 + worst.b1);
    const double m2 = 0.5 * (worst.a2 + worst.b2);
    for (const Region& child : {evaluate(f, worst.a1, m1, worst.a2, m2),
                                evaluate(f, m1, worst.b1, worst.a2, m2),
                                evaluate(f, worst.a1, m1, m2, worst.b2),
                                evaluate(f, m1, worst.b1, m2, worst.b2)}) {
      value += child.value;
      error += child.error;
      queue.push(child);
    }
  }
  // Re-sum to shed drift from the running updates.
  out.value = 0.0;
  out.error = 0.0;
  out.regions = queue.size();
  while (!queue.empty()) {
    out.value += queue.top().value;
    out.error += queue.top().error;
    queue.pop();
  }
  out.converged = out.error <= rel_tol * std::abs(out.value);
  return out;
}

}  // namespace admlab
