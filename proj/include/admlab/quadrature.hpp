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

#ifndef ADMLAB_QUADRATURE_HPP_
#define ADMLAB_QUADRATURE_HPP_

#include <cstddef>
#include <functional>

namespace admlab {

struct CubatureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t regions = 0;
  bool converged = false;
};

/// Globally adaptive cubature of f over [a1,b1]×[a2,b2]: every region is
/// integrated with 8×8 and 4×4 tensor Gauss–Legendre rules, their gap is the
/// error estimate, and the worst region is quartered until the summed error
/// falls below rel_tol·|value|.
CubatureResult adaptive_cubature(const std::function<double(double, double)>& f, double a1,
                                 double b1, double a2, double b2, double rel_tol = 1e-6,
                                 std::size_t max_regions = 200'000);

}  // namespace admlab

#endif  // ADMLAB_QUADRATURE_HPP_
