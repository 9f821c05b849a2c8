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

#ifndef ADMLAB_RATIONAL_HPP_
#define ADMLAB_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "admlab/errors.hpp"

namespace admlab {

/// Exact rational number. All standard-scale decision arithmetic uses it.
using Rational = mpq_class;

/// Parses "p/q", "-p", "0.125", "1e-3" or "2.5E+2" into an exact rational.
/// Decimal and scientific forms are read exactly, never through a double.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1) rendering.
std::string to_string(const Rational& value);

/// p/q in canonical form; mpq_class(p, q) alone does not reduce.
inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace admlab

#endif  // ADMLAB_RATIONAL_HPP_
