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

#ifndef ADMLAB_LC_NUMBER_HPP_
#define ADMLAB_LC_NUMBER_HPP_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "admlab/rational.hpp"

namespace admlab {

/// Truncated Levi-Civita number: a finite sum of exact rational coefficients
/// times integer powers of a fixed positive infinitesimal ε.
///
/// Terms with exponent above the truncation degree K are dropped, and the
/// sticky `inexact()` flag records that this happened somewhere upstream.
/// Exponents below -K cannot be represented and raise std::overflow_error.
///
/// Ordering is lexicographic on the lowest exponent: 0 < ε² < ε < r for
/// every positive rational r.
class LCNumber {
 public:
  static constexpr int kDefaultDegree = 16;

  LCNumber() = default;
  explicit LCNumber(int degree);

  static LCNumber from_rational(const Rational& value, int degree = kDefaultDegree);
  /// ε^k for 1 <= k <= degree.
  static LCNumber eps(int k, int degree = kDefaultDegree);
  static LCNumber monomial(const Rational& coefficient, int exponent,
                           int degree = kDefaultDegree);

  /// Parses the rendering produced by to_string(); "eps" is accepted for ε.
  static LCNumber parse(std::string_view text, int degree = kDefaultDegree);

  int degree() const { return degree_; }
  bool inexact() const { return inexact_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }

  /// Lowest exponent with a nonzero coefficient; empty for zero.
  std::optional<int> leading_exponent() const;
  /// Coefficient at the leading exponent; zero for zero.
  Rational leading_coefficient() const;
  Rational coefficient(int exponent) const;

  /// -1, 0 or +1.
  int sign() const;

  bool is_finite() const;
  bool is_infinitesimal() const;
  /// Coefficient at ε⁰; throws std::domain_error when the number is infinite.
  Rational standard_part() const;

  LCNumber operator-() const;
  LCNumber& operator+=(const LCNumber& rhs);
  LCNumber& operator-=(const LCNumber& rhs);
  LCNumber& operator*=(const LCNumber& rhs);
  LCNumber& operator/=(const LCNumber& rhs);

  friend LCNumber operator+(LCNumber a, const LCNumber& b) { return a += b; }
  friend LCNumber operator-(LCNumber a, const LCNumber& b) { return a -= b; }
  friend LCNumber operator*(const LCNumber& a, const LCNumber& b);
  friend LCNumber operator/(const LCNumber& a, const LCNumber& b);

  /// Equality compares values only; the inexact flag is ignored.
  friend bool operator==(const LCNumber& a, const LCNumber& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const LCNumber& a, const LCNumber& b);

  std::string to_string() const;

 private:
  void set_term(int exponent, const Rational& value);
  void absorb_flags(const LCNumber& other);
  void check_exponent(int exponent) const;

  std::map<int, Rational> terms_;
  int degree_ = kDefaultDegree;
  bool inexact_ = false;
};

enum class Ordering { kLess, kEqual, kGreater };

Ordering compare(const LCNumber& a, const LCNumber& b);

inline bool is_infinitesimal(const LCNumber& a) { return a.is_infinitesimal(); }
inline bool is_finite(const LCNumber& a) { return a.is_finite(); }
inline Rational standard_part(const LCNumber& a) { return a.standard_part(); }

/// a ≈ b: the difference is zero or infinitesimal.
bool approx_eq(const LCNumber& a, const LCNumber& b);
/// a ⪅ b: a - b is negative, zero, or a positive infinitesimal.
bool approx_leq(const LCNumber& a, const LCNumber& b);

}  // namespace admlab

#endif  // ADMLAB_LC_NUMBER_HPP_
