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

#include "admlab/lc_number.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace admlab {
namespace {

constexpr std::string_view kEpsUtf8 = "\xCE\xB5";

}  // namespace

LCNumber::LCNumber(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("truncation degree must be positive");
}

LCNumber LCNumber::from_rational(const Rational& value, int degree) {
  LCNumber r(degree);
  r.set_term(0, value);
  return r;
}

LCNumber LCNumber::eps(int k, int degree) {
  if (k < 1 || k > degree) {
    throw std::out_of_range("eps exponent " + std::to_string(k) + " outside [1, " +
                            std::to_string(degree) + "]");
  }
  return monomial(1, k, degree);
}

LCNumber LCNumber::monomial(const Rational& coefficient, int exponent, int degree) {
  LCNumber r(degree);
  r.check_exponent(exponent);
  if (exponent > degree) {
    r.inexact_ = coefficient != 0;
    return r;
  }
  r.set_term(exponent, coefficient);
  return r;
}

void LCNumber::check_exponent(int exponent) const {
  if (exponent < -degree_) {
    throw std::overflow_error("exponent " + std::to_string(exponent) +
                              " below the representable range");
  }
}

void LCNumber::set_term(int exponent, const Rational& value) {
  if (value == 0) {
    terms_.erase(exponent);
  } else {
    terms_[exponent] = value;
  }
}

void LCNumber::absorb_flags(const LCNumber& other) {
  inexact_ = inexact_ || other.inexact_;
  if (other.degree_ < degree_) {
    degree_ = other.degree_;
    // Re-truncate to the narrower degree.
    for (auto it = terms_.upper_bound(degree_); it != terms_.end();) {
      it = terms_.erase(it);
      inexact_ = true;
    }
    if (!terms_.empty() && terms_.begin()->first < -degree_) {
      throw std::overflow_error("value not representable at the narrower degree");
    }
  }
}

std::optional<int> LCNumber::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rational LCNumber::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational LCNumber::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LCNumber::sign() const {
  if (terms_.empty()) return 0;
  return sgn(terms_.begin()->second);
}

bool LCNumber::is_finite() const { return terms_.empty() || terms_.begin()->first >= 0; }

bool LCNumber::is_infinitesimal() const {
  return terms_.empty() || terms_.begin()->first > 0;
}

Rational LCNumber::standard_part() const {
  if (!is_finite()) throw std::domain_error("standard part of an infinite number: " + to_string());
  return coefficient(0);
}

LCNumber LCNumber::operator-() const {
  LCNumber r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LCNumber& LCNumber::operator+=(const LCNumber& rhs) {
  absorb_flags(rhs);
  for (const auto& [e, c] : rhs.terms_) {
    if (e > degree_) {
      inexact_ = true;
      continue;
    }
    Rational sum = coefficient(e) + c;
    set_term(e, sum);
  }
  return *this;
}

LCNumber& LCNumber::operator-=(const LCNumber& rhs) { return *this += -rhs; }

LCNumber operator*(const LCNumber& a, const LCNumber& b) {
  LCNumber r(std::min(a.degree_, b.degree_));
  r.inexact_ = a.inexact_ || b.inexact_;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const int e = ea + eb;
      if (e > r.degree_) {
        r.inexact_ = true;
        continue;
      }
      r.check_exponent(e);
      Rational sum = r.coefficient(e) + ca * cb;
      r.set_term(e, sum);
    }
  }
  return r;
}

LCNumber& LCNumber::operator*=(const LCNumber& rhs) { return *this = *this * rhs; }

LCNumber operator/(const LCNumber& a, const LCNumber& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  const int degree = std::min(a.degree_, b.degree_);
  const int m = b.terms_.begin()->first;
  const Rational c = b.terms_.begin()->second;
  if (a.is_zero()) {
    LCNumber zero(degree);
    zero.inexact_ = a.inexact_ || b.inexact_;
    return zero;
  }
  const int a_low = a.terms_.begin()->first;

  // b = c ε^m (1 + u) with u supported on positive exponents.  The quotient
  // a ε^{-m} c^{-1} Σ (-u)^k needs the inverse series up to this degree.
  const int need = degree + m - a_low;
  std::map<int, Rational> u;
  for (const auto& [e, coef] : b.terms_) {
    if (e == m) continue;
    Rational v = coef / c;
    u.emplace(e - m, v);
  }

  bool truncated = false;
  std::map<int, Rational> inverse{{0, Rational(1)}};
  if (!u.empty() && need > 0) {
    std::map<int, Rational> power{{0, Rational(1)}};
    for (;;) {
      std::map<int, Rational> next;
      for (const auto& [ep, cp] : power) {
        for (const auto& [eu, cu] : u) {
          const int e = ep + eu;
          if (e > need) {
            truncated = true;
            continue;
          }
          Rational prod = -cp * cu;
          next[e] += prod;
        }
      }
      std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
      if (next.empty()) break;
      for (const auto& [e, coef] : next) inverse[e] += coef;
      power = std::move(next);
    }
    std::erase_if(inverse, [](const auto& kv) { return kv.second == 0; });
  } else if (!u.empty()) {
    truncated = true;
  }

  LCNumber r(degree);
  r.inexact_ = a.inexact_ || b.inexact_ || truncated;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [ei, ci] : inverse) {
      const int e = ea + ei - m;
      if (e > degree) {
        r.inexact_ = true;
        continue;
      }
      r.check_exponent(e);
      Rational sum = r.coefficient(e) + ca * ci / c;
      r.set_term(e, sum);
    }
  }
  return r;
}

LCNumber& LCNumber::operator/=(const LCNumber& rhs) { return *this = *this / rhs; }

std::strong_ordering operator<=>(const LCNumber& a, const LCNumber& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ordering compare(const LCNumber& a, const LCNumber& b) {
  const auto o = a <=> b;
  if (o < 0) return Ordering::kLess;
  if (o > 0) return Ordering::kGreater;
  return Ordering::kEqual;
}

bool approx_eq(const LCNumber& a, const LCNumber& b) { return (a - b).is_infinitesimal(); }

bool approx_leq(const LCNumber& a, const LCNumber& b) {
  const LCNumber d = a - b;
  return d.sign() <= 0 || d.is_infinitesimal();
}

std::string LCNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str();
    out += kEpsUtf8;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class LcParser {
 public:
  LcParser(std::string_view text, int degree) : text_(text), degree_(degree) {}

  LCNumber parse() {
    LCNumber result(degree_);
    skip_space();
    if (pos_ == text_.size()) fail("empty value");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      LCNumber term = parse_term();
      result += negative ? -term : term;
      skip_space();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("malformed LC number '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  bool at_eps() const {
    return text_.substr(pos_).starts_with(kEpsUtf8) || text_.substr(pos_).starts_with("eps");
  }

  LCNumber parse_term() {
    skip_space();
    Rational coefficient = 1;
    bool has_coefficient = false;
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/') {
        ++pos_;
      } else if ((c == 'e' || c == 'E') && pos_ > start && !at_eps()) {
        // scientific exponent: e[+-]?digits
        ++pos_;
        if (pos_ < text_.size() && (peek() == '+' || peek() == '-')) ++pos_;
      } else {
        break;
      }
    }
    if (pos_ > start) {
      coefficient = parse_rational(text_.substr(start, pos_ - start));
      has_coefficient = true;
    }
    skip_space();
    if (pos_ < text_.size() && peek() == '*') {
      ++pos_;
      skip_space();
    }
    if (pos_ < text_.size() && at_eps()) {
      pos_ += text_.substr(pos_).starts_with(kEpsUtf8) ? kEpsUtf8.size() : 3;
      int exponent = 1;
      if (pos_ < text_.size() && peek() == '^') {
        ++pos_;
        const std::size_t exp_start = pos_;
        if (pos_ < text_.size() && (peek() == '-' || peek() == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        const auto exp_text = text_.substr(exp_start, pos_ - exp_start);
        if (exp_text.empty() || exp_text == "-" || exp_text == "+") fail("missing exponent");
        exponent = std::stoi(std::string(exp_text));
      }
      if (exponent < -degree_) fail("exponent below the representable range");
      return LCNumber::monomial(coefficient, exponent, degree_);
    }
    if (!has_coefficient) fail("expected a number or ε");
    return LCNumber::from_rational(coefficient, degree_);
  }

  std::string_view text_;
  int degree_;
  std::size_t pos_ = 0;
};

}  // namespace

LCNumber LCNumber::parse(std::string_view text, int degree) {
  return LcParser(text, degree).parse();
}

}  // namespace admlab
