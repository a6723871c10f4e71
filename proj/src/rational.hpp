// Copyright 2026 The fairaudit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRAUDIT_RATIONAL_HPP_
#define FAIRAUDIT_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fairaudit {

// Exact rational number, always in lowest terms with a positive denominator.
// Every probability, rate, loss and unfairness value in the library is one of
// these; nothing in the core computes with floating point.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p", "p/q" and finite decimals such as "0.25" (read exactly).
  // Throws Error(kInput) on anything else, including a zero denominator.
  static Rational Parse(std::string_view text);

  // "p/q", or "p" when the denominator is 1.
  std::string ToString() const;
  // Rounded half away from zero to `places` digits, e.g. "0.333333".
  std::string ToDecimal(int places = 6) const;

  std::string NumeratorString() const { return value_.get_num().get_str(); }
  std::string DenominatorString() const { return value_.get_den().get_str(); }

  int Sign() const { return sgn(value_); }
  bool IsZero() const { return Sign() == 0; }
  bool IsInteger() const { return value_.get_den() == 1; }

  Rational Abs() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws Error(kInternal) on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

inline Rational Abs(const Rational& r) { return r.Abs(); }

}  // namespace fairaudit

#endif  // FAIRAUDIT_RATIONAL_HPP_
