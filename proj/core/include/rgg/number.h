// Copyright 2026 The Authors.
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

#ifndef RGG_NUMBER_H_
#define RGG_NUMBER_H_

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rgg {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Parses "p/q", "p" or a decimal-free integer. Throws DomainError.
Rational ParseRational(std::string_view text);

// Always "p/q", including "0/1" and "3/1".
std::string FormatRational(const Rational& value);

bool IsInteger(const Rational& value);

// Returns the value as a long; throws DomainError if it is not integral.
long ToInteger(const Rational& value);

// Tolerance used whenever at least one operand is floating point.
inline constexpr double kFloatTolerance = 1e-9;

// A cost value. Exact rational unless it came out of a floating-point model
// (exponential costs); mixed arithmetic degrades to double. Comparisons are
// exact between two rationals and tolerance-based otherwise.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(const Rational& value) : value_(value) {}  // NOLINT
  Number(Rational&& value) : value_(std::move(value)) {}  // NOLINT
  Number(int value) : value_(Rational(value)) {}  // NOLINT
  Number(long value) : value_(Rational(value)) {}  // NOLINT
  explicit Number(double value) : value_(value) {}

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  // Throws UsageError on a floating-point value.
  const Rational& exact() const;
  double to_double() const;

  Number& operator+=(const Number& other);
  Number& operator-=(const Number& other);
  Number& operator*=(const Number& other);

  friend Number operator+(Number lhs, const Number& rhs) { return lhs += rhs; }
  friend Number operator-(Number lhs, const Number& rhs) { return lhs -= rhs; }
  friend Number operator*(Number lhs, const Number& rhs) { return lhs *= rhs; }
  Number operator-() const;

  friend bool operator==(const Number& lhs, const Number& rhs);
  friend bool operator<(const Number& lhs, const Number& rhs);
  friend bool operator>(const Number& lhs, const Number& rhs) { return rhs < lhs; }
  friend bool operator<=(const Number& lhs, const Number& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const Number& lhs, const Number& rhs) { return !(lhs < rhs); }

  // "p/q" for exact values, shortest round-trip decimal otherwise.
  std::string ToString() const;

 private:
  std::variant<Rational, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Number& value);

using NumberVector = std::vector<Number>;

}  // namespace rgg

#endif  // RGG_NUMBER_H_
