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

#include "rgg/number.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

#include "rgg/errors.h"

namespace rgg {

Rational ParseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
          ch == '-' || ch == '+')) {
      throw DomainError("malformed rational literal '" + s + "'");
    }
  }
  Rational value;
  if (value.set_str(s, 10) != 0) {
    throw DomainError("malformed rational literal '" + s + "'");
  }
  if (value.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  value.canonicalize();
  return value;
}

std::string FormatRational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool IsInteger(const Rational& value) { return value.get_den() == 1; }

long ToInteger(const Rational& value) {
  if (!IsInteger(value)) {
    throw DomainError("expected an integer, got " + FormatRational(value));
  }
  if (!value.get_num().fits_slong_p()) throw DomainError("integer overflow");
  return value.get_num().get_si();
}

const Rational& Number::exact() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw UsageError("floating-point value where an exact rational is required");
}

double Number::to_double() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

Number& Number::operator+=(const Number& other) {
  if (is_exact() && other.is_exact()) {
    std::get<Rational>(value_) += other.exact();
  } else {
    value_ = to_double() + other.to_double();
  }
  return *this;
}

Number& Number::operator-=(const Number& other) {
  if (is_exact() && other.is_exact()) {
    std::get<Rational>(value_) -= other.exact();
  } else {
    value_ = to_double() - other.to_double();
  }
  return *this;
}

Number& Number::operator*=(const Number& other) {
  if (is_exact() && other.is_exact()) {
    std::get<Rational>(value_) *= other.exact();
  } else {
    value_ = to_double() * other.to_double();
  }
  return *this;
}

Number Number::operator-() const {
  if (is_exact()) return Number(Rational(-exact()));
  return Number(-to_double());
}

bool operator==(const Number& lhs, const Number& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) return lhs.exact() == rhs.exact();
  return std::fabs(lhs.to_double() - rhs.to_double()) <= kFloatTolerance;
}

bool operator<(const Number& lhs, const Number& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) return lhs.exact() < rhs.exact();
  return lhs.to_double() < rhs.to_double() - kFloatTolerance;
}

std::string Number::ToString() const {
  if (is_exact()) return FormatRational(exact());
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", to_double());
  return buffer;
}

std::ostream& operator<<(std::ostream& os, const Number& value) {
  return os << value.ToString();
}

}  // namespace rgg
