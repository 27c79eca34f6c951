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
#include "rgg/characterize.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "rgg/errors.h"

namespace rgg {
namespace {

using Point = std::vector<long>;

class TableView {
 public:
  explicit TableView(const Tabulated& c) : c_(c) {}

  int dimension() const { return static_cast<int>(c_.neighborhoods.size()); }

  Number operator()(int r, const Point& x) const {
    return TableValue(c_, r, x);
  }

  // c_r(x + sum of unit vectors in plus).
  Number At(int r, Point x, std::initializer_list<int> plus) const {
    for (int u : plus) ++x[u];
    return TableValue(c_, r, x);
  }

 private:
  const Tabulated& c_;
};

void RequireRange(const Tabulated& c, int bound, int extra) {
  if (bound < 0) throw UsageError("check bound must be non-negative");
  for (std::size_t r = 0; r < c.max_load.size(); ++r) {
    if (c.max_load[r] < bound + extra) {
      throw RangeError("table range insufficient: resource " +
                       std::to_string(r) + " is tabulated up to " +
                       std::to_string(c.max_load[r]) + ", checks need " +
                       std::to_string(bound + extra));
    }
  }
}

// Calls visit(x) for x in {0..bound}^m, first coordinate most significant,
// until it returns false.
template <class Visit>
void ForEachPoint(int m, int bound, Visit visit) {
  Point x(m, 0);
  while (true) {
    if (!visit(x)) return;
    int k = m - 1;
    while (k >= 0 && x[k] == bound) x[k--] = 0;
    if (k < 0) return;
    ++x[k];
  }
}

RationalVector ToRational(const Point& x) {
  return RationalVector(x.begin(), x.end());
}

Violation MakeViolation(Condition condition, int r, int s,
                        std::optional<int> t, const Point& x, Number lhs,
                        Number rhs) {
  Violation v;
  v.condition = condition;
  v.r = r;
  v.s = s;
  v.t = t;
  v.x = ToRational(x);
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

Number CrossDifference(const TableView& c, int r, int s, const Point& x) {
  return c.At(r, x, {s}) - c(r, x);
}

Point ToPoint(const RationalVector& x) {
  Point p;
  for (const auto& value : x) p.push_back(ToInteger(value));
  return p;
}

}  // namespace

const char* ConditionName(Condition condition) {
  switch (condition) {
    case Condition::kJacobianSymmetry:
      return "jacobian_symmetry";
    case Condition::kCrossIncrement:
      return "cross_increment";
    case Condition::kCrossCurvature:
      return "cross_curvature";
    case Condition::kTripleCross:
      return "triple_cross";
    case Condition::kCrossConstancy:
      return "cross_constancy";
    case Condition::kWeightedAsymmetric:
      return "weighted_asymmetric";
    case Condition::kWeightedInteraction:
      return "weighted_interaction";
    case Condition::kWeightedNotExponential:
      return "weighted_not_exponential";
  }
  return "unknown";
}

std::optional<Violation> CheckJacobianSymmetry(const Tabulated& c, int bound) {
  RequireRange(c, bound, 1);
  TableView view(c);
  const int m = view.dimension();
  std::optional<Violation> found;
  ForEachPoint(m, bound, [&](const Point& x) {
    for (int r = 0; r < m; ++r) {
      for (int s = r + 1; s < m; ++s) {
        Number lhs = view.At(r, x, {r, s}) - view.At(r, x, {r});
        Number rhs = view.At(s, x, {r, s}) - view.At(s, x, {s});
        if (!(lhs == rhs)) {
          found = MakeViolation(Condition::kJacobianSymmetry, r, s,
                                std::nullopt, x, lhs, rhs);
          return false;
        }
      }
    }
    return true;
  });
  return found;
}

std::vector<Violation> CrossLinearityViolations(const Tabulated& c,
                                                int bound) {
  RequireRange(c, bound, 2);
  TableView view(c);
  const int m = view.dimension();
  std::optional<Violation> increment, curvature, triple, constancy;
  // Reference point for the constancy check: the first x with x_r > 0.
  std::vector<std::vector<std::optional<Point>>> reference(
      m, std::vector<std::optional<Point>>(m));

  ForEachPoint(m, bound, [&](const Point& x) {
    for (int r = 0; r < m; ++r) {
      if (x[r] == 0) continue;
      for (int s = 0; s < m; ++s) {
        if (s == r) continue;
        Number base = CrossDifference(view, r, s, x);
        if (!increment) {
          Number other = view.At(r, x, {r, s}) - view.At(r, x, {r});
          if (!(base == other)) {
            increment = MakeViolation(Condition::kCrossIncrement, r, s,
                                      std::nullopt, x, base, other);
          }
        }
        if (!curvature) {
          Number upper = view.At(r, x, {s, s}) - view.At(r, x, {s});
          if (!(upper == base)) {
            curvature = MakeViolation(Condition::kCrossCurvature, r, s,
                                      std::nullopt, x, upper, base);
          }
        }
        if (!triple) {
          for (int t = 0; t < m; ++t) {
            if (t == r || t == s) continue;
            Number other = view.At(r, x, {s, t}) - view.At(r, x, {t});
            if (!(base == other)) {
              triple = MakeViolation(Condition::kTripleCross, r, s, t, x,
                                     base, other);
              break;
            }
          }
        }
        if (!reference[r][s]) {
          reference[r][s] = x;
        } else if (!constancy) {
          Number first = CrossDifference(view, r, s, *reference[r][s]);
          if (!(first == base)) {
            constancy = MakeViolation(Condition::kCrossConstancy, r, s,
                                      std::nullopt, *reference[r][s], first,
                                      base);
            constancy->y = ToRational(x);
          }
        }
      }
    }
    return !(increment && curvature && triple && constancy);
  });

  std::vector<Violation> result;
  for (auto* v : {&increment, &curvature, &triple, &constancy}) {
    if (*v) result.push_back(std::move(**v));
  }
  return result;
}

std::optional<Violation> CheckCrossLinearity(const Tabulated& c, int bound) {
  std::vector<Violation> all = CrossLinearityViolations(c, bound);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool ReverifyViolation(const Tabulated& c, const Violation& v) {
  TableView view(c);
  Point x = ToPoint(v.x);
  const int r = v.r;
  const int s = v.s;
  Number lhs, rhs;
  switch (v.condition) {
    case Condition::kJacobianSymmetry:
      lhs = view.At(r, x, {r, s}) - view.At(r, x, {r});
      rhs = view.At(s, x, {r, s}) - view.At(s, x, {s});
      break;
    case Condition::kCrossIncrement:
      lhs = CrossDifference(view, r, s, x);
      rhs = view.At(r, x, {r, s}) - view.At(r, x, {r});
      break;
    case Condition::kCrossCurvature:
      lhs = view.At(r, x, {s, s}) - view.At(r, x, {s});
      rhs = CrossDifference(view, r, s, x);
      break;
    case Condition::kTripleCross:
      if (!v.t) return false;
      lhs = CrossDifference(view, r, s, x);
      rhs = view.At(r, x, {s, *v.t}) - view.At(r, x, {*v.t});
      break;
    case Condition::kCrossConstancy:
      if (!v.y) return false;
      lhs = CrossDifference(view, r, s, x);
      rhs = CrossDifference(view, r, s, ToPoint(*v.y));
      break;
    default:
      return false;
  }
  return lhs == v.lhs && rhs == v.rhs && !(lhs == rhs);
}

ConsistencyReport DecomposeUnweighted(const Tabulated& c, int bound) {
  if (auto v = CheckJacobianSymmetry(c, bound)) return *v;
  if (auto v = CheckCrossLinearity(c, bound)) return *v;
  TableView view(c);
  const int m = view.dimension();
  UnweightedConsistent result;
  result.bound = bound;
  result.f.assign(m, RationalVector(bound + 1));
  result.a.assign(m, RationalVector(m, Rational(0)));
  Point zero(m, 0);
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= bound; ++k) {
      Point x = zero;
      x[r] = k;
      result.f[r][k] = view(r, x).exact();
    }
    for (int s = 0; s < m; ++s) {
      if (s == r) continue;
      result.a[r][s] =
          (view.At(r, zero, {r, s}) - view.At(r, zero, {r})).exact();
    }
  }
  ForEachPoint(m, bound, [&](const Point& x) {
    for (int r = 0; r < m; ++r) {
      Rational expected = result.f[r][x[r]];
      for (int s = 0; s < m; ++s) {
        if (s != r) expected += result.a[r][s] * x[s];
      }
      if (view(r, x).exact() == expected) continue;
      if (x[r] == 0) {
        ++result.zero_load_mismatches;
        continue;
      }
      std::string point;
      for (long value : x) point += std::to_string(value) + " ";
      throw InternalError("decomposition does not reproduce c_" +
                          std::to_string(r) + " at ( " + point + ")");
    }
    return true;
  });
  return result;
}

namespace {

bool Close(double a, double b) {
  return std::fabs(a - b) <=
         kFloatTolerance * std::max({1.0, std::fabs(a), std::fabs(b)});
}

bool Same(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return Close(a.to_double(), b.to_double());
}

bool IsZero(const Number& a, double scale) {
  if (a.is_exact()) return a.exact() == 0;
  return std::fabs(a.to_double()) <= kFloatTolerance * std::max(1.0, scale);
}

Number Divide(const Number& a, const Rational& b) {
  if (a.is_exact()) return Number(Rational(a.exact() / b));
  return Number(a.to_double() / b.get_d());
}

}  // namespace

ConsistencyReport ClassifyWeighted(const CostFunction& cost, int m,
                                   const WeightedGrid& grid) {
  if (grid.coords.size() < 2) {
    throw UsageError("weighted grid needs at least two coordinates");
  }
  if (grid.step <= 0) throw UsageError("weighted grid step must be positive");
  if (m < 1) throw UsageError("need at least one resource");
  const Rational& delta = grid.step;
  const int radix = static_cast<int>(grid.coords.size());

  std::vector<RationalVector> bases;
  {
    std::vector<int> digit(m, 0);
    while (true) {
      RationalVector x(m);
      for (int k = 0; k < m; ++k) x[k] = grid.coords[digit[k]];
      bases.push_back(std::move(x));
      int k = m - 1;
      while (k >= 0 && digit[k] == radix - 1) digit[k--] = 0;
      if (k < 0) break;
      ++digit[k];
    }
  }
  auto eval = [&](RationalVector x) {
    NumberVector c = cost(x);
    if (static_cast<int>(c.size()) != m) {
      throw StructuralError("cost function returned a vector of wrong length");
    }
    return c;
  };
  auto shifted = [&](const RationalVector& x, int s, int times) {
    RationalVector y = x;
    y[s] += delta * times;
    return y;
  };

  // Affine test: vanishing second and mixed differences.
  std::optional<Violation> nonlinear;
  for (const auto& x : bases) {
    NumberVector c0 = eval(x);
    for (int s = 0; s < m && !nonlinear; ++s) {
      NumberVector c1 = eval(shifted(x, s, 1));
      NumberVector c2 = eval(shifted(x, s, 2));
      for (int r = 0; r < m; ++r) {
        Number lhs = c2[r] - c1[r];
        Number rhs = c1[r] - c0[r];
        if (!Same(lhs, rhs)) {
          nonlinear = Violation{Condition::kWeightedInteraction, r, s,
                                std::nullopt, x, std::nullopt, lhs, rhs};
          break;
        }
      }
      for (int t = s + 1; t < m && !nonlinear; ++t) {
        NumberVector ct = eval(shifted(x, t, 1));
        NumberVector cst = eval(shifted(shifted(x, s, 1), t, 1));
        for (int r = 0; r < m; ++r) {
          Number lhs = cst[r] - ct[r];
          Number rhs = c1[r] - c0[r];
          if (!Same(lhs, rhs)) {
            nonlinear = Violation{Condition::kWeightedInteraction, r, s, t,
                                  x, std::nullopt, lhs, rhs};
            break;
          }
        }
      }
    }
    if (nonlinear) break;
  }

  if (!nonlinear) {
    const RationalVector& x0 = bases.front();
    NumberVector c0 = eval(x0);
    WeightedAffineFit fit;
    fit.a.assign(m, NumberVector(m));
    for (int s = 0; s < m; ++s) {
      NumberVector c1 = eval(shifted(x0, s, 1));
      for (int r = 0; r < m; ++r) fit.a[r][s] = Divide(c1[r] - c0[r], delta);
    }
    fit.b = c0;
    for (int r = 0; r < m; ++r) {
      for (int s = 0; s < m; ++s) {
        if (x0[s] != 0) fit.b[r] -= fit.a[r][s] * Number(x0[s]);
      }
    }
    // Local linearity with a global mismatch means the affine pieces differ
    // between base points; treat it as an interaction.
    for (const auto& x : bases) {
      NumberVector c = eval(x);
      for (int r = 0; r < m; ++r) {
        Number predicted = fit.b[r];
        for (int s = 0; s < m; ++s) {
          if (x[s] != 0) predicted += fit.a[r][s] * Number(x[s]);
        }
        if (!Same(predicted, c[r])) {
          return Violation{Condition::kWeightedInteraction, r, r, std::nullopt,
                           x, std::nullopt, c[r], predicted};
        }
      }
    }
    for (int r = 0; r < m; ++r) {
      for (int s = r + 1; s < m; ++s) {
        if (!Same(fit.a[r][s], fit.a[s][r])) {
          return Violation{Condition::kWeightedAsymmetric, r, s, std::nullopt,
                           x0, std::nullopt, fit.a[r][s], fit.a[s][r]};
        }
      }
    }
    return fit;
  }

  // Separability: c_r ignores every x_s with s != r.
  for (const auto& x : bases) {
    NumberVector c0 = eval(x);
    for (int s = 0; s < m; ++s) {
      NumberVector c1 = eval(shifted(x, s, 1));
      for (int r = 0; r < m; ++r) {
        if (r == s) continue;
        if (!Same(c1[r], c0[r])) {
          return Violation{Condition::kWeightedInteraction, r, s, std::nullopt,
                           x, std::nullopt, c1[r], c0[r]};
        }
      }
    }
  }

  // Shared-exponent test: (c(x+2d) - c(x+d)) / (c(x+d) - c(x)) = exp(phi d).
  const double d = delta.get_d();
  std::optional<double> ratio;
  std::optional<Violation> mismatch;
  for (int r = 0; r < m && !mismatch; ++r) {
    for (const auto& x : bases) {
      NumberVector c0 = eval(x);
      NumberVector c1 = eval(shifted(x, r, 1));
      NumberVector c2 = eval(shifted(x, r, 2));
      Number d1 = c1[r] - c0[r];
      Number d2 = c2[r] - c1[r];
      double scale = std::max({std::fabs(c0[r].to_double()),
                               std::fabs(c1[r].to_double()),
                               std::fabs(c2[r].to_double())});
      if (IsZero(d1, scale) && IsZero(d2, scale)) continue;
      if (IsZero(d1, scale)) {
        mismatch = Violation{Condition::kWeightedNotExponential, r, r,
                             std::nullopt, x, std::nullopt, d2, d1};
        break;
      }
      double rho = d2.to_double() / d1.to_double();
      if (!(rho > 0.0)) {
        mismatch = Violation{Condition::kWeightedNotExponential, r, r,
                             std::nullopt, x, std::nullopt, d2, d1};
        break;
      }
      if (!ratio) {
        ratio = rho;
      } else if (!Close(*ratio, rho)) {
        mismatch = Violation{Condition::kWeightedNotExponential, r, r,
                             std::nullopt, x, std::nullopt, Number(rho),
                             Number(*ratio)};
        break;
      }
    }
  }
  if (mismatch) return *mismatch;
  if (!ratio) return *nonlinear;  // unreachable: constants are affine

  WeightedExponentialFit fit;
  fit.phi = std::log(*ratio) / d;
  fit.a.assign(m, 0.0);
  fit.b.assign(m, 0.0);
  const RationalVector& x0 = bases.front();
  NumberVector c0 = eval(x0);
  for (int r = 0; r < m; ++r) {
    NumberVector c1 = eval(shifted(x0, r, 1));
    double d1 = (c1[r] - c0[r]).to_double();
    double base = std::exp(fit.phi * x0[r].get_d());
    fit.a[r] = d1 / (base * (*ratio - 1.0));
    fit.b[r] = c0[r].to_double() - fit.a[r] * base;
  }
  for (const auto& x : bases) {
    NumberVector c = eval(x);
    for (int r = 0; r < m; ++r) {
      double predicted = fit.a[r] * std::exp(fit.phi * x[r].get_d()) + fit.b[r];
      if (!Close(predicted, c[r].to_double())) {
        return Violation{Condition::kWeightedNotExponential, r, r,
                         std::nullopt, x, std::nullopt, c[r],
                         Number(predicted)};
      }
    }
  }
  return fit;
}

ConsistencyReport ClassifyWeighted(const CostModel& model, int m,
                                   const WeightedGrid& grid) {
  ValidateCostModel(model, m);
  if (std::holds_alternative<PlayerSpecificSeparable>(model)) {
    throw UnsupportedError("player-specific costs have no shared classification");
  }
  return ClassifyWeighted(
      [&](std::span<const Rational> x) { return EvalCost(model, x); }, m,
      grid);
}

}  // namespace rgg
