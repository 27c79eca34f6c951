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
#ifndef RGG_CHARACTERIZE_H_
#define RGG_CHARACTERIZE_H_

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rgg/costs.h"
#include "rgg/number.h"

namespace rgg {

// The functional equations a consistent cost must satisfy. The first five are
// the unweighted conditions; the last three come from the weighted dichotomy.
enum class Condition {
  // c_r(x+1_rs) - c_r(x+1_r) = c_s(x+1_rs) - c_s(x+1_s).
  kJacobianSymmetry,
  // c_r(x+1_s) - c_r(x) = c_r(x+1_rs) - c_r(x+1_r), x_r > 0.
  kCrossIncrement,
  // c_r(x+2*1_s) - c_r(x+1_s) = c_r(x+1_s) - c_r(x), x_r > 0.
  kCrossCurvature,
  // c_r(x+1_s) - c_r(x) = c_r(x+1_st) - c_r(x+1_t), x_r > 0.
  kTripleCross,
  // c_r(x+1_s) - c_r(x) = c_r(y+1_s) - c_r(y), x_r, y_r > 0.
  kCrossConstancy,
  // Affine on the grid but with an asymmetric matrix.
  kWeightedAsymmetric,
  // Neither affine nor separable: resources interact non-linearly.
  kWeightedInteraction,
  // Separable but not a shared-exponent exponential.
  kWeightedNotExponential,
};

const char* ConditionName(Condition condition);

struct Violation {
  Condition condition = Condition::kJacobianSymmetry;
  int r = 0;
  int s = 0;
  std::optional<int> t;
  RationalVector x;
  std::optional<RationalVector> y;
  Number lhs;
  Number rhs;
};

// Checks every r < s and x in {0..bound}^m. The table must reach bound + 1.
std::optional<Violation> CheckJacobianSymmetry(const Tabulated& c, int bound);

// The first violation of each cross condition, in the order increment,
// curvature, triple, constancy. Empty if all hold on {0..bound}^m. The table
// must reach bound + 2.
std::vector<Violation> CrossLinearityViolations(const Tabulated& c, int bound);
std::optional<Violation> CheckCrossLinearity(const Tabulated& c, int bound);

// Recomputes both sides of a violation from the table.
bool ReverifyViolation(const Tabulated& c, const Violation& v);

struct UnweightedConsistent {
  RationalMatrix f;  // f[r][k] = c_r(k 1_r), k = 0..bound
  RationalMatrix a;  // zero diagonal, symmetric
  int bound = 0;
  // Points with x_r = 0 where c_r differs from the reconstruction. The
  // conditions say nothing there.
  std::size_t zero_load_mismatches = 0;
};

struct WeightedAffineFit {
  std::vector<NumberVector> a;
  NumberVector b;
};

struct WeightedExponentialFit {
  std::vector<double> a;
  double phi = 0.0;
  std::vector<double> b;
};

using ConsistencyReport = std::variant<UnweightedConsistent, WeightedAffineFit,
                                       WeightedExponentialFit, Violation>;

// Runs both checks and, if they pass, returns the canonical decomposition
// c_r(x) = f_r(x_r) + (A x)_r. Throws InternalError if the reconstruction
// fails at a point with x_r > 0. Needs exact table values.
ConsistencyReport DecomposeUnweighted(const Tabulated& c, int bound);

// Base points are coords^m; each is probed at steps of size step along every
// coordinate. Needs at least two coordinates and a positive step.
struct WeightedGrid {
  RationalVector coords;
  Rational step;
};

using CostFunction = std::function<NumberVector(std::span<const Rational>)>;

// Affine (symmetric) -> WeightedAffineFit; separable with a shared exponent
// -> WeightedExponentialFit; otherwise Violation. Float comparisons use a
// relative tolerance of 1e-9.
ConsistencyReport ClassifyWeighted(const CostFunction& cost, int num_resources,
                                   const WeightedGrid& grid);
ConsistencyReport ClassifyWeighted(const CostModel& model, int num_resources,
                                   const WeightedGrid& grid);

}  // namespace rgg

#endif  // RGG_CHARACTERIZE_H_
