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
#ifndef RGG_COSTS_H_
#define RGG_COSTS_H_

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rgg/number.h"

namespace rgg {

// c_r reads only the coordinates listed in neighborhoods[r] (sorted). The
// table for r is indexed by those coordinates in mixed radix
// (max_load[r] + 1), first neighbor most significant. Integer loads only.
struct Tabulated {
  std::vector<std::vector<int>> neighborhoods;
  std::vector<int> max_load;
  std::vector<NumberVector> tables;
};

// c_r(x) = f[r][x_r] + (A x)_r. f[r] holds values for loads 0..L.
struct SeparablePlusLinear {
  RationalMatrix f;
  RationalMatrix a;
};

// c(x) = A x + b. Evaluates at rational loads.
struct Affine {
  RationalMatrix a;
  RationalVector b;
};

// c_r(x) = a_r exp(phi x_r) + b_r, evaluated in double precision.
struct Exponential {
  std::vector<double> a;
  double phi = 0.0;
  std::vector<double> b;
};

// c_r(x) = x_r + kappa*_r(x): the budget is split evenly over the resources
// of maximum load. The dimension comes from the load vector.
struct Bilevel {
  Rational budget;
};

// c_{i,r}(x) = nu[i][r][x_r]; each nu[i][r] is non-decreasing.
struct PlayerSpecificSeparable {
  std::vector<RationalMatrix> nu;
};

using CostModel = std::variant<Tabulated, SeparablePlusLinear, Affine,
                               Exponential, Bilevel, PlayerSpecificSeparable>;

// Short lowercase tag: "tabulated", "separable_plus_linear", ...
const char* CostKindName(const CostModel& model);

// Number of resources the model is defined on; nullopt for Bilevel.
std::optional<int> CostDimension(const CostModel& model);

// Throws StructuralError / DomainError on malformed models. num_players is
// checked against player-specific tables when given.
void ValidateCostModel(const CostModel& model, int num_resources,
                       std::optional<int> num_players = std::nullopt);

// B_r for every resource: the coordinates c_r actually reads.
std::vector<std::vector<int>> Neighborhoods(const CostModel& model,
                                            int num_resources);

bool IsSymmetric(const RationalMatrix& a);

NumberVector EvalCost(const CostModel& model, std::span<const Rational> loads,
                      std::optional<int> player = std::nullopt);

struct ArgmaxSet {
  std::vector<int> indices;
  Rational value;
};
ArgmaxSet Argmax(std::span<const Rational> loads);

RationalVector KappaStar(std::span<const Rational> loads,
                         const Rational& budget);

// Block-diagonal composition on the disjoint union of resource sets.
CostModel Compose(std::span<const CostModel> models);
CostModel ComposeCopies(const CostModel& model, int copies);

// Table agreeing with the model on every integer load vector in
// {0..max_load}^m, with each neighborhood shrunk to the coordinates the cost
// really depends on. Exponential models need allow_float.
Tabulated AsTabulated(const CostModel& model, int num_resources, int max_load,
                      std::optional<int> player = std::nullopt,
                      bool allow_float = false);

// Builds a minimal-neighborhood table from a cost oracle on integer loads.
using IntegerCostFunction =
    std::function<NumberVector(std::span<const long> loads)>;
Tabulated TabulateFunction(int num_resources, int max_load,
                           const IntegerCostFunction& cost);

// Direct table lookup for c_r at an integer load vector.
Number TableValue(const Tabulated& table, int r, std::span<const long> loads);

}  // namespace rgg

#endif  // RGG_COSTS_H_
