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
#ifndef RGG_POTENTIAL_H_
#define RGG_POTENTIAL_H_

#include <cstdint>
#include <functional>
#include <optional>

#include "rgg/dynamics.h"
#include "rgg/game.h"
#include "rgg/number.h"

namespace rgg {

// sum_r sum_{k=1}^{x_r} f_r(k) + 1/2 x^T A x + 1/2 sum_i x_i^T A x_i.
// Needs an unweighted game with separable-plus-linear costs and symmetric A.
Rational PotentialUnweighted(const Game& game, const Profile& profile);

// 1/2 x^T A x + 1/2 sum_i x_i^T A x_i + x^T b with x_i = w_i y_i. Needs
// affine costs with symmetric A; weights may be any positive rationals.
Rational PotentialWeightedAffine(const Game& game, const Profile& profile);

using PotentialFunction = std::function<Number(const Profile&)>;

struct PotentialWitness {
  Profile profile;
  int player = 0;
  Incidence deviation;
  Number potential_change;
  Number cost_change;
};

struct PotentialCheck {
  bool passed = true;
  std::uint64_t deviations_checked = 0;
  bool exhaustive = true;
  std::optional<PotentialWitness> witness;
};

// Compares P(y, x_{-i}) - P(x) with pi_i(y, x_{-i}) - pi_i(x) for every
// unilateral deviation. Above profile_bound profiles, profile_bound profiles
// are sampled with the seed and all their deviations checked.
PotentialCheck CheckExactPotential(const Game& game,
                                   const PotentialFunction& potential,
                                   std::uint64_t profile_bound = 1'000'000,
                                   std::uint64_t seed = 0,
                                   const EnumerationLimits& limits = {});

}  // namespace rgg

#endif  // RGG_POTENTIAL_H_
