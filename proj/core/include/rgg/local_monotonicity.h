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
#ifndef RGG_LOCAL_MONOTONICITY_H_
#define RGG_LOCAL_MONOTONICITY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rgg/costs.h"
#include "rgg/dynamics.h"
#include "rgg/game.h"
#include "rgg/matroid.h"

namespace rgg {

// nu[r][k] for loads k = 0..bound; every row non-decreasing.
using NuTable = RationalMatrix;

NuTable IdentityNu(int num_resources, int max_load);

void ValidateNu(const NuTable& nu, int num_resources);

struct MonotonicityWitness {
  int type = 0;
  Incidence t;
  int r = 0;
  int s = 0;
  RationalVector z;
  Number lhs;  // t^T c(t + z)
  Number rhs;  // u^T c(u + z)
};

struct MonotonicityCheck {
  bool ok = true;
  std::uint64_t tuples_checked = 0;
  std::optional<MonotonicityWitness> witness;
};

// For every type T, basis t, exchange u = t + 1_s - 1_r in T and background
// z in {0..bound}^m with nu_{T,r}(t_r + z_r) <= nu_{T,s}(u_s + z_s), checks
// t^T c(t + z) <= u^T c(u + z). nu[k] belongs to types[k] and must cover
// loads up to bound + 1. player selects the cost of a player-specific model.
MonotonicityCheck CheckLocalMonotonicity(
    const CostModel& cost, std::span<const MatroidDesc> types, int bound,
    std::span<const NuTable> nu, std::optional<int> player = std::nullopt,
    std::size_t cap = 100000);

// Same strategy spaces with player i paying nu[i][r] at load x_r.
Game SeparableProxyGame(const Game& game, std::span<const NuTable> nu);

struct MatroidSolution {
  Profile profile;
  Certificate certificate;  // VerifyPne on the original game
  bool proxy_converged = false;
  DynamicsTrace trace;
};

// Runs best-response dynamics on the separable proxy game from the greedy
// start, falls back to brute force on the proxy if the dynamics stall, and
// verifies the proxy equilibrium on the original game. Throws InternalError
// if that verification fails (nu does not fit the cost).
MatroidSolution SolveMatroidLift(const Game& game, std::span<const NuTable> nu,
                                 const DynamicsOptions& options = {});

}  // namespace rgg

#endif  // RGG_LOCAL_MONOTONICITY_H_
