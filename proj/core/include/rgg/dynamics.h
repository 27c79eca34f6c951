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
#ifndef RGG_DYNAMICS_H_
#define RGG_DYNAMICS_H_

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "rgg/game.h"
#include "rgg/incidence.h"
#include "rgg/number.h"

namespace rgg {

struct EnumerationLimits {
  std::size_t strategy_cap = 100000;
  std::uint64_t profile_budget = 10'000'000;
  int jobs = 1;
};

// Every player's strategies, materialized in canonical order. Profile index
// is mixed radix with player 0 most significant.
struct ProfileSpace {
  std::vector<std::vector<Incidence>> strategies;
  std::uint64_t size = 1;

  Profile At(std::uint64_t index) const;
  std::uint64_t IndexOf(const Profile& profile) const;
};

// Throws CapacityError naming the player whose space is too large, or when
// the profile count exceeds the budget (if check_budget).
ProfileSpace EnumerateProfiles(const Game& game, const EnumerationLimits& limits,
                               bool check_budget = true);

struct IsPne {};
struct NotPne {
  int player = 0;
  Incidence deviation;
  Number delta;  // pi_i(deviation) - pi_i(current) < 0
};
struct NoPneExists {
  std::uint64_t profiles_checked = 0;
};
struct PneFound {
  Profile profile;
};
using Certificate = std::variant<IsPne, NotPne, NoPneExists, PneFound>;

// Checks every unilateral deviation; the witness is the first improving one
// (players in order, strategies in canonical order).
Certificate VerifyPne(const Game& game, const Profile& profile,
                      const EnumerationLimits& limits = {});

// A minimizer of pi_i(., x_{-i}). Keeps the incumbent on ties, otherwise the
// first minimizer in canonical order. Player-specific separable costs on a
// matroid space use the greedy algorithm.
Incidence BestResponse(const Game& game, const Profile& profile, int i,
                       const EnumerationLimits& limits = {});

enum class Schedule { kRoundRobin, kRandom };
enum class ResponseRule { kBest, kBetter };

struct DynamicsOptions {
  long max_iters = 10000;
  Schedule schedule = Schedule::kRoundRobin;
  std::uint64_t seed = 0;
  ResponseRule rule = ResponseRule::kBest;
  EnumerationLimits limits;
};

struct DynamicsStep {
  int player = 0;
  Incidence from;
  Incidence to;
  Number delta;
};

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  Profile terminal;
  bool converged = false;
  long iterations = 0;
};

// Applies strict improvements until a full pass over the players finds none
// or max_iters improvements were made. The random schedule reshuffles the
// player order every pass.
DynamicsTrace RunBestResponseDynamics(const Game& game, const Profile& start,
                                      const DynamicsOptions& options = {});

// First PNE in canonical profile order, or an exhaustion certificate. Work is
// split into limits.jobs contiguous chunks; the result does not depend on it.
Certificate BruteForcePne(const Game& game,
                          const EnumerationLimits& limits = {});

}  // namespace rgg

#endif  // RGG_DYNAMICS_H_
