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
#include "rgg/dynamics.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include "rgg/errors.h"
#include "rgg/matroid.h"

namespace rgg {
namespace {

std::optional<int> CostPlayer(const Game& game, int i) {
  if (std::holds_alternative<PlayerSpecificSeparable>(game.cost())) return i;
  return std::nullopt;
}

// pi_i after player i switches to y, given the current loads.
Number DeviationCost(const Game& game, const RationalVector& loads,
                     const Profile& profile, int i, const Incidence& y) {
  const Rational& w = game.player(i).weight;
  const Incidence& current = profile.choices[i];
  RationalVector moved = loads;
  for (int r = 0; r < game.num_resources(); ++r) {
    if (current[r] != y[r]) {
      if (current[r]) {
        moved[r] -= w;
      } else {
        moved[r] += w;
      }
    }
  }
  return ContractCost(w, y, EvalCost(game.cost(), moved, CostPlayer(game, i)));
}

std::vector<Incidence> StrategiesOf(const Game& game, int i,
                                    const EnumerationLimits& limits) {
  try {
    return game.player(i).strategies.Enumerate(limits.strategy_cap);
  } catch (const CapacityError& e) {
    throw CapacityError("player " + std::to_string(i) + ": " + e.what());
  }
}

bool IsGreedyCase(const Game& game, int i) {
  return std::holds_alternative<PlayerSpecificSeparable>(game.cost()) &&
         !game.player(i).strategies.is_explicit();
}

// True if profile has no improving deviation. strategies[i] is player i's
// list; loads and current costs are computed once.
bool IsEquilibrium(const Game& game, const Profile& profile,
                   const std::vector<std::vector<Incidence>>& strategies) {
  RationalVector loads = LoadOf(game, profile);
  NumberVector costs = PrivateCosts(game, profile);
  for (int i = 0; i < game.num_players(); ++i) {
    for (const Incidence& y : strategies[i]) {
      if (y == profile.choices[i]) continue;
      if (DeviationCost(game, loads, profile, i, y) < costs[i]) return false;
    }
  }
  return true;
}

}  // namespace

Profile ProfileSpace::At(std::uint64_t index) const {
  Profile profile;
  profile.choices.resize(strategies.size());
  for (int i = static_cast<int>(strategies.size()) - 1; i >= 0; --i) {
    const std::uint64_t radix = strategies[i].size();
    profile.choices[i] = strategies[i][index % radix];
    index /= radix;
  }
  return profile;
}

std::uint64_t ProfileSpace::IndexOf(const Profile& profile) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    auto it = std::lower_bound(strategies[i].begin(), strategies[i].end(),
                               profile.choices[i]);
    if (it == strategies[i].end() || *it != profile.choices[i]) {
      throw DomainError("profile entry of player " + std::to_string(i) +
                        " is not an enumerated strategy");
    }
    index = index * strategies[i].size() +
            static_cast<std::uint64_t>(it - strategies[i].begin());
  }
  return index;
}

ProfileSpace EnumerateProfiles(const Game& game, const EnumerationLimits& limits,
                               bool check_budget) {
  ProfileSpace space;
  for (int i = 0; i < game.num_players(); ++i) {
    space.strategies.push_back(StrategiesOf(game, i, limits));
    const std::uint64_t count = space.strategies.back().size();
    if (check_budget && space.size > limits.profile_budget / count) {
      throw CapacityError("profile count exceeds budget of " +
                          std::to_string(limits.profile_budget));
    }
    space.size *= count;
  }
  return space;
}

Certificate VerifyPne(const Game& game, const Profile& profile,
                      const EnumerationLimits& limits) {
  ValidateProfile(game, profile);
  RationalVector loads = LoadOf(game, profile);
  NumberVector costs = PrivateCosts(game, profile);
  for (int i = 0; i < game.num_players(); ++i) {
    for (const Incidence& y : StrategiesOf(game, i, limits)) {
      if (y == profile.choices[i]) continue;
      Number cost = DeviationCost(game, loads, profile, i, y);
      if (cost < costs[i]) return NotPne{i, y, cost - costs[i]};
    }
  }
  return IsPne{};
}

Incidence BestResponse(const Game& game, const Profile& profile, int i,
                       const EnumerationLimits& limits) {
  ValidateProfile(game, profile);
  RationalVector loads = LoadOf(game, profile);
  const Incidence& incumbent = profile.choices[i];
  Number incumbent_cost = PrivateCost(game, profile, i);
  if (IsGreedyCase(game, i)) {
    const auto& nu = std::get<PlayerSpecificSeparable>(game.cost()).nu[i];
    const Rational& w = game.player(i).weight;
    NumberVector weights(game.num_resources());
    for (int r = 0; r < game.num_resources(); ++r) {
      Rational others = loads[r];
      if (incumbent[r]) others -= w;
      long k = ToInteger(others + w);
      if (k >= static_cast<long>(nu[r].size())) {
        throw RangeError("load on resource " + std::to_string(r) +
                         " exceeds nu table bound");
      }
      weights[r] = nu[r][k];
    }
    Incidence best = GreedyBestResponse(game.player(i).strategies.matroid(),
                                        weights);
    Number best_cost = DeviationCost(game, loads, profile, i, best);
    return best_cost < incumbent_cost ? best : incumbent;
  }
  Incidence best = incumbent;
  Number best_cost = incumbent_cost;
  for (const Incidence& y : StrategiesOf(game, i, limits)) {
    if (y == incumbent) continue;
    Number cost = DeviationCost(game, loads, profile, i, y);
    if (cost < best_cost) {
      best = y;
      best_cost = std::move(cost);
    }
  }
  return best;
}

namespace {

std::optional<Incidence> FirstBetterResponse(const Game& game,
                                             const Profile& profile, int i,
                                             const EnumerationLimits& limits) {
  RationalVector loads = LoadOf(game, profile);
  Number current = PrivateCost(game, profile, i);
  for (const Incidence& y : StrategiesOf(game, i, limits)) {
    if (y == profile.choices[i]) continue;
    if (DeviationCost(game, loads, profile, i, y) < current) return y;
  }
  return std::nullopt;
}

}  // namespace

DynamicsTrace RunBestResponseDynamics(const Game& game, const Profile& start,
                                      const DynamicsOptions& options) {
  ValidateProfile(game, start);
  DynamicsTrace trace;
  trace.terminal = start;
  std::mt19937_64 rng(options.seed);
  std::vector<int> order(game.num_players());
  std::iota(order.begin(), order.end(), 0);
  while (true) {
    if (options.schedule == Schedule::kRandom) {
      std::shuffle(order.begin(), order.end(), rng);
    }
    bool improved = false;
    for (int i : order) {
      Incidence next;
      if (options.rule == ResponseRule::kBetter) {
        auto better = FirstBetterResponse(game, trace.terminal, i, options.limits);
        if (!better) continue;
        next = std::move(*better);
      } else {
        next = BestResponse(game, trace.terminal, i, options.limits);
        if (next == trace.terminal.choices[i]) continue;
      }
      if (trace.iterations >= options.max_iters) {
        trace.converged = false;
        return trace;
      }
      Number before = PrivateCost(game, trace.terminal, i);
      Incidence from = trace.terminal.choices[i];
      trace.terminal.choices[i] = next;
      Number after = PrivateCost(game, trace.terminal, i);
      trace.steps.push_back({i, std::move(from), std::move(next), after - before});
      ++trace.iterations;
      improved = true;
    }
    if (!improved) {
      trace.converged = true;
      return trace;
    }
  }
}

Certificate BruteForcePne(const Game& game, const EnumerationLimits& limits) {
  ProfileSpace space = EnumerateProfiles(game, limits);
  const int jobs = std::max(1, limits.jobs);
  std::atomic<std::uint64_t> found(space.size);
  // Per-chunk first failure; only a failure before the first PNE counts, so
  // the outcome matches a sequential scan.
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::uint64_t> error_at(jobs, space.size);

  auto scan = [&](int job, std::uint64_t begin, std::uint64_t end) {
    std::uint64_t index = begin;
    try {
      for (; index < end; ++index) {
        if (index >= found.load(std::memory_order_relaxed)) return;
        if (IsEquilibrium(game, space.At(index), space.strategies)) {
          std::uint64_t current = found.load();
          while (index < current &&
                 !found.compare_exchange_weak(current, index)) {
          }
          return;
        }
      }
    } catch (...) {
      errors[job] = std::current_exception();
      error_at[job] = index;
    }
  };

  if (jobs == 1 || space.size < 2) {
    scan(0, 0, space.size);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (space.size + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      std::uint64_t begin = std::min<std::uint64_t>(space.size, j * chunk);
      std::uint64_t end = std::min<std::uint64_t>(space.size, begin + chunk);
      workers.emplace_back(scan, j, begin, end);
    }
    for (auto& worker : workers) worker.join();
  }
  for (int j = 0; j < jobs; ++j) {
    if (errors[j] && error_at[j] < found) std::rethrow_exception(errors[j]);
  }
  if (found < space.size) return PneFound{space.At(found)};
  return NoPneExists{space.size};
}

}  // namespace rgg
