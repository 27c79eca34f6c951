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
#include "rgg/local_monotonicity.h"

#include <string>
#include <utility>

#include "rgg/errors.h"

namespace rgg {

NuTable IdentityNu(int num_resources, int max_load) {
  NuTable nu(num_resources, RationalVector(max_load + 1));
  for (auto& row : nu) {
    for (int k = 0; k <= max_load; ++k) row[k] = k;
  }
  return nu;
}

void ValidateNu(const NuTable& nu, int num_resources) {
  if (static_cast<int>(nu.size()) != num_resources) {
    throw StructuralError("nu needs one row per resource");
  }
  for (const auto& row : nu) {
    if (row.empty()) throw StructuralError("empty nu row");
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (row[k] < row[k - 1]) throw DomainError("nu must be non-decreasing");
    }
  }
}

namespace {

const Rational& NuAt(const NuTable& nu, int r, const Rational& load) {
  long k = ToInteger(load);
  if (k < 0 || k >= static_cast<long>(nu[r].size())) {
    throw RangeError("load " + std::to_string(k) + " outside nu table of resource " +
                     std::to_string(r));
  }
  return nu[r][k];
}

Number Contract(const Incidence& v, const CostModel& cost,
                const RationalVector& loads, std::optional<int> player) {
  return ContractCost(Rational(1), v, EvalCost(cost, loads, player));
}

}  // namespace

MonotonicityCheck CheckLocalMonotonicity(const CostModel& cost,
                                         std::span<const MatroidDesc> types,
                                         int bound, std::span<const NuTable> nu,
                                         std::optional<int> player,
                                         std::size_t cap) {
  if (types.size() != nu.size()) {
    throw StructuralError("need one nu table per type");
  }
  if (bound < 0) throw UsageError("load bound must be non-negative");
  MonotonicityCheck result;
  for (std::size_t type = 0; type < types.size(); ++type) {
    const MatroidDesc& desc = types[type];
    const int m = desc.ground_size;
    ValidateNu(nu[type], m);
    for (const auto& row : nu[type]) {
      if (static_cast<int>(row.size()) < bound + 2) {
        throw RangeError("nu table must cover loads up to bound + 1");
      }
    }
    for (const Incidence& t : EnumerateBases(desc, cap)) {
      for (int r = 0; r < m; ++r) {
        if (!t[r]) continue;
        for (int s = 0; s < m; ++s) {
          if (t[s]) continue;
          Incidence u = t;
          u[r] = 0;
          u[s] = 1;
          if (!IsBasis(desc, u)) continue;
          RationalVector z(m, Rational(0));
          while (true) {
            RationalVector tz = z;
            RationalVector uz = z;
            for (int g = 0; g < m; ++g) {
              tz[g] += t[g];
              uz[g] += u[g];
            }
            if (NuAt(nu[type], r, tz[r]) <= NuAt(nu[type], s, uz[s])) {
              ++result.tuples_checked;
              Number lhs = Contract(t, cost, tz, player);
              Number rhs = Contract(u, cost, uz, player);
              if (rhs < lhs) {
                result.ok = false;
                result.witness = MonotonicityWitness{
                    static_cast<int>(type), t, r, s, z, lhs, rhs};
                return result;
              }
            }
            int k = m - 1;
            while (k >= 0 && z[k] == bound) z[k--] = 0;
            if (k < 0) break;
            z[k] += 1;
          }
        }
      }
    }
  }
  return result;
}

Game SeparableProxyGame(const Game& game, std::span<const NuTable> nu) {
  if (static_cast<int>(nu.size()) != game.num_players()) {
    throw StructuralError("need one nu table per player");
  }
  PlayerSpecificSeparable proxy;
  for (const NuTable& table : nu) {
    ValidateNu(table, game.num_resources());
    proxy.nu.push_back(table);
  }
  return Game(game.num_resources(), game.players(), std::move(proxy));
}

MatroidSolution SolveMatroidLift(const Game& game, std::span<const NuTable> nu,
                                 const DynamicsOptions& options) {
  for (int i = 0; i < game.num_players(); ++i) {
    if (game.player(i).strategies.is_explicit()) {
      throw PreconditionError("player " + std::to_string(i) +
                              " does not have a matroid strategy space");
    }
  }
  Game proxy = SeparableProxyGame(game, nu);

  // Greedy start against an empty background.
  Profile start;
  for (int i = 0; i < game.num_players(); ++i) {
    NumberVector weights;
    for (int r = 0; r < game.num_resources(); ++r) {
      weights.push_back(NuAt(nu[i], r, game.player(i).weight));
    }
    start.choices.push_back(
        GreedyBestResponse(game.player(i).strategies.matroid(), weights));
  }

  MatroidSolution solution;
  solution.trace = RunBestResponseDynamics(proxy, start, options);
  solution.proxy_converged = solution.trace.converged;
  if (solution.proxy_converged) {
    solution.profile = solution.trace.terminal;
  } else {
    Certificate fallback = BruteForcePne(proxy, options.limits);
    const auto* found = std::get_if<PneFound>(&fallback);
    if (found == nullptr) {
      throw InternalError("separable proxy game has no pure equilibrium");
    }
    solution.profile = found->profile;
  }
  solution.certificate = VerifyPne(game, solution.profile, options.limits);
  if (const auto* bad = std::get_if<NotPne>(&solution.certificate)) {
    throw InternalError(
        "proxy equilibrium is not an equilibrium of the original game: player " +
        std::to_string(bad->player) + " improves by " + bad->delta.ToString() +
        "; nu does not fit the cost");
  }
  return solution;
}

}  // namespace rgg
