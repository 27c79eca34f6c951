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
#ifndef RGG_REDUCTIONS_H_
#define RGG_REDUCTIONS_H_

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "rgg/dynamics.h"
#include "rgg/game.h"

namespace rgg {

struct Literal {
  int var = 0;  // 0-based
  bool positive = true;
  bool operator==(const Literal&) const = default;
};

struct SatInstance {
  int num_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

void ValidateSat(const SatInstance& instance);

// DIMACS CNF ("p cnf V C", clauses terminated by 0). Every clause must have
// exactly three literals. Throws DomainError with the offending line.
SatInstance ParseDimacs(std::string_view text);

// One player choosing one literal per clause (a partition matroid over the
// 3 * clauses literal occurrences). c_r(x) sums the loads of the occurrences
// contradicting r, written as a symmetric 0/1 matrix with f = 0. The player
// has a strategy of cost 0 iff the formula is satisfiable.
Game ReduceSat(const SatInstance& instance, int max_load = 1);

struct ForbiddenPairsInstance {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // directed
  int source = 0;
  int target = 1;
  std::vector<std::pair<int, int>> pairs;  // edge indices, pairwise disjoint
};

void ValidateForbiddenPairs(const ForbiddenPairsInstance& instance);

// Incidence vectors of all simple source-target paths, sorted. Throws
// CapacityError past cap.
std::vector<Incidence> SimplePaths(const ForbiddenPairsInstance& instance,
                                   std::size_t cap = 100000);

// One player choosing a simple path; the cost of a paired edge is the load
// of its partner and every other edge is free. The player has a strategy of
// cost 0 iff some path uses at most one edge of every pair.
Game ReduceForbiddenPairs(const ForbiddenPairsInstance& instance,
                          std::size_t cap = 100000);

struct ReductionCheck {
  bool passed = false;
  Number min_cost;
  Number max_cost;
  bool zero_cost_exists = false;
  bool max_profile_is_pne = false;
};

// For a single-player reduction game: a zero-cost strategy exists iff
// oracle_answer, and the most expensive strategy is a PNE iff no strategy is
// strictly cheaper (verified through VerifyPne).
ReductionCheck CheckReduction(const Game& game, bool oracle_answer,
                              const EnumerationLimits& limits = {});

}  // namespace rgg

#endif  // RGG_REDUCTIONS_H_
