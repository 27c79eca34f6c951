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
#ifndef RGG_GAME_H_
#define RGG_GAME_H_

#include <cstddef>
#include <variant>
#include <vector>

#include "rgg/costs.h"
#include "rgg/incidence.h"
#include "rgg/matroid.h"
#include "rgg/number.h"

namespace rgg {

// A player's set of 0/1 vectors, either listed or given as matroid bases.
// Explicit lists are kept sorted and deduplicated.
class StrategySpace {
 public:
  static StrategySpace Explicit(int num_resources,
                                std::vector<Incidence> vectors);
  static StrategySpace Matroid(MatroidDesc desc);

  int dimension() const { return dimension_; }
  bool is_explicit() const {
    return std::holds_alternative<std::vector<Incidence>>(space_);
  }
  const std::vector<Incidence>& vectors() const;
  const MatroidDesc& matroid() const;

  bool Contains(const Incidence& v) const;
  // Canonical (lexicographic) order. Throws CapacityError past cap.
  std::vector<Incidence> Enumerate(std::size_t cap = 100000) const;

  bool operator==(const StrategySpace& other) const;

 private:
  StrategySpace() = default;

  int dimension_ = 0;
  std::variant<std::vector<Incidence>, MatroidDesc> space_;
};

struct Player {
  Rational weight = 1;
  StrategySpace strategies;
};

// Players choose unscaled 0/1 vectors; a player's contribution to the load is
// weight times its choice.
struct Profile {
  std::vector<Incidence> choices;
  bool operator==(const Profile&) const = default;
};

class Game {
 public:
  // Throws StructuralError / DomainError on invalid data.
  Game(int num_resources, std::vector<Player> players, CostModel cost);

  int num_resources() const { return num_resources_; }
  int num_players() const { return static_cast<int>(players_.size()); }
  const std::vector<Player>& players() const { return players_; }
  const Player& player(int i) const { return players_[i]; }
  const CostModel& cost() const { return cost_; }
  bool is_unweighted() const { return unweighted_; }

 private:
  int num_resources_;
  std::vector<Player> players_;
  CostModel cost_;
  bool unweighted_ = true;
};

void ValidateProfile(const Game& game, const Profile& profile);

RationalVector LoadOf(const Game& game, const Profile& profile);

// pi_i = (w_i y_i)^T c_i(x). Float only for exponential costs.
Number PrivateCost(const Game& game, const Profile& profile, int i);

// Private costs of all players from a single cost evaluation per distinct
// cost vector.
NumberVector PrivateCosts(const Game& game, const Profile& profile);

// pi_i for choice y given the cost vector at the resulting load.
Number ContractCost(const Rational& weight, const Incidence& y,
                    const NumberVector& costs);

// (y, x_{-i}). Throws DomainError if y is not in player i's space.
Profile Deviate(const Game& game, const Profile& profile, int i,
                const Incidence& y);

}  // namespace rgg

#endif  // RGG_GAME_H_
