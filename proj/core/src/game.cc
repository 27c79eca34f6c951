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
#include "rgg/game.h"

#include <algorithm>
#include <string>
#include <utility>

#include "rgg/errors.h"

namespace rgg {

StrategySpace StrategySpace::Explicit(int num_resources,
                                      std::vector<Incidence> vectors) {
  if (vectors.empty()) throw StructuralError("strategy space is empty");
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != num_resources) {
      throw StructuralError("strategy vector has dimension " +
                            std::to_string(v.size()) + ", expected " +
                            std::to_string(num_resources));
    }
    for (auto bit : v) {
      if (bit > 1) throw StructuralError("strategy vectors must be 0/1");
    }
  }
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  StrategySpace space;
  space.dimension_ = num_resources;
  space.space_ = std::move(vectors);
  return space;
}

StrategySpace StrategySpace::Matroid(MatroidDesc desc) {
  ValidateMatroid(desc);
  StrategySpace space;
  space.dimension_ = desc.ground_size;
  space.space_ = std::move(desc);
  return space;
}

const std::vector<Incidence>& StrategySpace::vectors() const {
  const auto* list = std::get_if<std::vector<Incidence>>(&space_);
  if (list == nullptr) throw UsageError("strategy space is not explicit");
  return *list;
}

const MatroidDesc& StrategySpace::matroid() const {
  const auto* desc = std::get_if<MatroidDesc>(&space_);
  if (desc == nullptr) throw UsageError("strategy space is not a matroid");
  return *desc;
}

bool StrategySpace::Contains(const Incidence& v) const {
  if (static_cast<int>(v.size()) != dimension_) return false;
  if (const auto* list = std::get_if<std::vector<Incidence>>(&space_)) {
    return std::binary_search(list->begin(), list->end(), v);
  }
  return IsBasis(std::get<MatroidDesc>(space_), v);
}

std::vector<Incidence> StrategySpace::Enumerate(std::size_t cap) const {
  if (const auto* list = std::get_if<std::vector<Incidence>>(&space_)) {
    if (list->size() > cap) {
      throw CapacityError("strategy list of " + std::to_string(list->size()) +
                          " vectors exceeds cap " + std::to_string(cap));
    }
    return *list;
  }
  return EnumerateBases(std::get<MatroidDesc>(space_), cap);
}

bool StrategySpace::operator==(const StrategySpace& other) const {
  return dimension_ == other.dimension_ && space_ == other.space_;
}

Game::Game(int num_resources, std::vector<Player> players, CostModel cost)
    : num_resources_(num_resources),
      players_(std::move(players)),
      cost_(std::move(cost)) {
  if (num_resources_ < 1) {
    throw StructuralError("a game needs at least one resource");
  }
  for (std::size_t i = 0; i < players_.size(); ++i) {
    const Player& p = players_[i];
    if (p.weight <= 0) {
      throw DomainError("player " + std::to_string(i) +
                        " has non-positive weight " + FormatRational(p.weight));
    }
    if (p.strategies.dimension() != num_resources_) {
      throw StructuralError("player " + std::to_string(i) +
                            " strategies have dimension " +
                            std::to_string(p.strategies.dimension()));
    }
    unweighted_ = unweighted_ && p.weight == 1;
  }
  ValidateCostModel(cost_, num_resources_, num_players());
}

void ValidateProfile(const Game& game, const Profile& profile) {
  if (static_cast<int>(profile.choices.size()) != game.num_players()) {
    throw StructuralError("profile has " +
                          std::to_string(profile.choices.size()) +
                          " choices for " + std::to_string(game.num_players()) +
                          " players");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    const Incidence& choice = profile.choices[i];
    if (static_cast<int>(choice.size()) != game.num_resources()) {
      throw StructuralError("choice of player " + std::to_string(i) +
                            " has wrong dimension");
    }
    if (!game.player(i).strategies.Contains(choice)) {
      throw DomainError("choice " + IncidenceToString(choice) +
                        " is not playable for player " + std::to_string(i));
    }
  }
}

RationalVector LoadOf(const Game& game, const Profile& profile) {
  if (static_cast<int>(profile.choices.size()) != game.num_players()) {
    throw StructuralError("profile size does not match player count");
  }
  RationalVector loads(game.num_resources(), Rational(0));
  for (int i = 0; i < game.num_players(); ++i) {
    const Incidence& choice = profile.choices[i];
    if (static_cast<int>(choice.size()) != game.num_resources()) {
      throw StructuralError("choice of player " + std::to_string(i) +
                            " has wrong dimension");
    }
    const Rational& w = game.player(i).weight;
    for (int r = 0; r < game.num_resources(); ++r) {
      if (choice[r]) loads[r] += w;
    }
  }
  return loads;
}

Number ContractCost(const Rational& weight, const Incidence& y,
                    const NumberVector& costs) {
  Number total;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (y[r]) total += costs[r];
  }
  if (weight != 1) total *= Number(weight);
  return total;
}

Number PrivateCost(const Game& game, const Profile& profile, int i) {
  if (i < 0 || i >= game.num_players()) {
    throw UsageError("player index out of range");
  }
  RationalVector loads = LoadOf(game, profile);
  std::optional<int> player;
  if (std::holds_alternative<PlayerSpecificSeparable>(game.cost())) player = i;
  NumberVector costs = EvalCost(game.cost(), loads, player);
  return ContractCost(game.player(i).weight, profile.choices[i], costs);
}

NumberVector PrivateCosts(const Game& game, const Profile& profile) {
  RationalVector loads = LoadOf(game, profile);
  NumberVector result(game.num_players());
  if (std::holds_alternative<PlayerSpecificSeparable>(game.cost())) {
    for (int i = 0; i < game.num_players(); ++i) {
      result[i] = ContractCost(game.player(i).weight, profile.choices[i],
                               EvalCost(game.cost(), loads, i));
    }
    return result;
  }
  NumberVector costs = EvalCost(game.cost(), loads);
  for (int i = 0; i < game.num_players(); ++i) {
    result[i] =
        ContractCost(game.player(i).weight, profile.choices[i], costs);
  }
  return result;
}

Profile Deviate(const Game& game, const Profile& profile, int i,
                const Incidence& y) {
  if (i < 0 || i >= game.num_players()) {
    throw UsageError("player index out of range");
  }
  if (!game.player(i).strategies.Contains(y)) {
    throw DomainError("deviation " + IncidenceToString(y) +
                      " is not playable for player " + std::to_string(i));
  }
  Profile result = profile;
  result.choices[i] = y;
  return result;
}

}  // namespace rgg
