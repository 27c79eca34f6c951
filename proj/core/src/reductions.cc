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
#include "rgg/reductions.h"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>

#include "rgg/errors.h"

namespace rgg {

void ValidateSat(const SatInstance& instance) {
  if (instance.num_vars < 1) throw DomainError("need at least one variable");
  for (std::size_t c = 0; c < instance.clauses.size(); ++c) {
    for (const Literal& literal : instance.clauses[c]) {
      if (literal.var < 0 || literal.var >= instance.num_vars) {
        throw DomainError("clause " + std::to_string(c) +
                          " uses variable out of range");
      }
    }
  }
}

SatInstance ParseDimacs(std::string_view text) {
  SatInstance instance;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  long declared_clauses = 0;
  std::vector<long> pending;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string format;
      if (header || !(tokens >> format >> instance.num_vars >> declared_clauses) ||
          format != "cnf") {
        throw DomainError("line " + std::to_string(line_number) +
                          ": malformed problem line");
      }
      header = true;
      continue;
    }
    if (!header) {
      throw DomainError("line " + std::to_string(line_number) +
                        ": clause before problem line");
    }
    std::istringstream values(line);
    long value;
    while (values >> value) {
      if (value != 0) {
        pending.push_back(value);
        continue;
      }
      if (pending.size() != 3) {
        throw DomainError("line " + std::to_string(line_number) +
                          ": clause has " + std::to_string(pending.size()) +
                          " literals, expected 3");
      }
      std::array<Literal, 3> clause;
      for (int k = 0; k < 3; ++k) {
        long v = pending[k];
        long var = v > 0 ? v : -v;
        if (var > instance.num_vars) {
          throw DomainError("line " + std::to_string(line_number) +
                            ": variable " + std::to_string(var) +
                            " exceeds declared count");
        }
        clause[k] = Literal{static_cast<int>(var - 1), v > 0};
      }
      instance.clauses.push_back(clause);
      pending.clear();
    }
    if (!values.eof()) {
      throw DomainError("line " + std::to_string(line_number) +
                        ": non-integer token");
    }
  }
  if (!header) throw DomainError("missing problem line");
  if (!pending.empty()) throw DomainError("last clause is not terminated by 0");
  if (static_cast<long>(instance.clauses.size()) != declared_clauses) {
    throw DomainError("problem line declares " +
                      std::to_string(declared_clauses) + " clauses, found " +
                      std::to_string(instance.clauses.size()));
  }
  ValidateSat(instance);
  return instance;
}

Game ReduceSat(const SatInstance& instance, int max_load) {
  ValidateSat(instance);
  if (instance.clauses.empty()) throw DomainError("need at least one clause");
  if (max_load < 1) throw UsageError("max load must be at least 1");
  const int m = 3 * static_cast<int>(instance.clauses.size());
  std::vector<Literal> occurrence;
  for (const auto& clause : instance.clauses) {
    occurrence.insert(occurrence.end(), clause.begin(), clause.end());
  }
  SeparablePlusLinear cost;
  cost.f.assign(m, RationalVector(max_load + 1, Rational(0)));
  cost.a.assign(m, RationalVector(m, Rational(0)));
  for (int r = 0; r < m; ++r) {
    for (int s = 0; s < m; ++s) {
      if (occurrence[r].var == occurrence[s].var &&
          occurrence[r].positive != occurrence[s].positive) {
        cost.a[r][s] = 1;
      }
    }
  }
  std::vector<std::vector<int>> blocks;
  for (int c = 0; c < m / 3; ++c) blocks.push_back({3 * c, 3 * c + 1, 3 * c + 2});
  std::vector<int> quotas(blocks.size(), 1);
  std::vector<Player> players;
  players.push_back(
      {Rational(1), StrategySpace::Matroid(MakePartition(m, blocks, quotas))});
  return Game(m, std::move(players), std::move(cost));
}

void ValidateForbiddenPairs(const ForbiddenPairsInstance& instance) {
  const int n = instance.num_vertices;
  if (n < 2) throw DomainError("need at least two vertices");
  auto valid = [&](int v) { return v >= 0 && v < n; };
  if (!valid(instance.source) || !valid(instance.target) ||
      instance.source == instance.target) {
    throw DomainError("source and target must be distinct vertices");
  }
  const int e = static_cast<int>(instance.edges.size());
  if (e < 1) throw DomainError("need at least one edge");
  for (auto [a, b] : instance.edges) {
    if (!valid(a) || !valid(b)) throw DomainError("edge endpoint out of range");
  }
  std::vector<int> paired(e, 0);
  for (auto [a, b] : instance.pairs) {
    if (a < 0 || b < 0 || a >= e || b >= e || a == b) {
      throw DomainError("pair members must be distinct existing edges");
    }
    if (paired[a]++ || paired[b]++) {
      throw DomainError("pairs must be disjoint: edge used in two pairs");
    }
  }
}

std::vector<Incidence> SimplePaths(const ForbiddenPairsInstance& instance,
                                   std::size_t cap) {
  ValidateForbiddenPairs(instance);
  const int e = static_cast<int>(instance.edges.size());
  std::vector<std::vector<int>> out(instance.num_vertices);
  for (int k = 0; k < e; ++k) out[instance.edges[k].first].push_back(k);
  std::vector<Incidence> paths;
  std::vector<char> visited(instance.num_vertices, 0);
  Incidence current(e, 0);
  std::function<void(int)> walk = [&](int v) {
    if (v == instance.target) {
      if (paths.size() == cap) {
        throw CapacityError("more than " + std::to_string(cap) +
                            " simple paths");
      }
      paths.push_back(current);
      return;
    }
    visited[v] = 1;
    for (int k : out[v]) {
      int w = instance.edges[k].second;
      if (visited[w]) continue;
      current[k] = 1;
      walk(w);
      current[k] = 0;
    }
    visited[v] = 0;
  };
  walk(instance.source);
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return paths;
}

Game ReduceForbiddenPairs(const ForbiddenPairsInstance& instance,
                          std::size_t cap) {
  std::vector<Incidence> paths = SimplePaths(instance, cap);
  if (paths.empty()) throw DomainError("no path from source to target");
  const int e = static_cast<int>(instance.edges.size());
  std::vector<int> partner(e, -1);
  for (auto [a, b] : instance.pairs) {
    partner[a] = b;
    partner[b] = a;
  }
  Tabulated cost;
  cost.neighborhoods.resize(e);
  cost.max_load.assign(e, 1);
  cost.tables.resize(e);
  for (int k = 0; k < e; ++k) {
    if (partner[k] >= 0) {
      cost.neighborhoods[k] = {partner[k]};
      cost.tables[k] = {Number(0), Number(1)};
    } else {
      cost.tables[k] = {Number(0)};
    }
  }
  std::vector<Player> players;
  players.push_back({Rational(1), StrategySpace::Explicit(e, std::move(paths))});
  return Game(e, std::move(players), std::move(cost));
}

ReductionCheck CheckReduction(const Game& game, bool oracle_answer,
                              const EnumerationLimits& limits) {
  if (game.num_players() != 1) {
    throw PreconditionError("reduction games have a single player");
  }
  std::vector<Incidence> strategies =
      game.player(0).strategies.Enumerate(limits.strategy_cap);
  ReductionCheck check;
  std::optional<Incidence> most_expensive;
  bool first = true;
  for (const Incidence& y : strategies) {
    Number cost = PrivateCost(game, Profile{{y}}, 0);
    if (first || cost < check.min_cost) check.min_cost = cost;
    if (first || check.max_cost < cost) {
      check.max_cost = cost;
      most_expensive = y;
    }
    first = false;
  }
  check.zero_cost_exists = check.min_cost == Number(0);
  Certificate certificate = VerifyPne(game, Profile{{*most_expensive}}, limits);
  check.max_profile_is_pne = std::holds_alternative<IsPne>(certificate);
  bool none_cheaper = check.min_cost == check.max_cost;
  check.passed = check.zero_cost_exists == oracle_answer &&
                 check.max_profile_is_pne == none_cheaper;
  return check;
}

}  // namespace rgg
