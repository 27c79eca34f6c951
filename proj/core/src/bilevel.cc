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
#include "rgg/bilevel.h"

#include <algorithm>
#include <string>

#include "rgg/errors.h"

namespace rgg {

BilevelGame BilevelGame::Create(Rational budget,
                                const std::vector<MatroidDesc>& matroids,
                                int num_resources) {
  if (budget <= 0) throw DomainError("attack budget must be positive");
  std::vector<Player> players;
  for (const MatroidDesc& desc : matroids) {
    if (desc.ground_size != num_resources) {
      throw StructuralError("matroid ground set does not match resource count");
    }
    players.push_back({Rational(1), StrategySpace::Matroid(desc)});
  }
  return FromGame(Game(num_resources, std::move(players), Bilevel{budget}));
}

BilevelGame BilevelGame::FromGame(Game game) {
  if (!std::holds_alternative<Bilevel>(game.cost())) {
    throw PreconditionError("bilevel game needs the bilevel cost");
  }
  if (!game.is_unweighted()) {
    throw PreconditionError("bilevel games are defined for unit weights only");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (game.player(i).strategies.is_explicit()) {
      throw PreconditionError("bilevel players must have matroid strategies");
    }
  }
  return BilevelGame(std::move(game));
}

const Rational& BilevelGame::budget() const {
  return std::get<Bilevel>(game_.cost()).budget;
}

RationalVector AttackAllocation(std::span<const Rational> loads,
                                const Rational& budget) {
  return KappaStar(loads, budget);
}

MatroidSolution SolveBilevel(const BilevelGame& game,
                             const DynamicsOptions& options) {
  const Game& g = game.game();
  std::vector<NuTable> nu(g.num_players(),
                          IdentityNu(g.num_resources(), g.num_players()));
  return SolveMatroidLift(g, nu, options);
}

const char* AuditCaseName(AuditCase label) {
  switch (label) {
    case AuditCase::kIdentical:
      return "identical";
    case AuditCase::kTargetNotMaxAfter:
      return "target_not_max_after";
    case AuditCase::kTargetMaxBefore:
      return "target_max_before";
    case AuditCase::kTargetNewMaxDisjoint:
      return "target_new_max_disjoint";
    case AuditCase::kTargetNewMaxSourceBelow:
      return "target_new_max_source_below";
    case AuditCase::kTargetNewMaxSourceAtMax:
      return "target_new_max_source_at_max";
  }
  return "unknown";
}

CaseAudit AuditExchange(const Incidence& t, const Incidence& u,
                        const RationalVector& z, const Rational& budget) {
  const int m = static_cast<int>(t.size());
  if (static_cast<int>(u.size()) != m || static_cast<int>(z.size()) != m) {
    throw StructuralError("t, u and z must have the same dimension");
  }
  std::vector<int> removed, added;
  for (int g = 0; g < m; ++g) {
    if (t[g] && !u[g]) removed.push_back(g);
    if (!t[g] && u[g]) added.push_back(g);
  }
  if (removed.size() > 1 || added.size() > 1 ||
      removed.size() != added.size()) {
    throw DomainError("u is not a single exchange of t");
  }
  RationalVector tz = z, uz = z;
  for (int g = 0; g < m; ++g) {
    tz[g] += t[g];
    uz[g] += u[g];
  }
  RationalVector kt = KappaStar(tz, budget);
  RationalVector ku = KappaStar(uz, budget);
  CaseAudit audit;
  for (int g = 0; g < m; ++g) {
    if (t[g]) audit.lhs += kt[g];
    if (u[g]) audit.rhs += ku[g];
  }
  audit.inequality_holds = audit.lhs <= audit.rhs;
  if (removed.empty()) return audit;

  const int r = removed.front();
  const int s = added.front();
  audit.r = r;
  audit.s = s;
  audit.guard_holds = tz[r] <= uz[s];
  auto contains = [](const std::vector<int>& set, int g) {
    return std::find(set.begin(), set.end(), g) != set.end();
  };
  std::vector<int> before = Argmax(tz).indices;
  std::vector<int> after = Argmax(uz).indices;
  if (!contains(after, s)) {
    audit.label = AuditCase::kTargetNotMaxAfter;
  } else if (contains(before, s)) {
    audit.label = AuditCase::kTargetMaxBefore;
  } else if (std::none_of(before.begin(), before.end(),
                          [&](int g) { return t[g] != 0; })) {
    audit.label = AuditCase::kTargetNewMaxDisjoint;
  } else if (!contains(before, r)) {
    audit.label = AuditCase::kTargetNewMaxSourceBelow;
  } else {
    audit.label = AuditCase::kTargetNewMaxSourceAtMax;
  }
  return audit;
}

}  // namespace rgg
