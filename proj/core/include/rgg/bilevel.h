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
#ifndef RGG_BILEVEL_H_
#define RGG_BILEVEL_H_

#include <vector>

#include "rgg/dynamics.h"
#include "rgg/game.h"
#include "rgg/local_monotonicity.h"
#include "rgg/matroid.h"

namespace rgg {

// Load balancing against an attacker who spends the budget evenly on the
// most loaded resources. Players are unweighted and pick matroid bases.
class BilevelGame {
 public:
  // Throws DomainError for a non-positive budget.
  static BilevelGame Create(Rational budget,
                            const std::vector<MatroidDesc>& matroids,
                            int num_resources);
  // Wraps an existing game; it must be unweighted, matroid-based and use the
  // bilevel cost.
  static BilevelGame FromGame(Game game);

  const Game& game() const { return game_; }
  const Rational& budget() const;

 private:
  explicit BilevelGame(Game game) : game_(std::move(game)) {}
  Game game_;
};

RationalVector AttackAllocation(std::span<const Rational> loads,
                                const Rational& budget);

// Matroid lift with nu the identity for every player and resource.
MatroidSolution SolveBilevel(const BilevelGame& game,
                             const DynamicsOptions& options = {});

// Which branch of the exchange argument applies to t -> u = t + 1_s - 1_r
// under background z. S(w) is the argmax set of w.
enum class AuditCase {
  kIdentical,                // t = u
  kTargetNotMaxAfter,        // s not in S(u + z)
  kTargetMaxBefore,          // s in S(u + z) and in S(t + z)
  kTargetNewMaxDisjoint,     // s newly maximal, S(t + z) misses supp(t)
  kTargetNewMaxSourceBelow,  // s newly maximal, r not in S(t + z)
  kTargetNewMaxSourceAtMax,  // s newly maximal, r in S(t + z)
};

const char* AuditCaseName(AuditCase label);

struct CaseAudit {
  AuditCase label = AuditCase::kIdentical;
  int r = -1;
  int s = -1;
  bool guard_holds = true;  // t_r + z_r <= u_s + z_s
  Rational lhs;             // sum over supp(t) of kappa*(t + z)
  Rational rhs;             // sum over supp(u) of kappa*(u + z)
  bool inequality_holds = true;
};

// Throws DomainError unless u = t or u is a single exchange of t.
CaseAudit AuditExchange(const Incidence& t, const Incidence& u,
                        const RationalVector& z, const Rational& budget);

}  // namespace rgg

#endif  // RGG_BILEVEL_H_
