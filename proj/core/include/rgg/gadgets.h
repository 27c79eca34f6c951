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
#ifndef RGG_GADGETS_H_
#define RGG_GADGETS_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rgg/characterize.h"
#include "rgg/costs.h"
#include "rgg/dynamics.h"
#include "rgg/game.h"

namespace rgg {

// Two-player constructions on four copies of the resource set. Copy k of
// resource u is resource k*m + u. Players 0 and 1 are free; the remaining
// players are dummies pinned to all four copies of one resource.
//
//   kJacobian:    player 0 {r1,s2} | {s3,r4}, player 1 {s1,r3} | {r2,s4};
//                 dummies reproduce x.
//   kCrossPair:   player 0 {r1,s1,r2} | {r3,r4,s4},
//                 player 1 {r1,r3,s3} | {r2,s2,r4}; dummies reproduce x - 1_r.
//   kCrossTriple: player 0 {r1,s2,t2} | {s3,t3,r4},
//                 player 1 {s1,t1,r3} | {r2,s4,t4}; dummies reproduce x - 1_r.
//
// With epsilon set, the free players weigh epsilon, the unit vectors above
// become epsilon steps, and each resource gets one dummy whose weight is its
// background load.
enum class GadgetKind { kJacobian, kCrossPair, kCrossTriple };

const char* GadgetKindName(GadgetKind kind);
// Throws UsageError for unknown names.
GadgetKind ParseGadgetKind(const std::string& name);

struct GadgetSpec {
  GadgetKind kind = GadgetKind::kJacobian;
  CostModel base_cost;
  int m = 0;
  RationalVector point;
  int r = 0;
  int s = 1;
  std::optional<int> t;
  std::optional<Rational> epsilon;
};

void ValidateGadgetSpec(const GadgetSpec& spec);

Game BuildGadget(const GadgetSpec& spec);

// The two payoff values the construction is designed to take, evaluated on
// the base cost.
struct GadgetValues {
  Number a;
  Number b;
};
GadgetValues ExpectedGadgetValues(const GadgetSpec& spec);

struct SymmetryWitness {
  Number a_value;  // pi_i in the first profile
  Number b_value;  // pi_j in the first profile
  Profile profile;
  Incidence swap_i;
  Incidence swap_j;
};

struct SymmetryFailure {
  Profile profile;
  std::string reason;
};

using SymmetryResult = std::variant<SymmetryWitness, SymmetryFailure>;

// Checks both conditions over every profile: the payoffs of i and j are
// always the same pair {A, B}, and each of them can unilaterally take the
// other's payoff.
SymmetryResult CheckABSymmetry(const Game& game, int i, int j,
                               const EnumerationLimits& limits = {});

// Gadgets that can witness the violation, in the order they are tried. At
// least one has A != B whenever the violation is genuine.
std::vector<GadgetSpec> CandidateGadgets(const CostModel& cost, int m,
                                         const Violation& violation);

struct Counterexample {
  GadgetSpec spec;
  Game game;
  SymmetryWitness symmetry;
  NoPneExists certificate;
};

// Picks the first candidate with A != B, builds it and confirms by brute
// force that it has no PNE. Throws InternalError if no candidate separates A
// from B or if a PNE turns up.
Counterexample ViolationToCounterexample(const CostModel& cost, int m,
                                         const Violation& violation,
                                         const EnumerationLimits& limits = {});

}  // namespace rgg

#endif  // RGG_GADGETS_H_
