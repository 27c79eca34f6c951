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
#include "rgg/gadgets.h"

#include <algorithm>
#include <string>
#include <utility>

#include "rgg/errors.h"

namespace rgg {
namespace {

struct Layout {
  // Copies (0-based) of each role resource in each strategy.
  std::vector<std::vector<std::pair<char, int>>> player0;
  std::vector<std::vector<std::pair<char, int>>> player1;
};

Layout LayoutOf(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kJacobian:
      return {{{{'r', 0}, {'s', 1}}, {{'s', 2}, {'r', 3}}},
              {{{'s', 0}, {'r', 2}}, {{'r', 1}, {'s', 3}}}};
    case GadgetKind::kCrossPair:
      return {{{{'r', 0}, {'s', 0}, {'r', 1}}, {{'r', 2}, {'r', 3}, {'s', 3}}},
              {{{'r', 0}, {'r', 2}, {'s', 2}}, {{'r', 1}, {'s', 1}, {'r', 3}}}};
    case GadgetKind::kCrossTriple:
      return {{{{'r', 0}, {'s', 1}, {'t', 1}}, {{'s', 2}, {'t', 2}, {'r', 3}}},
              {{{'s', 0}, {'t', 0}, {'r', 2}}, {{'r', 1}, {'s', 3}, {'t', 3}}}};
  }
  throw UsageError("unknown gadget kind");
}

Rational StepOf(const GadgetSpec& spec) {
  return spec.epsilon ? *spec.epsilon : Rational(1);
}

// Background load reproduced by the dummies.
RationalVector Background(const GadgetSpec& spec) {
  RationalVector d = spec.point;
  if (spec.kind != GadgetKind::kJacobian) d[spec.r] -= StepOf(spec);
  return d;
}

RationalVector Plus(RationalVector x, const Rational& step,
                    std::initializer_list<int> units) {
  for (int u : units) x[u] += step;
  return x;
}

}  // namespace

const char* GadgetKindName(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kJacobian:
      return "jacobian";
    case GadgetKind::kCrossPair:
      return "cross_pair";
    case GadgetKind::kCrossTriple:
      return "cross_triple";
  }
  return "unknown";
}

GadgetKind ParseGadgetKind(const std::string& name) {
  for (GadgetKind kind : {GadgetKind::kJacobian, GadgetKind::kCrossPair,
                          GadgetKind::kCrossTriple}) {
    if (name == GadgetKindName(kind)) return kind;
  }
  throw UsageError("unknown gadget kind '" + name +
                   "' (expected jacobian, cross_pair or cross_triple)");
}

void ValidateGadgetSpec(const GadgetSpec& spec) {
  if (spec.m < 2) throw StructuralError("gadget needs at least two resources");
  if (auto dim = CostDimension(spec.base_cost); dim && *dim != spec.m) {
    throw StructuralError("base cost dimension does not match m");
  }
  if (static_cast<int>(spec.point.size()) != spec.m) {
    throw StructuralError("gadget point has wrong dimension");
  }
  auto in_range = [&](int u) { return u >= 0 && u < spec.m; };
  if (!in_range(spec.r) || !in_range(spec.s) || spec.r == spec.s) {
    throw StructuralError("gadget resources r and s must be distinct and valid");
  }
  if (spec.kind == GadgetKind::kCrossTriple) {
    if (!spec.t || !in_range(*spec.t) || *spec.t == spec.r ||
        *spec.t == spec.s) {
      throw StructuralError("triple gadget needs a third distinct resource t");
    }
  } else if (spec.t) {
    throw StructuralError("only the triple gadget takes a resource t");
  }
  if (spec.epsilon && *spec.epsilon <= 0) {
    throw DomainError("epsilon must be positive");
  }
  for (const auto& value : spec.point) {
    if (value < 0) throw DomainError("gadget point must be non-negative");
    if (!spec.epsilon && !IsInteger(value)) {
      throw DomainError("unweighted gadget point must be integral");
    }
  }
  if (spec.kind != GadgetKind::kJacobian &&
      spec.point[spec.r] < StepOf(spec)) {
    throw DomainError("this gadget needs x_r >= " +
                      FormatRational(StepOf(spec)));
  }
}

Game BuildGadget(const GadgetSpec& spec) {
  ValidateGadgetSpec(spec);
  const int m = spec.m;
  const int total = 4 * m;
  auto index_of = [&](char role, int copy) {
    int u = role == 'r' ? spec.r : role == 's' ? spec.s : *spec.t;
    return copy * m + u;
  };
  Layout layout = LayoutOf(spec.kind);
  auto space = [&](const std::vector<std::vector<std::pair<char, int>>>& sets) {
    std::vector<Incidence> vectors;
    for (const auto& set : sets) {
      std::vector<int> support;
      for (auto [role, copy] : set) support.push_back(index_of(role, copy));
      vectors.push_back(FromSupport(total, support));
    }
    return StrategySpace::Explicit(total, std::move(vectors));
  };
  const Rational step = StepOf(spec);
  std::vector<Player> players;
  players.push_back({step, space(layout.player0)});
  players.push_back({step, space(layout.player1)});

  RationalVector background = Background(spec);
  for (int u = 0; u < m; ++u) {
    if (background[u] == 0) continue;
    std::vector<int> copies = {u, m + u, 2 * m + u, 3 * m + u};
    StrategySpace pinned =
        StrategySpace::Explicit(total, {FromSupport(total, copies)});
    if (spec.epsilon) {
      players.push_back({background[u], pinned});
    } else {
      for (long k = 0; k < ToInteger(background[u]); ++k) {
        players.push_back({Rational(1), pinned});
      }
    }
  }
  return Game(total, std::move(players), ComposeCopies(spec.base_cost, 4));
}

GadgetValues ExpectedGadgetValues(const GadgetSpec& spec) {
  ValidateGadgetSpec(spec);
  const Rational e = StepOf(spec);
  const int r = spec.r;
  const int s = spec.s;
  auto c = [&](int u, const RationalVector& x) {
    return EvalCost(spec.base_cost, x)[u];
  };
  const RationalVector& x = spec.point;
  Number a, b;
  switch (spec.kind) {
    case GadgetKind::kJacobian:
      a = c(r, Plus(x, e, {r, s})) + c(s, Plus(x, e, {s}));
      b = c(r, Plus(x, e, {r})) + c(s, Plus(x, e, {r, s}));
      break;
    case GadgetKind::kCrossPair:
      a = c(r, Plus(x, e, {r, s})) + c(s, Plus(x, e, {r, s})) + c(r, x);
      b = c(r, Plus(x, e, {s})) + c(s, Plus(x, e, {s})) +
          c(r, Plus(x, e, {r, s}));
      break;
    case GadgetKind::kCrossTriple: {
      const int t = *spec.t;
      RationalVector d = Background(spec);
      a = c(r, Plus(d, e, {r, s, t})) + c(s, Plus(d, e, {s, t})) +
          c(t, Plus(d, e, {s, t}));
      b = c(r, Plus(d, e, {r})) + c(s, Plus(d, e, {r, s, t})) +
          c(t, Plus(d, e, {r, s, t}));
      break;
    }
  }
  if (e != 1) {
    a *= Number(e);
    b *= Number(e);
  }
  return {a, b};
}

SymmetryResult CheckABSymmetry(const Game& game, int i, int j,
                               const EnumerationLimits& limits) {
  if (i == j || i < 0 || j < 0 || i >= game.num_players() ||
      j >= game.num_players()) {
    throw UsageError("symmetry check needs two distinct valid players");
  }
  ProfileSpace space = EnumerateProfiles(game, limits);
  std::optional<SymmetryWitness> witness;
  for (std::uint64_t index = 0; index < space.size; ++index) {
    Profile x = space.At(index);
    NumberVector pi = PrivateCosts(game, x);
    if (!witness) {
      witness = SymmetryWitness{pi[i], pi[j], x, {}, {}};
    } else {
      bool same = pi[i] == witness->a_value && pi[j] == witness->b_value;
      bool swapped = pi[i] == witness->b_value && pi[j] == witness->a_value;
      if (!same && !swapped) {
        return SymmetryFailure{x, "payoffs " + pi[i].ToString() + ", " +
                                      pi[j].ToString() + " are not {" +
                                      witness->a_value.ToString() + ", " +
                                      witness->b_value.ToString() + "}"};
      }
    }
    std::optional<Incidence> yi, yj;
    for (const Incidence& y : space.strategies[i]) {
      Profile moved = x;
      moved.choices[i] = y;
      if (PrivateCost(game, moved, i) == pi[j]) {
        yi = y;
        break;
      }
    }
    for (const Incidence& y : space.strategies[j]) {
      Profile moved = x;
      moved.choices[j] = y;
      if (PrivateCost(game, moved, j) == pi[i]) {
        yj = y;
        break;
      }
    }
    if (!yi || !yj) {
      return SymmetryFailure{
          x, std::string("player ") + std::to_string(yi ? j : i) +
                 " cannot take the other player's payoff"};
    }
    if (index == 0) {
      witness->swap_i = *yi;
      witness->swap_j = *yj;
    }
  }
  return *witness;
}

namespace {

GadgetSpec Spec(GadgetKind kind, const CostModel& cost, int m,
                RationalVector point, int r, int s,
                std::optional<int> t = std::nullopt) {
  GadgetSpec spec;
  spec.kind = kind;
  spec.base_cost = cost;
  spec.m = m;
  spec.point = std::move(point);
  spec.r = r;
  spec.s = s;
  spec.t = t;
  return spec;
}

Number CrossDiff(const CostModel& cost, int r, int s, RationalVector x) {
  Number before = EvalCost(cost, x)[r];
  x[s] += 1;
  return EvalCost(cost, x)[r] - before;
}

void AppendCrossCandidates(std::vector<GadgetSpec>& out, const CostModel& cost,
                           int m, Condition condition, int r, int s,
                           std::optional<int> t, const RationalVector& x) {
  auto shifted = [](RationalVector v, int up, int down) {
    if (up >= 0) v[up] += 1;
    if (down >= 0) v[down] -= 1;
    return v;
  };
  switch (condition) {
    case Condition::kCrossIncrement:
      out.push_back(Spec(GadgetKind::kJacobian, cost, m, x, r, s));
      out.push_back(Spec(GadgetKind::kCrossPair, cost, m, x, r, s));
      break;
    case Condition::kCrossCurvature:
      out.push_back(
          Spec(GadgetKind::kJacobian, cost, m, shifted(x, -1, r), s, r));
      out.push_back(
          Spec(GadgetKind::kCrossPair, cost, m, shifted(x, s, r), s, r));
      break;
    case Condition::kTripleCross: {
      RationalVector base = shifted(x, -1, r);
      out.push_back(
          Spec(GadgetKind::kJacobian, cost, m, shifted(base, s, -1), r, *t));
      out.push_back(
          Spec(GadgetKind::kJacobian, cost, m, shifted(base, *t, -1), r, s));
      out.push_back(Spec(GadgetKind::kCrossTriple, cost, m, x, r, s, t));
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::vector<GadgetSpec> CandidateGadgets(const CostModel& cost, int m,
                                         const Violation& v) {
  std::vector<GadgetSpec> out;
  switch (v.condition) {
    case Condition::kJacobianSymmetry:
      out.push_back(Spec(GadgetKind::kJacobian, cost, m, v.x, v.r, v.s));
      break;
    case Condition::kCrossIncrement:
    case Condition::kCrossCurvature:
    case Condition::kTripleCross:
      AppendCrossCandidates(out, cost, m, v.condition, v.r, v.s, v.t, v.x);
      break;
    case Condition::kCrossConstancy: {
      if (!v.y) throw UsageError("constancy violation needs a second point");
      // Walk from x down to min(x, y) and up to y one unit at a time; the
      // cross difference changes across some unit step, and that step is an
      // increment, curvature or triple violation at the lower endpoint.
      const int r = v.r;
      const int s = v.s;
      RationalVector low(m);
      for (int u = 0; u < m; ++u) low[u] = std::min(v.x[u], (*v.y)[u]);
      std::vector<RationalVector> path = {v.x};
      for (int u = 0; u < m; ++u) {
        while (path.back()[u] > low[u]) {
          RationalVector next = path.back();
          next[u] -= 1;
          path.push_back(std::move(next));
        }
      }
      for (int u = 0; u < m; ++u) {
        while (path.back()[u] < (*v.y)[u]) {
          RationalVector next = path.back();
          next[u] += 1;
          path.push_back(std::move(next));
        }
      }
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const RationalVector& p = path[k];
        const RationalVector& q = path[k + 1];
        if (CrossDiff(cost, r, s, p) == CrossDiff(cost, r, s, q)) continue;
        int u = 0;
        while (p[u] == q[u]) ++u;
        const RationalVector& lower = p[u] < q[u] ? p : q;
        if (u == r) {
          AppendCrossCandidates(out, cost, m, Condition::kCrossIncrement, r, s,
                                std::nullopt, lower);
        } else if (u == s) {
          AppendCrossCandidates(out, cost, m, Condition::kCrossCurvature, r, s,
                                std::nullopt, lower);
        } else {
          AppendCrossCandidates(out, cost, m, Condition::kTripleCross, r, s, u,
                                lower);
        }
        break;
      }
      break;
    }
    case Condition::kWeightedAsymmetric: {
      GadgetSpec spec = Spec(GadgetKind::kJacobian, cost, m, v.x, v.r, v.s);
      spec.epsilon = Rational(1);
      out.push_back(std::move(spec));
      break;
    }
    default:
      throw UnsupportedError(std::string("no gadget construction for ") +
                             ConditionName(v.condition));
  }
  return out;
}

Counterexample ViolationToCounterexample(const CostModel& cost, int m,
                                         const Violation& violation,
                                         const EnumerationLimits& limits) {
  for (GadgetSpec& spec : CandidateGadgets(cost, m, violation)) {
    GadgetValues values = ExpectedGadgetValues(spec);
    if (values.a == values.b) continue;
    Game game = BuildGadget(spec);
    SymmetryResult symmetry = CheckABSymmetry(game, 0, 1, limits);
    if (const auto* failure = std::get_if<SymmetryFailure>(&symmetry)) {
      throw InternalError(std::string(GadgetKindName(spec.kind)) +
                          " gadget is not symmetric: " + failure->reason);
    }
    Certificate certificate = BruteForcePne(game, limits);
    if (!std::holds_alternative<NoPneExists>(certificate)) {
      throw InternalError(std::string(GadgetKindName(spec.kind)) +
                          " gadget with A != B has a pure equilibrium");
    }
    return Counterexample{std::move(spec), std::move(game),
                          std::get<SymmetryWitness>(symmetry),
                          std::get<NoPneExists>(certificate)};
  }
  throw InternalError(std::string("no candidate gadget separates A and B for ") +
                      ConditionName(violation.condition) + " violation");
}

}  // namespace rgg
