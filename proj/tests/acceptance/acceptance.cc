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
// Acceptance run: one PASS/FAIL line per criterion. The first argument is the
// path of the rgg binary, used by the determinism check.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "rgg/bilevel.h"
#include "rgg/characterize.h"
#include "rgg/dynamics.h"
#include "rgg/errors.h"
#include "rgg/gadgets.h"
#include "rgg/local_monotonicity.h"
#include "rgg/matroid.h"
#include "rgg/potential.h"
#include "rgg/reductions.h"

namespace rgg {
namespace {

using testing::Rng;
using testing::UniformInt;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void Fail(const std::string& what) {
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

int Report(int id, const std::string& name, double limit_seconds,
           const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.Fail(std::string("uncaught exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    outcome.Fail("runtime " + std::to_string(seconds) + " s over the " +
                 std::to_string(limit_seconds) + " s limit");
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", seconds);
  std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << id << "] " << name
            << ": " << outcome.detail << " (" << timing << ")\n";
  for (const auto& p : outcome.problems) std::cout << "    " << p << "\n";
  std::cout.flush();
  return outcome.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Shared corpus for the first two criteria: unweighted games with
// separable-plus-linear costs and symmetric interaction matrices.

struct CorpusGame {
  Game game;
  std::vector<std::vector<Incidence>> strategies;
};

std::vector<CorpusGame> UnweightedCorpus(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CorpusGame> corpus;
  for (int k = 0; k < count; ++k) {
    int m = UniformInt(rng, 1, 4);
    int n = UniformInt(rng, 1, 4);
    int max_load = UniformInt(rng, n, 6);
    Game g(m, testing::RandomExplicitPlayers(rng, m, n, 6),
           testing::RandomSpl(rng, m, max_load));
    std::vector<std::vector<Incidence>> strategies;
    for (const Player& p : g.players()) strategies.push_back(p.strategies.vectors());
    corpus.push_back({std::move(g), std::move(strategies)});
  }
  return corpus;
}

// Mixed-radix walk over choice indices, player 0 most significant.
bool NextChoice(std::vector<std::size_t>& choice,
                const std::vector<std::vector<Incidence>>& strategies) {
  for (int i = static_cast<int>(choice.size()) - 1; i >= 0; --i) {
    if (++choice[i] < strategies[i].size()) return true;
    choice[i] = 0;
  }
  return false;
}

Profile ProfileFor(const std::vector<std::size_t>& choice,
                   const std::vector<std::vector<Incidence>>& strategies) {
  Profile p;
  for (std::size_t i = 0; i < choice.size(); ++i) {
    p.choices.push_back(strategies[i][choice[i]]);
  }
  return p;
}

Outcome ExactPotential(const std::vector<CorpusGame>& corpus) {
  Outcome out;
  std::uint64_t deviations = 0;
  std::uint64_t profiles = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Game& g = corpus[k].game;
    const auto& strategies = corpus[k].strategies;
    const int n = g.num_players();
    std::vector<std::uint64_t> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * strategies[i + 1].size();
    std::vector<Rational> potential;
    std::vector<std::vector<Rational>> cost;
    std::vector<std::vector<std::size_t>> choices;
    std::vector<std::size_t> choice(n, 0);
    do {
      Profile p = ProfileFor(choice, strategies);
      Rational oracle = testing::SequentialSumPotential(g, p);
      if (PotentialUnweighted(g, p) != oracle) {
        out.Fail("game " + std::to_string(k) + ": potential differs from sequential sum");
      }
      potential.push_back(oracle);
      std::vector<Rational> c;
      for (int i = 0; i < n; ++i) c.push_back(testing::OraclePrivateCost(g, p, i));
      cost.push_back(std::move(c));
      choices.push_back(choice);
    } while (NextChoice(choice, strategies));
    profiles += potential.size();
    for (std::size_t index = 0; index < potential.size(); ++index) {
      for (int i = 0; i < n; ++i) {
        for (std::size_t alt = 0; alt < strategies[i].size(); ++alt) {
          if (alt == choices[index][i]) continue;
          std::size_t other = index + (alt - choices[index][i]) * stride[i];
          ++deviations;
          if (potential[other] - potential[index] != cost[other][i] - cost[index][i]) {
            out.Fail("game " + std::to_string(k) + ": potential change differs from cost change");
          }
        }
      }
    }
    PotentialCheck check = CheckExactPotential(
        g, [&](const Profile& p) { return Number(PotentialUnweighted(g, p)); });
    if (!check.passed || !check.exhaustive) {
      out.Fail("game " + std::to_string(k) + ": library potential check failed");
    }
  }
  out.detail = std::to_string(corpus.size()) + " games, " + std::to_string(profiles) +
               " profiles, " + std::to_string(deviations) +
               " deviations, exact rational comparison";
  return out;
}

Outcome PneExistence(const std::vector<CorpusGame>& corpus) {
  Outcome out;
  std::size_t found = 0;
  std::size_t runs = 0;
  std::size_t steps = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Game& g = corpus[k].game;
    Certificate brute = BruteForcePne(g);
    if (!std::holds_alternative<PneFound>(brute)) {
      out.Fail("game " + std::to_string(k) + ": brute force found no equilibrium");
    } else if (!testing::OracleIsPne(g, std::get<PneFound>(brute).profile)) {
      out.Fail("game " + std::to_string(k) + ": brute-force profile fails the oracle");
    } else {
      ++found;
    }
    for (Schedule schedule : {Schedule::kRoundRobin, Schedule::kRandom}) {
      DynamicsOptions options;
      options.schedule = schedule;
      options.seed = k;
      Profile start = ProfileFor(std::vector<std::size_t>(g.num_players(), 0),
                                 corpus[k].strategies);
      DynamicsTrace trace = RunBestResponseDynamics(g, start, options);
      ++runs;
      if (!trace.converged) {
        out.Fail("game " + std::to_string(k) + ": dynamics did not converge");
        continue;
      }
      Profile current = start;
      Rational before = testing::SequentialSumPotential(g, current);
      for (const DynamicsStep& step : trace.steps) {
        current.choices[step.player] = step.to;
        Rational after = testing::SequentialSumPotential(g, current);
        if (!(after < before) || Number(after - before) != step.delta) {
          out.Fail("game " + std::to_string(k) + ": potential did not strictly decrease");
        }
        before = after;
        ++steps;
      }
      if (current != trace.terminal) {
        out.Fail("game " + std::to_string(k) + ": trace does not replay to its terminal");
      }
      if (!std::holds_alternative<IsPne>(VerifyPne(g, trace.terminal)) ||
          !testing::OracleIsPne(g, trace.terminal)) {
        out.Fail("game " + std::to_string(k) + ": terminal profile is not a PNE");
      }
    }
  }
  out.detail = std::to_string(found) + "/" + std::to_string(corpus.size()) +
               " equilibria found, " + std::to_string(runs) + " dynamics runs converged over " +
               std::to_string(steps) + " improving steps";
  return out;
}

// ---------------------------------------------------------------------------

Outcome NecessityPipeline() {
  Outcome out;
  Rng rng(303);
  int costs = 0;
  int gadgets = 0;
  std::map<std::string, int> by_condition;
  std::map<std::string, int> by_kind;
  for (int k = 0; costs < 80; ++k) {
    const int m = UniformInt(rng, 2, 3);
    const int bound = UniformInt(rng, 1, 2);
    Tabulated table = k % 2 ? testing::GradientTable(rng, m, bound + 2)
                            : testing::RandomTable(rng, m, bound + 2, -3, 3);
    std::vector<Violation> violations;
    if (auto v = CheckJacobianSymmetry(table, bound)) violations.push_back(*v);
    for (const Violation& v : CrossLinearityViolations(table, bound)) violations.push_back(v);
    if (violations.empty()) continue;
    ++costs;
    for (const Violation& v : violations) {
      ++by_condition[ConditionName(v.condition)];
      std::string where = "cost " + std::to_string(costs) + " " + ConditionName(v.condition);
      if (!ReverifyViolation(table, v)) out.Fail(where + ": violation does not reverify");
      std::optional<Counterexample> made;
      try {
        made.emplace(ViolationToCounterexample(table, m, v));
      } catch (const Error& e) {
        out.Fail(where + ": " + e.what());
        continue;
      }
      const Counterexample& ce = *made;
      ++gadgets;
      ++by_kind[GadgetKindName(ce.spec.kind)];
      SymmetryResult sym = CheckABSymmetry(ce.game, 0, 1);
      if (!std::holds_alternative<SymmetryWitness>(sym)) {
        out.Fail(where + ": gadget is not (A,B)-symmetric");
        continue;
      }
      const auto& w = std::get<SymmetryWitness>(sym);
      if (w.a_value == w.b_value) out.Fail(where + ": A equals B");
      if (!std::holds_alternative<NoPneExists>(BruteForcePne(ce.game))) {
        out.Fail(where + ": gadget has a PNE");
      }
      // Independent check from the copy-wise payoff oracle: every profile has
      // a strictly improving deviation, and the free players always see {A, B}.
      const int players = ce.game.num_players();
      for (const Profile& p : testing::AllProfiles(ce.game)) {
        std::multiset<Rational> pair{testing::CopyPayoff(ce.game, table, m, p, 0),
                                     testing::CopyPayoff(ce.game, table, m, p, 1)};
        if (pair != std::multiset<Rational>{w.a_value.exact(), w.b_value.exact()}) {
          out.Fail(where + ": payoff pair differs from {A, B}");
        }
        bool improvable = false;
        for (int i = 0; i < players && !improvable; ++i) {
          Rational now = testing::CopyPayoff(ce.game, table, m, p, i);
          for (const Incidence& alt : ce.game.player(i).strategies.vectors()) {
            Profile q = p;
            q.choices[i] = alt;
            if (testing::CopyPayoff(ce.game, table, m, q, i) < now) {
              improvable = true;
              break;
            }
          }
        }
        if (!improvable) out.Fail(where + ": oracle found a PNE in the gadget");
      }
    }
  }
  std::ostringstream detail;
  detail << costs << " violating costs, " << gadgets << " gadgets without PNE (";
  bool first = true;
  for (const auto& [name, count] : by_kind) {
    detail << (first ? "" : ", ") << name << " " << count;
    first = false;
  }
  detail << "; conditions:";
  for (const auto& [name, count] : by_condition) detail << " " << name << "=" << count;
  detail << ")";
  out.detail = detail.str();
  return out;
}

Outcome DecompositionRoundTrip() {
  Outcome out;
  Rng rng(404);
  int checked = 0;
  std::uint64_t points = 0;
  for (int k = 0; k < 120; ++k) {
    const int m = UniformInt(rng, 1, 3);
    const int bound = UniformInt(rng, 1, 4);
    SeparablePlusLinear c = testing::RandomSpl(rng, m, bound + 2);
    Tabulated table = testing::SplTable(c, m, bound + 2);
    ConsistencyReport report = DecomposeUnweighted(table, bound);
    if (!std::holds_alternative<UnweightedConsistent>(report)) {
      out.Fail("cost " + std::to_string(k) + ": reported inconsistent");
      continue;
    }
    const auto& d = std::get<UnweightedConsistent>(report);
    if (d.zero_load_mismatches != 0) out.Fail("cost " + std::to_string(k) + ": zero-load mismatches");
    for (int r = 0; r < m; ++r) {
      if (d.a[r][r] != 0) out.Fail("cost " + std::to_string(k) + ": non-zero diagonal");
      for (int s = 0; s < m; ++s) {
        if (d.a[r][s] != d.a[s][r]) out.Fail("cost " + std::to_string(k) + ": asymmetric A");
      }
    }
    std::vector<int> x(m, 0);
    do {
      RationalVector loads(x.begin(), x.end());
      for (int r = 0; r < m; ++r) {
        Rational rebuilt = d.f[r][x[r]];
        for (int s = 0; s < m; ++s) rebuilt += d.a[r][s] * x[s];
        if (rebuilt != testing::OracleSplCost(c, r, loads)) {
          out.Fail("cost " + std::to_string(k) + ": reconstruction differs");
        }
      }
      ++points;
      int i = m - 1;
      while (i >= 0 && x[i] == bound) x[i--] = 0;
      if (i < 0) break;
      ++x[i];
    } while (true);
    ++checked;
  }
  out.detail = std::to_string(checked) + " costs decomposed, " + std::to_string(points) +
               " load vectors reproduced exactly";
  return out;
}

Outcome WeightedDichotomy() {
  Outcome out;
  Rng rng(505);
  const WeightedGrid grid{{0, 1, 2}, Rational(1, 2)};
  int affine = 0, exponential = 0, negative = 0, games = 0;
  double worst_phi = 0;
  for (int k = 0; k < 50; ++k) {
    const int m = UniformInt(rng, 1, 3);
    SeparablePlusLinear spl = testing::RandomSpl(rng, m, 0);
    RationalVector b(m);
    for (auto& v : b) v = testing::RandomRational(rng, -3, 3, 4);
    ConsistencyReport report = ClassifyWeighted(Affine{spl.a, b}, m, grid);
    if (!std::holds_alternative<WeightedAffineFit>(report)) {
      out.Fail("symmetric affine " + std::to_string(k) + " not labelled WeightedAffine");
      continue;
    }
    const auto& fit = std::get<WeightedAffineFit>(report);
    for (int r = 0; r < m; ++r) {
      if (fit.b[r] != Number(b[r]) || !fit.b[r].is_exact()) out.Fail("affine fit b inexact");
      for (int s = 0; s < m; ++s) {
        if (fit.a[r][s] != Number(spl.a[r][s]) || !fit.a[r][s].is_exact()) {
          out.Fail("affine fit A inexact");
        }
      }
    }
    ++affine;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const int m = UniformInt(rng, 1, 3);
    double phi = (0.1 + 1.4 * unit(rng)) * (k % 2 ? 1 : -1);
    Exponential c{{}, phi, {}};
    for (int r = 0; r < m; ++r) {
      c.a.push_back(0.5 + 2.5 * unit(rng));
      c.b.push_back(-2.0 + 4.0 * unit(rng));
    }
    ConsistencyReport report = ClassifyWeighted(c, m, grid);
    if (!std::holds_alternative<WeightedExponentialFit>(report)) {
      out.Fail("exponential " + std::to_string(k) + " not labelled WeightedExponential");
      continue;
    }
    double error = std::abs(std::get<WeightedExponentialFit>(report).phi - phi);
    worst_phi = std::max(worst_phi, error);
    if (error > 1e-9) out.Fail("exponential " + std::to_string(k) + ": phi error " + std::to_string(error));
    ++exponential;
  }
  for (int k = 0; k < 50; ++k) {
    const int m = UniformInt(rng, 2, 3);
    CostModel model;
    if (k % 2) {
      SeparablePlusLinear spl = testing::RandomSpl(rng, m, 0);
      int r = UniformInt(rng, 0, m - 1);
      int s = (r + 1) % m;
      spl.a[r][s] += UniformInt(rng, 1, 3);
      model = Affine{spl.a, RationalVector(m, Rational(0))};
      if (!std::holds_alternative<Violation>(ClassifyWeighted(model, m, grid))) {
        out.Fail("asymmetric affine " + std::to_string(k) + " not labelled Violation");
      }
    } else {
      std::vector<Rational> scale(m);
      for (auto& v : scale) v = testing::RandomRational(rng, 1, 3, 2);
      CostFunction quadratic = [scale](std::span<const Rational> x) {
        NumberVector out;
        for (std::size_t r = 0; r < x.size(); ++r) out.emplace_back(Rational(scale[r] * x[r] * x[r]));
        return out;
      };
      if (!std::holds_alternative<Violation>(ClassifyWeighted(quadratic, m, grid))) {
        out.Fail("quadratic " + std::to_string(k) + " not labelled Violation");
      }
    }
    ++negative;
  }
  for (int k = 0; k < 100; ++k) {
    const int m = UniformInt(rng, 1, 3);
    const int n = UniformInt(rng, 1, 3);
    SeparablePlusLinear spl = testing::RandomSpl(rng, m, 0);
    RationalVector b(m);
    for (auto& v : b) v = testing::RandomRational(rng, -2, 2, 3);
    Game g(m, testing::RandomExplicitPlayers(rng, m, n, 4, true), Affine{spl.a, b});
    PotentialCheck check = CheckExactPotential(
        g, [&](const Profile& p) { return Number(PotentialWeightedAffine(g, p)); });
    if (!check.passed || !check.exhaustive) {
      out.Fail("weighted game " + std::to_string(k) + ": exact potential check failed");
    }
    for (const Profile& p : testing::AllProfiles(g)) {
      if (PotentialWeightedAffine(g, p) != testing::SequentialSumPotential(g, p)) {
        out.Fail("weighted game " + std::to_string(k) + ": potential differs from oracle");
      }
    }
    ++games;
  }
  char phi_text[32];
  std::snprintf(phi_text, sizeof phi_text, "%.1e", worst_phi);
  out.detail = std::to_string(affine) + " affine exact, " + std::to_string(exponential) +
               " exponential (max |phi error| " + phi_text + "), " + std::to_string(negative) +
               " negatives, " + std::to_string(games) + " weighted potential games";
  return out;
}

// ---------------------------------------------------------------------------
// Matroid catalogs.

std::vector<std::vector<std::vector<int>>> SetPartitions(int m) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> place = [&](int r) {
    if (r == m) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(r);
      place(r + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({r});
    place(r + 1);
    blocks.pop_back();
  };
  place(0);
  return out;
}

std::vector<MatroidDesc> UniformAndPartition(int m, int max_blocks) {
  std::vector<MatroidDesc> out;
  for (int k = 1; k <= m; ++k) out.push_back(MakeUniform(m, k));
  for (const auto& blocks : SetPartitions(m)) {
    if (blocks.size() < 2 || static_cast<int>(blocks.size()) > max_blocks) continue;
    std::vector<int> quotas(blocks.size(), 1);
    while (true) {
      out.push_back(MakePartition(m, blocks, quotas));
      std::size_t j = 0;
      while (j < blocks.size() && quotas[j] == static_cast<int>(blocks[j].size())) quotas[j++] = 1;
      if (j == blocks.size()) break;
      ++quotas[j];
    }
  }
  return out;
}

bool Connected(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(vertices);
  for (int v = 0; v < vertices; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  int components = vertices;
  for (auto [a, b] : edges) {
    if (find(a) != find(b)) {
      parent[find(a)] = find(b);
      --components;
    }
  }
  return components == 1;
}

// Connected simple graphs with exactly m edges on the given vertex count.
std::vector<MatroidDesc> Graphic(int m, int vertices) {
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) all.emplace_back(a, b);
  }
  std::vector<MatroidDesc> out;
  const int e = static_cast<int>(all.size());
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < e; ++k) {
      if (mask >> k & 1) edges.push_back(all[k]);
    }
    if (Connected(vertices, edges)) out.push_back(MakeGraphic(m, vertices, edges));
  }
  return out;
}

RationalVector OracleKappa(const RationalVector& loads, const Rational& budget) {
  Rational top = *std::max_element(loads.begin(), loads.end());
  int count = static_cast<int>(std::count(loads.begin(), loads.end(), top));
  RationalVector out(loads.size(), Rational(0));
  for (std::size_t r = 0; r < loads.size(); ++r) {
    if (loads[r] == top) out[r] = budget / count;
  }
  return out;
}

Rational OracleBilevelCost(const Incidence& y, const RationalVector& loads,
                           const Rational& budget) {
  RationalVector kappa = OracleKappa(loads, budget);
  Rational total = 0;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (y[r]) total += loads[r] + kappa[r];
  }
  return total;
}

bool OracleBilevelPne(const BilevelGame& bg, const Profile& p) {
  const Game& g = bg.game();
  RationalVector x = testing::OracleLoads(g.players(), p, g.num_resources());
  for (int i = 0; i < g.num_players(); ++i) {
    Rational now = OracleBilevelCost(p.choices[i], x, bg.budget());
    for (const Incidence& alt : testing::OracleBases(g.player(i).strategies.matroid())) {
      RationalVector y = x;
      for (std::size_t r = 0; r < y.size(); ++r) y[r] += Rational(alt[r]) - Rational(p.choices[i][r]);
      if (OracleBilevelCost(alt, y, bg.budget()) < now) return false;
    }
  }
  return true;
}

Outcome BilevelCatalog() {
  Outcome out;
  const std::vector<Rational> budgets{1, 2, 3, Rational(7, 2)};
  std::vector<std::vector<MatroidDesc>> games;
  std::map<int, std::vector<MatroidDesc>> types;
  for (int m = 1; m <= 4; ++m) {
    types[m] = UniformAndPartition(m, 4);
    for (int v = 2; v <= 4; ++v) {
      for (auto& g : Graphic(m, v)) types[m].push_back(g);
    }
    for (const MatroidDesc& t : types[m]) {
      for (int n = 1; n <= 4; ++n) games.push_back(std::vector<MatroidDesc>(n, t));
    }
  }
  Rng rng(606);
  for (int k = 0; k < 400; ++k) {
    int m = UniformInt(rng, 2, 4);
    int n = UniformInt(rng, 2, 4);
    std::vector<MatroidDesc> mix;
    for (int i = 0; i < n; ++i) mix.push_back(types[m][UniformInt(rng, 0, types[m].size() - 1)]);
    games.push_back(mix);
  }
  std::uint64_t solved = 0, load_vectors = 0;
  for (std::size_t k = 0; k < games.size(); ++k) {
    const int m = games[k].front().ground_size;
    for (const Rational& budget : budgets) {
      BilevelGame bg = BilevelGame::Create(budget, games[k], m);
      std::string where = "game " + std::to_string(k) + " B=" + FormatRational(budget);
      MatroidSolution solution = SolveBilevel(bg);
      if (!std::holds_alternative<IsPne>(VerifyPne(bg.game(), solution.profile)) ||
          !OracleBilevelPne(bg, solution.profile)) {
        out.Fail(where + ": lifted profile is not a PNE");
      }
      if (!std::holds_alternative<PneFound>(BruteForcePne(bg.game()))) {
        out.Fail(where + ": brute force found no PNE");
      }
      for (const Profile& p : testing::AllProfiles(bg.game())) {
        RationalVector x = testing::OracleLoads(bg.game().players(), p, m);
        RationalVector kappa = KappaStar(x, budget);
        Rational sum = 0;
        for (const auto& v : kappa) sum += v;
        if (sum != budget || kappa != OracleKappa(x, budget)) {
          out.Fail(where + ": attack allocation is not conserved");
        }
        ++load_vectors;
      }
      ++solved;
    }
  }
  out.detail = std::to_string(solved) + " game/budget pairs verified (n<=4, m<=4, uniform, "
               "partition, graphic; B in {1,2,3,7/2}), kappa conserved on " +
               std::to_string(load_vectors) + " load vectors";
  return out;
}

Outcome LocalMonotonicity() {
  Outcome out;
  const int bound = 4;
  std::uint64_t tuples = 0;
  int families = 0;
  for (int m = 1; m <= 3; ++m) {
    std::vector<MatroidDesc> types = UniformAndPartition(m, 3);
    std::vector<NuTable> nu(types.size(), IdentityNu(m, bound + 1));
    for (Rational budget : {Rational(1), Rational(2), Rational(3), Rational(7, 2)}) {
      MonotonicityCheck check = CheckLocalMonotonicity(Bilevel{budget}, types, bound, nu);
      tuples += check.tuples_checked;
      ++families;
      if (!check.ok) out.Fail("m=" + std::to_string(m) + " B=" + FormatRational(budget) + ": witness found");
      // Same grid, recomputed from the attack oracle.
      for (const MatroidDesc& type : types) {
        for (const Incidence& t : testing::OracleBases(type)) {
          for (int r = 0; r < m; ++r) {
            for (int s = 0; s < m; ++s) {
              if (!t[r] || t[s]) continue;
              Incidence u = t;
              u[r] = 0;
              u[s] = 1;
              if (!IsBasis(type, u)) continue;
              std::vector<int> z(m, 0);
              while (true) {
                if (t[r] + z[r] <= u[s] + z[s]) {
                  RationalVector tz(m), uz(m);
                  for (int k = 0; k < m; ++k) {
                    tz[k] = t[k] + z[k];
                    uz[k] = u[k] + z[k];
                  }
                  if (OracleBilevelCost(t, tz, budget) > OracleBilevelCost(u, uz, budget)) {
                    out.Fail("oracle found a violation the library missed");
                  }
                }
                int k = m - 1;
                while (k >= 0 && z[k] == bound) z[k--] = 0;
                if (k < 0) break;
                ++z[k];
              }
            }
          }
        }
      }
    }
  }
  // Negative control: a resource whose cost falls with the other's load.
  Affine decreasing{{{0, -1}, {0, 0}}, {0, 0}};
  std::vector<MatroidDesc> one{MakeUniform(2, 1)};
  std::vector<NuTable> identity{IdentityNu(2, bound + 1)};
  MonotonicityCheck control = CheckLocalMonotonicity(decreasing, one, 2, identity);
  std::string control_text = "no witness";
  if (control.ok || !control.witness) {
    out.Fail("negative control produced no witness");
  } else {
    const auto& w = *control.witness;
    Incidence u = w.t;
    u[w.r] = 0;
    u[w.s] = 1;
    auto side = [&](const Incidence& v) {
      RationalVector x = w.z;
      for (int k = 0; k < 2; ++k) x[k] += v[k];
      Rational total = 0;
      for (int k = 0; k < 2; ++k) {
        if (v[k]) total += testing::OracleAffineCost(decreasing, k, x);
      }
      return total;
    };
    if (!(side(w.t) > side(u))) out.Fail("negative control witness does not reverify");
    control_text = "witness r=" + std::to_string(w.r) + " s=" + std::to_string(w.s) + " z=(" +
                   FormatRational(w.z[0]) + "," + FormatRational(w.z[1]) + ")";
  }
  out.detail = std::to_string(families) + " type families (m<=3, L=4, all uniform/partition), " +
               std::to_string(tuples) + " guarded exchanges; negative control " + control_text;
  return out;
}

Outcome ExchangeDecomposition() {
  Outcome out;
  std::vector<MatroidDesc> catalog;
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= m; ++k) catalog.push_back(MakeUniform(m, k));
    for (auto& p : UniformAndPartition(m, 3)) {
      if (std::holds_alternative<PartitionMatroid>(p.kind)) catalog.push_back(p);
    }
  }
  for (int v = 2; v <= 5; ++v) {
    const int max_edges = v * (v - 1) / 2;
    for (int m = 1; m <= max_edges; ++m) {
      for (auto& g : Graphic(m, v)) catalog.push_back(g);
    }
  }
  std::uint64_t pairs = 0, steps = 0;
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    const MatroidDesc& desc = catalog[k];
    std::vector<Incidence> bases = testing::OracleBases(desc);
    std::set<Incidence> basis_set(bases.begin(), bases.end());
    for (const Incidence& t : bases) {
      for (const Incidence& u : bases) {
        ++pairs;
        std::vector<ExchangeStep> seq = ExchangeDecompose(desc, t, u);
        int differ = 0;
        for (std::size_t r = 0; r < t.size(); ++r) differ += t[r] && !u[r];
        if (static_cast<int>(seq.size()) != differ) out.Fail("catalog " + std::to_string(k) + ": wrong step count");
        std::set<int> removed, added;
        Incidence current = t;
        for (const ExchangeStep& step : seq) {
          if (!current[step.remove] || current[step.add]) out.Fail("catalog " + std::to_string(k) + ": invalid step");
          if (!removed.insert(step.remove).second || !added.insert(step.add).second) {
            out.Fail("catalog " + std::to_string(k) + ": repeated element");
          }
          current[step.remove] = 0;
          current[step.add] = 1;
          if (!basis_set.count(current)) out.Fail("catalog " + std::to_string(k) + ": intermediate is not a basis");
          ++steps;
        }
        if (current != u) out.Fail("catalog " + std::to_string(k) + ": replay misses the target");
      }
    }
  }
  out.detail = std::to_string(catalog.size()) + " matroids (uniform m<=6, partition <=3 blocks, "
               "graphic <=5 vertices), " + std::to_string(pairs) + " basis pairs, " +
               std::to_string(steps) + " exchange steps";
  return out;
}

Outcome Reductions() {
  Outcome out;
  Rng rng(909);
  int sat = 0, sat_yes = 0, pairs = 0, pairs_yes = 0;
  for (int k = 0; k < 100; ++k) {
    SatInstance instance = testing::RandomSat(rng, 6, 8);
    // Every third instance gets a planted contradiction on one variable.
    if (k % 3 == 0) {
      if (instance.clauses.size() > 6) instance.clauses.resize(6);
      int v = UniformInt(rng, 0, instance.num_vars - 1);
      instance.clauses.push_back({Literal{v, false}, Literal{v, false}, Literal{v, false}});
      instance.clauses.push_back({Literal{v, true}, Literal{v, true}, Literal{v, true}});
    }
    bool answer = testing::OracleSatisfiable(instance);
    Game g = ReduceSat(instance);
    ReductionCheck check = CheckReduction(g, answer);
    if (!check.passed || check.zero_cost_exists != answer) {
      out.Fail("sat " + std::to_string(k) + ": reduction disagrees with assignment oracle");
    }
    ++sat;
    sat_yes += answer;
  }
  while (pairs < 50) {
    ForbiddenPairsInstance instance = testing::RandomPairs(rng, 8);
    ForbiddenPairsInstance free = instance;
    free.pairs.clear();
    if (!testing::OraclePairsFeasible(free)) continue;
    bool answer = testing::OraclePairsFeasible(instance);
    Game g = ReduceForbiddenPairs(instance);
    ReductionCheck check = CheckReduction(g, answer);
    if (!check.passed || check.zero_cost_exists != answer) {
      out.Fail("pairs " + std::to_string(pairs) + ": reduction disagrees with path oracle");
    }
    ++pairs;
    pairs_yes += answer;
  }
  out.detail = std::to_string(sat) + " 3-SAT (" + std::to_string(sat_yes) + " satisfiable), " +
               std::to_string(pairs) + " forbidden-pairs (" + std::to_string(pairs_yes) +
               " feasible), 0 mismatches allowed";
  return out;
}

// ---------------------------------------------------------------------------

struct Captured {
  int code = -1;
  std::string out;
};

Captured Capture(const std::string& command) {
  Captured result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

Outcome Determinism(const std::string& rgg) {
  Outcome out;
  if (rgg.empty() || !std::filesystem::exists(rgg)) {
    out.Fail("rgg binary not given or missing: '" + rgg + "'");
    out.detail = "not run";
    return out;
  }
  const std::string fx = RGG_FIXTURE_DIR;
  auto dir = std::filesystem::temp_directory_path() / "rgg_acceptance_determinism";
  std::filesystem::create_directories(dir);
  auto q = [](const std::string& s) { return "'" + s + "'"; };
  const std::string bin = q(rgg);
  const std::string spl = q(fx + "/spl_three_players.json");
  const std::string bilevel = q(fx + "/bilevel_scenario.json");

  Captured solved = Capture(bin + " solve " + spl);
  std::ofstream(dir / "solve.json") << solved.out;
  std::ofstream(dir / "spl_profile.json") << "[[0], [2], [0]]";
  const std::string profile = q((dir / "solve.json").string());

  std::vector<std::pair<std::string, std::string>> commands{
      {"solve bruteforce", bin + " solve " + spl + " --method bruteforce"},
      {"solve dynamics random", bin + " solve " + spl + " --method dynamics --schedule random --seed 11"},
      {"solve dynamics better", bin + " solve " + spl + " --method dynamics --rule better --seed 3"},
      {"solve theorem3", bin + " solve " + bilevel + " --method theorem3 --seed 2"},
      {"solve gadget", bin + " solve " + q(fx + "/gadget_jacobian_asymmetric.json")},
      {"verify", bin + " verify " + spl + " --profile " + profile},
      {"characterize weighted", bin + " characterize " + q(fx + "/affine_asymmetric.json")},
      {"characterize unweighted", bin + " characterize " + q(fx + "/tabulated_cross.json")},
      {"characterize exponential", bin + " characterize " + q(fx + "/exponential_shared.json")},
      {"gadget", bin + " gadget " + q(fx + "/affine_asymmetric.json") + " --lemma jacobian --point 1,1 --resources 0,1"},
      {"gadget confirm", bin + " gadget " + q(fx + "/affine_asymmetric.json") + " --lemma jacobian --point 0,0 --resources 0,1 --epsilon 1/3 --confirm"},
      {"potential", bin + " potential " + spl + " --profile " + q((dir / "spl_profile.json").string())},
      {"reduce sat", bin + " reduce sat " + q(fx + "/sat_small.cnf")},
      {"reduce pairs", bin + " reduce pairs " + q(fx + "/pairs_small.json")},
  };
  int compared = 0;
  for (const auto& [name, command] : commands) {
    Captured a = Capture(command);
    Captured b = Capture(command);
    if (a.code < 0 || a.code > 1) out.Fail(name + ": exit code " + std::to_string(a.code));
    if (a.out.empty()) out.Fail(name + ": no output");
    if (a.out != b.out || a.code != b.code) out.Fail(name + ": output differs between runs");
    ++compared;
  }
  Captured one = Capture(bin + " solve " + spl + " --jobs 1");
  Captured four = Capture(bin + " solve " + spl + " --jobs 4");
  if (one.out != four.out) out.Fail("solve: --jobs 1 and --jobs 4 differ");
  std::filesystem::remove_all(dir);
  out.detail = std::to_string(compared) + " commands run twice byte-identical, jobs 1 vs 4 identical";
  return out;
}

}  // namespace
}  // namespace rgg

int main(int argc, char** argv) {
  using namespace rgg;
  const std::string rgg_path = argc > 1 ? argv[1] : "";
  int failures = 0;
  const auto corpus = UnweightedCorpus(200, 101);
  failures += Report(1, "exact potential", 30, [&] { return ExactPotential(corpus); });
  failures += Report(2, "PNE existence, consistent class", 0, [&] { return PneExistence(corpus); });
  failures += Report(3, "necessity pipeline", 60, NecessityPipeline);
  failures += Report(4, "decomposition round-trip", 0, DecompositionRoundTrip);
  failures += Report(5, "weighted dichotomy", 0, WeightedDichotomy);
  failures += Report(6, "bilevel lift and attack conservation", 60, BilevelCatalog);
  failures += Report(7, "local monotonicity", 0, LocalMonotonicity);
  failures += Report(8, "exchange decomposition", 30, ExchangeDecomposition);
  failures += Report(9, "reductions", 0, Reductions);
  failures += Report(10, "determinism", 0, [&] { return Determinism(rgg_path); });
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
