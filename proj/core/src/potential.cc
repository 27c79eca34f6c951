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
#include "rgg/potential.h"

#include <random>
#include <string>
#include <vector>

#include "rgg/errors.h"

namespace rgg {
namespace {

// y^T A y for a 0/1 vector y.
Rational QuadraticOnSupport(const RationalMatrix& a, const Incidence& y) {
  Rational total = 0;
  std::vector<int> support = Support(y);
  for (int r : support) {
    for (int s : support) total += a[r][s];
  }
  return total;
}

Rational Quadratic(const RationalMatrix& a, const RationalVector& x) {
  Rational total = 0;
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (x[r] == 0) continue;
    for (std::size_t s = 0; s < x.size(); ++s) {
      if (x[s] == 0 || a[r][s] == 0) continue;
      total += x[r] * a[r][s] * x[s];
    }
  }
  return total;
}

}  // namespace

Rational PotentialUnweighted(const Game& game, const Profile& profile) {
  const auto* cost = std::get_if<SeparablePlusLinear>(&game.cost());
  if (cost == nullptr) {
    throw PreconditionError(
        "unweighted potential needs a separable-plus-linear cost model");
  }
  if (!game.is_unweighted()) {
    throw PreconditionError("unweighted potential needs unit weights");
  }
  if (!IsSymmetric(cost->a)) {
    throw PreconditionError("unweighted potential needs a symmetric matrix");
  }
  RationalVector x = LoadOf(game, profile);
  Rational total = 0;
  for (int r = 0; r < game.num_resources(); ++r) {
    long load = ToInteger(x[r]);
    if (load >= static_cast<long>(cost->f[r].size())) {
      throw RangeError("load on resource " + std::to_string(r) +
                       " exceeds f table bound");
    }
    for (long k = 1; k <= load; ++k) total += cost->f[r][k];
  }
  Rational quadratic = Quadratic(cost->a, x);
  for (const Incidence& choice : profile.choices) {
    quadratic += QuadraticOnSupport(cost->a, choice);
  }
  return total + quadratic / 2;
}

Rational PotentialWeightedAffine(const Game& game, const Profile& profile) {
  const auto* cost = std::get_if<Affine>(&game.cost());
  if (cost == nullptr) {
    throw PreconditionError("weighted affine potential needs an affine cost");
  }
  if (!IsSymmetric(cost->a)) {
    throw PreconditionError(
        "weighted affine potential needs a symmetric matrix");
  }
  RationalVector x = LoadOf(game, profile);
  Rational quadratic = Quadratic(cost->a, x);
  for (int i = 0; i < game.num_players(); ++i) {
    const Rational& w = game.player(i).weight;
    quadratic += w * w * QuadraticOnSupport(cost->a, profile.choices[i]);
  }
  Rational linear = 0;
  for (int r = 0; r < game.num_resources(); ++r) linear += x[r] * cost->b[r];
  return quadratic / 2 + linear;
}

PotentialCheck CheckExactPotential(const Game& game,
                                   const PotentialFunction& potential,
                                   std::uint64_t profile_bound,
                                   std::uint64_t seed,
                                   const EnumerationLimits& limits) {
  ProfileSpace space = EnumerateProfiles(game, limits, /*check_budget=*/false);
  const int n = game.num_players();
  PotentialCheck result;

  auto compare = [&](const Profile& x, const Number& px, const NumberVector& pix,
                     int i, const Profile& y, const Number& py,
                     const Number& piy) {
    ++result.deviations_checked;
    Number dp = py - px;
    Number dpi = piy - pix[i];
    if (!(dp == dpi)) {
      result.passed = false;
      result.witness =
          PotentialWitness{x, i, y.choices[i], std::move(dp), std::move(dpi)};
      return false;
    }
    return true;
  };

  if (space.size <= profile_bound) {
    // Tabulate P and every pi_i once; deviations are index lookups.
    std::vector<Number> p(space.size);
    std::vector<NumberVector> pi(space.size);
    for (std::uint64_t index = 0; index < space.size; ++index) {
      Profile x = space.At(index);
      p[index] = potential(x);
      pi[index] = PrivateCosts(game, x);
    }
    std::vector<std::uint64_t> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) {
      stride[i] = stride[i + 1] * space.strategies[i + 1].size();
    }
    for (std::uint64_t index = 0; index < space.size; ++index) {
      for (int i = 0; i < n; ++i) {
        const std::uint64_t count = space.strategies[i].size();
        const std::uint64_t own = (index / stride[i]) % count;
        for (std::uint64_t k = 0; k < count; ++k) {
          if (k == own) continue;
          std::uint64_t other = index + (k - own) * stride[i];
          ++result.deviations_checked;
          Number dp = p[other] - p[index];
          Number dpi = pi[other][i] - pi[index][i];
          if (!(dp == dpi)) {
            result.passed = false;
            result.witness = PotentialWitness{space.At(index), i,
                                              space.strategies[i][k],
                                              std::move(dp), std::move(dpi)};
            return result;
          }
        }
      }
    }
    return result;
  }

  result.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, space.size - 1);
  for (std::uint64_t sample = 0; sample < profile_bound; ++sample) {
    Profile x = space.At(pick(rng));
    Number px = potential(x);
    NumberVector pix = PrivateCosts(game, x);
    for (int i = 0; i < n; ++i) {
      for (const Incidence& y : space.strategies[i]) {
        if (y == x.choices[i]) continue;
        Profile moved = x;
        moved.choices[i] = y;
        if (!compare(x, px, pix, i, moved, potential(moved),
                     PrivateCost(game, moved, i))) {
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace rgg
