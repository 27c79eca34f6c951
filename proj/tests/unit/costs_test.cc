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
#include "rgg/costs.h"

#include <gtest/gtest.h>

#include <cmath>

#include "rgg/errors.h"

namespace rgg {
namespace {

RationalVector Loads(std::initializer_list<long> values) {
  RationalVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

TEST(EvalCost, AffineMatrixVector) {
  Affine c{{{0, 1}, {1, 0}}, {0, 0}};
  EXPECT_EQ(EvalCost(c, Loads({2, 3})), (NumberVector{3, 2}));
}

TEST(EvalCost, BilevelSplitsBudgetOverMaxima) {
  Bilevel c{Rational(6)};
  EXPECT_EQ(EvalCost(c, Loads({3, 3, 1})), (NumberVector{6, 6, 1}));
}

TEST(EvalCost, ExponentialAtZeroRate) {
  Exponential c{{1.0}, 0.0, {0.0}};
  NumberVector cost = EvalCost(c, Loads({5}));
  EXPECT_NEAR(cost[0].to_double(), 1.0, 1e-12);
}

TEST(EvalCost, ExponentialMatchesClosedForm) {
  Exponential c{{2.0, 3.0}, 0.5, {0.0, 1.0}};
  NumberVector cost = EvalCost(c, Loads({1, 2}));
  EXPECT_NEAR(cost[0].to_double(), 2.0 * std::exp(0.5), 1e-12);
  EXPECT_NEAR(cost[1].to_double(), 3.0 * std::exp(1.0) + 1.0, 1e-12);
}

TEST(EvalCost, SeparablePlusLinear) {
  SeparablePlusLinear c{{{0, 1, 4}, {0, 0, 0}}, {{0, 0}, {0, 0}}};
  EXPECT_EQ(EvalCost(c, Loads({2, 0})), (NumberVector{4, 0}));
}

TEST(EvalCost, PlayerSpecificNeedsPlayer) {
  PlayerSpecificSeparable c{{{{0, 1, 2}}, {{0, 5, 9}}}};
  EXPECT_EQ(EvalCost(c, Loads({2}), 1), (NumberVector{9}));
  EXPECT_THROW(EvalCost(c, Loads({2})), Error);
}

TEST(KappaStar, Examples) {
  EXPECT_EQ(KappaStar(Loads({1, 2}), Rational(4)), Loads({0, 4}));
  EXPECT_EQ(KappaStar(Loads({0}), Rational(1)), Loads({1}));
  RationalVector even = KappaStar(Loads({3, 3, 3, 3}), Rational(2));
  for (const auto& v : even) EXPECT_EQ(v, Rational(1, 2));
}

TEST(Argmax, ReturnsAllMaximisers) {
  ArgmaxSet s = Argmax(Loads({2, 5, 5, 1}));
  EXPECT_EQ(s.indices, (std::vector<int>{1, 2}));
  EXPECT_EQ(s.value, Rational(5));
}

TEST(Compose, BlockDiagonalAffine) {
  std::vector<CostModel> parts{Affine{{{1}}, {2}}, Affine{{{0, 3}, {3, 0}}, {1, 1}}};
  CostModel joined = Compose(parts);
  const auto& a = std::get<Affine>(joined);
  RationalMatrix expected{{1, 0, 0}, {0, 0, 3}, {0, 3, 0}};
  EXPECT_EQ(a.a, expected);
  EXPECT_EQ(a.b, Loads({2, 1, 1}));
}

TEST(Compose, CopiesEvaluateIndependently) {
  Tabulated base = AsTabulated(Affine{{{1, 2}, {0, 1}}, {0, 0}}, 2, 2);
  CostModel four = ComposeCopies(base, 4);
  ASSERT_EQ(CostDimension(four), 8);
  RationalVector x = Loads({1, 0, 0, 1, 2, 2, 0, 0});
  NumberVector c = EvalCost(four, x);
  EXPECT_EQ(c[0], Number(1));
  EXPECT_EQ(c[3], Number(1));
  EXPECT_EQ(c[4], Number(6));
  EXPECT_EQ(c[5], Number(2));
}

TEST(AsTabulated, SeparableHasSingletonNeighborhoods) {
  SeparablePlusLinear c{{{0, 1, 2}, {0, 3, 4}}, {{0, 0}, {0, 0}}};
  Tabulated t = AsTabulated(c, 2, 2);
  EXPECT_EQ(t.neighborhoods, (std::vector<std::vector<int>>{{0}, {1}}));
}

TEST(AsTabulated, DenseAffineReadsEverything) {
  Tabulated t = AsTabulated(Affine{{{1, 1}, {1, 1}}, {0, 0}}, 2, 2);
  EXPECT_EQ(t.neighborhoods, (std::vector<std::vector<int>>{{0, 1}, {0, 1}}));
}

TEST(AsTabulated, BilevelAgreesWithKappaStarPointwise) {
  Bilevel c{Rational(1)};
  Tabulated t = AsTabulated(c, 2, 2);
  for (long a = 0; a <= 2; ++a) {
    for (long b = 0; b <= 2; ++b) {
      RationalVector x = Loads({a, b});
      RationalVector k = KappaStar(x, c.budget);
      std::vector<long> loads{a, b};
      for (int r = 0; r < 2; ++r) {
        EXPECT_EQ(TableValue(t, r, loads), Number(x[r] + k[r]));
      }
    }
  }
}

TEST(AsTabulated, ExponentialNeedsFloatOptIn) {
  Exponential c{{1.0}, 1.0, {0.0}};
  EXPECT_THROW(AsTabulated(c, 1, 2), Error);
  EXPECT_NO_THROW(AsTabulated(c, 1, 2, std::nullopt, true));
}

TEST(ValidateCostModel, CatchesShapeErrors) {
  EXPECT_THROW(ValidateCostModel(Affine{{{1, 0}}, {0, 0}}, 2), StructuralError);
  EXPECT_THROW(ValidateCostModel(Bilevel{Rational(-1)}, 2), Error);
  EXPECT_THROW(ValidateCostModel(PlayerSpecificSeparable{{{{0, 2, 1}}}}, 1), Error);
  EXPECT_NO_THROW(ValidateCostModel(Affine{{{1, 0}, {0, 1}}, {0, 0}}, 2));
}

}  // namespace
}  // namespace rgg
