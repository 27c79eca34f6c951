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
#include "rgg/matroid.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "rgg/errors.h"
#include "rgg/incidence.h"

namespace rgg {
namespace {

TEST(Matroid, UniformIndependence) {
  MatroidDesc u = MakeUniform(3, 2);
  EXPECT_TRUE(IsIndependent(u, FromSupport(3, {0, 1})));
  EXPECT_TRUE(IsBasis(u, FromSupport(3, {0, 1})));
  EXPECT_FALSE(IsIndependent(u, FromSupport(3, {0, 1, 2})));
  EXPECT_EQ(MatroidRank(u), 2);
}

TEST(Matroid, PartitionQuota) {
  MatroidDesc p = MakePartition(3, {{0, 1}, {2}}, {1, 1});
  EXPECT_FALSE(IsIndependent(p, FromSupport(3, {0, 1})));
  EXPECT_TRUE(IsBasis(p, FromSupport(3, {1, 2})));
  EXPECT_EQ(MatroidRank(p), 2);
}

TEST(Matroid, GraphicTriangle) {
  MatroidDesc g = MakeGraphic(3, 3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(IsBasis(g, FromSupport(3, {0, 2})));
  EXPECT_FALSE(IsIndependent(g, FromSupport(3, {0, 1, 2})));
  EXPECT_EQ(EnumerateBases(g).size(), 3u);
}

TEST(Matroid, RejectsMalformedDescriptions) {
  EXPECT_THROW(MakeUniform(3, 0), StructuralError);
  EXPECT_THROW(MakeUniform(3, 4), StructuralError);
  EXPECT_THROW(MakePartition(3, {{0, 1}, {1, 2}}, {1, 1}), StructuralError);
  EXPECT_THROW(MakePartition(3, {{0, 1}}, {3}), StructuralError);
  EXPECT_THROW(MakeGraphic(2, 2, {{0, 5}, {0, 1}}), StructuralError);
}

TEST(Matroid, EnumerateBasesMatchesBruteForce) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    MatroidDesc desc = MakeUniform(1, 1);
    desc = testing::RandomMatroid(rng, testing::UniformInt(rng, 1, 6));
    EXPECT_EQ(EnumerateBases(desc), testing::OracleBases(desc)) << trial;
  }
}

TEST(Matroid, EnumerateBasesHonoursCap) {
  EXPECT_THROW(EnumerateBases(MakeUniform(12, 6), 10), CapacityError);
}

TEST(ExchangeDecompose, IdenticalBasesNeedNoSteps) {
  MatroidDesc u = MakeUniform(3, 2);
  Incidence t = FromSupport(3, {0, 1});
  EXPECT_TRUE(ExchangeDecompose(u, t, t).empty());
}

TEST(ExchangeDecompose, UniformSingleSwap) {
  MatroidDesc u = MakeUniform(3, 2);
  auto steps = ExchangeDecompose(u, FromSupport(3, {0, 1}), FromSupport(3, {1, 2}));
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(steps[0], (ExchangeStep{0, 2}));
}

TEST(ExchangeDecompose, GraphicFourCycleOneStep) {
  MatroidDesc g = MakeGraphic(4, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Incidence t = FromSupport(4, {0, 1, 2});
  Incidence u = FromSupport(4, {1, 2, 3});
  auto steps = ExchangeDecompose(g, t, u);
  ASSERT_EQ(steps.size(), 1u);
  Incidence mid = t;
  mid[steps[0].remove] = 0;
  mid[steps[0].add] = 1;
  EXPECT_TRUE(IsBasis(g, mid));
  EXPECT_EQ(mid, u);
}

TEST(ExchangeDecompose, RejectsNonBases) {
  MatroidDesc u = MakeUniform(3, 2);
  EXPECT_THROW(ExchangeDecompose(u, FromSupport(3, {0}), FromSupport(3, {1, 2})),
               Error);
}

TEST(GreedyBestResponse, MatchesEnumerationMinimum) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    int m = testing::UniformInt(rng, 1, 6);
    MatroidDesc desc = testing::RandomMatroid(rng, m);
    std::vector<Number> weights;
    for (int r = 0; r < m; ++r) {
      weights.emplace_back(testing::RandomRational(rng, -4, 4, 2));
    }
    auto cost = [&](const Incidence& v) {
      Number total(0);
      for (int r = 0; r < m; ++r) {
        if (v[r]) total += weights[r];
      }
      return total;
    };
    Incidence greedy = GreedyBestResponse(desc, weights);
    ASSERT_TRUE(IsBasis(desc, greedy));
    for (const Incidence& b : testing::OracleBases(desc)) {
      EXPECT_LE(cost(greedy), cost(b)) << trial;
    }
  }
}

}  // namespace
}  // namespace rgg
