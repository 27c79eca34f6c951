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
#ifndef RGG_MATROID_H_
#define RGG_MATROID_H_

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "rgg/incidence.h"
#include "rgg/number.h"

namespace rgg {

struct UniformMatroid {
  int rank = 1;
};

// Bases pick exactly quotas[j] elements of blocks[j]; elements outside the
// union of the blocks are never used.
struct PartitionMatroid {
  std::vector<std::vector<int>> blocks;
  std::vector<int> quotas;
};

// Edge e of the graph is resource resources[e]. Bases are spanning trees.
struct GraphicMatroid {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> resources;
};

struct MatroidDesc {
  int ground_size = 0;
  std::variant<UniformMatroid, PartitionMatroid, GraphicMatroid> kind;

  bool operator==(const MatroidDesc& other) const;
};

// Validating constructors; all throw StructuralError on malformed input.
MatroidDesc MakeUniform(int ground_size, int rank);
MatroidDesc MakePartition(int ground_size, std::vector<std::vector<int>> blocks,
                          std::vector<int> quotas);
// An empty resources list maps edge e to resource e.
MatroidDesc MakeGraphic(int ground_size, int vertices,
                        std::vector<std::pair<int, int>> edges,
                        std::vector<int> resources = {});
void ValidateMatroid(const MatroidDesc& desc);

int MatroidRank(const MatroidDesc& desc);
bool IsIndependent(const MatroidDesc& desc, const Incidence& v);
bool IsBasis(const MatroidDesc& desc, const Incidence& v);

// All bases in lexicographic order. Throws CapacityError past cap.
std::vector<Incidence> EnumerateBases(const MatroidDesc& desc,
                                      std::size_t cap = 100000);

struct ExchangeStep {
  int remove = 0;
  int add = 0;
  bool operator==(const ExchangeStep&) const = default;
};

// Single-element swaps turning basis t into basis u through bases only.
std::vector<ExchangeStep> ExchangeDecompose(const MatroidDesc& desc,
                                            const Incidence& t,
                                            const Incidence& u);

// Minimum-weight basis. Among minimum-weight bases the lexicographically
// smallest incidence vector is returned, matching the first minimizer of an
// enumerate-and-compare scan.
Incidence GreedyBestResponse(const MatroidDesc& desc,
                             std::span<const Number> weights);

}  // namespace rgg

#endif  // RGG_MATROID_H_
