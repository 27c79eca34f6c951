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

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "rgg/errors.h"

namespace rgg {

Incidence FromSupport(int num_resources, std::span<const int> support) {
  Incidence v(num_resources, 0);
  for (int r : support) {
    if (r < 0 || r >= num_resources) {
      throw StructuralError("resource index " + std::to_string(r) +
                            " out of range [0, " +
                            std::to_string(num_resources) + ")");
    }
    v[r] = 1;
  }
  return v;
}

std::vector<int> Support(const Incidence& vector) {
  std::vector<int> support;
  for (int r = 0; r < static_cast<int>(vector.size()); ++r) {
    if (vector[r]) support.push_back(r);
  }
  return support;
}

int Cardinality(const Incidence& vector) {
  return static_cast<int>(std::count(vector.begin(), vector.end(), 1));
}

std::string IncidenceToString(const Incidence& vector) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int r : Support(vector)) {
    if (!first) os << ",";
    os << r;
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Resource -> edge index, -1 when the resource carries no edge.
std::vector<int> EdgeOfResource(const MatroidDesc& desc,
                                const GraphicMatroid& g) {
  std::vector<int> edge_of(desc.ground_size, -1);
  for (int e = 0; e < static_cast<int>(g.resources.size()); ++e) {
    edge_of[g.resources[e]] = e;
  }
  return edge_of;
}

// Block index per resource, -1 outside every block.
std::vector<int> BlockOfResource(const MatroidDesc& desc,
                                 const PartitionMatroid& p) {
  std::vector<int> block_of(desc.ground_size, -1);
  for (int j = 0; j < static_cast<int>(p.blocks.size()); ++j) {
    for (int r : p.blocks[j]) block_of[r] = j;
  }
  return block_of;
}

void CheckDimension(const MatroidDesc& desc, const Incidence& v) {
  if (static_cast<int>(v.size()) != desc.ground_size) {
    throw StructuralError("incidence vector has dimension " +
                          std::to_string(v.size()) + ", matroid ground set " +
                          std::to_string(desc.ground_size));
  }
}

}  // namespace

bool MatroidDesc::operator==(const MatroidDesc& other) const {
  if (ground_size != other.ground_size) return false;
  if (kind.index() != other.kind.index()) return false;
  if (const auto* u = std::get_if<UniformMatroid>(&kind)) {
    return u->rank == std::get<UniformMatroid>(other.kind).rank;
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&kind)) {
    const auto& q = std::get<PartitionMatroid>(other.kind);
    return p->blocks == q.blocks && p->quotas == q.quotas;
  }
  const auto& g = std::get<GraphicMatroid>(kind);
  const auto& h = std::get<GraphicMatroid>(other.kind);
  return g.vertices == h.vertices && g.edges == h.edges &&
         g.resources == h.resources;
}

void ValidateMatroid(const MatroidDesc& desc) {
  const int m = desc.ground_size;
  if (m < 1) throw StructuralError("matroid ground set must be non-empty");
  if (const auto* u = std::get_if<UniformMatroid>(&desc.kind)) {
    if (u->rank < 1 || u->rank > m) {
      throw StructuralError("uniform matroid rank " + std::to_string(u->rank) +
                            " outside [1, " + std::to_string(m) + "]");
    }
    return;
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&desc.kind)) {
    if (p->blocks.size() != p->quotas.size()) {
      throw StructuralError("partition matroid needs one quota per block");
    }
    std::vector<int> seen(m, 0);
    for (std::size_t j = 0; j < p->blocks.size(); ++j) {
      for (int r : p->blocks[j]) {
        if (r < 0 || r >= m) {
          throw StructuralError("partition block element out of range");
        }
        if (seen[r]++) {
          throw StructuralError("partition blocks must be disjoint");
        }
      }
      if (p->quotas[j] < 0 ||
          p->quotas[j] > static_cast<int>(p->blocks[j].size())) {
        throw StructuralError("partition quota exceeds block size");
      }
    }
    return;
  }
  const auto& g = std::get<GraphicMatroid>(desc.kind);
  if (g.vertices < 1) throw StructuralError("graph needs a vertex");
  if (g.resources.size() != g.edges.size()) {
    throw StructuralError("graphic matroid needs one resource per edge");
  }
  std::vector<int> seen(m, 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    if (a < 0 || b < 0 || a >= g.vertices || b >= g.vertices) {
      throw StructuralError("edge endpoint out of range");
    }
    int r = g.resources[e];
    if (r < 0 || r >= m) throw StructuralError("edge resource out of range");
    if (seen[r]++) throw StructuralError("two edges share a resource");
  }
  DisjointSets sets(g.vertices);
  int components = g.vertices;
  for (auto [a, b] : g.edges) {
    if (sets.Union(a, b)) --components;
  }
  if (components != 1) throw StructuralError("graph must be connected");
}

MatroidDesc MakeUniform(int ground_size, int rank) {
  MatroidDesc desc{ground_size, UniformMatroid{rank}};
  ValidateMatroid(desc);
  return desc;
}

MatroidDesc MakePartition(int ground_size, std::vector<std::vector<int>> blocks,
                          std::vector<int> quotas) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  MatroidDesc desc{ground_size,
                   PartitionMatroid{std::move(blocks), std::move(quotas)}};
  ValidateMatroid(desc);
  return desc;
}

MatroidDesc MakeGraphic(int ground_size, int vertices,
                        std::vector<std::pair<int, int>> edges,
                        std::vector<int> resources) {
  if (resources.empty()) {
    resources.resize(edges.size());
    std::iota(resources.begin(), resources.end(), 0);
  }
  MatroidDesc desc{ground_size, GraphicMatroid{vertices, std::move(edges),
                                               std::move(resources)}};
  ValidateMatroid(desc);
  return desc;
}

int MatroidRank(const MatroidDesc& desc) {
  if (const auto* u = std::get_if<UniformMatroid>(&desc.kind)) return u->rank;
  if (const auto* p = std::get_if<PartitionMatroid>(&desc.kind)) {
    return std::accumulate(p->quotas.begin(), p->quotas.end(), 0);
  }
  return std::get<GraphicMatroid>(desc.kind).vertices - 1;
}

bool IsIndependent(const MatroidDesc& desc, const Incidence& v) {
  CheckDimension(desc, v);
  if (const auto* u = std::get_if<UniformMatroid>(&desc.kind)) {
    return Cardinality(v) <= u->rank;
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&desc.kind)) {
    std::vector<int> block_of = BlockOfResource(desc, *p);
    std::vector<int> used(p->blocks.size(), 0);
    for (int r : Support(v)) {
      if (block_of[r] < 0) return false;
      if (++used[block_of[r]] > p->quotas[block_of[r]]) return false;
    }
    return true;
  }
  const auto& g = std::get<GraphicMatroid>(desc.kind);
  std::vector<int> edge_of = EdgeOfResource(desc, g);
  DisjointSets sets(g.vertices);
  for (int r : Support(v)) {
    if (edge_of[r] < 0) return false;
    auto [a, b] = g.edges[edge_of[r]];
    if (!sets.Union(a, b)) return false;
  }
  return true;
}

bool IsBasis(const MatroidDesc& desc, const Incidence& v) {
  return Cardinality(v) == MatroidRank(desc) && IsIndependent(desc, v);
}

std::vector<Incidence> EnumerateBases(const MatroidDesc& desc,
                                      std::size_t cap) {
  const int m = desc.ground_size;
  const int rank = MatroidRank(desc);
  std::vector<Incidence> bases;
  Incidence current(m, 0);

  // Lower-bound pruning: enough selectable elements must remain.
  std::vector<int> block_of;
  std::vector<int> block_remaining;
  std::vector<int> block_used;
  std::vector<int> edge_of;
  if (const auto* p = std::get_if<PartitionMatroid>(&desc.kind)) {
    block_of = BlockOfResource(desc, *p);
    block_remaining.assign(p->blocks.size(), 0);
    block_used.assign(p->blocks.size(), 0);
    for (int r = 0; r < m; ++r) {
      if (block_of[r] >= 0) ++block_remaining[block_of[r]];
    }
  } else if (const auto* g = std::get_if<GraphicMatroid>(&desc.kind)) {
    edge_of = EdgeOfResource(desc, *g);
  }
  const auto* partition = std::get_if<PartitionMatroid>(&desc.kind);

  std::function<void(int, int)> recurse = [&](int pos, int chosen) {
    if (chosen > rank) return;
    if (chosen + (m - pos) < rank) return;
    if (partition) {
      for (std::size_t j = 0; j < partition->quotas.size(); ++j) {
        if (block_used[j] + block_remaining[j] < partition->quotas[j]) return;
      }
    }
    if (pos == m) {
      if (chosen == rank && IsBasis(desc, current)) {
        if (bases.size() >= cap) {
          throw CapacityError("basis enumeration exceeded cap of " +
                              std::to_string(cap));
        }
        bases.push_back(current);
      }
      return;
    }
    const int block = partition ? block_of[pos] : -1;
    if (block >= 0) --block_remaining[block];
    recurse(pos + 1, chosen);
    bool selectable = true;
    if (partition) {
      selectable = block >= 0 && block_used[block] < partition->quotas[block];
    } else if (!edge_of.empty()) {
      selectable = edge_of[pos] >= 0;
    }
    if (selectable) {
      current[pos] = 1;
      if (block >= 0) ++block_used[block];
      if (!edge_of.empty() ? IsIndependent(desc, current) : true) {
        recurse(pos + 1, chosen + 1);
      }
      if (block >= 0) --block_used[block];
      current[pos] = 0;
    }
    if (block >= 0) ++block_remaining[block];
  };
  recurse(0, 0);
  return bases;
}

std::vector<ExchangeStep> ExchangeDecompose(const MatroidDesc& desc,
                                            const Incidence& t,
                                            const Incidence& u) {
  if (!IsBasis(desc, t) || !IsBasis(desc, u)) {
    throw DomainError("exchange decomposition needs two bases");
  }
  std::vector<ExchangeStep> steps;
  Incidence current = t;
  std::function<bool()> search = [&]() -> bool {
    if (current == u) return true;
    for (int r = 0; r < desc.ground_size; ++r) {
      if (!current[r] || u[r]) continue;
      for (int s = 0; s < desc.ground_size; ++s) {
        if (current[s] || !u[s]) continue;
        current[r] = 0;
        current[s] = 1;
        if (IsBasis(desc, current)) {
          steps.push_back({r, s});
          if (search()) return true;
          steps.pop_back();
        }
        current[s] = 0;
        current[r] = 1;
      }
    }
    return false;
  };
  if (!search()) {
    throw InternalError("no exchange sequence found between bases " +
                        IncidenceToString(t) + " and " + IncidenceToString(u));
  }
  return steps;
}

Incidence GreedyBestResponse(const MatroidDesc& desc,
                             std::span<const Number> weights) {
  const int m = desc.ground_size;
  if (static_cast<int>(weights.size()) != m) {
    throw StructuralError("greedy needs one weight per resource");
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  // Equal weights: the higher index first, which keeps low positions free and
  // yields the lexicographically smallest optimal basis.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (weights[a] < weights[b]) return true;
    if (weights[b] < weights[a]) return false;
    return a > b;
  });
  Incidence basis(m, 0);
  for (int r : order) {
    basis[r] = 1;
    if (!IsIndependent(desc, basis)) basis[r] = 0;
  }
  if (!IsBasis(desc, basis)) throw InternalError("greedy produced a non-basis");
  return basis;
}

}  // namespace rgg
