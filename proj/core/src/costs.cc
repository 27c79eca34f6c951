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

#include <algorithm>
#include <cmath>
#include <string>

#include "rgg/errors.h"

namespace rgg {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckSquare(const RationalMatrix& a, int m, const char* what) {
  if (static_cast<int>(a.size()) != m) {
    throw StructuralError(std::string(what) + " must have " +
                          std::to_string(m) + " rows");
  }
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != m) {
      throw StructuralError(std::string(what) + " must be square");
    }
  }
}

long IntegerLoad(const Rational& load, const char* model) {
  if (!IsInteger(load)) {
    throw DomainError(std::string(model) +
                      " costs are defined on integer loads only, got " +
                      FormatRational(load));
  }
  long value = ToInteger(load);
  if (value < 0) throw DomainError("negative load");
  return value;
}

std::size_t TableSize(int radix, std::size_t digits) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < digits; ++i) size *= radix;
  return size;
}

std::size_t TableIndex(const Tabulated& table, int r,
                       const std::function<long(int)>& load_of) {
  std::size_t index = 0;
  const int radix = table.max_load[r] + 1;
  for (int s : table.neighborhoods[r]) {
    long load = load_of(s);
    if (load > table.max_load[r]) {
      throw RangeError("load " + std::to_string(load) + " on resource " +
                       std::to_string(s) + " exceeds table bound " +
                       std::to_string(table.max_load[r]) + " of resource " +
                       std::to_string(r));
    }
    index = index * radix + static_cast<std::size_t>(load);
  }
  return index;
}

}  // namespace

const char* CostKindName(const CostModel& model) {
  return std::visit(
      Overloaded{
          [](const Tabulated&) { return "tabulated"; },
          [](const SeparablePlusLinear&) { return "separable_plus_linear"; },
          [](const Affine&) { return "affine"; },
          [](const Exponential&) { return "exponential"; },
          [](const Bilevel&) { return "bilevel"; },
          [](const PlayerSpecificSeparable&) {
            return "player_specific_separable";
          },
      },
      model);
}

std::optional<int> CostDimension(const CostModel& model) {
  return std::visit(
      Overloaded{
          [](const Tabulated& c) -> std::optional<int> {
            return static_cast<int>(c.neighborhoods.size());
          },
          [](const SeparablePlusLinear& c) -> std::optional<int> {
            return static_cast<int>(c.f.size());
          },
          [](const Affine& c) -> std::optional<int> {
            return static_cast<int>(c.b.size());
          },
          [](const Exponential& c) -> std::optional<int> {
            return static_cast<int>(c.a.size());
          },
          [](const Bilevel&) -> std::optional<int> { return std::nullopt; },
          [](const PlayerSpecificSeparable& c) -> std::optional<int> {
            if (c.nu.empty()) return std::nullopt;
            return static_cast<int>(c.nu.front().size());
          },
      },
      model);
}

void ValidateCostModel(const CostModel& model, int m,
                       std::optional<int> num_players) {
  if (auto dim = CostDimension(model); dim && *dim != m) {
    throw StructuralError(std::string(CostKindName(model)) +
                          " cost has dimension " + std::to_string(*dim) +
                          ", game has " + std::to_string(m) + " resources");
  }
  std::visit(
      Overloaded{
          [&](const Tabulated& c) {
            if (c.max_load.size() != c.neighborhoods.size() ||
                c.tables.size() != c.neighborhoods.size()) {
              throw StructuralError("tabulated cost needs one table per resource");
            }
            for (int r = 0; r < m; ++r) {
              const auto& hood = c.neighborhoods[r];
              if (!std::is_sorted(hood.begin(), hood.end()) ||
                  std::adjacent_find(hood.begin(), hood.end()) != hood.end()) {
                throw StructuralError("neighborhood must be sorted and unique");
              }
              for (int s : hood) {
                if (s < 0 || s >= m) {
                  throw StructuralError("neighborhood index out of range");
                }
              }
              if (c.max_load[r] < 0) throw StructuralError("negative max load");
              if (c.tables[r].size() !=
                  TableSize(c.max_load[r] + 1, hood.size())) {
                throw StructuralError(
                    "table for resource " + std::to_string(r) + " has " +
                    std::to_string(c.tables[r].size()) + " entries, expected " +
                    std::to_string(TableSize(c.max_load[r] + 1, hood.size())));
              }
            }
          },
          [&](const SeparablePlusLinear& c) {
            CheckSquare(c.a, m, "A");
            for (const auto& row : c.f) {
              if (row.empty()) throw StructuralError("f table must be non-empty");
            }
          },
          [&](const Affine& c) { CheckSquare(c.a, m, "A"); },
          [&](const Exponential& c) {
            if (c.b.size() != c.a.size()) {
              throw StructuralError("exponential a and b differ in length");
            }
            if (!std::isfinite(c.phi)) throw DomainError("phi must be finite");
          },
          [&](const Bilevel& c) {
            if (c.budget <= 0) throw DomainError("attack budget must be positive");
          },
          [&](const PlayerSpecificSeparable& c) {
            if (num_players && static_cast<int>(c.nu.size()) != *num_players) {
              throw StructuralError("player-specific cost needs one nu per player");
            }
            for (const auto& per_player : c.nu) {
              if (static_cast<int>(per_player.size()) != m) {
                throw StructuralError("nu needs one table per resource");
              }
              for (const auto& table : per_player) {
                if (table.empty()) throw StructuralError("empty nu table");
                for (std::size_t k = 1; k < table.size(); ++k) {
                  if (table[k] < table[k - 1]) {
                    throw DomainError("nu tables must be non-decreasing");
                  }
                }
              }
            }
          },
      },
      model);
}

bool IsSymmetric(const RationalMatrix& a) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t s = r + 1; s < a.size(); ++s) {
      if (a[r][s] != a[s][r]) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> Neighborhoods(const CostModel& model, int m) {
  std::vector<std::vector<int>> hoods(m);
  std::visit(
      Overloaded{
          [&](const Tabulated& c) { hoods = c.neighborhoods; },
          [&](const SeparablePlusLinear& c) {
            for (int r = 0; r < m; ++r) {
              bool varies = false;
              for (std::size_t k = 1; k < c.f[r].size(); ++k) {
                varies |= c.f[r][k] != c.f[r][0];
              }
              for (int s = 0; s < m; ++s) {
                if ((s == r && (varies || c.a[r][r] != 0)) ||
                    (s != r && c.a[r][s] != 0)) {
                  hoods[r].push_back(s);
                }
              }
            }
          },
          [&](const Affine& c) {
            for (int r = 0; r < m; ++r) {
              for (int s = 0; s < m; ++s) {
                if (c.a[r][s] != 0) hoods[r].push_back(s);
              }
            }
          },
          [&](const Exponential& c) {
            for (int r = 0; r < m; ++r) {
              if (c.a[r] != 0.0 && c.phi != 0.0) hoods[r].push_back(r);
            }
          },
          [&](const Bilevel&) {
            for (int r = 0; r < m; ++r) {
              for (int s = 0; s < m; ++s) hoods[r].push_back(s);
            }
          },
          [&](const PlayerSpecificSeparable&) {
            for (int r = 0; r < m; ++r) hoods[r].push_back(r);
          },
      },
      model);
  return hoods;
}

ArgmaxSet Argmax(std::span<const Rational> loads) {
  ArgmaxSet result;
  for (int r = 0; r < static_cast<int>(loads.size()); ++r) {
    if (result.indices.empty() || loads[r] > result.value) {
      result.indices = {r};
      result.value = loads[r];
    } else if (loads[r] == result.value) {
      result.indices.push_back(r);
    }
  }
  return result;
}

RationalVector KappaStar(std::span<const Rational> loads,
                         const Rational& budget) {
  if (loads.empty()) throw StructuralError("kappa* needs at least one resource");
  if (budget <= 0) throw DomainError("attack budget must be positive");
  RationalVector kappa(loads.size(), Rational(0));
  ArgmaxSet top = Argmax(loads);
  Rational share = budget / static_cast<long>(top.indices.size());
  for (int r : top.indices) kappa[r] = share;
  return kappa;
}

NumberVector EvalCost(const CostModel& model, std::span<const Rational> loads,
                      std::optional<int> player) {
  const int m = static_cast<int>(loads.size());
  if (auto dim = CostDimension(model); dim && *dim != m) {
    throw StructuralError("load vector has dimension " + std::to_string(m) +
                          ", cost model " + std::to_string(*dim));
  }
  if (player && !std::holds_alternative<PlayerSpecificSeparable>(model)) {
    throw UsageError("player index given for a shared cost model");
  }
  NumberVector costs(m);
  std::visit(
      Overloaded{
          [&](const Tabulated& c) {
            std::vector<long> integer_loads(m);
            for (int r = 0; r < m; ++r) {
              integer_loads[r] = IntegerLoad(loads[r], "tabulated");
            }
            for (int r = 0; r < m; ++r) costs[r] = TableValue(c, r, integer_loads);
          },
          [&](const SeparablePlusLinear& c) {
            for (int r = 0; r < m; ++r) {
              long k = IntegerLoad(loads[r], "separable");
              if (k >= static_cast<long>(c.f[r].size())) {
                throw RangeError("load " + std::to_string(k) + " on resource " +
                                 std::to_string(r) + " exceeds f table bound " +
                                 std::to_string(c.f[r].size() - 1));
              }
            }
            for (int r = 0; r < m; ++r) {
              Rational value = c.f[r][ToInteger(loads[r])];
              for (int s = 0; s < m; ++s) {
                if (loads[s] == 0 || c.a[r][s] == 0) continue;
                value += c.a[r][s] * loads[s];
              }
              costs[r] = std::move(value);
            }
          },
          [&](const Affine& c) {
            for (int r = 0; r < m; ++r) {
              Rational value = c.b[r];
              for (int s = 0; s < m; ++s) {
                if (loads[s] == 0 || c.a[r][s] == 0) continue;
                value += c.a[r][s] * loads[s];
              }
              costs[r] = std::move(value);
            }
          },
          [&](const Exponential& c) {
            for (int r = 0; r < m; ++r) {
              costs[r] =
                  Number(c.a[r] * std::exp(c.phi * loads[r].get_d()) + c.b[r]);
            }
          },
          [&](const Bilevel& c) {
            RationalVector kappa = KappaStar(loads, c.budget);
            for (int r = 0; r < m; ++r) {
              costs[r] = Rational(loads[r] + kappa[r]);
            }
          },
          [&](const PlayerSpecificSeparable& c) {
            if (!player) {
              throw UsageError("player-specific cost needs a player index");
            }
            if (*player < 0 || *player >= static_cast<int>(c.nu.size())) {
              throw UsageError("player index out of range");
            }
            const auto& nu = c.nu[*player];
            for (int r = 0; r < m; ++r) {
              long k = IntegerLoad(loads[r], "player-specific");
              if (k >= static_cast<long>(nu[r].size())) {
                throw RangeError("load " + std::to_string(k) + " on resource " +
                                 std::to_string(r) + " exceeds nu table bound");
              }
              costs[r] = nu[r][k];
            }
          },
      },
      model);
  return costs;
}

Number TableValue(const Tabulated& table, int r, std::span<const long> loads) {
  std::size_t index = TableIndex(table, r, [&](int s) { return loads[s]; });
  return table.tables[r][index];
}

namespace {

RationalMatrix BlockDiagonal(const std::vector<const RationalMatrix*>& parts) {
  std::size_t total = 0;
  for (const auto* part : parts) total += part->size();
  RationalMatrix result(total, RationalVector(total, Rational(0)));
  std::size_t offset = 0;
  for (const auto* part : parts) {
    for (std::size_t r = 0; r < part->size(); ++r) {
      for (std::size_t s = 0; s < part->size(); ++s) {
        result[offset + r][offset + s] = (*part)[r][s];
      }
    }
    offset += part->size();
  }
  return result;
}

Tabulated ConcatTables(const std::vector<Tabulated>& parts) {
  Tabulated result;
  int offset = 0;
  for (const auto& part : parts) {
    for (std::size_t r = 0; r < part.neighborhoods.size(); ++r) {
      std::vector<int> hood;
      for (int s : part.neighborhoods[r]) hood.push_back(s + offset);
      result.neighborhoods.push_back(std::move(hood));
      result.max_load.push_back(part.max_load[r]);
      result.tables.push_back(part.tables[r]);
    }
    offset += static_cast<int>(part.neighborhoods.size());
  }
  return result;
}

std::optional<int> DeclaredBound(const CostModel& model) {
  if (const auto* t = std::get_if<Tabulated>(&model)) {
    if (t->max_load.empty()) return std::nullopt;
    return *std::min_element(t->max_load.begin(), t->max_load.end());
  }
  if (const auto* s = std::get_if<SeparablePlusLinear>(&model)) {
    std::optional<int> bound;
    for (const auto& row : s->f) {
      int b = static_cast<int>(row.size()) - 1;
      bound = bound ? std::min(*bound, b) : b;
    }
    return bound;
  }
  return std::nullopt;
}

}  // namespace

CostModel Compose(std::span<const CostModel> models) {
  if (models.empty()) throw UsageError("nothing to compose");
  const std::size_t kind = models.front().index();
  bool same_kind = std::all_of(models.begin(), models.end(), [&](const auto& c) {
    return c.index() == kind;
  });
  if (same_kind) {
    switch (kind) {
      case 0: {
        std::vector<Tabulated> parts;
        for (const auto& c : models) parts.push_back(std::get<Tabulated>(c));
        return ConcatTables(parts);
      }
      case 1: {
        SeparablePlusLinear result;
        std::vector<const RationalMatrix*> blocks;
        for (const auto& c : models) {
          const auto& part = std::get<SeparablePlusLinear>(c);
          result.f.insert(result.f.end(), part.f.begin(), part.f.end());
          blocks.push_back(&part.a);
        }
        result.a = BlockDiagonal(blocks);
        return result;
      }
      case 2: {
        Affine result;
        std::vector<const RationalMatrix*> blocks;
        for (const auto& c : models) {
          const auto& part = std::get<Affine>(c);
          result.b.insert(result.b.end(), part.b.begin(), part.b.end());
          blocks.push_back(&part.a);
        }
        result.a = BlockDiagonal(blocks);
        return result;
      }
      case 3: {
        Exponential result;
        result.phi = std::get<Exponential>(models.front()).phi;
        for (const auto& c : models) {
          const auto& part = std::get<Exponential>(c);
          if (part.phi != result.phi) {
            throw IncompatibleError(
                "exponential models with different exponents do not compose");
          }
          result.a.insert(result.a.end(), part.a.begin(), part.a.end());
          result.b.insert(result.b.end(), part.b.begin(), part.b.end());
        }
        return result;
      }
      case 4:
        throw IncompatibleError(
            "bilevel costs couple all resources; tabulate each part first");
      case 5: {
        const auto& first = std::get<PlayerSpecificSeparable>(models.front());
        PlayerSpecificSeparable result;
        result.nu.resize(first.nu.size());
        for (const auto& c : models) {
          const auto& part = std::get<PlayerSpecificSeparable>(c);
          if (part.nu.size() != first.nu.size()) {
            throw IncompatibleError("player-specific parts differ in player count");
          }
          for (std::size_t i = 0; i < part.nu.size(); ++i) {
            result.nu[i].insert(result.nu[i].end(), part.nu[i].begin(),
                                part.nu[i].end());
          }
        }
        return result;
      }
    }
  }
  // Mixed kinds: bring everything to tables over the smallest declared bound.
  std::optional<int> bound;
  for (const auto& c : models) {
    if (auto b = DeclaredBound(c)) bound = bound ? std::min(*bound, *b) : *b;
  }
  if (!bound) {
    throw IncompatibleError("mixed composition needs a table-backed part");
  }
  std::vector<Tabulated> parts;
  for (const auto& c : models) {
    if (std::holds_alternative<Exponential>(c) ||
        std::holds_alternative<Bilevel>(c) ||
        std::holds_alternative<PlayerSpecificSeparable>(c)) {
      throw IncompatibleError(std::string("cannot mix ") + CostKindName(c) +
                              " costs with other kinds");
    }
    if (const auto* t = std::get_if<Tabulated>(&c)) {
      parts.push_back(*t);
    } else {
      parts.push_back(AsTabulated(c, *CostDimension(c), *bound));
    }
  }
  return ConcatTables(parts);
}

CostModel ComposeCopies(const CostModel& model, int copies) {
  if (copies < 1) throw UsageError("need at least one copy");
  std::vector<CostModel> parts(copies, model);
  return Compose(parts);
}

Tabulated TabulateFunction(int m, int max_load,
                           const IntegerCostFunction& cost) {
  if (max_load < 0) throw UsageError("max load must be non-negative");
  const int radix = max_load + 1;
  const std::size_t points = TableSize(radix, m);
  if (points > 20'000'000) {
    throw CapacityError("tabulation grid of " + std::to_string(points) +
                        " points is too large");
  }
  // Full grid, first coordinate most significant.
  std::vector<NumberVector> grid(points);
  std::vector<long> x(m, 0);
  for (std::size_t index = 0; index < points; ++index) {
    std::size_t rest = index;
    for (int s = m - 1; s >= 0; --s) {
      x[s] = static_cast<long>(rest % radix);
      rest /= radix;
    }
    grid[index] = cost(x);
    if (static_cast<int>(grid[index].size()) != m) {
      throw StructuralError("cost oracle returned a vector of wrong length");
    }
  }
  std::vector<std::size_t> stride(m, 1);
  for (int s = m - 2; s >= 0; --s) stride[s] = stride[s + 1] * radix;

  Tabulated table;
  table.neighborhoods.resize(m);
  table.max_load.assign(m, max_load);
  table.tables.resize(m);
  for (int r = 0; r < m; ++r) {
    for (int s = 0; s < m; ++s) {
      bool depends = false;
      for (std::size_t index = 0; index < points && !depends; ++index) {
        if ((index / stride[s]) % radix == static_cast<std::size_t>(max_load)) {
          continue;
        }
        depends = !(grid[index][r] == grid[index + stride[s]][r]);
      }
      if (depends) table.neighborhoods[r].push_back(s);
    }
    const auto& hood = table.neighborhoods[r];
    const std::size_t entries = TableSize(radix, hood.size());
    table.tables[r].resize(entries);
    for (std::size_t key = 0; key < entries; ++key) {
      std::size_t rest = key;
      std::size_t index = 0;
      for (int j = static_cast<int>(hood.size()) - 1; j >= 0; --j) {
        index += (rest % radix) * stride[hood[j]];
        rest /= radix;
      }
      table.tables[r][key] = grid[index][r];
    }
  }
  return table;
}

Tabulated AsTabulated(const CostModel& model, int m, int max_load,
                      std::optional<int> player, bool allow_float) {
  if (max_load < 1) throw UsageError("tabulation bound must be at least 1");
  if (std::holds_alternative<Exponential>(model) && !allow_float) {
    throw UnsupportedError(
        "exponential costs are not rational; pass allow_float to tabulate");
  }
  ValidateCostModel(model, m);
  return TabulateFunction(m, max_load, [&](std::span<const long> x) {
    RationalVector loads(x.begin(), x.end());
    return EvalCost(model, loads, player);
  });
}

}  // namespace rgg
