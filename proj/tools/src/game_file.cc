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
#include "rgg_cli/game_file.h"

#include <fstream>
#include <set>
#include <sstream>

#include "rgg/errors.h"

namespace rgg::cli {
namespace {

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string Key(const std::string& path, const std::string& key) {
  return path + "." + key;
}

void RequireObject(const Json& value, const std::string& path) {
  if (!value.is_object()) throw FormatError(path, "expected an object");
}

void RequireArray(const Json& value, const std::string& path) {
  if (!value.is_array()) throw FormatError(path, "expected an array");
}

void RejectUnknown(const Json& object, const std::string& path,
                   std::initializer_list<const char*> allowed) {
  std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& [key, value] : object.items()) {
    if (!known.count(key)) throw FormatError(Key(path, key), "unknown field");
  }
}

const Json& Field(const Json& object, const std::string& path,
                  const std::string& key) {
  auto it = object.find(key);
  if (it == object.end()) throw FormatError(Key(path, key), "missing field");
  return *it;
}

const Json* OptionalField(const Json& object, const std::string& key) {
  auto it = object.find(key);
  return it == object.end() ? nullptr : &*it;
}

long ReadInt(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) throw FormatError(path, "expected an integer");
  return value.get<long>();
}

int ReadIndex(const Json& value, const std::string& path, int limit) {
  long v = ReadInt(value, path);
  if (v < 0 || v >= limit) {
    throw FormatError(path, "index " + std::to_string(v) + " out of range [0, " +
                                std::to_string(limit) + ")");
  }
  return static_cast<int>(v);
}

Rational ReadRational(const Json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (!value.is_string()) {
    throw FormatError(path, "expected a rational \"p/q\"");
  }
  try {
    return ParseRational(value.get<std::string>());
  } catch (const Error& e) {
    throw FormatError(path, e.what());
  }
}

double ReadDouble(const Json& value, const std::string& path) {
  if (!value.is_number()) throw FormatError(path, "expected a number");
  return value.get<double>();
}

RationalVector ReadRationalVector(const Json& value, const std::string& path) {
  RequireArray(value, path);
  RationalVector out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(ReadRational(value[i], Index(path, i)));
  }
  return out;
}

RationalMatrix ReadRationalMatrix(const Json& value, const std::string& path) {
  RequireArray(value, path);
  RationalMatrix out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(ReadRationalVector(value[i], Index(path, i)));
  }
  return out;
}

std::vector<double> ReadDoubleVector(const Json& value,
                                     const std::string& path) {
  RequireArray(value, path);
  std::vector<double> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(ReadDouble(value[i], Index(path, i)));
  }
  return out;
}

std::vector<int> ReadIndexList(const Json& value, const std::string& path,
                               int limit) {
  RequireArray(value, path);
  std::vector<int> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(ReadIndex(value[i], Index(path, i), limit));
  }
  return out;
}

Incidence ReadSupport(const Json& value, const std::string& path, int m) {
  std::vector<int> support = ReadIndexList(value, path, m);
  std::set<int> unique(support.begin(), support.end());
  if (unique.size() != support.size()) {
    throw FormatError(path, "repeated resource index");
  }
  return FromSupport(m, support);
}

MatroidDesc ReadMatroid(const Json& value, const std::string& path, int m) {
  RequireObject(value, path);
  const Json& kind_value = Field(value, path, "kind");
  if (!kind_value.is_string()) {
    throw FormatError(Key(path, "kind"), "expected a string");
  }
  std::string kind = kind_value.get<std::string>();
  try {
    if (kind == "uniform") {
      RejectUnknown(value, path, {"kind", "rank"});
      return MakeUniform(m, static_cast<int>(
                                ReadInt(Field(value, path, "rank"),
                                        Key(path, "rank"))));
    }
    if (kind == "partition") {
      RejectUnknown(value, path, {"kind", "blocks", "quotas"});
      const Json& blocks_value = Field(value, path, "blocks");
      RequireArray(blocks_value, Key(path, "blocks"));
      std::vector<std::vector<int>> blocks;
      for (std::size_t b = 0; b < blocks_value.size(); ++b) {
        blocks.push_back(
            ReadIndexList(blocks_value[b], Index(Key(path, "blocks"), b), m));
      }
      const Json& quotas_value = Field(value, path, "quotas");
      RequireArray(quotas_value, Key(path, "quotas"));
      std::vector<int> quotas;
      for (std::size_t b = 0; b < quotas_value.size(); ++b) {
        quotas.push_back(static_cast<int>(
            ReadInt(quotas_value[b], Index(Key(path, "quotas"), b))));
      }
      return MakePartition(m, std::move(blocks), std::move(quotas));
    }
    if (kind == "graphic") {
      RejectUnknown(value, path, {"kind", "vertices", "edges", "resources"});
      int vertices = static_cast<int>(
          ReadInt(Field(value, path, "vertices"), Key(path, "vertices")));
      const Json& edges_value = Field(value, path, "edges");
      RequireArray(edges_value, Key(path, "edges"));
      std::vector<std::pair<int, int>> edges;
      for (std::size_t e = 0; e < edges_value.size(); ++e) {
        std::string edge_path = Index(Key(path, "edges"), e);
        std::vector<int> ends =
            ReadIndexList(edges_value[e], edge_path, std::max(vertices, 1));
        if (ends.size() != 2) throw FormatError(edge_path, "expected [u, v]");
        edges.emplace_back(ends[0], ends[1]);
      }
      std::vector<int> resources;
      if (const Json* r = OptionalField(value, "resources")) {
        resources = ReadIndexList(*r, Key(path, "resources"), m);
      }
      return MakeGraphic(m, vertices, std::move(edges), std::move(resources));
    }
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(path, e.what());
  }
  throw FormatError(Key(path, "kind"),
                    "unknown matroid kind '" + kind +
                        "' (expected uniform, partition or graphic)");
}

CostModel ReadCost(const Json& value, const std::string& path, int m) {
  RequireObject(value, path);
  RejectUnknown(value, path, {"kind", "payload"});
  const Json& kind_value = Field(value, path, "kind");
  if (!kind_value.is_string()) {
    throw FormatError(Key(path, "kind"), "expected a string");
  }
  const std::string kind = kind_value.get<std::string>();
  const std::string p = Key(path, "payload");
  const Json& payload = Field(value, path, "payload");
  RequireObject(payload, p);
  CostModel model;
  if (kind == "tabulated") {
    RejectUnknown(payload, p, {"neighborhoods", "max_load", "tables"});
    Tabulated t;
    const Json& hoods = Field(payload, p, "neighborhoods");
    RequireArray(hoods, Key(p, "neighborhoods"));
    for (std::size_t r = 0; r < hoods.size(); ++r) {
      t.neighborhoods.push_back(
          ReadIndexList(hoods[r], Index(Key(p, "neighborhoods"), r), m));
    }
    const Json& loads = Field(payload, p, "max_load");
    RequireArray(loads, Key(p, "max_load"));
    for (std::size_t r = 0; r < loads.size(); ++r) {
      t.max_load.push_back(
          static_cast<int>(ReadInt(loads[r], Index(Key(p, "max_load"), r))));
    }
    const Json& tables = Field(payload, p, "tables");
    RequireArray(tables, Key(p, "tables"));
    for (std::size_t r = 0; r < tables.size(); ++r) {
      std::string row_path = Index(Key(p, "tables"), r);
      RequireArray(tables[r], row_path);
      NumberVector row;
      for (std::size_t k = 0; k < tables[r].size(); ++k) {
        const Json& entry = tables[r][k];
        if (entry.is_number_float()) {
          row.emplace_back(entry.get<double>());
        } else {
          row.emplace_back(ReadRational(entry, Index(row_path, k)));
        }
      }
      t.tables.push_back(std::move(row));
    }
    model = std::move(t);
  } else if (kind == "separable_plus_linear") {
    RejectUnknown(payload, p, {"f", "a"});
    model = SeparablePlusLinear{
        ReadRationalMatrix(Field(payload, p, "f"), Key(p, "f")),
        ReadRationalMatrix(Field(payload, p, "a"), Key(p, "a"))};
  } else if (kind == "affine") {
    RejectUnknown(payload, p, {"a", "b"});
    model = Affine{ReadRationalMatrix(Field(payload, p, "a"), Key(p, "a")),
                   ReadRationalVector(Field(payload, p, "b"), Key(p, "b"))};
  } else if (kind == "exponential") {
    RejectUnknown(payload, p, {"a", "phi", "b"});
    model = Exponential{ReadDoubleVector(Field(payload, p, "a"), Key(p, "a")),
                        ReadDouble(Field(payload, p, "phi"), Key(p, "phi")),
                        ReadDoubleVector(Field(payload, p, "b"), Key(p, "b"))};
  } else if (kind == "bilevel") {
    RejectUnknown(payload, p, {"budget"});
    model = Bilevel{ReadRational(Field(payload, p, "budget"), Key(p, "budget"))};
  } else if (kind == "player_specific_separable") {
    RejectUnknown(payload, p, {"nu"});
    const Json& nu = Field(payload, p, "nu");
    RequireArray(nu, Key(p, "nu"));
    PlayerSpecificSeparable pss;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      pss.nu.push_back(ReadRationalMatrix(nu[i], Index(Key(p, "nu"), i)));
    }
    model = std::move(pss);
  } else {
    throw FormatError(Key(path, "kind"), "unknown cost kind '" + kind + "'");
  }
  return model;
}

StrategySpace ReadStrategies(const Json& value, const std::string& path,
                             int m) {
  RequireObject(value, path);
  RejectUnknown(value, path, {"explicit", "matroid"});
  const Json* list = OptionalField(value, "explicit");
  const Json* matroid = OptionalField(value, "matroid");
  if ((list == nullptr) == (matroid == nullptr)) {
    throw FormatError(path, "expected exactly one of explicit, matroid");
  }
  if (matroid != nullptr) {
    return StrategySpace::Matroid(ReadMatroid(*matroid, Key(path, "matroid"), m));
  }
  std::string list_path = Key(path, "explicit");
  RequireArray(*list, list_path);
  std::vector<Incidence> vectors;
  for (std::size_t k = 0; k < list->size(); ++k) {
    vectors.push_back(ReadSupport((*list)[k], Index(list_path, k), m));
  }
  try {
    return StrategySpace::Explicit(m, std::move(vectors));
  } catch (const Error& e) {
    throw FormatError(list_path, e.what());
  }
}

Profile ReadProfileList(const Json& value, const std::string& path, int m,
                        std::size_t players) {
  RequireArray(value, path);
  if (value.size() != players) {
    throw FormatError(path, "expected " + std::to_string(players) +
                                " choices, found " +
                                std::to_string(value.size()));
  }
  Profile profile;
  for (std::size_t i = 0; i < value.size(); ++i) {
    profile.choices.push_back(ReadSupport(value[i], Index(path, i), m));
  }
  return profile;
}

void CheckVersion(const Json& document) {
  const Json& version = Field(document, "$", "version");
  if (ReadInt(version, "$.version") != kFormatVersion) {
    throw FormatError("$.version", "unsupported version");
  }
}

GameFile ParseScenario(const Json& document) {
  const std::string root = "$";
  RejectUnknown(document, root, {"version", "m", "budget", "players", "start"});
  GameFile file;
  file.m = static_cast<int>(ReadInt(Field(document, root, "m"), "$.m"));
  if (file.m < 1) throw FormatError("$.m", "must be positive");
  file.cost = Bilevel{ReadRational(Field(document, root, "budget"), "$.budget")};
  const Json& players = Field(document, root, "players");
  RequireArray(players, "$.players");
  file.players.emplace();
  for (std::size_t i = 0; i < players.size(); ++i) {
    std::string path = Index("$.players", i);
    RequireObject(players[i], path);
    RejectUnknown(players[i], path, {"matroid"});
    file.players->push_back(
        {Rational(1),
         StrategySpace::Matroid(ReadMatroid(Field(players[i], path, "matroid"),
                                            Key(path, "matroid"), file.m))});
  }
  if (const Json* start = OptionalField(document, "start")) {
    file.start = ReadProfileList(*start, "$.start", file.m, players.size());
  }
  return file;
}

}  // namespace

Game GameFile::ToGame() const {
  if (!players) throw UsageError("input is a cost file without players");
  return Game(m, *players, cost);
}

GameFile ParseGameFile(const Json& document) {
  RequireObject(document, "$");
  CheckVersion(document);
  if (document.contains("budget")) return ParseScenario(document);
  const std::string root = "$";
  RejectUnknown(document, root,
                {"version", "m", "players", "cost", "bounds", "start"});
  GameFile file;
  file.m = static_cast<int>(ReadInt(Field(document, root, "m"), "$.m"));
  if (file.m < 1) throw FormatError("$.m", "must be positive");
  file.cost = ReadCost(Field(document, root, "cost"), "$.cost", file.m);
  try {
    ValidateCostModel(file.cost, file.m);
  } catch (const Error& e) {
    throw FormatError("$.cost", e.what());
  }
  if (const Json* bounds = OptionalField(document, "bounds")) {
    RequireObject(*bounds, "$.bounds");
    RejectUnknown(*bounds, "$.bounds", {"L"});
    long bound = ReadInt(Field(*bounds, "$.bounds", "L"), "$.bounds.L");
    if (bound < 0) throw FormatError("$.bounds.L", "must be non-negative");
    file.bound = static_cast<int>(bound);
  }
  if (const Json* players = OptionalField(document, "players")) {
    RequireArray(*players, "$.players");
    file.players.emplace();
    for (std::size_t i = 0; i < players->size(); ++i) {
      std::string path = Index("$.players", i);
      const Json& player = (*players)[i];
      RequireObject(player, path);
      RejectUnknown(player, path, {"weight", "strategies"});
      Rational weight = 1;
      if (const Json* w = OptionalField(player, "weight")) {
        weight = ReadRational(*w, Key(path, "weight"));
        if (weight <= 0) throw FormatError(Key(path, "weight"), "must be positive");
      }
      file.players->push_back(
          {weight, ReadStrategies(Field(player, path, "strategies"),
                                  Key(path, "strategies"), file.m)});
    }
    try {
      file.ToGame();
    } catch (const Error& e) {
      throw FormatError("$", e.what());
    }
  }
  if (const Json* start = OptionalField(document, "start")) {
    if (!file.players) throw FormatError("$.start", "cost files have no start");
    file.start =
        ReadProfileList(*start, "$.start", file.m, file.players->size());
  }
  return file;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json ParseJsonText(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("$", source + " is not valid JSON: " + e.what());
  }
}

GameFile ReadGameFile(const std::string& path) {
  return ParseGameFile(ParseJsonText(ReadFile(path), path));
}

Json RationalToJson(const Rational& value) { return FormatRational(value); }

Json NumberToJson(const Number& value) {
  if (value.is_exact()) return FormatRational(value.exact());
  return value.to_double();
}

Json IncidenceToJson(const Incidence& v) { return Support(v); }

Json ProfileToJson(const Profile& profile) {
  Json out = Json::array();
  for (const Incidence& choice : profile.choices) {
    out.push_back(IncidenceToJson(choice));
  }
  return out;
}

Json VectorToJson(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& value : v) out.push_back(RationalToJson(value));
  return out;
}

namespace {

Json MatrixToJson(const RationalMatrix& a) {
  Json out = Json::array();
  for (const auto& row : a) out.push_back(VectorToJson(row));
  return out;
}

}  // namespace

Json MatroidToJson(const MatroidDesc& desc) {
  Json out;
  if (const auto* u = std::get_if<UniformMatroid>(&desc.kind)) {
    out["kind"] = "uniform";
    out["rank"] = u->rank;
  } else if (const auto* p = std::get_if<PartitionMatroid>(&desc.kind)) {
    out["kind"] = "partition";
    out["blocks"] = p->blocks;
    out["quotas"] = p->quotas;
  } else {
    const auto& g = std::get<GraphicMatroid>(desc.kind);
    out["kind"] = "graphic";
    out["vertices"] = g.vertices;
    Json edges = Json::array();
    for (auto [a, b] : g.edges) edges.push_back({a, b});
    out["edges"] = edges;
    out["resources"] = g.resources;
  }
  return out;
}

Json CostToJson(const CostModel& cost) {
  Json payload;
  if (const auto* t = std::get_if<Tabulated>(&cost)) {
    payload["neighborhoods"] = t->neighborhoods;
    payload["max_load"] = t->max_load;
    Json tables = Json::array();
    for (const auto& row : t->tables) {
      Json values = Json::array();
      for (const auto& value : row) values.push_back(NumberToJson(value));
      tables.push_back(values);
    }
    payload["tables"] = tables;
  } else if (const auto* s = std::get_if<SeparablePlusLinear>(&cost)) {
    payload["f"] = MatrixToJson(s->f);
    payload["a"] = MatrixToJson(s->a);
  } else if (const auto* a = std::get_if<Affine>(&cost)) {
    payload["a"] = MatrixToJson(a->a);
    payload["b"] = VectorToJson(a->b);
  } else if (const auto* e = std::get_if<Exponential>(&cost)) {
    payload["a"] = e->a;
    payload["phi"] = e->phi;
    payload["b"] = e->b;
  } else if (const auto* b = std::get_if<Bilevel>(&cost)) {
    payload["budget"] = RationalToJson(b->budget);
  } else {
    const auto& p = std::get<PlayerSpecificSeparable>(cost);
    Json nu = Json::array();
    for (const auto& table : p.nu) nu.push_back(MatrixToJson(table));
    payload["nu"] = nu;
  }
  return Json{{"kind", CostKindName(cost)}, {"payload", payload}};
}

Json DumpGameFile(const GameFile& file) {
  Json out;
  out["version"] = kFormatVersion;
  out["m"] = file.m;
  out["cost"] = CostToJson(file.cost);
  if (file.bound) out["bounds"] = Json{{"L", *file.bound}};
  if (file.players) {
    Json players = Json::array();
    for (const Player& player : *file.players) {
      Json strategies;
      if (player.strategies.is_explicit()) {
        Json list = Json::array();
        for (const Incidence& v : player.strategies.vectors()) {
          list.push_back(IncidenceToJson(v));
        }
        strategies["explicit"] = list;
      } else {
        strategies["matroid"] = MatroidToJson(player.strategies.matroid());
      }
      players.push_back(
          Json{{"weight", RationalToJson(player.weight)}, {"strategies", strategies}});
    }
    out["players"] = players;
  }
  if (file.start) out["start"] = ProfileToJson(*file.start);
  return out;
}

GameFile FromGame(const Game& game, std::optional<int> bound) {
  GameFile file;
  file.m = game.num_resources();
  file.players = game.players();
  file.cost = game.cost();
  file.bound = bound;
  return file;
}

Profile ParseProfile(const Json& document, const Game& game) {
  const Json* list = &document;
  std::string path = "$";
  if (document.is_object()) {
    list = &Field(document, "$", "profile");
    path = "$.profile";
  }
  return ReadProfileList(*list, path, game.num_resources(),
                         static_cast<std::size_t>(game.num_players()));
}

Json CertificateToJson(const Certificate& certificate) {
  return std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, IsPne>) {
          return Json{{"result", "IsPne"}};
        } else if constexpr (std::is_same_v<T, NotPne>) {
          return Json{{"result", "NotPne"},
                      {"player", c.player},
                      {"deviation", IncidenceToJson(c.deviation)},
                      {"delta", NumberToJson(c.delta)}};
        } else if constexpr (std::is_same_v<T, NoPneExists>) {
          return Json{{"result", "NoPneExists"},
                      {"profiles_checked", c.profiles_checked}};
        } else {
          return Json{{"result", "PneFound"},
                      {"profile", ProfileToJson(c.profile)}};
        }
      },
      certificate);
}

Json ViolationToJson(const Violation& v) {
  Json out{{"result", "Violation"},
           {"condition", ConditionName(v.condition)},
           {"r", v.r},
           {"s", v.s},
           {"x", VectorToJson(v.x)},
           {"lhs", NumberToJson(v.lhs)},
           {"rhs", NumberToJson(v.rhs)}};
  if (v.t) out["t"] = *v.t;
  if (v.y) out["y"] = VectorToJson(*v.y);
  return out;
}

Json ReportToJson(const ConsistencyReport& report) {
  return std::visit(
      [](const auto& r) -> Json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, UnweightedConsistent>) {
          return Json{{"result", "UnweightedConsistent"},
                      {"f", MatrixToJson(r.f)},
                      {"a", MatrixToJson(r.a)},
                      {"bound", r.bound},
                      {"zero_load_mismatches", r.zero_load_mismatches}};
        } else if constexpr (std::is_same_v<T, WeightedAffineFit>) {
          Json a = Json::array();
          for (const auto& row : r.a) {
            Json values = Json::array();
            for (const auto& value : row) values.push_back(NumberToJson(value));
            a.push_back(values);
          }
          Json b = Json::array();
          for (const auto& value : r.b) b.push_back(NumberToJson(value));
          return Json{{"result", "WeightedAffine"}, {"a", a}, {"b", b}};
        } else if constexpr (std::is_same_v<T, WeightedExponentialFit>) {
          return Json{{"result", "WeightedExponential"},
                      {"a", r.a},
                      {"phi", r.phi},
                      {"b", r.b}};
        } else {
          return ViolationToJson(r);
        }
      },
      report);
}

ForbiddenPairsInstance ParsePairsInstance(const Json& document) {
  const std::string root = "$";
  RequireObject(document, root);
  RejectUnknown(document, root,
                {"vertices", "edges", "source", "target", "pairs"});
  ForbiddenPairsInstance instance;
  instance.num_vertices =
      static_cast<int>(ReadInt(Field(document, root, "vertices"), "$.vertices"));
  if (instance.num_vertices < 2) {
    throw FormatError("$.vertices", "need at least two vertices");
  }
  const int n = instance.num_vertices;
  const Json& edges = Field(document, root, "edges");
  RequireArray(edges, "$.edges");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::vector<int> ends = ReadIndexList(edges[e], Index("$.edges", e), n);
    if (ends.size() != 2) throw FormatError(Index("$.edges", e), "expected [u, v]");
    instance.edges.emplace_back(ends[0], ends[1]);
  }
  instance.source = ReadIndex(Field(document, root, "source"), "$.source", n);
  instance.target = ReadIndex(Field(document, root, "target"), "$.target", n);
  if (const Json* pairs = OptionalField(document, "pairs")) {
    RequireArray(*pairs, "$.pairs");
    const int e = static_cast<int>(instance.edges.size());
    for (std::size_t k = 0; k < pairs->size(); ++k) {
      std::vector<int> members =
          ReadIndexList((*pairs)[k], Index("$.pairs", k), std::max(e, 1));
      if (members.size() != 2) {
        throw FormatError(Index("$.pairs", k), "expected [e, f]");
      }
      instance.pairs.emplace_back(members[0], members[1]);
    }
  }
  try {
    ValidateForbiddenPairs(instance);
  } catch (const Error& e) {
    throw FormatError("$", e.what());
  }
  return instance;
}

}  // namespace rgg::cli
