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
#ifndef RGG_CLI_GAME_FILE_H_
#define RGG_CLI_GAME_FILE_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rgg/errors.h"
#include "rgg/characterize.h"
#include "rgg/costs.h"
#include "rgg/dynamics.h"
#include "rgg/game.h"
#include "rgg/local_monotonicity.h"
#include "rgg/reductions.h"

namespace rgg::cli {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Malformed input. The message starts with the JSON path of the offending
// value, e.g. "$.players[1].weight: expected a rational".
class FormatError : public Error {
 public:
  FormatError(const std::string& path, const std::string& message)
      : Error(path + ": " + message) {}
};

// A game file, or a cost file when players is absent. Game files are
//   {version, m, players: [{weight, strategies: {explicit | matroid}}],
//    cost: {kind, payload}, bounds?: {L}, start?: [[indices]]}
// Bilevel scenarios {version, m, budget, players: [{matroid}], start?} are
// accepted on input and normalized to the game form.
struct GameFile {
  int m = 0;
  std::optional<std::vector<Player>> players;
  CostModel cost;
  std::optional<int> bound;
  std::optional<Profile> start;

  Game ToGame() const;  // throws UsageError for cost files
};

GameFile ParseGameFile(const Json& document);
GameFile ReadGameFile(const std::string& path);

// Sorted keys, rationals as "p/q"; parse(dump(x)) dumps identically.
Json DumpGameFile(const GameFile& file);
GameFile FromGame(const Game& game, std::optional<int> bound = std::nullopt);

Json RationalToJson(const Rational& value);
Json NumberToJson(const Number& value);
Json IncidenceToJson(const Incidence& v);  // support indices
Json ProfileToJson(const Profile& profile);
Json VectorToJson(const RationalVector& v);
Json MatroidToJson(const MatroidDesc& desc);
Json CostToJson(const CostModel& cost);

// Accepts a bare list of supports or any object with a "profile" field (a
// solve certificate, for instance).
Profile ParseProfile(const Json& document, const Game& game);

Json CertificateToJson(const Certificate& certificate);
Json ReportToJson(const ConsistencyReport& report);
Json ViolationToJson(const Violation& violation);

// {"vertices", "edges": [[a, b]], "source", "target", "pairs": [[e, f]]}
ForbiddenPairsInstance ParsePairsInstance(const Json& document);

std::string ReadFile(const std::string& path);
Json ParseJsonText(const std::string& text, const std::string& source);

}  // namespace rgg::cli

#endif  // RGG_CLI_GAME_FILE_H_
