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
#include "rgg_cli/commands.h"

#include <openssl/evp.h>

#include <cstdio>
#include <sstream>

#include "CLI11.hpp"
#include "rgg/bilevel.h"
#include "rgg/characterize.h"
#include "rgg/dynamics.h"
#include "rgg/errors.h"
#include "rgg/gadgets.h"
#include "rgg/local_monotonicity.h"
#include "rgg/potential.h"
#include "rgg/reductions.h"
#include "rgg_cli/game_file.h"

#ifndef RGG_VERSION
#define RGG_VERSION "0.0.0"
#endif

namespace rgg::cli {
namespace {

std::string Render(const Json& document) { return document.dump(2) + "\n"; }

Json Envelope(const std::string& command, const std::string& input_text) {
  return Json{{"tool", "rgg"},
              {"version", RGG_VERSION},
              {"command", command},
              {"input_sha256", Sha256Hex(input_text)}};
}

int ExitFor(const Certificate& certificate) {
  return std::holds_alternative<NotPne>(certificate) ||
                 std::holds_alternative<NoPneExists>(certificate)
             ? kExitNegative
             : kExitOk;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto begin = item.find_first_not_of(" \t");
    auto end = item.find_last_not_of(" \t");
    if (begin == std::string::npos) throw UsageError("empty item in '" + text + "'");
    parts.push_back(item.substr(begin, end - begin + 1));
  }
  if (parts.empty()) throw UsageError("empty list");
  return parts;
}

RationalVector ParseRationalList(const std::string& text) {
  RationalVector out;
  for (const auto& part : SplitList(text)) out.push_back(ParseRational(part));
  return out;
}

std::vector<int> ParseIndexList(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : SplitList(text)) {
    Rational value = ParseRational(part);
    if (!IsInteger(value) || value < 0) {
      throw UsageError("'" + part + "' is not a resource index");
    }
    out.push_back(static_cast<int>(ToInteger(value)));
  }
  return out;
}

Profile StartProfile(const GameFile& file, const Game& game,
                     const EnumerationLimits& limits) {
  if (file.start) {
    ValidateProfile(game, *file.start);
    return *file.start;
  }
  return EnumerateProfiles(game, limits, false).At(0);
}

Json StepsToJson(const std::vector<DynamicsStep>& steps) {
  Json out = Json::array();
  for (const auto& step : steps) {
    out.push_back(Json{{"player", step.player},
                       {"from", IncidenceToJson(step.from)},
                       {"to", IncidenceToJson(step.to)},
                       {"delta", NumberToJson(step.delta)}});
  }
  return out;
}

Json SymmetryToJson(const SymmetryResult& result) {
  if (const auto* w = std::get_if<SymmetryWitness>(&result)) {
    return Json{{"symmetric", true},
                {"a", NumberToJson(w->a_value)},
                {"b", NumberToJson(w->b_value)},
                {"profile", ProfileToJson(w->profile)},
                {"swap_i", IncidenceToJson(w->swap_i)},
                {"swap_j", IncidenceToJson(w->swap_j)}};
  }
  const auto& f = std::get<SymmetryFailure>(result);
  return Json{{"symmetric", false},
              {"profile", ProfileToJson(f.profile)},
              {"reason", f.reason}};
}

}  // namespace

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw InternalError("sha256 failed");
  }
  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

CommandResult Solve(const SolveOptions& options) {
  const std::string text = ReadFile(options.input);
  const GameFile file = ParseGameFile(ParseJsonText(text, options.input));
  const Game game = file.ToGame();

  DynamicsOptions dynamics;
  dynamics.max_iters = options.max_iters;
  dynamics.seed = options.seed;
  dynamics.limits.jobs = options.jobs;
  if (options.schedule == "random") {
    dynamics.schedule = Schedule::kRandom;
  } else if (options.schedule != "round_robin") {
    throw UsageError("unknown schedule '" + options.schedule + "'");
  }
  if (options.rule == "better") {
    dynamics.rule = ResponseRule::kBetter;
  } else if (options.rule != "best") {
    throw UsageError("unknown rule '" + options.rule + "'");
  }

  Json out = Envelope("solve", text);
  out["method"] = options.method;
  int code = kExitOk;
  if (options.method == "bruteforce") {
    Certificate certificate = BruteForcePne(game, dynamics.limits);
    out.update(CertificateToJson(certificate));
    code = ExitFor(certificate);
  } else if (options.method == "dynamics") {
    DynamicsTrace trace = RunBestResponseDynamics(
        game, StartProfile(file, game, dynamics.limits), dynamics);
    out["converged"] = trace.converged;
    out["iterations"] = trace.iterations;
    out["steps"] = StepsToJson(trace.steps);
    out["profile"] = ProfileToJson(trace.terminal);
    if (trace.converged) {
      out["result"] = "PneFound";
    } else {
      out["result"] = "NotConverged";
      code = kExitNegative;
    }
  } else if (options.method == "theorem3") {
    MatroidSolution solution;
    if (std::holds_alternative<Bilevel>(game.cost())) {
      solution = SolveBilevel(BilevelGame::FromGame(game), dynamics);
    } else if (const auto* pss =
                   std::get_if<PlayerSpecificSeparable>(&game.cost())) {
      solution = SolveMatroidLift(game, pss->nu, dynamics);
    } else {
      throw UsageError(std::string("theorem3 needs a bilevel or player-specific "
                                   "separable cost, found ") +
                       CostKindName(game.cost()));
    }
    out["result"] = "PneFound";
    out["profile"] = ProfileToJson(solution.profile);
    out["proxy_converged"] = solution.proxy_converged;
    out["iterations"] = solution.trace.iterations;
  } else {
    throw UsageError("unknown method '" + options.method + "'");
  }
  return {code, Render(out)};
}

CommandResult Verify(const VerifyOptions& options) {
  const std::string text = ReadFile(options.input);
  const Game game = ParseGameFile(ParseJsonText(text, options.input)).ToGame();
  const std::string profile_text = ReadFile(options.profile);
  const Profile profile =
      ParseProfile(ParseJsonText(profile_text, options.profile), game);
  Certificate certificate = VerifyPne(game, profile);
  Json out = Envelope("verify", text);
  out["profile_sha256"] = Sha256Hex(profile_text);
  out["profile"] = ProfileToJson(profile);
  out.update(CertificateToJson(certificate));
  return {ExitFor(certificate), Render(out)};
}

CommandResult Characterize(const CharacterizeOptions& options) {
  const std::string text = ReadFile(options.input);
  const GameFile file = ParseGameFile(ParseJsonText(text, options.input));
  const CostModel& cost = file.cost;
  if (std::holds_alternative<PlayerSpecificSeparable>(cost)) {
    throw UsageError("player-specific costs have no common cost function");
  }
  const bool weighted =
      options.weighted.value_or(std::holds_alternative<Affine>(cost) ||
                                std::holds_alternative<Exponential>(cost));

  Json out = Envelope("characterize", text);
  ConsistencyReport report;
  if (weighted) {
    out["mode"] = "weighted";
    WeightedGrid grid{ParseRationalList(options.grid_coords),
                      ParseRational(options.grid_step)};
    report = ClassifyWeighted(cost, file.m, grid);
  } else {
    out["mode"] = "unweighted";
    // The checks read loads up to bound + 2; finite tables cap the bound.
    std::optional<int> reach;
    if (const auto* t = std::get_if<Tabulated>(&cost)) {
      reach = *std::min_element(t->max_load.begin(), t->max_load.end());
    } else if (const auto* s = std::get_if<SeparablePlusLinear>(&cost)) {
      reach = static_cast<int>(s->f.front().size()) - 1;
      for (const auto& row : s->f) {
        reach = std::min(*reach, static_cast<int>(row.size()) - 1);
      }
    }
    int bound = file.bound.value_or(reach ? *reach - 2 : 2);
    if (reach) bound = std::min(bound, *reach - 2);
    if (bound < 0) {
      throw RangeError("tables must cover loads up to 2 for characterization");
    }
    const Tabulated table =
        std::holds_alternative<Tabulated>(cost)
            ? std::get<Tabulated>(cost)
            : AsTabulated(cost, file.m, bound + 2, std::nullopt, true);
    out["bound"] = bound;
    report = DecomposeUnweighted(table, bound);
  }
  out.update(ReportToJson(report));
  const int code =
      std::holds_alternative<Violation>(report) ? kExitNegative : kExitOk;
  return {code, Render(out)};
}

CommandResult MakeGadget(const GadgetOptions& options) {
  const std::string text = ReadFile(options.input);
  const GameFile file = ParseGameFile(ParseJsonText(text, options.input));

  GadgetSpec spec;
  spec.kind = ParseGadgetKind(options.kind);
  spec.base_cost = file.cost;
  spec.m = file.m;
  spec.point = ParseRationalList(options.point);
  std::vector<int> resources = ParseIndexList(options.resources);
  const std::size_t wanted = spec.kind == GadgetKind::kCrossTriple ? 3 : 2;
  if (resources.size() != wanted) {
    throw UsageError(std::string(GadgetKindName(spec.kind)) + " takes " +
                     std::to_string(wanted) + " resources");
  }
  spec.r = resources[0];
  spec.s = resources[1];
  if (wanted == 3) spec.t = resources[2];
  if (options.epsilon) spec.epsilon = ParseRational(*options.epsilon);
  ValidateGadgetSpec(spec);

  const Game game = BuildGadget(spec);
  Json game_json = DumpGameFile(FromGame(game));
  if (!options.confirm) return {kExitOk, Render(game_json)};

  EnumerationLimits limits;
  limits.jobs = options.jobs;
  GadgetValues values = ExpectedGadgetValues(spec);
  Certificate certificate = BruteForcePne(game, limits);
  Json out = Envelope("gadget", text);
  out["game"] = game_json;
  out["gadget"] = GadgetKindName(spec.kind);
  out["values"] = Json{{"a", NumberToJson(values.a)}, {"b", NumberToJson(values.b)}};
  out["symmetry"] = SymmetryToJson(CheckABSymmetry(game, 0, 1, limits));
  out["certificate"] = CertificateToJson(certificate);
  return {ExitFor(certificate), Render(out)};
}

CommandResult Potential(const PotentialOptions& options) {
  const std::string text = ReadFile(options.input);
  const Game game = ParseGameFile(ParseJsonText(text, options.input)).ToGame();
  const Profile profile = ParseProfile(
      ParseJsonText(ReadFile(options.profile), options.profile), game);
  ValidateProfile(game, profile);
  Rational value;
  if (std::holds_alternative<SeparablePlusLinear>(game.cost())) {
    value = PotentialUnweighted(game, profile);
  } else if (std::holds_alternative<Affine>(game.cost())) {
    value = PotentialWeightedAffine(game, profile);
  } else {
    throw UsageError(std::string("no closed-form potential for cost kind ") +
                     CostKindName(game.cost()));
  }
  return {kExitOk, FormatRational(value) + "\n"};
}

CommandResult Reduce(const ReduceOptions& options) {
  const std::string text = ReadFile(options.input);
  Game game = [&] {
    if (options.problem == "sat") return ReduceSat(ParseDimacs(text));
    if (options.problem == "pairs") {
      return ReduceForbiddenPairs(
          ParsePairsInstance(ParseJsonText(text, options.input)));
    }
    throw UsageError("unknown problem '" + options.problem +
                     "' (expected sat or pairs)");
  }();
  return {kExitOk, Render(DumpGameFile(FromGame(game)))};
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Resource graph games: equilibria, potentials and gadgets",
               "rgg"};
  app.set_version_flag("--version", RGG_VERSION);
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Find a pure Nash equilibrium");
  solve_cmd->add_option("file", solve.input, "Game file")->required();
  solve_cmd->add_option("--method", solve.method, "Search method")
      ->check(CLI::IsMember({"bruteforce", "dynamics", "theorem3"}));
  solve_cmd->add_option("--seed", solve.seed, "Seed for random schedules");
  solve_cmd->add_option("--max-iters", solve.max_iters, "Dynamics step limit")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--jobs", solve.jobs, "Threads for brute force")->check(CLI::Range(1, 256));
  solve_cmd->add_option("--schedule", solve.schedule, "Player order for dynamics")
      ->check(CLI::IsMember({"round_robin", "random"}));
  solve_cmd->add_option("--rule", solve.rule, "Best or first better response")
      ->check(CLI::IsMember({"best", "better"}));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a profile for stability");
  verify_cmd->add_option("file", verify.input, "Game file")->required();
  verify_cmd->add_option("--profile", verify.profile,
                         "Profile JSON, or the output of solve")
      ->required();

  CharacterizeOptions characterize;
  bool weighted = false;
  bool unweighted = false;
  auto* characterize_cmd = app.add_subcommand(
      "characterize", "Classify a cost model as consistent or find a violation");
  characterize_cmd->add_option("file", characterize.input, "Game or cost file")
      ->required();
  auto* weighted_flag = characterize_cmd->add_flag("--weighted", weighted, "Check the weighted conditions");
  characterize_cmd->add_flag("--unweighted", unweighted, "Check the unweighted conditions")->excludes(weighted_flag);
  characterize_cmd->add_option("--grid-coords", characterize.grid_coords, "Base coordinates of the probe grid");
  characterize_cmd->add_option("--grid-step", characterize.grid_step, "Grid spacing");

  GadgetOptions gadget;
  auto* gadget_cmd =
      app.add_subcommand("gadget", "Build a two-player gadget game");
  gadget_cmd->add_option("file", gadget.input, "Cost or game file")->required();
  gadget_cmd->add_option("--lemma", gadget.kind, "jacobian, cross_pair or cross_triple")
      ->required()
      ->check(CLI::IsMember({"jacobian", "cross_pair", "cross_triple"}));
  gadget_cmd->add_option("--point", gadget.point, "Load vector, e.g. 1,0,2")
      ->required();
  gadget_cmd->add_option("--resources", gadget.resources, "r,s or r,s,t")
      ->required();
  gadget_cmd->add_option("--epsilon", gadget.epsilon,
                         "Weight of the free players");
  gadget_cmd->add_flag("--confirm", gadget.confirm,
                       "Enumerate the gadget and attach the certificate");
  gadget_cmd->add_option("--jobs", gadget.jobs, "Threads for --confirm")->check(CLI::Range(1, 256));

  PotentialOptions potential;
  auto* potential_cmd =
      app.add_subcommand("potential", "Evaluate the exact potential");
  potential_cmd->add_option("file", potential.input, "Game file")->required();
  potential_cmd->add_option("--profile", potential.profile, "Profile JSON")->required();

  ReduceOptions reduce;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "Build the game for a 3-SAT or pairs instance");
  reduce_cmd->add_option("problem", reduce.problem, "sat or pairs")
      ->required()
      ->check(CLI::IsMember({"sat", "pairs"}));
  reduce_cmd->add_option("file", reduce.input, "DIMACS CNF or pairs JSON")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    CommandResult result;
    if (*solve_cmd) {
      result = Solve(solve);
    } else if (*verify_cmd) {
      result = Verify(verify);
    } else if (*characterize_cmd) {
      if (weighted) characterize.weighted = true;
      if (unweighted) characterize.weighted = false;
      result = Characterize(characterize);
    } else if (*gadget_cmd) {
      result = MakeGadget(gadget);
    } else if (*potential_cmd) {
      result = Potential(potential);
    } else {
      result = Reduce(reduce);
    }
    out << result.output;
    return result.exit_code;
  } catch (const Error& e) {
    err << "rgg: error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "rgg: unexpected error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace rgg::cli
