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
#ifndef RGG_CLI_COMMANDS_H_
#define RGG_CLI_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace rgg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // NotPne, NoPneExists, Violation
inline constexpr int kExitError = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // exactly what goes to standard output
};

struct SolveOptions {
  std::string input;
  std::string method = "bruteforce";  // bruteforce | dynamics | theorem3
  std::uint64_t seed = 0;
  long max_iters = 10000;
  int jobs = 1;
  std::string schedule = "round_robin";  // round_robin | random
  std::string rule = "best";             // best | better
};

struct VerifyOptions {
  std::string input;
  std::string profile;
};

struct CharacterizeOptions {
  std::string input;
  std::optional<bool> weighted;  // unset: pick from the cost kind
  std::string grid_coords = "0,1,2";
  std::string grid_step = "1/2";
};

struct GadgetOptions {
  std::string input;
  std::string kind;       // jacobian | cross_pair | cross_triple
  std::string point;      // comma separated rationals, one per resource
  std::string resources;  // "r,s" or "r,s,t"
  std::optional<std::string> epsilon;
  bool confirm = false;
  int jobs = 1;
};

struct PotentialOptions {
  std::string input;
  std::string profile;
};

struct ReduceOptions {
  std::string problem;  // sat | pairs
  std::string input;
};

CommandResult Solve(const SolveOptions& options);
CommandResult Verify(const VerifyOptions& options);
CommandResult Characterize(const CharacterizeOptions& options);
CommandResult MakeGadget(const GadgetOptions& options);
CommandResult Potential(const PotentialOptions& options);
CommandResult Reduce(const ReduceOptions& options);

std::string Sha256Hex(const std::string& data);

// Parses argv, runs one subcommand and maps errors to kExitError with a
// diagnostic on err.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace rgg::cli

#endif  // RGG_CLI_COMMANDS_H_
