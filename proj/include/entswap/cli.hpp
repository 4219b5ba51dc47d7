// Copyright 2026 The entswap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "entswap/adversary.hpp"
#include "entswap/protocol.hpp"

namespace entswap::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsage = 2,
  kAborted = 3,
  kOracleFailure = 4,
};

enum class Subcommand { kRun, kSweep, kOracleCheck, kAttack };
enum class Format { kJson, kCsv, kBoth };

struct CliConfig {
  Subcommand subcommand = Subcommand::kRun;
  SessionConfig session;
  AdversaryKind adversary = AdversaryKind::kNone;
  bool all_adversaries = false;  // sweep only: --adversary all
  std::uint64_t trials = 1000;
  std::string output_path;       // empty: stdout
  Format format = Format::kJson;
};

class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& message, std::string usage)
      : std::runtime_error(message), usage_(std::move(usage)) {}
  const std::string& usage() const { return usage_; }

 private:
  std::string usage_;
};

/// Parses argv (without the program name). Flags override values from
/// --config; ENTSWAP_SEED supplies the seed when --seed is absent. Throws
/// UsageError on anything malformed or contradictory.
CliConfig parse_config(const std::vector<std::string>& args);

/// "all-phi-plus", "random", "random:<seed>", or a comma list of 2n states.
PairStatePolicy parse_pair_states(const std::string& text);

int cmd_run(const CliConfig& config, std::ostream& out);
int cmd_sweep(const CliConfig& config, std::ostream& out);
int cmd_oracle_check(const CliConfig& config, std::ostream& out);
int cmd_attack(const CliConfig& config, std::ostream& out);

/// Full front end: parse, dispatch, map failures to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entswap::cli
