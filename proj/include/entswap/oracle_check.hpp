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

#include <optional>
#include <vector>

#include <json.hpp>

#include "entswap/bell.hpp"
#include "entswap/statevector.hpp"

namespace entswap {

/// One (init_a, init_b, outcome) triple checked against the statevector.
struct SwapCheck {
  BellIndex init_a;
  BellIndex init_b;
  BellIndex measured;
  BellIndex predicted;                 // swap_partner(init_a, init_b, measured)
  std::optional<BellIndex> observed;   // identify_bell on the partner pair
  double fidelity = 0.0;               // overlap of the partner pair with `predicted`
  bool pass = false;
};

/// Which qubits are Bell-measured when pairs (1,2) and (3,4) are swapped.
enum class SwapSplit {
  kMeasure13,  // measure (1,3), partner (2,4): the protocol's layout
  kMeasure23,  // measure (2,3), partner (1,4)
};

/// All 64 triples, forcing the outcome by conditioned measurement.
std::vector<SwapCheck> check_swap_rule(SwapSplit split);

/// Outcome distribution on (1,3) for every one of the 16 declared pairings.
struct UniformityCheck {
  BellIndex init_a;
  BellIndex init_b;
  BellProbabilities probabilities{};
  bool pass = false;
};
std::vector<UniformityCheck> check_swap_uniformity();

/// GHZ-shared channel: given Alice's outcome, Bob's conditional distribution
/// and whether Eve's outcome is a function of (Alice, Bob).
struct GhzConditional {
  BellIndex alice;
  BellProbabilities bob{};                          // P(bob | alice)
  std::array<std::optional<BellIndex>, 4> eve_for_bob{};  // Eve's outcome per Bob outcome
  bool eve_deterministic = false;
};
std::vector<GhzConditional> check_ghz_conditionals();

struct OracleCheckSummary {
  std::vector<SwapCheck> swap_13;
  std::vector<SwapCheck> swap_23;
  std::vector<UniformityCheck> uniformity;
  std::vector<GhzConditional> ghz;
  bool all_pass = false;
};

OracleCheckSummary run_oracle_check();

nlohmann::json to_json(const OracleCheckSummary& summary);

}  // namespace entswap
