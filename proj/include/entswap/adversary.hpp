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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entswap/bell.hpp"
#include "entswap/channel.hpp"
#include "entswap/rng.hpp"

namespace entswap {

enum class AdversaryKind {
  kNone,     // honest channel
  kTypeI,    // guesses from swaps on her own private pairs
  kTypeII,   // entangles a third qubit into each pair (GHZ)
  kTypeIII,  // replaces each pair with one shared with Alice and one with Bob
};

/// "none", "type1", "type2", "type3".
std::string_view adversary_name(AdversaryKind kind);
AdversaryKind parse_adversary(std::string_view name);

/// Declared Bell states of the two pairs in a group: (1,2) and (3,4).
struct DeclaredGroup {
  BellIndex pair_a;
  BellIndex pair_b;
};

/// What Eve measured in one group.
struct EveObservation {
  /// Type I: private (E1,E3). Type II: (E5,E6). Type III: Bob-facing (E1,E3).
  std::optional<BellIndex> outcome;
  /// Type III only: Alice-facing (E2,E4).
  std::optional<BellIndex> alice_facing;
};

struct AdversaryStrategy {
  AdversaryKind kind = AdversaryKind::kNone;
  /// Whether Eve measures between Alice and Bob or after Bob. Measurements on
  /// disjoint qubits commute, so this changes no statistics.
  bool eve_before_bob = false;
  std::vector<EveObservation> observations;

  /// Documented default order: Alice, Bob, Eve for type II; Alice, Eve, Bob
  /// for type III.
  static AdversaryStrategy make(AdversaryKind kind);

  bool active() const { return kind != AdversaryKind::kNone; }
};

/// Progress of the honest parties, used to enforce measurement order.
struct MeasurementStage {
  bool alice_measured = false;
  bool bob_measured = false;
};

/// Physical state behind each declared group. Throws UnsupportedConfiguration
/// when type II or III meets a declared state other than phi+.
std::vector<GroupChannel> corrupt_channels(const AdversaryStrategy& strategy,
                                           std::span<const DeclaredGroup> declared);

/// Eve's Bell measurements on every group, recorded in strategy.observations.
/// Throws ProtocolError when called out of order or twice.
void eve_measure(AdversaryStrategy& strategy, std::vector<GroupChannel>& channels, Rng& rng,
                 MeasurementStage stage);

/// Eve's guess of Alice's key fragment for each group; empty for kNone.
std::vector<KeyFragment> eve_guess_key(const AdversaryStrategy& strategy,
                                       std::span<const DeclaredGroup> declared);

struct EveReport {
  /// Guess of Alice's raw key, 4 bits per group, all groups.
  std::string guessed_key;
  std::vector<bool> per_group_correct;
  bool full_key_correct = false;
};

EveReport score_guess(std::span<const KeyFragment> guess,
                      std::span<const KeyFragment> alice_fragments);

struct SessionReport;

struct EveSuccess {
  bool undetected = false;
  /// Undetected, and Eve's guess restricted to unchecked groups equals a
  /// non-empty final key.
  bool key_stolen = false;
};

EveSuccess eve_success(const SessionReport& report, const EveReport& eve);

}  // namespace entswap
