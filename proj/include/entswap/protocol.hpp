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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "entswap/adversary.hpp"
#include "entswap/bell.hpp"
#include "entswap/channel.hpp"
#include "entswap/rng.hpp"

namespace entswap {

/// How the 2n shared pairs are declared.
struct PairStatePolicy {
  enum class Kind { kAllPhiPlus, kFixedList, kRandomKnown };

  Kind kind = Kind::kAllPhiPlus;
  std::vector<BellIndex> fixed;  // kFixedList: one state per pair, 2n entries
  /// kRandomKnown: seed of the draw; derived from the session seed when unset.
  std::optional<std::uint64_t> seed;

  static PairStatePolicy all_phi_plus() { return {}; }
  static PairStatePolicy fixed_list(std::vector<BellIndex> states) {
    return {Kind::kFixedList, std::move(states), std::nullopt};
  }
  static PairStatePolicy random_known(std::optional<std::uint64_t> seed = std::nullopt) {
    return {Kind::kRandomKnown, {}, seed};
  }
};

struct SessionConfig {
  std::size_t n_groups = 16;
  PairStatePolicy pair_states;
  double check_fraction = 0.5;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on an unusable config.
void validate(const SessionConfig& config);

/// Number of groups Bob publishes: ceil(check_fraction * n), at least 1.
std::size_t check_count(const SessionConfig& config);

/// Declared pair states, grouped pairwise in order.
std::vector<DeclaredGroup> declared_groups(const SessionConfig& config);

struct GroupRecord {
  std::size_t group_index = 0;
  BellIndex pair_a_state;
  BellIndex pair_b_state;
  std::optional<BellIndex> alice_outcome;
  std::optional<BellIndex> bob_outcome;
  std::optional<KeyFragment> alice_fragment;
  std::optional<KeyFragment> bob_fragment;
  bool checked = false;
};

enum class Party { kAlice, kBob };
std::string_view party_name(Party p);

/// "I have measured." Carries no outcome data.
struct MeasuredAnnouncement {
  std::size_t groups_measured = 0;
};

struct CheckRequest {
  std::vector<std::size_t> indices;
  std::vector<std::string> fragments;  // Bob's, parallel to indices
};

struct Verdict {
  bool accept = false;
  std::vector<std::size_t> mismatched;
};

struct ClassicalMessage {
  Party sender = Party::kAlice;
  std::variant<MeasuredAnnouncement, CheckRequest, Verdict> payload;

  /// "measured_announcement", "check_request", "verdict".
  std::string_view kind() const;
};

enum class SessionStage {
  kReady,
  kAliceMeasured,
  kBobMeasured,
  kChecksSent,
  kVerified,
  kFinalized,
};

/// Everything about one run. The honest parties' logic reads only the
/// declared states and their own outcomes; `channels` is the physical truth
/// and may have been corrupted by the adversary.
struct SessionState {
  SessionConfig config;
  std::vector<DeclaredGroup> declared;
  std::vector<GroupRecord> groups;
  std::vector<GroupChannel> channels;
  AdversaryStrategy adversary;
  std::vector<ClassicalMessage> transcript;
  SessionStage stage = SessionStage::kReady;
  Rng rng{0};
};

struct SessionReport {
  SessionConfig config;
  AdversaryKind adversary = AdversaryKind::kNone;
  bool accepted = false;
  std::string alice_key;
  std::string bob_key;
  bool keys_equal = false;
  std::size_t checked_groups = 0;
  std::vector<ClassicalMessage> transcript;
  std::vector<GroupRecord> groups;
  std::optional<EveReport> eve;
  std::optional<EveSuccess> eve_outcome;
};

/// Uses `rng` for every later step, so the run is a function of its seed.
SessionState setup_session(const SessionConfig& config, AdversaryStrategy adversary, Rng rng);

/// Alice Bell-measures (A1,A3) in every group and infers Bob's outcome from
/// the declared states. `forced`, when non-empty, fixes her outcome per group
/// (conditioned measurement) instead of sampling.
MeasuredAnnouncement alice_measure(SessionState& session,
                                   std::span<const BellIndex> forced = {});

/// Bob Bell-measures (B2,B4) in every group and infers Alice's outcome.
void bob_measure(SessionState& session, const MeasuredAnnouncement& announcement,
                 std::span<const BellIndex> forced = {});

CheckRequest bob_select_checks(SessionState& session);

Verdict alice_verify(SessionState& session, const CheckRequest& request);

SessionReport finalize_key(SessionState& session, const Verdict& verdict);

/// setup -> alice_measure -> bob_measure -> bob_select_checks -> alice_verify
/// -> finalize_key, seeded from config.seed.
SessionReport run_session(const SessionConfig& config, AdversaryStrategy adversary);

}  // namespace entswap
