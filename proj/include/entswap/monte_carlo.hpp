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

#include <array>
#include <cstdint>

#include "entswap/adversary.hpp"
#include "entswap/protocol.hpp"
#include "entswap/stats.hpp"

namespace entswap {

/// Aggregate of `trials` independent sessions. Trial i runs with seed
/// derive_seed(seed, i); every field is an integer tally or derived from one,
/// so the report does not depend on how trials were scheduled.
struct MCReport {
  AdversaryKind strategy = AdversaryKind::kNone;
  std::size_t n_groups = 0;
  std::size_t k_checked = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  Proportion detection;        // sessions aborted
  Proportion key_agreement;    // accepted with alice_key == bob_key
  Proportion eve_key;          // Eve guessed the whole raw key
  Proportion eve_success;      // undetected and final key stolen
  Proportion group_mismatch;   // checked groups whose fragments differ
  Proportion fragment_match;   // all groups whose fragments agree
  Proportion eve_group_guess;  // groups where Eve's fragment guess is right

  /// Alice's outcome counts over all groups, by BellIndex ordinal.
  std::array<std::uint64_t, 4> outcome_counts{};

  double analytic_detection = 0.0;
};

/// Integer tallies of a batch of trials; merging is associative and
/// commutative.
struct TrialTally {
  std::uint64_t trials = 0;
  std::uint64_t aborted = 0;
  std::uint64_t agreed = 0;
  std::uint64_t eve_full_key = 0;
  std::uint64_t eve_stolen = 0;
  std::uint64_t checked_groups = 0;
  std::uint64_t mismatched_groups = 0;
  std::uint64_t groups = 0;
  std::uint64_t matched_groups = 0;
  std::uint64_t eve_correct_groups = 0;
  std::array<std::uint64_t, 4> outcome_counts{};

  void add(const SessionReport& report);
  TrialTally& operator+=(const TrialTally& other);
};

/// Parallel over trials (OpenMP when available).
MCReport monte_carlo(const SessionConfig& config, const AdversaryStrategy& strategy,
                     std::uint64_t trials, std::uint64_t seed);

/// Plain loop over trials; reference for monte_carlo.
MCReport monte_carlo_serial(const SessionConfig& config, const AdversaryStrategy& strategy,
                            std::uint64_t trials, std::uint64_t seed);

MCReport make_report(const SessionConfig& config, const AdversaryStrategy& strategy,
                     std::uint64_t seed, const TrialTally& tally);

}  // namespace entswap
