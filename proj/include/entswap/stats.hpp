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
#include <optional>
#include <string>
#include <vector>

#include "entswap/adversary.hpp"
#include "entswap/protocol.hpp"

namespace entswap {

/// Probability that at least one of `k_checked` published groups mismatches.
/// None/type I: 0. Type II: 1 - (1/2)^k. Type III: 1 - (1/4)^k.
double analytic_detection(AdversaryKind strategy, std::size_t k_checked);

/// Probability that Eve's guess of all n raw group fragments is right.
/// Type I is (1/4)^n in closed form; types II and III come from
/// enumerate_group_outcomes. nullopt for no adversary.
std::optional<double> analytic_guess(AdversaryKind strategy, std::size_t n_groups);

/// One branch of the joint Bell-outcome distribution of a single group.
struct JointOutcome {
  BellIndex alice;
  BellIndex bob;
  std::optional<BellIndex> eve;
  std::optional<BellIndex> eve_alice_facing;
  double probability = 0.0;
};

/// Exhaustive branch enumeration over every measurement in a group, in the
/// strategy's measurement order, using conditioned statevector collapse.
/// Zero-probability branches are dropped.
std::vector<JointOutcome> enumerate_group_outcomes(const AdversaryStrategy& strategy,
                                                   DeclaredGroup declared = {});

/// Per-group probability that Bob's fragment equals Alice's.
double group_match_probability(const AdversaryStrategy& strategy, DeclaredGroup declared = {});

/// Per-group probability that Eve's guessed fragment equals Alice's.
double group_guess_probability(const AdversaryStrategy& strategy, DeclaredGroup declared = {});

/// Empirical proportion with a Wilson score interval.
struct Proportion {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double rate = 0.0;
  double half_width = 0.0;  // 95% Wilson half-width

  /// |rate - expected| < sigmas * half_width.
  bool consistent_with(double expected, double sigmas = 3.0) const;
};

inline constexpr double kZ95 = 1.959963984540054;

Proportion wilson(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

/// Regularized upper incomplete gamma Q(a, x).
double gamma_q(double a, double x);

/// Survival function of the chi-square distribution.
double chi_square_sf(double x, double dof);

struct UniformityResult {
  double chi_square = 0.0;
  double p_value = 0.0;
};

/// Pearson test of four counts against 1/4 each (3 dof). Needs at least 40
/// observations; throws std::invalid_argument otherwise.
UniformityResult uniformity_test(const std::array<std::uint64_t, 4>& counts);

struct EfficiencyReport {
  double raw_bits_per_particle = 0.0;
  double raw_bits_per_group = 0.0;
  double net_bits_per_particle = 0.0;
  std::size_t n_groups = 0;
  std::size_t k_checked = 0;
  std::string comparison_notes;
};

EfficiencyReport efficiency_report(const SessionConfig& config);

/// Same accounting for an explicit check count; k_checked = 0 gives net = raw.
EfficiencyReport efficiency_report(std::size_t n_groups, std::size_t k_checked);

}  // namespace entswap
