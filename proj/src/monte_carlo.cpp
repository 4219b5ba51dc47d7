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

#include "entswap/monte_carlo.hpp"

#include <exception>
#include <stdexcept>

namespace entswap {

namespace {

SessionReport run_trial(const SessionConfig& config, const AdversaryStrategy& strategy,
                        std::uint64_t seed, std::uint64_t index) {
  SessionConfig trial = config;
  trial.seed = derive_seed(seed, index);
  return run_session(trial, strategy);
}

void require_trials(std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("monte carlo needs at least one trial");
}

}  // namespace

void TrialTally::add(const SessionReport& r) {
  ++trials;
  if (!r.accepted) ++aborted;
  if (r.accepted && r.alice_key == r.bob_key) ++agreed;
  if (r.eve && r.eve->full_key_correct) ++eve_full_key;
  if (r.eve_outcome && r.eve_outcome->key_stolen) ++eve_stolen;
  for (const auto& g : r.groups) {
    const bool match = g.alice_fragment->bits == g.bob_fragment->bits;
    ++groups;
    if (match) ++matched_groups;
    if (g.checked) {
      ++checked_groups;
      if (!match) ++mismatched_groups;
    }
    ++outcome_counts[g.alice_outcome->ordinal()];
    if (r.eve && r.eve->per_group_correct[g.group_index]) ++eve_correct_groups;
  }
}

TrialTally& TrialTally::operator+=(const TrialTally& o) {
  trials += o.trials;
  aborted += o.aborted;
  agreed += o.agreed;
  eve_full_key += o.eve_full_key;
  eve_stolen += o.eve_stolen;
  checked_groups += o.checked_groups;
  mismatched_groups += o.mismatched_groups;
  groups += o.groups;
  matched_groups += o.matched_groups;
  eve_correct_groups += o.eve_correct_groups;
  for (std::size_t i = 0; i < 4; ++i) outcome_counts[i] += o.outcome_counts[i];
  return *this;
}

MCReport make_report(const SessionConfig& config, const AdversaryStrategy& strategy,
                     std::uint64_t seed, const TrialTally& t) {
  MCReport r;
  r.strategy = strategy.kind;
  r.n_groups = config.n_groups;
  r.k_checked = check_count(config);
  r.trials = t.trials;
  r.seed = seed;
  r.detection = wilson(t.aborted, t.trials);
  r.key_agreement = wilson(t.agreed, t.trials);
  r.eve_key = wilson(t.eve_full_key, t.trials);
  r.eve_success = wilson(t.eve_stolen, t.trials);
  r.group_mismatch = wilson(t.mismatched_groups, t.checked_groups);
  r.fragment_match = wilson(t.matched_groups, t.groups);
  r.eve_group_guess = wilson(t.eve_correct_groups, t.groups);
  r.outcome_counts = t.outcome_counts;
  r.analytic_detection = analytic_detection(strategy.kind, r.k_checked);
  return r;
}

MCReport monte_carlo_serial(const SessionConfig& config, const AdversaryStrategy& strategy,
                            std::uint64_t trials, std::uint64_t seed) {
  require_trials(trials);
  validate(config);
  TrialTally tally;
  for (std::uint64_t i = 0; i < trials; ++i) tally.add(run_trial(config, strategy, seed, i));
  return make_report(config, strategy, seed, tally);
}

MCReport monte_carlo(const SessionConfig& config, const AdversaryStrategy& strategy,
                     std::uint64_t trials, std::uint64_t seed) {
  require_trials(trials);
  validate(config);
  TrialTally total;
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel
  {
    TrialTally local;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        local.add(run_trial(config, strategy, seed, static_cast<std::uint64_t>(i)));
      } catch (...) {
#pragma omp critical(entswap_mc_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(entswap_mc_merge)
    total += local;
  }
  if (failure) std::rethrow_exception(failure);
  return make_report(config, strategy, seed, total);
}

}  // namespace entswap
