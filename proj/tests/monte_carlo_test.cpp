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

#include <gtest/gtest.h>

#include <numeric>

namespace entswap {
namespace {

SessionConfig config_with(std::size_t n, std::size_t k) {
  SessionConfig c;
  c.n_groups = n;
  c.check_fraction = static_cast<double>(k) / static_cast<double>(n);
  return c;
}

void expect_same(const Proportion& a, const Proportion& b) {
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_EQ(a.trials, b.trials);
  EXPECT_EQ(a.rate, b.rate);
  EXPECT_EQ(a.half_width, b.half_width);
}

void expect_same(const MCReport& a, const MCReport& b) {
  EXPECT_EQ(a.trials, b.trials);
  EXPECT_EQ(a.k_checked, b.k_checked);
  expect_same(a.detection, b.detection);
  expect_same(a.key_agreement, b.key_agreement);
  expect_same(a.eve_key, b.eve_key);
  expect_same(a.eve_success, b.eve_success);
  expect_same(a.group_mismatch, b.group_mismatch);
  expect_same(a.fragment_match, b.fragment_match);
  expect_same(a.eve_group_guess, b.eve_group_guess);
  EXPECT_EQ(a.outcome_counts, b.outcome_counts);
}

TEST(MonteCarloTest, ParallelEqualsSerial) {
  for (auto kind : {AdversaryKind::kNone, AdversaryKind::kTypeI, AdversaryKind::kTypeII,
                    AdversaryKind::kTypeIII}) {
    const auto c = config_with(3, 2);
    const auto s = AdversaryStrategy::make(kind);
    expect_same(monte_carlo(c, s, 500, 11), monte_carlo_serial(c, s, 500, 11));
  }
}

TEST(MonteCarloTest, ReproducibleForSeed) {
  const auto c = config_with(4, 2);
  const auto s = AdversaryStrategy::make(AdversaryKind::kTypeII);
  expect_same(monte_carlo(c, s, 300, 5), monte_carlo(c, s, 300, 5));
  EXPECT_NE(monte_carlo(c, s, 300, 5).outcome_counts, monte_carlo(c, s, 300, 6).outcome_counts);
}

TEST(MonteCarloTest, HonestNeverDetected) {
  SessionConfig c = config_with(8, 4);
  c.pair_states = PairStatePolicy::random_known();
  const auto r = monte_carlo(c, AdversaryStrategy::make(AdversaryKind::kNone), 10000, 1);
  EXPECT_EQ(r.detection.successes, 0u);
  EXPECT_EQ(r.detection.rate, 0.0);
  EXPECT_EQ(r.key_agreement.rate, 1.0);
  EXPECT_EQ(r.fragment_match.rate, 1.0);
  EXPECT_EQ(r.trials, 10000u);
}

TEST(MonteCarloTest, CountInvariants) {
  const auto c = config_with(5, 2);
  const auto r = monte_carlo(c, AdversaryStrategy::make(AdversaryKind::kTypeIII), 400, 3);
  const auto total = std::accumulate(r.outcome_counts.begin(), r.outcome_counts.end(),
                                     std::uint64_t{0});
  EXPECT_EQ(total, 400u * 5u);
  EXPECT_EQ(r.group_mismatch.trials, 400u * 2u);
  EXPECT_EQ(r.fragment_match.trials, 400u * 5u);
  for (const Proportion* p : {&r.detection, &r.key_agreement, &r.eve_key, &r.eve_success,
                              &r.group_mismatch, &r.fragment_match, &r.eve_group_guess}) {
    EXPECT_GE(p->rate, 0.0);
    EXPECT_LE(p->rate, 1.0);
    EXPECT_GE(p->half_width, 0.0);
  }
}

TEST(MonteCarloTest, TypeTwoSingleCheck) {
  const auto r = monte_carlo(config_with(1, 1), AdversaryStrategy::make(AdversaryKind::kTypeII),
                             10000, 2);
  EXPECT_TRUE(r.detection.consistent_with(0.5)) << r.detection.rate;
  EXPECT_EQ(r.analytic_detection, 0.5);
}

TEST(MonteCarloTest, TypeThreeTwoChecks) {
  const auto r = monte_carlo(config_with(2, 2), AdversaryStrategy::make(AdversaryKind::kTypeIII),
                             10000, 3);
  EXPECT_TRUE(r.detection.consistent_with(0.9375)) << r.detection.rate;
}

// Every strategy and k in {1, 2, 3}: empirical detection within 3 Wilson
// half-widths of the closed form. A zero-variance rate must be exact.
TEST(MonteCarloTest, DetectionMatchesAnalytic) {
  for (auto kind : {AdversaryKind::kNone, AdversaryKind::kTypeI, AdversaryKind::kTypeII,
                    AdversaryKind::kTypeIII}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto r =
          monte_carlo(config_with(3, k), AdversaryStrategy::make(kind), 10000, 100 + k);
      const double expected = analytic_detection(kind, k);
      EXPECT_EQ(r.k_checked, k);
      if (expected == 0.0) {
        EXPECT_EQ(r.detection.rate, 0.0);
      } else {
        EXPECT_TRUE(r.detection.consistent_with(expected))
            << adversary_name(kind) << " k=" << k << " rate=" << r.detection.rate;
      }
    }
  }
}

TEST(MonteCarloTest, HonestOutcomesUniform) {
  const auto r = monte_carlo(config_with(4, 2), AdversaryStrategy::make(AdversaryKind::kNone),
                             5000, 9);
  EXPECT_GT(uniformity_test(r.outcome_counts).p_value, 0.001);
}

TEST(MonteCarloTest, TypeOneGuessQuarterPerGroup) {
  const auto r = monte_carlo(config_with(1, 1), AdversaryStrategy::make(AdversaryKind::kTypeI),
                             20000, 4);
  EXPECT_TRUE(r.eve_group_guess.consistent_with(0.25)) << r.eve_group_guess.rate;
  EXPECT_EQ(r.detection.rate, 0.0);
}

TEST(MonteCarloTest, ZeroTrialsRejected) {
  EXPECT_THROW(monte_carlo(config_with(2, 1), AdversaryStrategy{}, 0, 1), std::invalid_argument);
}

TEST(TrialTallyTest, MergeIsAdditive) {
  TrialTally a;
  a.trials = 2;
  a.aborted = 1;
  a.outcome_counts = {1, 2, 3, 4};
  TrialTally b;
  b.trials = 3;
  b.agreed = 2;
  b.outcome_counts = {4, 3, 2, 1};
  a += b;
  EXPECT_EQ(a.trials, 5u);
  EXPECT_EQ(a.aborted, 1u);
  EXPECT_EQ(a.agreed, 2u);
  EXPECT_EQ(a.outcome_counts, (std::array<std::uint64_t, 4>{5, 5, 5, 5}));
}

}  // namespace
}  // namespace entswap
