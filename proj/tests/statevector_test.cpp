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

#include "entswap/statevector.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <string>

#include "dense_oracle.hpp"

namespace entswap {
namespace {

constexpr double kTol = 1e-12;
const double kR = 1.0 / std::sqrt(2.0);

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
  return labels;
}

StateVector random_state(int n, Rng& rng) {
  std::vector<Complex> amp(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : amp) {
    a = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
    norm += std::norm(a);
  }
  for (auto& a : amp) a /= std::sqrt(norm);
  return StateVector(numbered_labels(n), std::move(amp));
}

TEST(MakeBellTest, Amplitudes) {
  const auto phi = make_bell(kPhiPlus, "1", "2");
  EXPECT_NEAR(phi.amplitudes()[0].real(), kR, kTol);
  EXPECT_NEAR(std::abs(phi.amplitudes()[1]), 0.0, kTol);
  EXPECT_NEAR(std::abs(phi.amplitudes()[2]), 0.0, kTol);
  EXPECT_NEAR(phi.amplitudes()[3].real(), kR, kTol);

  const auto psi = make_bell(kPsiPlus, "1", "2");
  EXPECT_NEAR(std::abs(psi.amplitudes()[0]), 0.0, kTol);
  EXPECT_NEAR(psi.amplitudes()[1].real(), kR, kTol);
  EXPECT_NEAR(psi.amplitudes()[2].real(), kR, kTol);
  EXPECT_NEAR(std::abs(psi.amplitudes()[3]), 0.0, kTol);

  // Same as the literal vectors used by the dense oracle.
  const auto literal = testing::literal_bell_vectors();
  for (BellIndex b : kAllBell) {
    const auto sv = make_bell(b, "x", "y");
    EXPECT_NEAR(sv.norm_squared(), 1.0, kTol);
    for (int i = 0; i < 4; ++i) {
      EXPECT_NEAR(std::abs(sv.amplitudes()[i] - literal[b.ordinal()][i]), 0.0, kTol);
    }
  }
}

TEST(MakeBellTest, DuplicateLabelsRejected) {
  EXPECT_THROW(make_bell(kPhiPlus, "A1", "A1"), std::invalid_argument);
  EXPECT_THROW(make_ghz3("A1", "B2", "A1"), std::invalid_argument);
}

TEST(StateVectorTest, ValidatesShapeAndNorm) {
  EXPECT_THROW(StateVector({"a"}, {Complex{1.0}}), std::invalid_argument);
  EXPECT_THROW(StateVector({"a"}, {Complex{1.0}, Complex{1.0}}), std::invalid_argument);
  EXPECT_THROW(StateVector({}, {}), std::invalid_argument);
  EXPECT_NO_THROW(StateVector({"a"}, {Complex{0.0}, Complex{0.0, 1.0}}));
  EXPECT_THROW(StateVector::zero("a").position("b"), std::invalid_argument);
}

TEST(Ghz3Test, Amplitudes) {
  const auto ghz = make_ghz3("A", "B", "E");
  for (std::size_t i = 0; i < 8; ++i) {
    const double expected = (i == 0 || i == 7) ? kR : 0.0;
    EXPECT_NEAR(std::abs(ghz.amplitudes()[i] - expected), 0.0, kTol) << i;
  }
  EXPECT_NEAR(ghz.norm_squared(), 1.0, kTol);
}

// Measuring E in the computational basis: E=0 leaves |00> on (A,B), E=1
// leaves |11>, each with probability |amp|^2 summed over that slice.
TEST(Ghz3Test, ComputationalSlicesOfThirdQubit) {
  const auto ghz = make_ghz3("A", "B", "E");
  const auto amp = ghz.amplitudes();
  double p0 = 0.0;
  double p1 = 0.0;
  for (std::size_t i = 0; i < 8; ++i) (i & 1 ? p1 : p0) += std::norm(amp[i]);
  EXPECT_NEAR(p0, 0.5, kTol);
  EXPECT_NEAR(p1, 0.5, kTol);
  EXPECT_NEAR(std::norm(amp[0b000]) / p0, 1.0, kTol);  // |00>|0>
  EXPECT_NEAR(std::norm(amp[0b111]) / p1, 1.0, kTol);  // |11>|1>
}

TEST(TensorTest, SwappingInputState) {
  const auto sv = tensor(make_bell(kPhiPlus, "1", "2"), make_bell(kPsiMinus, "3", "4"));
  // (|00> + |11>)(|01> - |10>)/2 over labels 1,2,3,4.
  const std::map<std::size_t, double> nonzero{
      {0b0001, 0.5}, {0b0010, -0.5}, {0b1101, 0.5}, {0b1110, -0.5}};
  ASSERT_EQ(sv.amplitudes().size(), 16u);
  for (std::size_t i = 0; i < 16; ++i) {
    const double expected = nonzero.count(i) ? nonzero.at(i) : 0.0;
    EXPECT_NEAR(std::abs(sv.amplitudes()[i] - expected), 0.0, kTol) << i;
  }
  EXPECT_EQ(sv.labels(), (std::vector<std::string>{"1", "2", "3", "4"}));
}

TEST(TensorTest, ZeroQubitPadsOddPositions) {
  const auto bell = make_bell(kPsiPlus, "a", "b");
  const auto sv = tensor(bell, StateVector::zero("c"));
  ASSERT_EQ(sv.amplitudes().size(), 8u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(sv.amplitudes()[2 * i], bell.amplitudes()[i]);
    EXPECT_EQ(sv.amplitudes()[2 * i + 1], Complex{});
  }
}

TEST(TensorTest, Errors) {
  const auto a = make_bell(kPhiPlus, "1", "2");
  EXPECT_THROW(tensor(a, make_bell(kPhiPlus, "2", "3")), std::invalid_argument);
  StateVector big = make_bell(kPhiPlus, "0", "1");
  for (int i = 1; i < 6; ++i) {
    big = tensor(big, make_bell(kPhiPlus, std::to_string(2 * i), std::to_string(2 * i + 1)));
  }
  EXPECT_EQ(big.num_qubits(), 12u);
  EXPECT_THROW(tensor(big, StateVector::zero("z")), std::invalid_argument);
}

TEST(OutcomeDistributionTest, UniformOnSwapInput) {
  const auto sv = tensor(make_bell(kPhiPlus, "1", "2"), make_bell(kPsiMinus, "3", "4"));
  for (double p : outcome_distribution(sv, "1", "3")) EXPECT_NEAR(p, 0.25, kTol);
}

TEST(OutcomeDistributionTest, EigenstateIsCertain) {
  const auto sv = make_bell(kPsiMinus, "i", "j");
  const auto p = outcome_distribution(sv, "i", "j");
  EXPECT_NEAR(p[kPsiMinus.ordinal()], 1.0, kTol);
  EXPECT_NEAR(p[kPhiPlus.ordinal()] + p[kPhiMinus.ordinal()] + p[kPsiPlus.ordinal()], 0.0, kTol);
}

TEST(OutcomeDistributionTest, UniformOnGhzPair) {
  const auto sv = tensor(make_ghz3("1", "2", "5"), make_ghz3("3", "4", "6"));
  for (double p : outcome_distribution(sv, "1", "3")) EXPECT_NEAR(p, 0.25, kTol);
}

TEST(OutcomeDistributionTest, AllSixteenPairingsUniform) {
  for (BellIndex a : kAllBell) {
    for (BellIndex b : kAllBell) {
      const auto sv = tensor(make_bell(a, "1", "2"), make_bell(b, "3", "4"));
      for (double p : outcome_distribution(sv, "1", "3")) EXPECT_NEAR(p, 0.25, kTol);
    }
  }
}

TEST(OutcomeDistributionTest, Errors) {
  const auto sv = make_bell(kPhiPlus, "1", "2");
  EXPECT_THROW(outcome_distribution(sv, "1", "9"), std::invalid_argument);
  EXPECT_THROW(outcome_distribution(sv, "1", "1"), std::invalid_argument);
}

// Property: index-arithmetic probabilities equal the dense projector oracle on
// random states, for every ordered pair of distinct qubits.
TEST(OutcomeDistributionTest, MatchesDenseProjectorOracle) {
  Rng rng(20261017);
  for (int n = 2; n <= 5; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto sv = random_state(n, rng);
      const std::vector<Complex> psi(sv.amplitudes().begin(), sv.amplitudes().end());
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const auto probs = outcome_distribution(sv, sv.labels()[i], sv.labels()[j]);
          double total = 0.0;
          for (BellIndex b : kAllBell) {
            EXPECT_NEAR(probs[b.ordinal()],
                        testing::dense_bell_probability(psi, n, i, j, b.ordinal()), 1e-12);
            total += probs[b.ordinal()];
          }
          EXPECT_NEAR(total, 1.0, 1e-12);
        }
      }
    }
  }
}

TEST(MeasureBellTest, SwapExampleLeavesPartnerPhiPlus) {
  const auto sv = tensor(make_bell(kPhiPlus, "1", "2"), make_bell(kPsiPlus, "3", "4"));
  const auto [rec, post] = measure_bell_conditioned(sv, "1", "3", kPsiPlus);
  EXPECT_EQ(rec.outcome, kPsiPlus);
  EXPECT_NEAR(rec.probabilities[kPsiPlus.ordinal()], 0.25, kTol);
  EXPECT_EQ(identify_bell(post, "2", "4"), kPhiPlus);
  EXPECT_NEAR(post.norm_squared(), 1.0, kStateTolerance);

  // Sampled: whatever comes out, the partner follows the same rule.
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    Rng rng(seed);
    const auto [r, p] = measure_bell(sv, "1", "3", rng);
    EXPECT_EQ(identify_bell(p, "2", "4"), swap_partner(kPhiPlus, kPsiPlus, r.outcome));
  }
}

TEST(MeasureBellTest, EigenstateUnchanged) {
  for (BellIndex b : kAllBell) {
    const auto sv = make_bell(b, "i", "j");
    Rng rng(5);
    const auto [rec, post] = measure_bell(sv, "i", "j", rng);
    EXPECT_EQ(rec.outcome, b);
    Complex overlap{};
    for (std::size_t k = 0; k < 4; ++k) overlap += std::conj(sv.amplitudes()[k]) * post.amplitudes()[k];
    EXPECT_NEAR(std::norm(overlap), 1.0, kTol);
  }
}

TEST(MeasureBellTest, GhzPairsFollowTermGrouping) {
  const auto sv = tensor(make_ghz3("1", "2", "5"), make_ghz3("3", "4", "6"));
  const auto [ra, after_alice] = measure_bell_conditioned(sv, "1", "3", kPhiPlus);
  const auto bob = outcome_distribution(after_alice, "2", "4");
  EXPECT_NEAR(bob[kPhiPlus.ordinal()], 0.5, kTol);
  EXPECT_NEAR(bob[kPhiMinus.ordinal()], 0.5, kTol);
  for (BellIndex b : {kPhiPlus, kPhiMinus}) {
    const auto [rb, after_bob] = measure_bell_conditioned(after_alice, "2", "4", b);
    EXPECT_EQ(identify_bell(after_bob, "5", "6"), b);
  }
}

TEST(MeasureBellTest, SeededRunsReproducible) {
  const auto sv = tensor(make_ghz3("1", "2", "5"), make_ghz3("3", "4", "6"));
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    Rng r1(seed);
    Rng r2(seed);
    const auto [a, sa] = measure_bell(sv, "1", "3", r1);
    const auto [b, sb] = measure_bell(sv, "1", "3", r2);
    EXPECT_EQ(a.outcome, b.outcome);
    ASSERT_EQ(sa.amplitudes().size(), sb.amplitudes().size());
    for (std::size_t i = 0; i < sa.amplitudes().size(); ++i) {
      EXPECT_EQ(sa.amplitudes()[i], sb.amplitudes()[i]);
    }
  }
}

TEST(MeasureBellTest, RepeatedMeasurementIsStable) {
  Rng rng(77);
  for (int rep = 0; rep < 20; ++rep) {
    const auto sv = random_state(4, rng);
    const auto [first, post] = measure_bell(sv, "q1", "q3", rng);
    EXPECT_NEAR(post.norm_squared(), 1.0, kStateTolerance);
    const auto again = outcome_distribution(post, "q1", "q3");
    EXPECT_NEAR(again[first.outcome.ordinal()], 1.0, 1e-9);
    const auto [second, post2] = measure_bell(post, "q1", "q3", rng);
    EXPECT_EQ(second.outcome, first.outcome);
  }
}

TEST(MeasureBellTest, ZeroProbabilityNeverSampledOrForced) {
  const auto sv = make_bell(kPsiMinus, "i", "j");
  EXPECT_THROW(measure_bell_conditioned(sv, "i", "j", kPhiPlus), std::domain_error);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    EXPECT_EQ(measure_bell(sv, "i", "j", rng).first.outcome, kPsiMinus);
  }
}

TEST(IdentifyBellTest, Cases) {
  EXPECT_EQ(identify_bell(make_bell(kPsiMinus, "a", "b"), "a", "b"), kPsiMinus);
  // Reduced state of two GHZ qubits is an even mixture of phi+ and phi-.
  const auto ghz = make_ghz3("1", "2", "3");
  EXPECT_FALSE(identify_bell(ghz, "1", "2").has_value());
  EXPECT_NEAR(bell_fidelity(ghz, "1", "2", kPhiPlus), 0.5, kTol);
  EXPECT_NEAR(bell_fidelity(ghz, "1", "2", kPhiMinus), 0.5, kTol);
  // Before the swap, (2,4) is entangled with (1,3).
  const auto sv = tensor(make_bell(kPhiPlus, "1", "2"), make_bell(kPsiPlus, "3", "4"));
  EXPECT_FALSE(identify_bell(sv, "2", "4").has_value());
  EXPECT_THROW(identify_bell(sv, "2", "x"), std::invalid_argument);
}

TEST(StateVectorJsonTest, Dump) {
  const auto j = to_json(make_bell(kPhiMinus, "A1", "B2"));
  EXPECT_EQ(j["labels"], (nlohmann::json{"A1", "B2"}));
  ASSERT_EQ(j["amplitudes"].size(), 4u);
  EXPECT_NEAR(j["amplitudes"][3][0].get<double>(), -kR, kTol);
  EXPECT_EQ(j["amplitudes"][3][1].get<double>(), 0.0);
}

}  // namespace
}  // namespace entswap
