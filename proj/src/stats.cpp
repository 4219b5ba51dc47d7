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

#include "entswap/stats.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace entswap {

namespace {

enum class Slot { kAlice, kBob, kEve, kEveAliceFacing };

struct Step {
  std::string_view qubit_i;
  std::string_view qubit_j;
  Slot slot;
};

std::vector<Step> measurement_order(const AdversaryStrategy& strategy) {
  using namespace qubit;
  std::vector<Step> eve;
  switch (strategy.kind) {
    case AdversaryKind::kNone: break;
    case AdversaryKind::kTypeI: eve = {{kEve1, kEve3, Slot::kEve}}; break;
    case AdversaryKind::kTypeII: eve = {{kEve5, kEve6, Slot::kEve}}; break;
    case AdversaryKind::kTypeIII:
      eve = {{kEve2, kEve4, Slot::kEveAliceFacing}, {kEve1, kEve3, Slot::kEve}};
      break;
  }
  std::vector<Step> steps{{kAlice1, kAlice3, Slot::kAlice}};
  const Step bob{kBob2, kBob4, Slot::kBob};
  if (!strategy.eve_before_bob) steps.push_back(bob);
  steps.insert(steps.end(), eve.begin(), eve.end());
  if (strategy.eve_before_bob) steps.push_back(bob);
  return steps;
}

void assign(JointOutcome& o, Slot slot, BellIndex b) {
  switch (slot) {
    case Slot::kAlice: o.alice = b; break;
    case Slot::kBob: o.bob = b; break;
    case Slot::kEve: o.eve = b; break;
    case Slot::kEveAliceFacing: o.eve_alice_facing = b; break;
  }
}

// Lower series: P(a, x) = x^a e^-x / Gamma(a+1) * sum x^n / ((a+1)...(a+n)).
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < 10000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), modified Lentz.
double gamma_q_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double analytic_detection(AdversaryKind strategy, std::size_t k_checked) {
  const double k = static_cast<double>(k_checked);
  switch (strategy) {
    case AdversaryKind::kNone:
    case AdversaryKind::kTypeI: return 0.0;
    case AdversaryKind::kTypeII: return 1.0 - std::pow(0.5, k);
    case AdversaryKind::kTypeIII: return 1.0 - std::pow(0.25, k);
  }
  return 0.0;
}

std::optional<double> analytic_guess(AdversaryKind strategy, std::size_t n_groups) {
  if (n_groups == 0) throw std::invalid_argument("analytic_guess needs n >= 1");
  const double n = static_cast<double>(n_groups);
  switch (strategy) {
    case AdversaryKind::kNone: return std::nullopt;
    case AdversaryKind::kTypeI: return std::pow(0.25, n);
    case AdversaryKind::kTypeII:
    case AdversaryKind::kTypeIII:
      // Groups are independent systems, so the n-group figure is a power.
      return std::pow(group_guess_probability(AdversaryStrategy::make(strategy)), n);
  }
  return std::nullopt;
}

std::vector<JointOutcome> enumerate_group_outcomes(const AdversaryStrategy& strategy,
                                                   DeclaredGroup declared) {
  const std::vector<DeclaredGroup> one{declared};
  const GroupChannel root = corrupt_channels(strategy, one).front();
  const std::vector<Step> steps = measurement_order(strategy);

  std::vector<JointOutcome> out;
  std::function<void(std::size_t, const GroupChannel&, JointOutcome)> descend =
      [&](std::size_t depth, const GroupChannel& channel, JointOutcome partial) {
        if (depth == steps.size()) {
          out.push_back(partial);
          return;
        }
        const Step& step = steps[depth];
        const BellProbabilities probs = channel.distribution(step.qubit_i, step.qubit_j);
        for (BellIndex b : kAllBell) {
          if (probs[b.ordinal()] < kMinForcedProbability) continue;
          GroupChannel next = channel;
          next.measure_forced(step.qubit_i, step.qubit_j, b);
          JointOutcome branch = partial;
          assign(branch, step.slot, b);
          branch.probability *= probs[b.ordinal()];
          descend(depth + 1, next, branch);
        }
      };
  JointOutcome start;
  start.probability = 1.0;
  descend(0, root, start);
  return out;
}

double group_match_probability(const AdversaryStrategy& strategy, DeclaredGroup declared) {
  double p = 0.0;
  for (const auto& o : enumerate_group_outcomes(strategy, declared)) {
    const auto alice = group_key_fragment(
        o.alice, swap_partner(declared.pair_a, declared.pair_b, o.alice), 0);
    const auto bob =
        group_key_fragment(swap_partner(declared.pair_a, declared.pair_b, o.bob), o.bob, 0);
    if (alice.bits == bob.bits) p += o.probability;
  }
  return p;
}

double group_guess_probability(const AdversaryStrategy& strategy, DeclaredGroup declared) {
  if (!strategy.active()) return 0.0;
  const std::vector<DeclaredGroup> one{declared};
  double p = 0.0;
  for (const auto& o : enumerate_group_outcomes(strategy, declared)) {
    AdversaryStrategy eve = strategy;
    eve.observations = {EveObservation{o.eve, o.eve_alice_facing}};
    const auto guess = eve_guess_key(eve, one).front();
    const auto alice = group_key_fragment(
        o.alice, swap_partner(declared.pair_a, declared.pair_b, o.alice), 0);
    if (guess.bits == alice.bits) p += o.probability;
  }
  return p;
}

bool Proportion::consistent_with(double expected, double sigmas) const {
  return std::abs(rate - expected) < sigmas * half_width;
}

Proportion wilson(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("wilson interval needs at least one trial");
  if (successes > trials) throw std::invalid_argument("more successes than trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double half = z / (1.0 + z2 / n) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {successes, trials, p, half};
}

double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q needs a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_fraction(a, x);
}

double chi_square_sf(double x, double dof) {
  if (x <= 0.0) return 1.0;
  return gamma_q(0.5 * dof, 0.5 * x);
}

UniformityResult uniformity_test(const std::array<std::uint64_t, 4>& counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total < 40) {
    throw std::invalid_argument("uniformity test needs at least 40 observations, got " +
                                std::to_string(total));
  }
  const double expected = static_cast<double>(total) / 4.0;
  double chi = 0.0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi += d * d / expected;
  }
  return {chi, chi_square_sf(chi, 3.0)};
}

EfficiencyReport efficiency_report(std::size_t n_groups, std::size_t k_checked) {
  if (n_groups == 0) throw std::invalid_argument("n_groups must be at least 1");
  if (k_checked > n_groups) throw std::invalid_argument("k_checked exceeds n_groups");
  EfficiencyReport r;
  r.n_groups = n_groups;
  r.k_checked = k_checked;
  // A group is two pairs: four particles carrying two 2-bit Bell outcomes.
  r.raw_bits_per_group = 4.0;
  r.raw_bits_per_particle = r.raw_bits_per_group / 4.0;
  r.net_bits_per_particle =
      r.raw_bits_per_particle *
      (1.0 - static_cast<double>(k_checked) / static_cast<double>(n_groups));
  r.comparison_notes =
      "raw: 4 bits per group of 2 pairs (1 bit per particle); net discounts the " +
      std::to_string(k_checked) + " of " + std::to_string(n_groups) +
      " groups published for checking; commonly quoted for comparison: BB84 1 bit per pair, "
      "B92 1 bit per two pairs";
  return r;
}

EfficiencyReport efficiency_report(const SessionConfig& config) {
  validate(config);
  return efficiency_report(config.n_groups, check_count(config));
}

}  // namespace entswap
