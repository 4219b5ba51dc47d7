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

#include "entswap/oracle_check.hpp"

#include <cmath>
#include <string>

namespace entswap {

namespace {

using nlohmann::json;

json bell_or_null(const std::optional<BellIndex>& b) {
  return b ? json(std::string(bell_name(*b))) : json(nullptr);
}

json probs_json(const BellProbabilities& p) {
  json j = json::object();
  for (BellIndex b : kAllBell) j[std::string(bell_name(b))] = p[b.ordinal()];
  return j;
}

}  // namespace

std::vector<SwapCheck> check_swap_rule(SwapSplit split) {
  const char* measured_i = split == SwapSplit::kMeasure13 ? "1" : "2";
  const char* partner_i = split == SwapSplit::kMeasure13 ? "2" : "1";

  std::vector<SwapCheck> out;
  for (BellIndex a : kAllBell) {
    for (BellIndex b : kAllBell) {
      const StateVector sv = tensor(make_bell(a, "1", "2"), make_bell(b, "3", "4"));
      for (BellIndex m : kAllBell) {
        SwapCheck c{a, b, m, swap_partner(a, b, m), std::nullopt, 0.0, false};
        const auto [record, collapsed] = measure_bell_conditioned(sv, measured_i, "3", m);
        c.observed = identify_bell(collapsed, partner_i, "4");
        c.fidelity = bell_fidelity(collapsed, partner_i, "4", c.predicted);
        c.pass = c.observed == c.predicted && c.fidelity > 1.0 - kStateTolerance;
        out.push_back(c);
      }
    }
  }
  return out;
}

std::vector<UniformityCheck> check_swap_uniformity() {
  std::vector<UniformityCheck> out;
  for (BellIndex a : kAllBell) {
    for (BellIndex b : kAllBell) {
      UniformityCheck c{a, b, {}, true};
      c.probabilities =
          outcome_distribution(tensor(make_bell(a, "1", "2"), make_bell(b, "3", "4")), "1", "3");
      for (double p : c.probabilities) c.pass = c.pass && std::abs(p - 0.25) < kStateTolerance;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<GhzConditional> check_ghz_conditionals() {
  // Pair one is (A=1, B=2, E=5), pair two is (A=3, B=4, E=6).
  const StateVector sv = tensor(make_ghz3("1", "2", "5"), make_ghz3("3", "4", "6"));
  std::vector<GhzConditional> out;
  for (BellIndex a : kAllBell) {
    GhzConditional c{a, {}, {}, true};
    const auto [ra, after_alice] = measure_bell_conditioned(sv, "1", "3", a);
    c.bob = outcome_distribution(after_alice, "2", "4");
    for (BellIndex b : kAllBell) {
      if (c.bob[b.ordinal()] < kMinForcedProbability) continue;
      const auto [rb, after_bob] = measure_bell_conditioned(after_alice, "2", "4", b);
      c.eve_for_bob[b.ordinal()] = identify_bell(after_bob, "5", "6");
      c.eve_deterministic = c.eve_deterministic && c.eve_for_bob[b.ordinal()].has_value();
    }
    out.push_back(c);
  }
  return out;
}

OracleCheckSummary run_oracle_check() {
  OracleCheckSummary s;
  s.swap_13 = check_swap_rule(SwapSplit::kMeasure13);
  s.swap_23 = check_swap_rule(SwapSplit::kMeasure23);
  s.uniformity = check_swap_uniformity();
  s.ghz = check_ghz_conditionals();

  bool ok = true;
  for (const auto& c : s.swap_13) ok = ok && c.pass;
  for (const auto& c : s.swap_23) ok = ok && c.pass;
  for (const auto& c : s.uniformity) ok = ok && c.pass;
  for (const auto& g : s.ghz) {
    // Support is the two phases of Alice's parity family, 1/2 each.
    for (BellIndex b : kAllBell) {
      const double expected = b.parity() == g.alice.parity() ? 0.5 : 0.0;
      ok = ok && std::abs(g.bob[b.ordinal()] - expected) < kStateTolerance;
    }
    ok = ok && g.eve_deterministic;
  }
  s.all_pass = ok;
  return s;
}

json to_json(const OracleCheckSummary& s) {
  auto swaps = [](const std::vector<SwapCheck>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
      arr.push_back({{"init_a", std::string(bell_name(c.init_a))},
                     {"init_b", std::string(bell_name(c.init_b))},
                     {"measured", std::string(bell_name(c.measured))},
                     {"predicted", std::string(bell_name(c.predicted))},
                     {"observed", bell_or_null(c.observed)},
                     {"fidelity", c.fidelity},
                     {"pass", c.pass}});
    }
    return arr;
  };
  json uniformity = json::array();
  for (const auto& c : s.uniformity) {
    uniformity.push_back({{"init_a", std::string(bell_name(c.init_a))},
                          {"init_b", std::string(bell_name(c.init_b))},
                          {"probabilities", probs_json(c.probabilities)},
                          {"pass", c.pass}});
  }
  json ghz = json::array();
  for (const auto& g : s.ghz) {
    json eve = json::object();
    for (BellIndex b : kAllBell) {
      if (g.bob[b.ordinal()] >= kMinForcedProbability) {
        eve[std::string(bell_name(b))] = bell_or_null(g.eve_for_bob[b.ordinal()]);
      }
    }
    ghz.push_back({{"alice", std::string(bell_name(g.alice))},
                   {"bob_distribution", probs_json(g.bob)},
                   {"eve_given_bob", std::move(eve)},
                   {"eve_deterministic", g.eve_deterministic}});
  }
  return {{"swap_measure_13", swaps(s.swap_13)},
          {"swap_measure_23", swaps(s.swap_23)},
          {"uniformity", std::move(uniformity)},
          {"ghz_conditionals", std::move(ghz)},
          {"all_pass", s.all_pass}};
}

}  // namespace entswap
