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

#include "entswap/report.hpp"

#include <cstdio>

namespace entswap {

namespace {

using nlohmann::json;

json optional_bell(const std::optional<BellIndex>& b) {
  return b ? json(std::string(bell_name(*b))) : json(nullptr);
}

json optional_bits(const std::optional<KeyFragment>& f) {
  return f ? json(f->bits) : json(nullptr);
}

std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

json policy_json(const PairStatePolicy& p) {
  switch (p.kind) {
    case PairStatePolicy::Kind::kAllPhiPlus:
      return {{"kind", "all_phi_plus"}};
    case PairStatePolicy::Kind::kFixedList: {
      json states = json::array();
      for (BellIndex b : p.fixed) states.push_back(std::string(bell_name(b)));
      return {{"kind", "fixed_list"}, {"states", std::move(states)}};
    }
    case PairStatePolicy::Kind::kRandomKnown:
      return {{"kind", "random_known"}, {"seed", p.seed ? json(*p.seed) : json(nullptr)}};
  }
  return nullptr;
}

}  // namespace

json to_json(const SessionConfig& c) {
  return {{"n_groups", c.n_groups},
          {"check_fraction", c.check_fraction},
          {"k_checked", check_count(c)},
          {"pair_states", policy_json(c.pair_states)},
          {"seed", c.seed}};
}

json to_json(const ClassicalMessage& m) {
  struct Visitor {
    json operator()(const MeasuredAnnouncement& a) const {
      return {{"groups_measured", a.groups_measured}};
    }
    json operator()(const CheckRequest& r) const {
      return {{"indices", r.indices}, {"fragments", r.fragments}};
    }
    json operator()(const Verdict& v) const {
      return {{"verdict", v.accept ? "accept" : "abort"}, {"mismatched", v.mismatched}};
    }
  };
  return {{"kind", std::string(m.kind())},
          {"sender", std::string(party_name(m.sender))},
          {"payload", std::visit(Visitor{}, m.payload)}};
}

json to_json(const GroupRecord& g) {
  return {{"group_index", g.group_index},
          {"pair_a_state", std::string(bell_name(g.pair_a_state))},
          {"pair_b_state", std::string(bell_name(g.pair_b_state))},
          {"alice_outcome", optional_bell(g.alice_outcome)},
          {"bob_outcome", optional_bell(g.bob_outcome)},
          {"alice_fragment", optional_bits(g.alice_fragment)},
          {"bob_fragment", optional_bits(g.bob_fragment)},
          {"checked", g.checked}};
}

json to_json(const SessionReport& r) {
  json transcript = json::array();
  for (const auto& m : r.transcript) transcript.push_back(to_json(m));
  json groups = json::array();
  for (const auto& g : r.groups) groups.push_back(to_json(g));

  json eve = nullptr;
  if (r.eve) {
    eve = {{"strategy", std::string(adversary_name(r.adversary))},
           {"guessed_key", r.eve->guessed_key},
           {"per_group_correct", r.eve->per_group_correct},
           {"full_key_correct", r.eve->full_key_correct}};
    if (r.eve_outcome) {
      eve["undetected"] = r.eve_outcome->undetected;
      eve["key_stolen"] = r.eve_outcome->key_stolen;
    }
  }
  return {{"verdict", r.accepted ? "accept" : "abort"},
          {"aborted", !r.accepted},
          {"adversary", std::string(adversary_name(r.adversary))},
          {"config", to_json(r.config)},
          {"alice_key", r.alice_key},
          {"bob_key", r.bob_key},
          {"key_bits", r.alice_key.size()},
          {"keys_equal", r.keys_equal},
          {"checked_groups", r.checked_groups},
          {"transcript", std::move(transcript)},
          {"groups", std::move(groups)},
          {"eve", std::move(eve)}};
}

json to_json(const Proportion& p) {
  return {{"rate", p.rate},
          {"ci_half_width", p.half_width},
          {"successes", p.successes},
          {"trials", p.trials}};
}

json to_json(const MCReport& r) {
  return {{"strategy", std::string(adversary_name(r.strategy))},
          {"n_groups", r.n_groups},
          {"k_checked", r.k_checked},
          {"trials", r.trials},
          {"seed", r.seed},
          {"detection_rate", to_json(r.detection)},
          {"analytic_detection", r.analytic_detection},
          {"key_agreement_rate", to_json(r.key_agreement)},
          {"eve_key_rate", to_json(r.eve_key)},
          {"eve_success_rate", to_json(r.eve_success)},
          {"group_mismatch_rate", to_json(r.group_mismatch)},
          {"fragment_match_rate", to_json(r.fragment_match)},
          {"eve_group_guess_rate", to_json(r.eve_group_guess)},
          {"outcome_counts", r.outcome_counts}};
}

json to_json(const EfficiencyReport& r) {
  return {{"raw_bits_per_particle", r.raw_bits_per_particle},
          {"raw_bits_per_group", r.raw_bits_per_group},
          {"net_bits_per_particle", r.net_bits_per_particle},
          {"n_groups", r.n_groups},
          {"k_checked", r.k_checked},
          {"comparison_notes", r.comparison_notes}};
}

std::string sweep_csv_row(const MCReport& r) {
  return std::string(adversary_name(r.strategy)) + "," + std::to_string(r.n_groups) + "," +
         std::to_string(r.k_checked) + "," + std::to_string(r.trials) + "," +
         fixed6(r.detection.rate) + "," + fixed6(r.detection.half_width) + "," +
         fixed6(r.analytic_detection) + "," + fixed6(r.eve_key.rate) + "," +
         fixed6(r.key_agreement.rate);
}

std::string sweep_csv(std::span<const MCReport> reports) {
  std::string out = std::string(kSweepCsvHeader) + "\n";
  for (const auto& r : reports) out += sweep_csv_row(r) + "\n";
  return out;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace entswap
