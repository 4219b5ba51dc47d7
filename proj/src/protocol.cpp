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

#include "entswap/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "entswap/error.hpp"

namespace entswap {

namespace {

// Domain separator so the declared-state draw never shares a stream with the
// measurement stream of the same seed.
constexpr std::uint64_t kDeclaredStreamTag = 0x6465636c61726564ull;

void require_stage(const SessionState& s, SessionStage expected, std::string_view step) {
  if (s.stage != expected) throw ProtocolError("protocol step '" + std::string(step) +
                                               "' called out of order");
}

void check_forced(std::span<const BellIndex> forced, std::size_t n) {
  if (!forced.empty() && forced.size() != n) {
    throw std::invalid_argument("forced outcomes must cover every group");
  }
}

MeasurementStage stage_of(const SessionState& s) {
  return {s.stage >= SessionStage::kAliceMeasured, s.stage >= SessionStage::kBobMeasured};
}

}  // namespace

std::string_view party_name(Party p) { return p == Party::kAlice ? "alice" : "bob"; }

std::string_view ClassicalMessage::kind() const {
  struct Visitor {
    std::string_view operator()(const MeasuredAnnouncement&) const {
      return "measured_announcement";
    }
    std::string_view operator()(const CheckRequest&) const { return "check_request"; }
    std::string_view operator()(const Verdict&) const { return "verdict"; }
  };
  return std::visit(Visitor{}, payload);
}

void validate(const SessionConfig& config) {
  if (config.n_groups == 0) throw std::invalid_argument("n_groups must be at least 1");
  if (!(config.check_fraction > 0.0 && config.check_fraction <= 1.0)) {
    throw std::invalid_argument("check_fraction must lie in (0, 1]");
  }
  if (config.pair_states.kind == PairStatePolicy::Kind::kFixedList &&
      config.pair_states.fixed.size() != 2 * config.n_groups) {
    throw std::invalid_argument("fixed pair-state list needs " +
                                std::to_string(2 * config.n_groups) + " entries, got " +
                                std::to_string(config.pair_states.fixed.size()));
  }
}

std::size_t check_count(const SessionConfig& config) {
  const double raw = config.check_fraction * static_cast<double>(config.n_groups);
  // The slack keeps k/n * n from rounding up to k + 1.
  const auto k = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::clamp<std::size_t>(k, 1, config.n_groups);
}

std::vector<DeclaredGroup> declared_groups(const SessionConfig& config) {
  std::vector<BellIndex> pairs(2 * config.n_groups, kPhiPlus);
  switch (config.pair_states.kind) {
    case PairStatePolicy::Kind::kAllPhiPlus:
      break;
    case PairStatePolicy::Kind::kFixedList:
      pairs = config.pair_states.fixed;
      break;
    case PairStatePolicy::Kind::kRandomKnown: {
      Rng draw(config.pair_states.seed.value_or(splitmix64(config.seed ^ kDeclaredStreamTag)));
      for (auto& p : pairs) p = BellIndex::from_ordinal(static_cast<unsigned>(draw.below(4)));
      break;
    }
  }
  std::vector<DeclaredGroup> groups;
  groups.reserve(config.n_groups);
  for (std::size_t g = 0; g < config.n_groups; ++g) groups.push_back({pairs[2 * g], pairs[2 * g + 1]});
  return groups;
}

SessionState setup_session(const SessionConfig& config, AdversaryStrategy adversary, Rng rng) {
  validate(config);
  SessionState s;
  s.config = config;
  s.declared = declared_groups(config);
  s.channels = corrupt_channels(adversary, s.declared);
  adversary.observations.clear();
  s.adversary = std::move(adversary);
  s.rng = rng;
  s.groups.reserve(config.n_groups);
  for (std::size_t g = 0; g < config.n_groups; ++g) {
    GroupRecord r;
    r.group_index = g;
    r.pair_a_state = s.declared[g].pair_a;
    r.pair_b_state = s.declared[g].pair_b;
    s.groups.push_back(r);
  }
  return s;
}

MeasuredAnnouncement alice_measure(SessionState& s, std::span<const BellIndex> forced) {
  require_stage(s, SessionStage::kReady, "alice_measure");
  check_forced(forced, s.groups.size());
  for (std::size_t g = 0; g < s.groups.size(); ++g) {
    auto& channel = s.channels[g];
    const BellIndex own =
        forced.empty() ? channel.measure(qubit::kAlice1, qubit::kAlice3, s.rng).outcome
                       : channel.measure_forced(qubit::kAlice1, qubit::kAlice3, forced[g]).outcome;
    const DeclaredGroup& d = s.declared[g];
    GroupRecord& r = s.groups[g];
    r.alice_outcome = own;
    r.alice_fragment = group_key_fragment(own, swap_partner(d.pair_a, d.pair_b, own), g);
  }
  s.stage = SessionStage::kAliceMeasured;
  if (s.adversary.active() && s.adversary.eve_before_bob) {
    eve_measure(s.adversary, s.channels, s.rng, stage_of(s));
  }
  MeasuredAnnouncement ann{s.groups.size()};
  s.transcript.push_back({Party::kAlice, ann});
  return ann;
}

void bob_measure(SessionState& s, const MeasuredAnnouncement& announcement,
                 std::span<const BellIndex> forced) {
  if (s.stage == SessionStage::kReady) {
    throw ProtocolError("bob cannot measure before alice's announcement");
  }
  require_stage(s, SessionStage::kAliceMeasured, "bob_measure");
  if (announcement.groups_measured != s.groups.size()) {
    throw ProtocolError("announcement covers a different number of groups");
  }
  check_forced(forced, s.groups.size());
  for (std::size_t g = 0; g < s.groups.size(); ++g) {
    auto& channel = s.channels[g];
    const BellIndex own =
        forced.empty() ? channel.measure(qubit::kBob2, qubit::kBob4, s.rng).outcome
                       : channel.measure_forced(qubit::kBob2, qubit::kBob4, forced[g]).outcome;
    const DeclaredGroup& d = s.declared[g];
    GroupRecord& r = s.groups[g];
    r.bob_outcome = own;
    r.bob_fragment = group_key_fragment(swap_partner(d.pair_a, d.pair_b, own), own, g);
  }
  s.stage = SessionStage::kBobMeasured;
  if (s.adversary.active() && !s.adversary.eve_before_bob) {
    eve_measure(s.adversary, s.channels, s.rng, stage_of(s));
  }
}

CheckRequest bob_select_checks(SessionState& s) {
  require_stage(s, SessionStage::kBobMeasured, "bob_select_checks");
  const std::size_t n = s.groups.size();
  const std::size_t k = check_count(s.config);

  // Partial Fisher-Yates: the first k slots are a uniform k-subset.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(s.rng.below(n - i));
    std::swap(order[i], order[j]);
  }
  order.resize(k);
  std::sort(order.begin(), order.end());

  CheckRequest req;
  req.indices = order;
  for (std::size_t idx : order) {
    s.groups[idx].checked = true;
    req.fragments.push_back(s.groups[idx].bob_fragment->bits);
  }
  s.transcript.push_back({Party::kBob, req});
  s.stage = SessionStage::kChecksSent;
  return req;
}

Verdict alice_verify(SessionState& s, const CheckRequest& req) {
  require_stage(s, SessionStage::kChecksSent, "alice_verify");
  if (req.indices.size() != req.fragments.size()) {
    throw ProtocolError("check request has " + std::to_string(req.indices.size()) +
                        " indices but " + std::to_string(req.fragments.size()) + " fragments");
  }
  std::vector<bool> seen(s.groups.size(), false);
  Verdict v;
  for (std::size_t i = 0; i < req.indices.size(); ++i) {
    const std::size_t idx = req.indices[i];
    if (idx >= s.groups.size()) {
      throw ProtocolError("check index " + std::to_string(idx) + " out of range");
    }
    if (seen[idx]) throw ProtocolError("check index " + std::to_string(idx) + " repeated");
    seen[idx] = true;
    if (s.groups[idx].alice_fragment->bits != req.fragments[i]) v.mismatched.push_back(idx);
  }
  v.accept = v.mismatched.empty();
  s.transcript.push_back({Party::kAlice, v});
  s.stage = SessionStage::kVerified;
  return v;
}

SessionReport finalize_key(SessionState& s, const Verdict& verdict) {
  require_stage(s, SessionStage::kVerified, "finalize_key");
  SessionReport r;
  r.config = s.config;
  r.adversary = s.adversary.kind;
  r.accepted = verdict.accept;
  if (verdict.accept) {
    for (const auto& g : s.groups) {
      if (g.checked) continue;
      r.alice_key += g.alice_fragment->bits;
      r.bob_key += g.bob_fragment->bits;
    }
  }
  r.keys_equal = r.alice_key == r.bob_key;
  r.checked_groups = static_cast<std::size_t>(
      std::count_if(s.groups.begin(), s.groups.end(), [](const auto& g) { return g.checked; }));
  r.transcript = s.transcript;
  r.groups = s.groups;
  if (s.adversary.active()) {
    std::vector<KeyFragment> alice;
    alice.reserve(s.groups.size());
    for (const auto& g : s.groups) alice.push_back(*g.alice_fragment);
    r.eve = score_guess(eve_guess_key(s.adversary, s.declared), alice);
    r.eve_outcome = eve_success(r, *r.eve);
  }
  s.stage = SessionStage::kFinalized;
  return r;
}

SessionReport run_session(const SessionConfig& config, AdversaryStrategy adversary) {
  SessionState s = setup_session(config, std::move(adversary), Rng(config.seed));
  const MeasuredAnnouncement ann = alice_measure(s);
  bob_measure(s, ann);
  const CheckRequest req = bob_select_checks(s);
  const Verdict v = alice_verify(s, req);
  return finalize_key(s, v);
}

}  // namespace entswap
