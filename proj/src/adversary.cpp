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

#include "entswap/adversary.hpp"

#include <stdexcept>
#include <string>

#include "entswap/error.hpp"
#include "entswap/protocol.hpp"

namespace entswap {

namespace {

StateVector honest_system(const DeclaredGroup& g) {
  return tensor(make_bell(g.pair_a, std::string(qubit::kAlice1), std::string(qubit::kBob2)),
                make_bell(g.pair_b, std::string(qubit::kAlice3), std::string(qubit::kBob4)));
}

void require_phi_plus(AdversaryKind kind, const DeclaredGroup& g, std::size_t index) {
  if (g.pair_a != kPhiPlus || g.pair_b != kPhiPlus) {
    throw UnsupportedConfiguration(std::string(adversary_name(kind)) +
                                   " is only defined for phi+ channels; group " +
                                   std::to_string(index) + " declares " +
                                   std::string(bell_name(g.pair_a)) + "," +
                                   std::string(bell_name(g.pair_b)));
  }
}

}  // namespace

std::string_view adversary_name(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::kNone: return "none";
    case AdversaryKind::kTypeI: return "type1";
    case AdversaryKind::kTypeII: return "type2";
    case AdversaryKind::kTypeIII: return "type3";
  }
  return "none";
}

AdversaryKind parse_adversary(std::string_view name) {
  for (auto kind : {AdversaryKind::kNone, AdversaryKind::kTypeI, AdversaryKind::kTypeII,
                    AdversaryKind::kTypeIII}) {
    if (adversary_name(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown adversary '" + std::string(name) +
                              "' (expected none, type1, type2 or type3)");
}

AdversaryStrategy AdversaryStrategy::make(AdversaryKind kind) {
  AdversaryStrategy s;
  s.kind = kind;
  s.eve_before_bob = kind == AdversaryKind::kTypeIII;
  return s;
}

std::vector<GroupChannel> corrupt_channels(const AdversaryStrategy& strategy,
                                           std::span<const DeclaredGroup> declared) {
  using namespace qubit;
  std::vector<GroupChannel> channels;
  channels.reserve(declared.size());
  for (std::size_t g = 0; g < declared.size(); ++g) {
    const DeclaredGroup& d = declared[g];
    std::vector<StateVector> systems;
    switch (strategy.kind) {
      case AdversaryKind::kNone:
        systems.push_back(honest_system(d));
        break;
      case AdversaryKind::kTypeI:
        // Honest channel untouched; Eve swaps her own copies of the declared pairs.
        systems.push_back(honest_system(d));
        systems.push_back(tensor(make_bell(d.pair_a, std::string(kEve1), std::string(kEve2)),
                                 make_bell(d.pair_b, std::string(kEve3), std::string(kEve4))));
        break;
      case AdversaryKind::kTypeII:
        require_phi_plus(strategy.kind, d, g);
        systems.push_back(tensor(
            make_ghz3(std::string(kAlice1), std::string(kBob2), std::string(kEve5)),
            make_ghz3(std::string(kAlice3), std::string(kBob4), std::string(kEve6))));
        break;
      case AdversaryKind::kTypeIII:
        require_phi_plus(strategy.kind, d, g);
        systems.push_back(tensor(make_bell(kPhiPlus, std::string(kAlice1), std::string(kEve2)),
                                 make_bell(kPhiPlus, std::string(kAlice3), std::string(kEve4))));
        systems.push_back(tensor(make_bell(kPhiPlus, std::string(kEve1), std::string(kBob2)),
                                 make_bell(kPhiPlus, std::string(kEve3), std::string(kBob4))));
        break;
    }
    channels.emplace_back(std::move(systems));
  }
  return channels;
}

void eve_measure(AdversaryStrategy& strategy, std::vector<GroupChannel>& channels, Rng& rng,
                 MeasurementStage stage) {
  using namespace qubit;
  if (!strategy.active()) return;
  if (!strategy.observations.empty()) throw ProtocolError("eve has already measured");
  if (strategy.kind != AdversaryKind::kTypeI) {
    if (!stage.alice_measured) throw ProtocolError("eve measures only after alice");
    if (stage.bob_measured == strategy.eve_before_bob) {
      throw ProtocolError(strategy.eve_before_bob ? "eve was scheduled before bob"
                                                  : "eve was scheduled after bob");
    }
  }

  std::vector<EveObservation> observations(channels.size());
  for (std::size_t g = 0; g < channels.size(); ++g) {
    switch (strategy.kind) {
      case AdversaryKind::kNone:
        break;
      case AdversaryKind::kTypeI:
        observations[g].outcome = channels[g].measure(kEve1, kEve3, rng).outcome;
        break;
      case AdversaryKind::kTypeII:
        observations[g].outcome = channels[g].measure(kEve5, kEve6, rng).outcome;
        break;
      case AdversaryKind::kTypeIII:
        observations[g].alice_facing = channels[g].measure(kEve2, kEve4, rng).outcome;
        observations[g].outcome = channels[g].measure(kEve1, kEve3, rng).outcome;
        break;
    }
  }
  strategy.observations = std::move(observations);
}

std::vector<KeyFragment> eve_guess_key(const AdversaryStrategy& strategy,
                                       std::span<const DeclaredGroup> declared) {
  std::vector<KeyFragment> guess;
  if (!strategy.active()) return guess;
  if (strategy.observations.size() != declared.size()) {
    throw ProtocolError("eve guesses only after measuring every group");
  }
  guess.reserve(declared.size());
  for (std::size_t g = 0; g < declared.size(); ++g) {
    const EveObservation& obs = strategy.observations[g];
    BellIndex alice_guess;
    if (strategy.kind == AdversaryKind::kTypeIII) {
      // Her Alice-facing pairs are both phi+, so the swap hands her Alice's outcome.
      alice_guess = swap_partner(kPhiPlus, kPhiPlus, *obs.alice_facing);
    } else {
      // Her own outcome stands in for Alice's.
      alice_guess = *obs.outcome;
    }
    const DeclaredGroup& d = declared[g];
    guess.push_back(
        group_key_fragment(alice_guess, swap_partner(d.pair_a, d.pair_b, alice_guess), g));
  }
  return guess;
}

EveReport score_guess(std::span<const KeyFragment> guess,
                      std::span<const KeyFragment> alice_fragments) {
  if (guess.size() != alice_fragments.size()) {
    throw std::invalid_argument("guess and key cover different numbers of groups");
  }
  EveReport report;
  report.full_key_correct = true;
  for (std::size_t g = 0; g < guess.size(); ++g) {
    report.guessed_key += guess[g].bits;
    const bool ok = guess[g].bits == alice_fragments[g].bits;
    report.per_group_correct.push_back(ok);
    report.full_key_correct = report.full_key_correct && ok;
  }
  return report;
}

EveSuccess eve_success(const SessionReport& report, const EveReport& eve) {
  EveSuccess s;
  s.undetected = report.accepted;
  if (!report.accepted || report.alice_key.empty()) return s;
  if (eve.guessed_key.size() != 4 * report.groups.size()) return s;
  std::string sifted;
  for (const auto& g : report.groups) {
    if (!g.checked) sifted += eve.guessed_key.substr(4 * g.group_index, 4);
  }
  s.key_stolen = sifted == report.alice_key;
  return s;
}

}  // namespace entswap
