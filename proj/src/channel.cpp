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

#include "entswap/channel.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace entswap {

GroupChannel::GroupChannel(std::vector<StateVector> systems) : systems_(std::move(systems)) {
  std::unordered_set<std::string> seen;
  for (const auto& sv : systems_) {
    for (const auto& l : sv.labels()) {
      if (!seen.insert(l).second) {
        throw std::invalid_argument("qubit '" + l + "' appears in two systems");
      }
    }
  }
}

const StateVector& GroupChannel::system_of(std::string_view label) const {
  for (const auto& sv : systems_) {
    if (sv.has_label(label)) return sv;
  }
  throw std::invalid_argument("no system holds qubit '" + std::string(label) + "'");
}

std::size_t GroupChannel::index_of(std::string_view qubit_i, std::string_view qubit_j) const {
  for (std::size_t s = 0; s < systems_.size(); ++s) {
    if (!systems_[s].has_label(qubit_i)) continue;
    if (!systems_[s].has_label(qubit_j)) {
      throw std::invalid_argument("qubits '" + std::string(qubit_i) + "' and '" +
                                  std::string(qubit_j) + "' live in different systems");
    }
    return s;
  }
  throw std::invalid_argument("no system holds qubit '" + std::string(qubit_i) + "'");
}

BellProbabilities GroupChannel::distribution(std::string_view qubit_i,
                                             std::string_view qubit_j) const {
  return outcome_distribution(systems_[index_of(qubit_i, qubit_j)], qubit_i, qubit_j);
}

MeasurementRecord GroupChannel::measure(std::string_view qubit_i, std::string_view qubit_j,
                                        Rng& rng) {
  auto& sys = systems_[index_of(qubit_i, qubit_j)];
  auto [record, collapsed] = measure_bell(sys, qubit_i, qubit_j, rng);
  sys = std::move(collapsed);
  return record;
}

MeasurementRecord GroupChannel::measure_forced(std::string_view qubit_i,
                                               std::string_view qubit_j, BellIndex outcome) {
  auto& sys = systems_[index_of(qubit_i, qubit_j)];
  auto [record, collapsed] = measure_bell_conditioned(sys, qubit_i, qubit_j, outcome);
  sys = std::move(collapsed);
  return record;
}

}  // namespace entswap
