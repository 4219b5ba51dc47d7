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

#include <string_view>
#include <vector>

#include "entswap/statevector.hpp"

namespace entswap {

/// Qubit labels inside one group. Alice always holds A1, A3 and Bob always
/// holds B2, B4, whatever the adversary did to the channel; Eve's labels
/// depend on the strategy.
namespace qubit {
inline constexpr std::string_view kAlice1 = "A1";
inline constexpr std::string_view kAlice3 = "A3";
inline constexpr std::string_view kBob2 = "B2";
inline constexpr std::string_view kBob4 = "B4";
// Eve, Bob-facing (type III) or private (type I): pairs (E1,B2|E2), (E3,B4|E4)
inline constexpr std::string_view kEve1 = "E1";
inline constexpr std::string_view kEve3 = "E3";
// Eve, Alice-facing (type III) or private partners (type I)
inline constexpr std::string_view kEve2 = "E2";
inline constexpr std::string_view kEve4 = "E4";
// Eve's GHZ branches (type II)
inline constexpr std::string_view kEve5 = "E5";
inline constexpr std::string_view kEve6 = "E6";
}  // namespace qubit

/// The physical quantum state behind one group: a set of mutually
/// unentangled systems. A Bell measurement must address two qubits of the
/// same system.
class GroupChannel {
 public:
  GroupChannel() = default;
  explicit GroupChannel(std::vector<StateVector> systems);

  const std::vector<StateVector>& systems() const { return systems_; }
  const StateVector& system_of(std::string_view label) const;

  BellProbabilities distribution(std::string_view qubit_i, std::string_view qubit_j) const;
  MeasurementRecord measure(std::string_view qubit_i, std::string_view qubit_j, Rng& rng);
  MeasurementRecord measure_forced(std::string_view qubit_i, std::string_view qubit_j,
                                   BellIndex outcome);

 private:
  std::size_t index_of(std::string_view qubit_i, std::string_view qubit_j) const;

  std::vector<StateVector> systems_;
};

}  // namespace entswap
