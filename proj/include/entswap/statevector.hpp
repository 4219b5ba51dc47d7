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

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "entswap/bell.hpp"
#include "entswap/rng.hpp"

namespace entswap {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 12;
inline constexpr double kStateTolerance = 1e-9;
/// Conditioned measurement refuses outcomes below this probability.
inline constexpr double kMinForcedProbability = 1e-12;

/// Dense pure state over labeled qubits.
///
/// Qubit ordering: bit k of an amplitude index, counted from the most
/// significant end, belongs to labels()[k]. So for labels {"A1", "B2"} the
/// amplitude at index 0b10 is <A1=1, B2=0|psi>.
class StateVector {
 public:
  /// Validates size, label uniqueness and unit norm.
  StateVector(std::vector<std::string> labels, std::vector<Complex> amplitudes);

  /// |0> on one qubit.
  static StateVector zero(std::string label);

  std::size_t num_qubits() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  bool has_label(std::string_view label) const;
  /// Position k of `label`; throws std::invalid_argument for unknown labels.
  std::size_t position(std::string_view label) const;

  double norm_squared() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Complex> amplitudes_;
};

using BellProbabilities = std::array<double, 4>;  // indexed by BellIndex::ordinal()

struct MeasurementRecord {
  std::string qubit_i;
  std::string qubit_j;
  BellIndex outcome;
  BellProbabilities probabilities{};
};

StateVector make_bell(BellIndex index, std::string label_i, std::string label_j);
StateVector make_ghz3(std::string label_i, std::string label_j, std::string label_k);

/// Kronecker product, labels of `a` first.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Born probabilities of the four Bell-basis outcomes on (qubit_i, qubit_j).
BellProbabilities outcome_distribution(const StateVector& sv, std::string_view qubit_i,
                                       std::string_view qubit_j);

/// Samples a Bell outcome by inverse CDF over (phi+, phi-, psi+, psi-) and
/// returns it with the collapsed, renormalized state on all qubits.
std::pair<MeasurementRecord, StateVector> measure_bell(const StateVector& sv,
                                                       std::string_view qubit_i,
                                                       std::string_view qubit_j, Rng& rng);

/// Same, but with the outcome forced. Throws std::domain_error when the
/// forced outcome has probability below kMinForcedProbability.
std::pair<MeasurementRecord, StateVector> measure_bell_conditioned(const StateVector& sv,
                                                                   std::string_view qubit_i,
                                                                   std::string_view qubit_j,
                                                                   BellIndex outcome);

/// Bell state carried by (qubit_i, qubit_j) when that pair is in a pure Bell
/// state up to global phase; nullopt when it is entangled with the rest or
/// in a superposition of Bell states.
std::optional<BellIndex> identify_bell(const StateVector& sv, std::string_view qubit_i,
                                       std::string_view qubit_j);

/// Squared overlap of the pair's reduced state with make_bell(b).
double bell_fidelity(const StateVector& sv, std::string_view qubit_i, std::string_view qubit_j,
                     BellIndex b);

/// {"labels": [...], "amplitudes": [[re, im], ...]}
nlohmann::json to_json(const StateVector& sv);

}  // namespace entswap
