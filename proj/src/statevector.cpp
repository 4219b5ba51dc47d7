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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

namespace entswap {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

struct PairMasks {
  std::size_t first;   // mask of qubit_i
  std::size_t second;  // mask of qubit_j
};

PairMasks pair_masks(const StateVector& sv, std::string_view qubit_i, std::string_view qubit_j) {
  if (qubit_i == qubit_j) {
    throw std::invalid_argument("Bell measurement needs two distinct qubits, got '" +
                                std::string(qubit_i) + "' twice");
  }
  const std::size_t n = sv.num_qubits();
  return {std::size_t{1} << (n - 1 - sv.position(qubit_i)),
          std::size_t{1} << (n - 1 - sv.position(qubit_j))};
}

// <bell(a,b)| applied to the (i,j) slice at `base`:
// (c[0,b] + (-1)^a c[1,!b]) / sqrt2.
Complex bell_component(std::span<const Complex> amp, std::size_t base, PairMasks m,
                       BellIndex b) {
  const std::size_t lo = base | (b.parity() ? m.second : 0);
  const std::size_t hi = base | m.first | (b.parity() ? 0 : m.second);
  const double sign = b.phase() ? -1.0 : 1.0;
  return (amp[lo] + sign * amp[hi]) * kInvSqrt2;
}

StateVector collapse(const StateVector& sv, PairMasks m, BellIndex outcome, double probability) {
  const auto amp = sv.amplitudes();
  std::vector<Complex> out(amp.size(), Complex{});
  const double scale = kInvSqrt2 / std::sqrt(probability);
  const double sign = outcome.phase() ? -1.0 : 1.0;
  for (std::size_t base = 0; base < amp.size(); ++base) {
    if (base & (m.first | m.second)) continue;
    const Complex c = bell_component(amp, base, m, outcome) * scale;
    out[base | (outcome.parity() ? m.second : 0)] = c;
    out[base | m.first | (outcome.parity() ? 0 : m.second)] = sign * c;
  }
  return StateVector(sv.labels(), std::move(out));
}

MeasurementRecord make_record(std::string_view qubit_i, std::string_view qubit_j,
                              BellIndex outcome, const BellProbabilities& probs) {
  return {std::string(qubit_i), std::string(qubit_j), outcome, probs};
}

}  // namespace

StateVector::StateVector(std::vector<std::string> labels, std::vector<Complex> amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
  if (labels_.empty() || labels_.size() > kMaxQubits) {
    throw std::invalid_argument("state vector must hold 1.." + std::to_string(kMaxQubits) +
                                " qubits, got " + std::to_string(labels_.size()));
  }
  if (amplitudes_.size() != (std::size_t{1} << labels_.size())) {
    throw std::invalid_argument("amplitude count does not match 2^num_qubits");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate qubit label '" + l + "'");
  }
  if (std::abs(norm_squared() - 1.0) > kStateTolerance) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

StateVector StateVector::zero(std::string label) {
  return StateVector({std::move(label)}, {Complex{1.0}, Complex{}});
}

bool StateVector::has_label(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t StateVector::position(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw std::invalid_argument("unknown qubit label '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

StateVector make_bell(BellIndex index, std::string label_i, std::string label_j) {
  std::vector<Complex> amp(4);
  // |0 b> + (-1)^a |1 !b>
  amp[index.parity() ? 0b01 : 0b00] = kInvSqrt2;
  amp[index.parity() ? 0b10 : 0b11] = index.phase() ? -kInvSqrt2 : kInvSqrt2;
  return StateVector({std::move(label_i), std::move(label_j)}, std::move(amp));
}

StateVector make_ghz3(std::string label_i, std::string label_j, std::string label_k) {
  std::vector<Complex> amp(8);
  amp[0b000] = kInvSqrt2;
  amp[0b111] = kInvSqrt2;
  return StateVector({std::move(label_i), std::move(label_j), std::move(label_k)},
                     std::move(amp));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  for (const auto& l : b.labels()) {
    if (a.has_label(l)) throw std::invalid_argument("tensor of overlapping label '" + l + "'");
  }
  if (a.num_qubits() + b.num_qubits() > kMaxQubits) {
    throw std::invalid_argument("tensor product exceeds " + std::to_string(kMaxQubits) +
                                " qubits");
  }
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());

  const auto aa = a.amplitudes();
  const auto ba = b.amplitudes();
  std::vector<Complex> amp;
  amp.reserve(aa.size() * ba.size());
  for (const Complex& x : aa) {
    for (const Complex& y : ba) amp.push_back(x * y);
  }
  return StateVector(std::move(labels), std::move(amp));
}

BellProbabilities outcome_distribution(const StateVector& sv, std::string_view qubit_i,
                                       std::string_view qubit_j) {
  const PairMasks m = pair_masks(sv, qubit_i, qubit_j);
  const auto amp = sv.amplitudes();
  BellProbabilities probs{};
  for (std::size_t base = 0; base < amp.size(); ++base) {
    if (base & (m.first | m.second)) continue;
    for (BellIndex b : kAllBell) probs[b.ordinal()] += std::norm(bell_component(amp, base, m, b));
  }
  return probs;
}

std::pair<MeasurementRecord, StateVector> measure_bell(const StateVector& sv,
                                                       std::string_view qubit_i,
                                                       std::string_view qubit_j, Rng& rng) {
  const BellProbabilities probs = outcome_distribution(sv, qubit_i, qubit_j);
  const double u = rng.uniform();
  double cumulative = 0.0;
  std::optional<BellIndex> chosen;
  std::optional<BellIndex> last_possible;
  for (BellIndex b : kAllBell) {
    const double p = probs[b.ordinal()];
    if (p <= kMinForcedProbability) continue;
    last_possible = b;
    cumulative += p;
    if (u < cumulative) {
      chosen = b;
      break;
    }
  }
  // Rounding can leave u just above the final cumulative sum.
  const BellIndex outcome = chosen ? *chosen : *last_possible;
  const PairMasks m = pair_masks(sv, qubit_i, qubit_j);
  return {make_record(qubit_i, qubit_j, outcome, probs),
          collapse(sv, m, outcome, probs[outcome.ordinal()])};
}

std::pair<MeasurementRecord, StateVector> measure_bell_conditioned(const StateVector& sv,
                                                                   std::string_view qubit_i,
                                                                   std::string_view qubit_j,
                                                                   BellIndex outcome) {
  const BellProbabilities probs = outcome_distribution(sv, qubit_i, qubit_j);
  const double p = probs[outcome.ordinal()];
  if (p < kMinForcedProbability) {
    throw std::domain_error("forced outcome " + std::string(bell_name(outcome)) + " on (" +
                            std::string(qubit_i) + "," + std::string(qubit_j) +
                            ") has zero probability");
  }
  const PairMasks m = pair_masks(sv, qubit_i, qubit_j);
  return {make_record(qubit_i, qubit_j, outcome, probs), collapse(sv, m, outcome, p)};
}

double bell_fidelity(const StateVector& sv, std::string_view qubit_i, std::string_view qubit_j,
                     BellIndex b) {
  return outcome_distribution(sv, qubit_i, qubit_j)[b.ordinal()];
}

std::optional<BellIndex> identify_bell(const StateVector& sv, std::string_view qubit_i,
                                       std::string_view qubit_j) {
  const BellProbabilities probs = outcome_distribution(sv, qubit_i, qubit_j);
  for (BellIndex b : kAllBell) {
    if (probs[b.ordinal()] > 1.0 - kStateTolerance) return b;
  }
  return std::nullopt;
}

nlohmann::json to_json(const StateVector& sv) {
  nlohmann::json amps = nlohmann::json::array();
  for (const Complex& a : sv.amplitudes()) amps.push_back({a.real(), a.imag()});
  return {{"labels", sv.labels()}, {"amplitudes", std::move(amps)}};
}

}  // namespace entswap
