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

#include "entswap/bell.hpp"

#include <stdexcept>

namespace entswap {

namespace {

// Indexed by ordinal (phi+, phi-, psi+, psi-). The codebook is not linear in
// (phase, parity) so it stays an explicit table.
constexpr std::array<BitPair, 4> kCodebook{{
    {0, 0},  // phi+
    {1, 1},  // phi-
    {1, 0},  // psi+
    {0, 1},  // psi-
}};

constexpr std::array<std::string_view, 4> kNames{"phi+", "phi-", "psi+", "psi-"};

}  // namespace

std::string BitPair::str() const {
  return {static_cast<char>('0' + hi), static_cast<char>('0' + lo)};
}

BitPair BitPair::parse(std::string_view text) {
  if (text.size() != 2 || (text[0] != '0' && text[0] != '1') ||
      (text[1] != '0' && text[1] != '1')) {
    throw std::invalid_argument("bit pair must be two characters of '0'/'1': " +
                                std::string(text));
  }
  return {static_cast<std::uint8_t>(text[0] - '0'), static_cast<std::uint8_t>(text[1] - '0')};
}

BitPair encode_bits(BellIndex b) { return kCodebook[b.ordinal()]; }

BellIndex decode_bits(BitPair bits) {
  for (BellIndex b : kAllBell) {
    if (kCodebook[b.ordinal()] == bits) return b;
  }
  throw std::invalid_argument("bit pair outside codebook");
}

KeyFragment group_key_fragment(BellIndex alice_outcome, BellIndex bob_outcome,
                               std::size_t group_index) {
  return {encode_bits(alice_outcome).str() + encode_bits(bob_outcome).str(), group_index};
}

std::string_view bell_name(BellIndex b) { return kNames[b.ordinal()]; }

BellIndex parse_bell(std::string_view name) {
  for (BellIndex b : kAllBell) {
    if (kNames[b.ordinal()] == name) return b;
  }
  throw std::invalid_argument("unknown Bell state name: " + std::string(name));
}

}  // namespace entswap
