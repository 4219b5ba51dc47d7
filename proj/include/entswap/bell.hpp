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
#include <cstdint>
#include <string>
#include <string_view>

namespace entswap {

/// One of the four Bell states, stored as (phase, parity) bits.
///
///   phi+ = (0,0)  (|00> + |11>)/sqrt2
///   phi- = (1,0)  (|00> - |11>)/sqrt2
///   psi+ = (0,1)  (|01> + |10>)/sqrt2
///   psi- = (1,1)  (|01> - |10>)/sqrt2
///
/// In this indexing entanglement swapping is component-wise XOR.
class BellIndex {
 public:
  constexpr BellIndex() = default;
  constexpr BellIndex(std::uint8_t phase, std::uint8_t parity)
      : phase_(phase & 1u), parity_(parity & 1u) {}

  /// Ordinal in the fixed order phi+, phi-, psi+, psi- (phase | parity << 1).
  static constexpr BellIndex from_ordinal(unsigned ordinal) {
    return BellIndex(static_cast<std::uint8_t>(ordinal & 1u),
                     static_cast<std::uint8_t>((ordinal >> 1) & 1u));
  }

  constexpr std::uint8_t phase() const { return phase_; }
  constexpr std::uint8_t parity() const { return parity_; }
  constexpr unsigned ordinal() const { return static_cast<unsigned>(phase_ | (parity_ << 1)); }

  friend constexpr bool operator==(BellIndex, BellIndex) = default;

 private:
  std::uint8_t phase_ = 0;
  std::uint8_t parity_ = 0;
};

inline constexpr BellIndex kPhiPlus{0, 0};
inline constexpr BellIndex kPhiMinus{1, 0};
inline constexpr BellIndex kPsiPlus{0, 1};
inline constexpr BellIndex kPsiMinus{1, 1};

/// All four states in ordinal order.
inline constexpr std::array<BellIndex, 4> kAllBell{kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus};

/// Two classical bits; renders as "00".."11".
struct BitPair {
  std::uint8_t hi = 0;
  std::uint8_t lo = 0;

  std::string str() const;
  static BitPair parse(std::string_view text);

  friend constexpr bool operator==(BitPair, BitPair) = default;
};

/// Four key bits contributed by one group of two pairs.
struct KeyFragment {
  std::string bits;
  std::size_t group_index = 0;

  friend bool operator==(const KeyFragment&, const KeyFragment&) = default;
};

constexpr BellIndex bell_xor(BellIndex x, BellIndex y) {
  return BellIndex(x.phase() ^ y.phase(), x.parity() ^ y.parity());
}

/// Bell state left on (2,4) when pairs (1,2)=init_a and (3,4)=init_b are
/// swapped by a Bell measurement on (1,3) yielding `measured`. Involutive in
/// `measured`, so the same call recovers the peer's outcome from either side.
constexpr BellIndex swap_partner(BellIndex init_a, BellIndex init_b, BellIndex measured) {
  return bell_xor(bell_xor(init_a, init_b), measured);
}

/// Codebook phi+ -> 00, psi- -> 01, psi+ -> 10, phi- -> 11.
BitPair encode_bits(BellIndex b);
BellIndex decode_bits(BitPair bits);

KeyFragment group_key_fragment(BellIndex alice_outcome, BellIndex bob_outcome,
                               std::size_t group_index);

/// "phi+", "phi-", "psi+", "psi-".
std::string_view bell_name(BellIndex b);
BellIndex parse_bell(std::string_view name);

}  // namespace entswap
