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

#include <gtest/gtest.h>

#include "entswap/statevector.hpp"

namespace entswap {
namespace {

TEST(BellXorTest, IdentityAndSelfInverse) {
  EXPECT_EQ(bell_xor(kPhiPlus, kPsiMinus), kPsiMinus);
  EXPECT_EQ(bell_xor(kPsiMinus, kPsiMinus), kPhiPlus);
  EXPECT_EQ(bell_xor(kPhiPlus, kPsiPlus), kPsiPlus);
}

TEST(BellXorTest, KleinFourGroup) {
  for (BellIndex x : kAllBell) {
    EXPECT_EQ(bell_xor(kPhiPlus, x), x);
    EXPECT_EQ(bell_xor(x, x), kPhiPlus);
    for (BellIndex y : kAllBell) {
      EXPECT_EQ(bell_xor(x, y), bell_xor(y, x));
      for (BellIndex z : kAllBell) {
        EXPECT_EQ(bell_xor(bell_xor(x, y), z), bell_xor(x, bell_xor(y, z)));
      }
    }
  }
}

// The 4x4 table must agree with what the statevector produces when a phi+
// pair is swapped against each pair state: conditioning (1,3) of
// phi+(1,2) x y(3,4) on outcome x leaves (2,4) in x XOR y.
TEST(BellXorTest, TableMatchesStatevector) {
  for (BellIndex x : kAllBell) {
    for (BellIndex y : kAllBell) {
      const auto sv = tensor(make_bell(kPhiPlus, "1", "2"), make_bell(y, "3", "4"));
      const auto [rec, post] = measure_bell_conditioned(sv, "1", "3", x);
      EXPECT_EQ(identify_bell(post, "2", "4"), bell_xor(x, y));
    }
  }
}

TEST(SwapPartnerTest, WorkedExamples) {
  EXPECT_EQ(swap_partner(kPhiPlus, kPsiPlus, kPsiPlus), kPhiPlus);
  EXPECT_EQ(swap_partner(kPhiPlus, kPhiPlus, kPhiMinus), kPhiMinus);
  EXPECT_EQ(swap_partner(kPhiPlus, kPsiMinus, kPsiMinus), kPhiPlus);
}

TEST(SwapPartnerTest, Involution) {
  for (BellIndex a : kAllBell)
    for (BellIndex b : kAllBell)
      for (BellIndex m : kAllBell) EXPECT_EQ(swap_partner(a, b, swap_partner(a, b, m)), m);
}

TEST(CodebookTest, Table) {
  EXPECT_EQ(encode_bits(kPhiPlus).str(), "00");
  EXPECT_EQ(encode_bits(kPsiMinus).str(), "01");
  EXPECT_EQ(encode_bits(kPsiPlus).str(), "10");
  EXPECT_EQ(encode_bits(kPhiMinus).str(), "11");
  EXPECT_EQ(decode_bits(BitPair::parse("00")), kPhiPlus);
  EXPECT_EQ(decode_bits(BitPair::parse("01")), kPsiMinus);
}

TEST(CodebookTest, Bijection) {
  for (BellIndex b : kAllBell) EXPECT_EQ(decode_bits(encode_bits(b)), b);
  for (const char* s : {"00", "01", "10", "11"}) {
    EXPECT_EQ(encode_bits(decode_bits(BitPair::parse(s))).str(), s);
  }
}

TEST(CodebookTest, RejectsMalformedBits) {
  EXPECT_THROW(BitPair::parse("0"), std::invalid_argument);
  EXPECT_THROW(BitPair::parse("012"), std::invalid_argument);
  EXPECT_THROW(BitPair::parse("2a"), std::invalid_argument);
}

TEST(KeyFragmentTest, AliceFirst) {
  EXPECT_EQ(group_key_fragment(kPsiPlus, kPhiPlus, 0).bits, "1000");
  EXPECT_EQ(group_key_fragment(kPhiPlus, kPhiPlus, 3).bits, "0000");
  EXPECT_EQ(group_key_fragment(kPhiPlus, kPhiPlus, 3).group_index, 3u);
  EXPECT_EQ(group_key_fragment(kPhiMinus, kPsiMinus, 1).bits, "1101");
}

// Alice sees phi- on (1,3) of phi+ x psi+; the statevector then puts (2,4) in
// psi-, so her fragment is phi- then psi-.
TEST(KeyFragmentTest, MatchesStatevectorRun) {
  const auto sv = tensor(make_bell(kPhiPlus, "1", "2"), make_bell(kPsiPlus, "3", "4"));
  const auto [rec, post] = measure_bell_conditioned(sv, "1", "3", kPhiMinus);
  const auto partner = identify_bell(post, "2", "4");
  ASSERT_TRUE(partner.has_value());
  EXPECT_EQ(*partner, kPsiMinus);
  EXPECT_EQ(group_key_fragment(rec.outcome, *partner, 1).bits, "1101");
}

TEST(BellNameTest, RoundTrip) {
  for (BellIndex b : kAllBell) EXPECT_EQ(parse_bell(bell_name(b)), b);
  EXPECT_THROW(parse_bell("phi"), std::invalid_argument);
}

}  // namespace
}  // namespace entswap
