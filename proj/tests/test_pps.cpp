// Copyright 2026 The ppsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "ppsim/error.hpp"
#include "ppsim/pps.hpp"
#include "support.hpp"

namespace ppsim {
namespace {

using testing::code_of;
using testing::correlate_bits;
using testing::lfsr_recurrence;
using testing::rows_from_base;

std::vector<int> to_ints(std::span<const Bit> bits) { return {bits.begin(), bits.end()}; }

bool is_rotation(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return false;
}

TEST(MSequence, DegreeThreeBaseRow) {
  const auto seq = generate_m_sequence(primitive_polynomial(3), 3);
  EXPECT_EQ(to_ints(seq.bits), (std::vector<int>{1, 1, 1, 0, 0, 1, 0}));
}

TEST(MSequence, DegreeTwoHandRun) {
  const std::vector<Bit> poly{1, 1, 1};
  const std::vector<Bit> seed{1, 0};
  const auto seq = generate_m_sequence(poly, 2, seed);
  EXPECT_TRUE(is_rotation(to_ints(seq.bits), {1, 1, 0}));
}

TEST(MSequence, MatchesRecurrenceForEveryBuiltInDegree) {
  for (int s = 2; s <= 16; ++s) {
    const auto poly = primitive_polynomial(s);
    const auto seq = generate_m_sequence(poly, s);
    ASSERT_EQ(seq.size(), (std::size_t{1} << s) - 1) << "s=" << s;
    EXPECT_EQ(to_ints(seq.bits), lfsr_recurrence(to_ints(poly), std::vector<int>(s, 1))) << "s=" << s;
    EXPECT_EQ(seq.ones(), std::size_t{1} << (s - 1)) << "s=" << s;
  }
}

TEST(MSequence, ZeroSeedIsDegenerate) {
  const std::vector<Bit> seed{0, 0, 0};
  EXPECT_EQ(code_of([&] { generate_m_sequence(primitive_polynomial(3), 3, seed); }),
            ErrorCode::kDegenerateState);
}

TEST(MSequence, NonPrimitivePolynomialRejected) {
  const std::vector<Bit> cube{1, 1, 1, 1};  // (x + 1)^3
  EXPECT_EQ(code_of([&] { generate_m_sequence(cube, 3); }), ErrorCode::kNotPrimitive);
  const std::vector<Bit> square{1, 0, 1, 0, 1};  // (x^2 + x + 1)^2
  EXPECT_EQ(code_of([&] { generate_m_sequence(square, 4); }), ErrorCode::kNotPrimitive);
  try {
    generate_m_sequence(cube, 3);
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "polynomial not primitive");
  }
}

TEST(MSequence, BadShapesRejected) {
  EXPECT_EQ(code_of([] { primitive_polynomial(1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { primitive_polynomial(17); }), ErrorCode::kInvalidArgument);
  const std::vector<Bit> short_seed{1, 1};
  EXPECT_EQ(code_of([&] { generate_m_sequence(primitive_polynomial(3), 3, short_seed); }),
            ErrorCode::kInvalidArgument);
}

TEST(PpsSet, DegreeThreeRowsMatchPublishedTable) {
  const std::vector<std::vector<int>> expected{
      {0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 1, 0, 0}, {1, 1, 0, 0, 1, 0, 1, 0},
      {1, 0, 0, 1, 0, 1, 1, 0}, {0, 0, 1, 0, 1, 1, 1, 0}, {0, 1, 0, 1, 1, 1, 0, 0},
      {1, 0, 1, 1, 1, 0, 0, 0}, {0, 1, 1, 1, 0, 0, 1, 0}};
  const PpsSet set = build_pps_set(3);
  ASSERT_EQ(set.size(), 8U);
  for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(to_ints(set[j].bits()), expected[j]) << "row " << j;
}

TEST(PpsSet, RowsAreShiftsWithTrailingZero) {
  for (int s = 2; s <= 10; ++s) {
    const auto poly = primitive_polynomial(s);
    const PpsSet set = build_pps_set(s);
    const auto rows = rows_from_base(lfsr_recurrence(to_ints(poly), std::vector<int>(s, 1)));
    ASSERT_EQ(set.size(), rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) ASSERT_EQ(to_ints(set[j].bits()), rows[j]) << s << "/" << j;
    EXPECT_EQ(set.usable(), set.size() - 1);
    EXPECT_EQ(set.length(), std::size_t{1} << s);
  }
}

TEST(PpsSet, PhasorsFollowMapping) {
  const PpsSet pi_set = build_pps_set(3, kMappingPi);
  const PpsSet half = build_pps_set(3, kMappingHalfPi);
  EXPECT_TRUE(pi_set.has_pi_mapping());
  EXPECT_FALSE(half.has_pi_mapping());
  for (std::size_t k = 0; k < 8; ++k) {
    const bool one = pi_set[1].bits()[k] == 1;
    EXPECT_EQ(pi_set[1].phasors()[k], Complex(one ? -1.0 : 1.0, 0.0));
    EXPECT_EQ(half[1].phasors()[k], one ? Complex(0.0, 1.0) : Complex(1.0, 0.0));
    EXPECT_DOUBLE_EQ(half[1].phase(k), one ? kMappingHalfPi : 0.0);
  }
}

TEST(PpsSet, ExplicitRowsValidated) {
  std::vector<std::vector<Bit>> rows{{0, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}};
  const PpsSet ok(2, {1, 1, 1}, kMappingPi, rows);
  EXPECT_EQ(ok.find_row(rows[2]), 2U);
  const std::vector<Bit> missing{1, 1, 1, 1};
  EXPECT_FALSE(ok.find_row(missing).has_value());

  auto three = rows;
  three.pop_back();
  EXPECT_EQ(code_of([&] { PpsSet(2, {1, 1, 1}, kMappingPi, three); }), ErrorCode::kLengthMismatch);
  auto dirty = rows;
  dirty[0][1] = 1;
  EXPECT_EQ(code_of([&] { PpsSet(2, {1, 1, 1}, kMappingPi, dirty); }), ErrorCode::kInvalidArgument);
  auto ragged = rows;
  ragged[3].pop_back();
  EXPECT_EQ(code_of([&] { PpsSet(2, {1, 1, 1}, kMappingPi, ragged); }), ErrorCode::kLengthMismatch);
  EXPECT_EQ(code_of([&] { (void)ok[4]; }), ErrorCode::kInvalidArgument);
}

TEST(Correlate, SelfIsOne) {
  const PpsSet set = build_pps_set(3);
  for (std::size_t j = 0; j < set.size(); ++j) EXPECT_NEAR(std::abs(correlate(set[j], set[j]) - 1.0), 0.0, 1e-15);
}

TEST(Correlate, DistinctPairsVanishUnderPi) {
  const PpsSet set = build_pps_set(3);
  int pairs = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      const Complex lib = correlate(set[i], set[j]);
      const Complex ref = correlate_bits(to_ints(set[i].bits()), to_ints(set[j].bits()), kMappingPi);
      EXPECT_LT(std::abs(lib), 1e-12);
      EXPECT_LT(std::abs(lib - ref), 1e-12);
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 28);
}

TEST(Correlate, HalfPiMappingIsNotOrthogonal) {
  const PpsSet set = build_pps_set(3, kMappingHalfPi);
  const Complex e = correlate(set[1], set[2]);
  const Complex ref = correlate_bits(to_ints(set[1].bits()), to_ints(set[2].bits()), kMappingHalfPi);
  EXPECT_NEAR(e.real(), 0.5, 1e-12);
  EXPECT_LT(std::abs(e - ref), 1e-12);
}

TEST(Correlate, LengthMismatchRejected) {
  const PpsSet a = build_pps_set(2);
  const PpsSet b = build_pps_set(3);
  EXPECT_EQ(code_of([&] { correlate(a[1], b[1]); }), ErrorCode::kLengthMismatch);
}

TEST(Correlate, OrthogonalForDegreesTwoToTen) {
  for (int s = 2; s <= 10; ++s) {
    const PpsSet set = build_pps_set(s);
    double worst = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = 0; j < set.size(); ++j) {
        worst = std::max(worst, std::abs(correlate(set[i], set[j]) - (i == j ? 1.0 : 0.0)));
      }
    }
    EXPECT_LT(worst, 1e-12) << "s=" << s;
  }
}

TEST(Balance, ZeroForEveryNonzeroSequence) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> theta(-10.0, 10.0);
  for (int s = 2; s <= 10; ++s) {
    const PpsSet set = build_pps_set(s);
    for (std::size_t j = 1; j < set.size(); ++j) {
      EXPECT_LT(std::abs(balance_sum(set[j], 0.0)), 1e-12);
      for (int t = 0; t < 10; ++t) ASSERT_LT(std::abs(balance_sum(set[j], theta(rng))), 1e-12) << s << "/" << j;
    }
  }
}

TEST(Balance, SpecificCases) {
  const PpsSet set = build_pps_set(3);
  EXPECT_LT(std::abs(balance_sum(set[3], 1.234)), 1e-12);
  const Complex zero_row = balance_sum(set[0], 0.7);
  EXPECT_LT(std::abs(zero_row - 8.0 * std::polar(1.0, 0.7)), 1e-12);
}

TEST(SequenceProduct, Examples) {
  const PpsSet set = build_pps_set(3);
  EXPECT_EQ(sequence_product(1, 2, set), 4U);
  for (std::size_t j = 0; j < 8; ++j) {
    EXPECT_EQ(sequence_product(j, j, set), 0U);
    EXPECT_EQ(sequence_product(0, j, set), j);
    EXPECT_EQ(sequence_product(j, 0, set), j);
  }
}

TEST(SequenceProduct, HalfPiMappingUsesPhasorMatch) {
  const PpsSet set = build_pps_set(3, kMappingHalfPi);
  EXPECT_EQ(sequence_product(0, 5, set), 5U);
  EXPECT_EQ(code_of([&] { sequence_product(1, 2, set); }), ErrorCode::kClosureViolated);
}

TEST(SequenceProduct, CorruptSetViolatesClosure) {
  std::vector<std::vector<Bit>> rows{{0, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 0}};
  const PpsSet bad(2, {1, 1, 1}, kMappingPi, rows);
  try {
    sequence_product(1, 2, bad);
    FAIL() << "expected closure violation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kClosureViolated);
    EXPECT_NE(std::string(e.what()).find("closure violated"), std::string::npos);
  }
}

TEST(SequenceProduct, GroupTable) {
  for (int s = 2; s <= 6; ++s) {
    const PpsSet set = build_pps_set(s);
    const std::size_t n = set.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      std::set<std::size_t> row;
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = sequence_product(i, j, set);
        row.insert(table[i][j]);
      }
      EXPECT_EQ(row.size(), n) << "row " << i << " is not a permutation";
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(table[i][j], table[j][i]);
        for (std::size_t k = 0; k < n; ++k) ASSERT_EQ(table[table[i][j]][k], table[i][table[j][k]]);
      }
    }
  }
}

TEST(SequenceProduct, ShiftAndAddIsAnotherShift) {
  for (int s = 2; s <= 10; ++s) {
    const PpsSet set = build_pps_set(s);
    const std::size_t n = set.size();
    std::vector<Bit> sum(n);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t k = sequence_product(i, j, set);
        ASSERT_GE(k, 1U);
        ASSERT_NE(k, i);
        ASSERT_NE(k, j);
        for (std::size_t t = 0; t < n; ++t) sum[t] = set[i].bits()[t] ^ set[j].bits()[t];
        ASSERT_TRUE(std::equal(sum.begin(), sum.end(), set[k].bits().begin()));
      }
    }
  }
}

}  // namespace
}  // namespace ppsim
