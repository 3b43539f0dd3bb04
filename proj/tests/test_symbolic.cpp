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

#include <random>
#include <vector>

#include "ppsim/demod.hpp"
#include "ppsim/error.hpp"
#include "ppsim/field.hpp"
#include "ppsim/gate_array.hpp"
#include "ppsim/symbolic.hpp"
#include "support.hpp"

namespace ppsim {
namespace {

using testing::code_of;
using testing::quantize;

SymbolicField random_symbolic(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::bernoulli_distribution keep(0.4);
  SymbolicField sf;
  for (Mode m : {Mode::k0, Mode::k1}) {
    for (std::size_t j = 0; j < n; ++j) {
      if (keep(rng)) sf.set(m, j, {coeff(rng), coeff(rng)});
    }
  }
  return sf;
}

TEST(Symbolic, AddAndSetEraseZeros) {
  SymbolicField sf;
  sf.add(Mode::k0, 3, 1.0).add(Mode::k0, 3, -1.0);
  EXPECT_TRUE(sf.empty());
  sf.set(Mode::k1, 2, {0.0, 1.0});
  EXPECT_EQ(sf.coefficient(Mode::k1, 2), Complex(0.0, 1.0));
  sf.set(Mode::k1, 2, 0.0);
  EXPECT_TRUE(sf.empty());
}

TEST(Symbolic, WaveformOfSingleTerm) {
  const PpsSet set = build_pps_set(3);
  SymbolicField sf;
  sf.set(Mode::k0, 1, 1.0);
  EXPECT_EQ(to_waveform(sf, set), make_single_pps_field(set, 1, 1.0, 0.0));
  EXPECT_TRUE(to_waveform(SymbolicField{}, set).is_zero());
  SymbolicField bad;
  bad.set(Mode::k1, 8, 1.0);
  EXPECT_EQ(code_of([&] { to_waveform(bad, set); }), ErrorCode::kInvalidArgument);
}

TEST(Symbolic, BellFieldMatchesGateConstruction) {
  const PpsSet set = build_pps_set(3);
  SymbolicField sf;
  sf.set(Mode::k0, 1, 1.0).set(Mode::k1, 2, 1.0);
  const auto inputs = canonical_inputs(set, 2);
  const std::vector<ClassicalField> parts{apply_mode_gate(inputs[0], ModeGateKind::kB),
                                          apply_mode_gate(inputs[1], ModeGateKind::kC)};
  EXPECT_LT(to_waveform(sf, set).max_abs_diff(combine(parts)), 1e-15);

  EXPECT_EQ(symbolic_demodulate(sf, 2), std::make_pair(Complex(0.0), Complex(1.0)));
  EXPECT_EQ(symbolic_demodulate(sf, 5), std::make_pair(Complex(0.0), Complex(0.0)));
  SymbolicField neg;
  neg.set(Mode::k1, 4, -1.0);
  EXPECT_EQ(symbolic_demodulate(neg, 4), std::make_pair(Complex(0.0), Complex(-1.0)));
}

TEST(Symbolic, WaveformAgreesWithLookup) {
  std::mt19937_64 rng(2024);
  const PpsSet sets[2] = {build_pps_set(3), build_pps_set(4)};
  for (int t = 0; t < 500; ++t) {
    const PpsSet& set = sets[t % 2];
    const SymbolicField sf = random_symbolic(set.size(), rng);
    const ClassicalField wave = to_waveform(sf, set);
    for (std::size_t j = 0; j < set.size(); ++j) {
      const auto [c0, c1] = symbolic_demodulate(sf, j);
      const Complex r0 = demodulate_mode(wave, Mode::k0, set[j]);
      const Complex r1 = demodulate_mode(wave, Mode::k1, set[j]);
      ASSERT_LT(std::abs(r0 - c0), 1e-9);
      ASSERT_LT(std::abs(r1 - c1), 1e-9);
      const ModeStatus st = mode_status(wave, set[j]);
      ASSERT_EQ(st.a, quantize(c0, kDefaultThreshold));
      ASSERT_EQ(st.b, quantize(c1, kDefaultThreshold));
    }
  }
}

TEST(Symbolic, WaveformIsLinear) {
  std::mt19937_64 rng(99);
  const PpsSet set = build_pps_set(4);
  for (int t = 0; t < 50; ++t) {
    const SymbolicField a = random_symbolic(set.size(), rng);
    const SymbolicField b = random_symbolic(set.size(), rng);
    SymbolicField sum = a;
    for (Mode m : {Mode::k0, Mode::k1}) {
      for (const auto& [j, c] : b.terms(m)) sum.add(m, j, c);
    }
    EXPECT_LT(to_waveform(sum, set).max_abs_diff(to_waveform(a, set) + to_waveform(b, set)), 1e-12);
  }
}

TEST(Symbolic, DirectProduct) {
  const PpsSet set = build_pps_set(3);
  SymbolicField a, b;
  a.set(Mode::k0, 1, 1.0);
  b.set(Mode::k0, 2, 1.0);
  const DirectProduct single = direct_product(a, b, set);
  EXPECT_EQ(single.sequence_index, 4U);
  ASSERT_EQ(single.terms.size(), 1U);
  EXPECT_EQ(single.terms.at("00"), Complex(1.0));

  a.set(Mode::k1, 1, 1.0);
  b.set(Mode::k1, 2, 1.0);
  const DirectProduct full = direct_product(a, b, set);
  EXPECT_EQ(full.sequence_index, 4U);
  ASSERT_EQ(full.terms.size(), 4U);
  for (const char* key : {"00", "01", "10", "11"}) EXPECT_EQ(full.terms.at(key), Complex(1.0));

  SymbolicField c;
  c.set(Mode::k0, 2, {0.0, 2.0}).set(Mode::k1, 2, 3.0);
  const DirectProduct weighted = direct_product(a, c, set);
  EXPECT_EQ(weighted.sequence_index, sequence_product(1, 2, set));
  EXPECT_EQ(weighted.terms.at("01"), Complex(3.0));
  EXPECT_EQ(weighted.terms.at("10"), Complex(0.0, 2.0));

  SymbolicField multi = a;
  multi.set(Mode::k0, 3, 1.0);
  EXPECT_EQ(code_of([&] { direct_product(multi, b, set); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { direct_product(SymbolicField{}, b, set); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace ppsim
