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

#pragma once

/// @file
/// Exact per-mode PPS-index bookkeeping. This is the reference model the
/// waveform pipeline is checked against: a field is a map from PPS index to
/// complex coefficient on each mode, and demodulation is a lookup.

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "ppsim/field.hpp"
#include "ppsim/pps.hpp"

namespace ppsim {

class SymbolicField {
 public:
  using Terms = std::map<std::size_t, Complex>;

  SymbolicField() = default;

  /// Adds `coeff` to the coefficient of PPS `index` on `mode`. Entries that
  /// cancel to exactly zero are erased.
  SymbolicField& add(Mode mode, std::size_t index, Complex coeff);
  /// Overwrites the coefficient; zero erases.
  SymbolicField& set(Mode mode, std::size_t index, Complex coeff);

  const Terms& terms(Mode mode) const noexcept { return mode == Mode::k0 ? mode0_ : mode1_; }
  Complex coefficient(Mode mode, std::size_t index) const;
  bool empty() const noexcept { return mode0_.empty() && mode1_.empty(); }

  bool operator==(const SymbolicField&) const = default;

 private:
  Terms mode0_;
  Terms mode1_;
};

/// Mode m, slot k = sum_j coeff_j e^{i lambda_k^(j)}.
ClassicalField to_waveform(const SymbolicField& sf, const PpsSet& set);

/// (mode0 coefficient of j, mode1 coefficient of j); exact under the pi mapping.
std::pair<Complex, Complex> symbolic_demodulate(const SymbolicField& sf, std::size_t j);

/// Expansion of |psi_a> (x) |psi_b> for single-PPS fields: a common phase
/// prefactor e^{i lambda^(k)} and up to four two-mode basis terms.
struct DirectProduct {
  std::size_t sequence_index = 0;
  std::map<std::string, Complex> terms;  // "00", "01", "10", "11"
};

DirectProduct direct_product(const SymbolicField& a, const SymbolicField& b, const PpsSet& set);

}  // namespace ppsim
