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
/// Sequence-permutation reconstruction of simulated states from a mode status
/// matrix, and the random-selection measurement analogue.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ppsim/demod.hpp"

namespace ppsim {

/// Cyclic rotation R_r: field i (1-based) reads reference ((i + r - 2) mod n) + 1.
class SequencePermutation {
 public:
  SequencePermutation(std::size_t order, std::size_t rotation);

  std::size_t order() const noexcept { return order_; }
  std::size_t rotation() const noexcept { return rotation_; }
  /// 1-based field -> 1-based reference index.
  std::size_t operator()(std::size_t field) const;

 private:
  std::size_t order_;
  std::size_t rotation_;
};

std::vector<SequencePermutation> cyclic_permutations(std::size_t n);

/// Unnormalized superposition of n-bit basis strings (field 1 is the leftmost
/// character) with integer, sign-carrying coefficients. Zero coefficients are
/// never stored.
class SimulatedState {
 public:
  using Terms = std::map<std::string, long long>;

  SimulatedState() = default;
  explicit SimulatedState(std::size_t n) : n_(n) {}

  std::size_t qubits() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  long long coefficient(const std::string& bits) const;

  void add(const std::string& bits, long long coeff);
  SimulatedState& operator+=(const SimulatedState& other);

  /// Divides every coefficient by their positive GCD.
  SimulatedState canonical() const;

  /// E.g. "|00> + |11>", "|01> - |10>", or "0" when empty.
  std::string to_string() const;

  bool operator==(const SimulatedState&) const = default;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

/// Product over fields of (a~ |0> + b~ |1>) read along R; empty when any
/// factor is the zero status.
SimulatedState term_for_permutation(const ModeStatusMatrix& m, const SequencePermutation& r);

/// Sum of the terms of all n cyclic rotations, reduced to canonical form.
SimulatedState reconstruct(const ModeStatusMatrix& m);

/// Picks a rotation uniformly among those with a nonempty term, then resolves
/// each field: a status with both modes set picks |0> or |1> with equal odds.
std::string sample_measurement(const ModeStatusMatrix& m, std::mt19937_64& rng);
std::string sample_measurement(const ModeStatusMatrix& m, std::uint64_t seed);

std::vector<std::string> sample_measurements(const ModeStatusMatrix& m, std::size_t count,
                                             std::uint64_t seed);

}  // namespace ppsim
