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
/// End-to-end pipelines: typical entangled states, period finding for
/// factoring, and the database membership search.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppsim/demod.hpp"
#include "ppsim/field.hpp"
#include "ppsim/gate_array.hpp"
#include "ppsim/pps.hpp"
#include "ppsim/reconstruct.hpp"

namespace ppsim {

// ---------------------------------------------------------------------------
// Typical states

enum class StateKind { kProduct, kBellPsiPlus, kBellPsiMinus, kBellPhiPlus, kBellPhiMinus, kGhz, kW };

struct StateSpec {
  StateKind kind = StateKind::kProduct;
  std::size_t n = 2;  // ignored for Bell states

  /// "product:N", "ghz:N", "w:N", "psi+", "psi-", "phi+", "phi-".
  static StateSpec parse(std::string_view text);
};

struct TypicalStateResult {
  GateArray array;
  std::vector<ClassicalField> fields;
  ModeStatusMatrix matrix;
  SimulatedState state;
};

TypicalStateResult typical_state(const StateSpec& spec, const PpsSet& set,
                                 double tau = kDefaultThreshold);

// ---------------------------------------------------------------------------
// Period finding

struct ShorInstance {
  std::uint64_t modulus = 15;
  std::uint64_t base = 7;
  std::size_t x_bits = 0;  // 0: smallest width with 2^x_bits >= modulus
  std::size_t f_bits = 0;  // 0: smallest width holding modulus - 1
  std::size_t groups = 0;  // 0: derive (see shor_groups)

  /// Fills defaulted widths and checks 1 < base < modulus, gcd(base, modulus)
  /// = 1 and 2^x_bits >= modulus.
  ShorInstance validated() const;
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

/// Number of residue classes x mod G the x register is cut into; each class
/// is one rotation. The default is the smallest power of two G dividing
/// 2^x_bits for which f(x) = base^x mod modulus is constant on every class.
std::size_t shor_groups(const ShorInstance& inst);

/// Field i (MSB-first over x || f(x)) carries lambda^(R_r(i)) on the mode
/// given by its bit, for every x in class r - 1.
PlacementTable shor_encode(const ShorInstance& inst, const PpsSet& set);

struct ShorResult {
  std::uint64_t period = 0;
  std::pair<std::uint64_t, std::uint64_t> factors{};
  ModeStatusMatrix matrix;
  SimulatedState state;
  std::size_t groups = 0;
  std::size_t gate_count = 0;
  std::size_t combiner_count = 0;
};

/// encode -> compile -> run -> demodulate -> reconstruct; the period is the
/// number of distinct f-register values in the reconstructed state.
ShorResult shor_factor(const ShorInstance& inst, const PpsSet& set,
                       double tau = kDefaultThreshold);

/// Distinct f-register values (low f_bits of each basis string).
std::vector<std::uint64_t> distinct_f_values(const SimulatedState& state, std::size_t f_bits);

// ---------------------------------------------------------------------------
// Database membership

struct GroverDatabase {
  std::size_t width = 8;
  std::vector<std::uint64_t> entries;
  /// Entry -> rotation (1-based). Entries missing here use round-robin over
  /// their position.
  std::map<std::uint64_t, std::size_t> rotations;

  std::size_t rotation_of(std::size_t position) const;
  void validate() const;
};

PlacementTable grover_placement(const GroverDatabase& db);

/// Unit-coefficient fields: duplicate (mode, PPS) contributions collapse.
std::vector<ClassicalField> grover_encode(const GroverDatabase& db, const PpsSet& set);

/// Gate B on fields whose query bit is 0, Gate C where it is 1.
std::vector<ClassicalField> grover_gate(std::span<const ClassicalField> fields, std::uint64_t query,
                                        std::size_t width);

struct GroverResult {
  bool found = false;
  std::optional<std::size_t> witness;
  ModeStatusMatrix matrix;
};

/// Rotations r whose cells M[i][R_r(i)] are nonzero for every field.
std::vector<std::size_t> witness_rotations(const ModeStatusMatrix& m);

GroverResult grover_search_fields(std::span<const ClassicalField> fields, std::uint64_t query,
                                  std::size_t width, const PpsSet& set,
                                  double tau = kDefaultThreshold);

GroverResult grover_search(const GroverDatabase& db, std::uint64_t query, const PpsSet& set,
                           double tau = kDefaultThreshold);

}  // namespace ppsim
