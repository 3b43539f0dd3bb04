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
/// Pseudorandom phase sequence (PPS) sets over GF(2).
///
/// A set of degree s holds N = 2^s sequences of N phase units each. Sequence 0
/// is all-zero; sequence j >= 1 is the base m-sequence rotated left by j - 1,
/// with one zero unit appended so that every sequence has the same length.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ppsim {

using Complex = std::complex<double>;
using Bit = std::uint8_t;

/// The phase assigned to a 1 symbol. Pi keeps the set orthogonal and balanced;
/// pi/2 is available for comparison runs only.
inline constexpr double kMappingPi = std::numbers::pi;
inline constexpr double kMappingHalfPi = std::numbers::pi / 2.0;

struct BitSequence {
  std::vector<Bit> bits;

  std::size_t size() const noexcept { return bits.size(); }
  std::size_t ones() const noexcept;
  bool operator==(const BitSequence&) const = default;
};

class PhaseSequence {
 public:
  PhaseSequence(std::size_t index, std::vector<Bit> bits, double mapping_phase);

  std::size_t index() const noexcept { return index_; }
  std::size_t size() const noexcept { return bits_.size(); }
  std::span<const Bit> bits() const noexcept { return bits_; }
  std::span<const double> phases() const noexcept { return phases_; }
  /// e^{i lambda_k} for every unit k.
  std::span<const Complex> phasors() const noexcept { return phasors_; }
  double phase(std::size_t k) const { return phases_.at(k); }

 private:
  std::size_t index_;
  std::vector<Bit> bits_;
  std::vector<double> phases_;
  std::vector<Complex> phasors_;
};

class PpsSet {
 public:
  /// Assembles a set from explicit rows (e.g. an imported file). Checks shape
  /// only: N = 2^degree rows of N bits, row 0 all-zero. Algebraic properties
  /// are not re-verified here.
  PpsSet(int degree, std::vector<Bit> polynomial, double mapping_phase,
         std::vector<std::vector<Bit>> rows);

  int degree() const noexcept { return degree_; }
  /// Number of phase units per sequence; equals the number of sequences.
  std::size_t length() const noexcept { return sequences_.size(); }
  std::size_t size() const noexcept { return sequences_.size(); }
  /// Sequences usable for modulating fields (all except the all-zero one).
  std::size_t usable() const noexcept { return sequences_.size() - 1; }
  const std::vector<Bit>& polynomial() const noexcept { return polynomial_; }
  double mapping_phase() const noexcept { return mapping_phase_; }
  bool has_pi_mapping() const noexcept;

  const PhaseSequence& operator[](std::size_t j) const;
  const std::vector<PhaseSequence>& sequences() const noexcept { return sequences_; }

  /// Index of the sequence whose bit row equals `bits`, if any.
  std::optional<std::size_t> find_row(std::span<const Bit> bits) const;

  /// Index of the sequence whose bit row is row(i) xor row(j), if any.
  std::optional<std::size_t> find_xor(std::size_t i, std::size_t j) const;

 private:
  static std::string row_key(std::span<const Bit> bits);

  int degree_;
  std::vector<Bit> polynomial_;
  double mapping_phase_;
  std::vector<PhaseSequence> sequences_;
  std::vector<std::string> packed_;
  std::unordered_map<std::string, std::size_t> row_index_;
};

/// Built-in primitive polynomial for degree 2..16, coefficients listed from
/// x^s down to x^0.
std::vector<Bit> primitive_polynomial(int degree);

/// Runs the Fibonacci LFSR defined by `polynomial` (x^s first) from `seed`
/// (the first s output symbols) for one full period 2^s - 1.
BitSequence generate_m_sequence(std::span<const Bit> polynomial, int degree,
                                std::span<const Bit> seed);

/// Same, seeded with the all-ones state.
BitSequence generate_m_sequence(std::span<const Bit> polynomial, int degree);

PpsSet build_pps_set(int degree, std::span<const Bit> polynomial,
                     double mapping_phase = kMappingPi);
PpsSet build_pps_set(int degree, double mapping_phase = kMappingPi);

/// Normalized correlation (1/N) sum_k e^{i(lambda_i,k - lambda_j,k)}.
Complex correlate(const PhaseSequence& a, const PhaseSequence& b);

/// sum_k e^{i(lambda_k + theta)}.
Complex balance_sum(const PhaseSequence& seq, double theta);

/// Index k with e^{i lambda^(i)} e^{i lambda^(j)} = e^{i lambda^(k)} slotwise.
std::size_t sequence_product(std::size_t i, std::size_t j, const PpsSet& set);

}  // namespace ppsim
