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
/// Classical two-mode fields sampled at one complex amplitude per PPS chip.

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ppsim/pps.hpp"

namespace ppsim {

enum class Mode : int { k0 = 0, k1 = 1 };

/// Waveform of one field: `slot_count` time slots, each with a complex
/// amplitude on mode |0> and mode |1>.
class ClassicalField {
 public:
  ClassicalField() = default;
  /// Zero field.
  explicit ClassicalField(std::size_t slot_count);
  ClassicalField(std::vector<Complex> mode0, std::vector<Complex> mode1);

  std::size_t slot_count() const noexcept { return mode0_.size(); }
  std::span<const Complex> mode(Mode m) const noexcept {
    return m == Mode::k0 ? std::span<const Complex>(mode0_) : std::span<const Complex>(mode1_);
  }
  std::span<Complex> mode(Mode m) noexcept {
    return m == Mode::k0 ? std::span<Complex>(mode0_) : std::span<Complex>(mode1_);
  }
  Complex amplitude(std::size_t slot, Mode m) const { return mode(m)[slot]; }

  /// Largest per-slot amplitude difference on either mode.
  double max_abs_diff(const ClassicalField& other) const;
  bool is_zero(double tol = 0.0) const;

  ClassicalField& operator+=(const ClassicalField& other);
  ClassicalField& operator*=(Complex scale);
  friend ClassicalField operator+(ClassicalField a, const ClassicalField& b) { return a += b; }
  friend ClassicalField operator*(ClassicalField a, Complex s) { return a *= s; }
  friend ClassicalField operator*(Complex s, ClassicalField a) { return a *= s; }
  bool operator==(const ClassicalField&) const = default;

 private:
  std::vector<Complex> mode0_;
  std::vector<Complex> mode1_;
};

/// U(chi, theta) = [[cos chi, i e^{i theta} sin chi], [i e^{-i theta} sin chi, cos chi]],
/// i.e. exp(i chi (sigma_x cos theta - sigma_y sin theta)).
struct Unitary2 {
  double chi = 0.0;
  double theta = 0.0;

  using Matrix = std::array<std::array<Complex, 2>, 2>;
  Matrix matrix() const;
};

struct PowerRatio {
  double a = 1.0;
  double b = 1.0;
};

/// Additional phases a splitter imparts on its two outputs.
struct SplitterPhases {
  double a = 0.0;
  double b = 0.0;
};

/// e^{i lambda^(j)} (alpha |0> + beta |1>).
ClassicalField make_single_pps_field(const PpsSet& set, std::size_t j, Complex alpha,
                                     Complex beta);

/// Multiplies both modes of every slot k by e^{i seq_k}.
ClassicalField modulate(const ClassicalField& field, const PhaseSequence& seq);

ClassicalField apply_unitary(const ClassicalField& field, const Unitary2& u);

/// Beam splitter: output a = C_a (alpha|0> + beta e^{i phi_a}|1>) per slot, b
/// likewise, with |C_a|^2 : |C_b|^2 = ratio and |C_a|^2 + |C_b|^2 = 1.
std::pair<ClassicalField, ClassicalField> beam_split(const ClassicalField& field,
                                                     PowerRatio ratio,
                                                     SplitterPhases phases = {});

/// Mode splitter: output a carries mode |0> only, output b mode |1> only.
std::pair<ClassicalField, ClassicalField> mode_split(const ClassicalField& field,
                                                     SplitterPhases phases = {});

ClassicalField combine(std::span<const ClassicalField> fields);

/// <a|b> = (1/N) sum_k (b0 conj(a0) + b1 conj(a1)).
Complex field_inner_product(const ClassicalField& a, const ClassicalField& b);

}  // namespace ppsim
