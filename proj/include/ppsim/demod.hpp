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
/// Quadrature demodulation against reference PPSs and the mode status matrix.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppsim/field.hpp"
#include "ppsim/pps.hpp"

namespace ppsim {

/// Halfway between the 0 and +-1 levels every unit-coefficient construction
/// produces.
inline constexpr double kDefaultThreshold = 0.5;

/// Quantized demodulation result (a~, b~) for one field against one reference.
/// Equality compares the quantized values only.
struct ModeStatus {
  int a = 0;
  int b = 0;
  Complex raw_a{};
  Complex raw_b{};

  ModeStatus() = default;
  ModeStatus(int a_tilde, int b_tilde) : a(a_tilde), b(b_tilde) {}

  bool is_zero() const noexcept { return a == 0 && b == 0; }
  bool operator==(const ModeStatus& o) const noexcept { return a == o.a && b == o.b; }

  /// "0" for the zero status, otherwise "(a,b)", e.g. "(1,0)" or "(0,-1)".
  std::string to_string() const;
  static ModeStatus parse(std::string_view text);
};

/// Row i is field i, column j is reference lambda^(j+1) (both 0-based here).
class ModeStatusMatrix {
 public:
  ModeStatusMatrix() = default;
  ModeStatusMatrix(std::size_t rows, std::size_t cols);

  /// Builds from textual cells, e.g. {{"(1,0)", "(0,1)"}, {"(0,1)", "(1,0)"}}.
  static ModeStatusMatrix from_cells(const std::vector<std::vector<std::string>>& cells);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  ModeStatus& at(std::size_t i, std::size_t j);
  const ModeStatus& at(std::size_t i, std::size_t j) const;

  bool operator==(const ModeStatusMatrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && cells_ == o.cells_;
  }

  /// Cells that differ, as 0-based (row, col) pairs. Dimensions must match.
  std::vector<std::pair<std::size_t, std::size_t>> diff(const ModeStatusMatrix& o) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ModeStatus> cells_;
};

/// (1/N) sum_k amplitude_k(mode) e^{-i lambda_k^(ref)}. Its real part is the
/// cosine decision variable for unit-amplitude fields.
Complex demodulate_mode(const ClassicalField& field, Mode mode, const PhaseSequence& ref);

/// Splits the field into its mode branches and demodulates each against
/// `ref`. A branch is nonzero iff |Re(raw)| >= tau, with the sign of Re(raw).
ModeStatus mode_status(const ClassicalField& field, const PhaseSequence& ref,
                       double tau = kDefaultThreshold);

ModeStatusMatrix mode_status_matrix(std::span<const ClassicalField> fields,
                                    std::span<const PhaseSequence> refs,
                                    double tau = kDefaultThreshold);

/// lambda^(1) .. lambda^(n).
std::vector<PhaseSequence> reference_sequences(const PpsSet& set, std::size_t n);

}  // namespace ppsim
