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

#include "ppsim/demod.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "ppsim/error.hpp"

namespace ppsim {

namespace {

int quantize(Complex raw, double tau) {
  const double re = raw.real();
  if (std::abs(re) < tau) return 0;
  return re > 0 ? 1 : -1;
}

int parse_level(std::string_view text) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < -1 || value > 1) {
    throw Error(ErrorCode::kParse, "bad mode status level '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string ModeStatus::to_string() const {
  if (is_zero()) return "0";
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

ModeStatus ModeStatus::parse(std::string_view text) {
  text = trim(text);
  if (text == "0" || text == "(0,0)") return {};
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
    throw Error(ErrorCode::kParse, "bad mode status '" + std::string(text) + "'");
  }
  const std::string_view inner = text.substr(1, text.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) {
    throw Error(ErrorCode::kParse, "bad mode status '" + std::string(text) + "'");
  }
  return {parse_level(trim(inner.substr(0, comma))), parse_level(trim(inner.substr(comma + 1)))};
}

ModeStatusMatrix::ModeStatusMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols) {}

ModeStatusMatrix ModeStatusMatrix::from_cells(const std::vector<std::vector<std::string>>& cells) {
  const std::size_t rows = cells.size();
  const std::size_t cols = rows ? cells.front().size() : 0;
  ModeStatusMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (cells[i].size() != cols) {
      throw Error(ErrorCode::kParse, "ragged mode status matrix at row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = ModeStatus::parse(cells[i][j]);
  }
  return m;
}

ModeStatus& ModeStatusMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::kInvalidArgument, "matrix index out of range");
  return cells_[i * cols_ + j];
}

const ModeStatus& ModeStatusMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::kInvalidArgument, "matrix index out of range");
  return cells_[i * cols_ + j];
}

std::vector<std::pair<std::size_t, std::size_t>> ModeStatusMatrix::diff(
    const ModeStatusMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::kLengthMismatch, "matrix dimensions differ");
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(at(i, j) == o.at(i, j))) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string ModeStatusMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += at(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

Complex demodulate_mode(const ClassicalField& field, Mode mode, const PhaseSequence& ref) {
  if (field.slot_count() != ref.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "demodulate: field has " + std::to_string(field.slot_count()) +
                    " slots, reference has " + std::to_string(ref.size()));
  }
  const auto amps = field.mode(mode);
  const auto phasors = ref.phasors();
  Complex acc{};
  for (std::size_t k = 0; k < amps.size(); ++k) acc += amps[k] * std::conj(phasors[k]);
  return acc / static_cast<double>(amps.size());
}

ModeStatus mode_status(const ClassicalField& field, const PhaseSequence& ref, double tau) {
  if (!(tau > 0.0)) throw Error(ErrorCode::kInvalidArgument, "threshold must be positive");
  const auto [branch0, branch1] = mode_split(field);
  ModeStatus status;
  status.raw_a = demodulate_mode(branch0, Mode::k0, ref);
  status.raw_b = demodulate_mode(branch1, Mode::k1, ref);
  status.a = quantize(status.raw_a, tau);
  status.b = quantize(status.raw_b, tau);
  return status;
}

ModeStatusMatrix mode_status_matrix(std::span<const ClassicalField> fields,
                                    std::span<const PhaseSequence> refs, double tau) {
  if (fields.empty() || refs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "mode_status_matrix: empty field or reference list");
  }
  ModeStatusMatrix m(fields.size(), refs.size());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    for (std::size_t j = 0; j < refs.size(); ++j) m.at(i, j) = mode_status(fields[i], refs[j], tau);
  }
  return m;
}

std::vector<PhaseSequence> reference_sequences(const PpsSet& set, std::size_t n) {
  if (n > set.usable()) {
    throw Error(ErrorCode::kBudgetExceeded, "requested " + std::to_string(n) +
                                                " references but the set has only " +
                                                std::to_string(set.usable()) + " usable PPSs");
  }
  std::vector<PhaseSequence> refs;
  refs.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) refs.push_back(set[j]);
  return refs;
}

}  // namespace ppsim
