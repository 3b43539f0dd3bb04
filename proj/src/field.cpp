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

#include "ppsim/field.hpp"

#include <algorithm>
#include <cmath>

#include "ppsim/error.hpp"

namespace ppsim {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::kLengthMismatch, std::string(what) + ": slot counts differ (" +
                                                std::to_string(a) + " vs " +
                                                std::to_string(b) + ")");
  }
}

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

ClassicalField::ClassicalField(std::size_t slot_count)
    : mode0_(slot_count), mode1_(slot_count) {}

ClassicalField::ClassicalField(std::vector<Complex> mode0, std::vector<Complex> mode1)
    : mode0_(std::move(mode0)), mode1_(std::move(mode1)) {
  require_same_length(mode0_.size(), mode1_.size(), "ClassicalField");
  if (!std::all_of(mode0_.begin(), mode0_.end(), finite) ||
      !std::all_of(mode1_.begin(), mode1_.end(), finite)) {
    throw Error(ErrorCode::kInvalidArgument, "field amplitudes must be finite");
  }
}

double ClassicalField::max_abs_diff(const ClassicalField& other) const {
  require_same_length(slot_count(), other.slot_count(), "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < slot_count(); ++k) {
    worst = std::max({worst, std::abs(mode0_[k] - other.mode0_[k]),
                      std::abs(mode1_[k] - other.mode1_[k])});
  }
  return worst;
}

bool ClassicalField::is_zero(double tol) const {
  auto small = [tol](Complex c) { return std::abs(c) <= tol; };
  return std::all_of(mode0_.begin(), mode0_.end(), small) &&
         std::all_of(mode1_.begin(), mode1_.end(), small);
}

ClassicalField& ClassicalField::operator+=(const ClassicalField& other) {
  require_same_length(slot_count(), other.slot_count(), "field sum");
  for (std::size_t k = 0; k < slot_count(); ++k) {
    mode0_[k] += other.mode0_[k];
    mode1_[k] += other.mode1_[k];
  }
  return *this;
}

ClassicalField& ClassicalField::operator*=(Complex scale) {
  for (auto& c : mode0_) c *= scale;
  for (auto& c : mode1_) c *= scale;
  return *this;
}

Unitary2::Matrix Unitary2::matrix() const {
  const Complex i{0.0, 1.0};
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  return {{{Complex{c}, i * std::polar(1.0, theta) * s},
           {i * std::polar(1.0, -theta) * s, Complex{c}}}};
}

ClassicalField make_single_pps_field(const PpsSet& set, std::size_t j, Complex alpha,
                                     Complex beta) {
  const auto phasors = set[j].phasors();
  std::vector<Complex> m0(phasors.size());
  std::vector<Complex> m1(phasors.size());
  for (std::size_t k = 0; k < phasors.size(); ++k) {
    m0[k] = alpha * phasors[k];
    m1[k] = beta * phasors[k];
  }
  return ClassicalField(std::move(m0), std::move(m1));
}

ClassicalField modulate(const ClassicalField& field, const PhaseSequence& seq) {
  require_same_length(field.slot_count(), seq.size(), "modulate");
  ClassicalField out = field;
  const auto phasors = seq.phasors();
  for (Mode m : {Mode::k0, Mode::k1}) {
    auto amps = out.mode(m);
    for (std::size_t k = 0; k < amps.size(); ++k) amps[k] *= phasors[k];
  }
  return out;
}

ClassicalField apply_unitary(const ClassicalField& field, const Unitary2& u) {
  const auto m = u.matrix();
  ClassicalField out(field.slot_count());
  auto in0 = field.mode(Mode::k0);
  auto in1 = field.mode(Mode::k1);
  auto out0 = out.mode(Mode::k0);
  auto out1 = out.mode(Mode::k1);
  for (std::size_t k = 0; k < field.slot_count(); ++k) {
    out0[k] = m[0][0] * in0[k] + m[0][1] * in1[k];
    out1[k] = m[1][0] * in0[k] + m[1][1] * in1[k];
  }
  return out;
}

std::pair<ClassicalField, ClassicalField> beam_split(const ClassicalField& field,
                                                     PowerRatio ratio,
                                                     SplitterPhases phases) {
  if (!(ratio.a >= 0.0) || !(ratio.b >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "beam_split: power ratio components must be >= 0");
  }
  const double total = ratio.a + ratio.b;
  if (total == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "beam_split: both ratio components are zero");
  }
  auto branch = [&](double power, double phase) {
    const double c = std::sqrt(power / total);
    const Complex rot = std::polar(1.0, phase);
    ClassicalField out(field.slot_count());
    auto in0 = field.mode(Mode::k0);
    auto in1 = field.mode(Mode::k1);
    auto o0 = out.mode(Mode::k0);
    auto o1 = out.mode(Mode::k1);
    for (std::size_t k = 0; k < field.slot_count(); ++k) {
      o0[k] = c * in0[k];
      o1[k] = c * rot * in1[k];
    }
    return out;
  };
  return {branch(ratio.a, phases.a), branch(ratio.b, phases.b)};
}

std::pair<ClassicalField, ClassicalField> mode_split(const ClassicalField& field,
                                                     SplitterPhases phases) {
  const std::size_t n = field.slot_count();
  std::vector<Complex> a0(n), b1(n);
  const Complex ra = std::polar(1.0, phases.a);
  const Complex rb = std::polar(1.0, phases.b);
  for (std::size_t k = 0; k < n; ++k) {
    a0[k] = ra * field.amplitude(k, Mode::k0);
    b1[k] = rb * field.amplitude(k, Mode::k1);
  }
  return {ClassicalField(std::move(a0), std::vector<Complex>(n)),
          ClassicalField(std::vector<Complex>(n), std::move(b1))};
}

ClassicalField combine(std::span<const ClassicalField> fields) {
  if (fields.empty()) throw Error(ErrorCode::kInvalidArgument, "combine: no input fields");
  ClassicalField out = fields.front();
  for (std::size_t i = 1; i < fields.size(); ++i) out += fields[i];
  return out;
}

Complex field_inner_product(const ClassicalField& a, const ClassicalField& b) {
  require_same_length(a.slot_count(), b.slot_count(), "field_inner_product");
  if (a.slot_count() == 0) return {};
  Complex acc{};
  for (std::size_t k = 0; k < a.slot_count(); ++k) {
    acc += b.amplitude(k, Mode::k0) * std::conj(a.amplitude(k, Mode::k0)) +
           b.amplitude(k, Mode::k1) * std::conj(a.amplitude(k, Mode::k1));
  }
  return acc / static_cast<double>(a.slot_count());
}

}  // namespace ppsim
