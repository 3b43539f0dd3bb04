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

#include "ppsim/reconstruct.hpp"

#include <cstdlib>
#include <numeric>

#include "ppsim/error.hpp"

namespace ppsim {

namespace {

void require_square(const ModeStatusMatrix& m) {
  if (!m.square() || m.rows() == 0) {
    throw Error(ErrorCode::kLengthMismatch, "mode status matrix must be square and nonempty, got " +
                                                std::to_string(m.rows()) + "x" +
                                                std::to_string(m.cols()));
  }
}

bool term_nonempty(const ModeStatusMatrix& m, const SequencePermutation& r) {
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    if (m.at(i - 1, r(i) - 1).is_zero()) return false;
  }
  return true;
}

}  // namespace

SequencePermutation::SequencePermutation(std::size_t order, std::size_t rotation)
    : order_(order), rotation_(rotation) {
  if (order == 0 || rotation == 0 || rotation > order) {
    throw Error(ErrorCode::kInvalidArgument, "rotation must lie in 1..n");
  }
}

std::size_t SequencePermutation::operator()(std::size_t field) const {
  if (field == 0 || field > order_) throw Error(ErrorCode::kInvalidArgument, "field index out of range");
  return (field + rotation_ - 2) % order_ + 1;
}

std::vector<SequencePermutation> cyclic_permutations(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cyclic_permutations needs n >= 1");
  std::vector<SequencePermutation> out;
  out.reserve(n);
  for (std::size_t r = 1; r <= n; ++r) out.emplace_back(n, r);
  return out;
}

long long SimulatedState::coefficient(const std::string& bits) const {
  auto it = terms_.find(bits);
  return it == terms_.end() ? 0 : it->second;
}

void SimulatedState::add(const std::string& bits, long long coeff) {
  if (bits.size() != n_) {
    throw Error(ErrorCode::kLengthMismatch, "basis string '" + bits + "' does not have " +
                                                std::to_string(n_) + " bits");
  }
  const long long updated = coefficient(bits) + coeff;
  if (updated == 0) {
    terms_.erase(bits);
  } else {
    terms_[bits] = updated;
  }
}

SimulatedState& SimulatedState::operator+=(const SimulatedState& other) {
  if (other.n_ != n_) throw Error(ErrorCode::kLengthMismatch, "state widths differ");
  for (const auto& [bits, c] : other.terms_) add(bits, c);
  return *this;
}

SimulatedState SimulatedState::canonical() const {
  long long g = 0;
  for (const auto& [bits, c] : terms_) g = std::gcd(g, std::llabs(c));
  SimulatedState out(n_);
  if (g == 0) return out;
  for (const auto& [bits, c] : terms_) out.terms_[bits] = c / g;
  return out;
}

std::string SimulatedState::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [bits, c] : terms_) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const long long mag = std::llabs(c);
    if (mag != 1) out += std::to_string(mag);
    out += "|" + bits + ">";
    first = false;
  }
  return out;
}

SimulatedState term_for_permutation(const ModeStatusMatrix& m, const SequencePermutation& r) {
  require_square(m);
  if (r.order() != m.rows()) throw Error(ErrorCode::kLengthMismatch, "permutation order != matrix order");
  const std::size_t n = m.rows();
  // Expand the product one field at a time.
  std::vector<std::pair<std::string, long long>> partial{{"", 1}};
  for (std::size_t i = 1; i <= n; ++i) {
    const ModeStatus& s = m.at(i - 1, r(i) - 1);
    if (s.is_zero()) return SimulatedState(n);
    std::vector<std::pair<std::string, long long>> next;
    next.reserve(partial.size() * 2);
    for (const auto& [bits, c] : partial) {
      if (s.a != 0) next.emplace_back(bits + '0', c * s.a);
      if (s.b != 0) next.emplace_back(bits + '1', c * s.b);
    }
    partial = std::move(next);
  }
  SimulatedState state(n);
  for (const auto& [bits, c] : partial) state.add(bits, c);
  return state;
}

SimulatedState reconstruct(const ModeStatusMatrix& m) {
  require_square(m);
  SimulatedState sum(m.rows());
  for (const auto& r : cyclic_permutations(m.rows())) sum += term_for_permutation(m, r);
  return sum.canonical();
}

std::string sample_measurement(const ModeStatusMatrix& m, std::mt19937_64& rng) {
  require_square(m);
  std::vector<SequencePermutation> live;
  for (const auto& r : cyclic_permutations(m.rows())) {
    if (term_nonempty(m, r)) live.push_back(r);
  }
  if (live.empty()) throw Error(ErrorCode::kUnrepresentable, "unrepresentable state");
  // Plain modulo keeps draws identical across standard library vendors; the
  // bias is negligible for these sizes.
  const SequencePermutation& r = live[rng() % live.size()];
  std::string bits;
  bits.reserve(m.rows());
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    const ModeStatus& s = m.at(i - 1, r(i) - 1);
    if (s.a != 0 && s.b != 0) {
      bits += (rng() & 1U) ? '1' : '0';
    } else {
      bits += s.a != 0 ? '0' : '1';
    }
  }
  return bits;
}

std::string sample_measurement(const ModeStatusMatrix& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_measurement(m, rng);
}

std::vector<std::string> sample_measurements(const ModeStatusMatrix& m, std::size_t count,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(sample_measurement(m, rng));
  return out;
}

}  // namespace ppsim
