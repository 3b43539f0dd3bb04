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

#include "ppsim/pps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ppsim/error.hpp"

namespace ppsim {

namespace {

constexpr int kMaxDegree = 20;
constexpr double kPhaseMatchTol = 1e-9;

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw Error(ErrorCode::kInvalidArgument,
                "degree must lie in [1, " + std::to_string(kMaxDegree) + "], got " +
                    std::to_string(degree));
  }
}

}  // namespace

std::size_t BitSequence::ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), Bit{1}));
}

PhaseSequence::PhaseSequence(std::size_t index, std::vector<Bit> bits, double mapping_phase)
    : index_(index), bits_(std::move(bits)) {
  phases_.reserve(bits_.size());
  phasors_.reserve(bits_.size());
  for (Bit b : bits_) {
    if (b > 1) throw Error(ErrorCode::kInvalidArgument, "bit rows hold 0/1 only");
    const double phase = b ? mapping_phase : 0.0;
    phases_.push_back(phase);
    // Exact phasors for the two symbols keep correlation sums free of
    // rounding when the mapping is pi.
    if (!b) {
      phasors_.emplace_back(1.0, 0.0);
    } else if (mapping_phase == kMappingPi) {
      phasors_.emplace_back(-1.0, 0.0);
    } else if (mapping_phase == kMappingHalfPi) {
      phasors_.emplace_back(0.0, 1.0);
    } else {
      phasors_.push_back(std::polar(1.0, phase));
    }
  }
}

PpsSet::PpsSet(int degree, std::vector<Bit> polynomial, double mapping_phase,
               std::vector<std::vector<Bit>> rows)
    : degree_(degree), polynomial_(std::move(polynomial)), mapping_phase_(mapping_phase) {
  check_degree(degree);
  if (!std::isfinite(mapping_phase)) {
    throw Error(ErrorCode::kInvalidArgument, "mapping phase must be finite");
  }
  const std::size_t n = std::size_t{1} << degree;
  if (rows.size() != n) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  }
  sequences_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (rows[j].size() != n) {
      throw Error(ErrorCode::kLengthMismatch, "row " + std::to_string(j) + " has length " +
                                                  std::to_string(rows[j].size()) +
                                                  ", expected " + std::to_string(n));
    }
    sequences_.emplace_back(j, std::move(rows[j]), mapping_phase);
  }
  const auto& zero = sequences_.front().bits();
  if (std::any_of(zero.begin(), zero.end(), [](Bit b) { return b != 0; })) {
    throw Error(ErrorCode::kInvalidArgument, "sequence 0 must be all-zero");
  }
  packed_.reserve(n);
  for (const auto& seq : sequences_) {
    packed_.push_back(row_key(seq.bits()));
    row_index_.emplace(packed_.back(), seq.index());
  }
}

bool PpsSet::has_pi_mapping() const noexcept { return mapping_phase_ == kMappingPi; }

const PhaseSequence& PpsSet::operator[](std::size_t j) const {
  if (j >= sequences_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "sequence index " + std::to_string(j) +
                                                 " out of range for set of size " +
                                                 std::to_string(sequences_.size()));
  }
  return sequences_[j];
}

std::optional<std::size_t> PpsSet::find_row(std::span<const Bit> bits) const {
  auto it = row_index_.find(row_key(bits));
  if (it == row_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> PpsSet::find_xor(std::size_t i, std::size_t j) const {
  const std::string& a = packed_.at(i);
  const std::string& b = packed_.at(j);
  std::string key = a;
  for (std::size_t k = a.find(':') + 1; k < key.size(); ++k) key[k] = static_cast<char>(a[k] ^ b[k]);
  auto it = row_index_.find(key);
  if (it == row_index_.end()) return std::nullopt;
  return it->second;
}

std::string PpsSet::row_key(std::span<const Bit> bits) {
  // Eight bits per byte, prefixed by the length so rows of different size never collide.
  std::string key = std::to_string(bits.size()) + ':';
  const std::size_t head = key.size();
  key.resize(head + (bits.size() + 7) / 8, '\0');
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k]) key[head + k / 8] = static_cast<char>(key[head + k / 8] | (1 << (k % 8)));
  }
  return key;
}

std::vector<Bit> primitive_polynomial(int degree) {
  // Exponents of the nonzero terms below x^s; x^s and 1 are implied.
  static const std::vector<std::vector<int>> kTaps = {
      {},               // 0 (unused)
      {},               // 1 (unused)
      {1},              // x^2 + x + 1
      {1},              // x^3 + x + 1
      {1},              // x^4 + x + 1
      {2},              // x^5 + x^2 + 1
      {1},              // x^6 + x + 1
      {1},              // x^7 + x + 1
      {4, 3, 2},        // x^8 + x^4 + x^3 + x^2 + 1
      {4},              // x^9 + x^4 + 1
      {3},              // x^10 + x^3 + 1
      {2},              // x^11 + x^2 + 1
      {6, 4, 1},        // x^12 + x^6 + x^4 + x + 1
      {4, 3, 1},        // x^13 + x^4 + x^3 + x + 1
      {10, 6, 1},       // x^14 + x^10 + x^6 + x + 1
      {1},              // x^15 + x + 1
      {12, 3, 1},       // x^16 + x^12 + x^3 + x + 1
  };
  if (degree < 2 || degree > 16) {
    throw Error(ErrorCode::kInvalidArgument,
                "no built-in primitive polynomial for degree " + std::to_string(degree) +
                    " (table covers 2..16; pass coefficients explicitly)");
  }
  std::vector<Bit> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  coeffs.front() = 1;
  coeffs.back() = 1;
  for (int e : kTaps[static_cast<std::size_t>(degree)]) {
    coeffs[static_cast<std::size_t>(degree - e)] = 1;
  }
  return coeffs;
}

BitSequence generate_m_sequence(std::span<const Bit> polynomial, int degree,
                                std::span<const Bit> seed) {
  check_degree(degree);
  const auto s = static_cast<std::size_t>(degree);
  if (polynomial.size() != s + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "polynomial of degree " + std::to_string(degree) + " needs " +
                    std::to_string(s + 1) + " coefficients, got " +
                    std::to_string(polynomial.size()));
  }
  if (seed.size() != s) {
    throw Error(ErrorCode::kInvalidArgument, "seed must have exactly degree bits");
  }
  if (std::any_of(polynomial.begin(), polynomial.end(), [](Bit b) { return b > 1; }) ||
      std::any_of(seed.begin(), seed.end(), [](Bit b) { return b > 1; })) {
    throw Error(ErrorCode::kInvalidArgument, "coefficients and seed must be 0/1");
  }
  if (std::all_of(seed.begin(), seed.end(), [](Bit b) { return b == 0; })) {
    throw Error(ErrorCode::kDegenerateState, "degenerate LFSR state");
  }
  if (polynomial.front() != 1 || polynomial.back() != 1) {
    throw Error(ErrorCode::kNotPrimitive, "polynomial not primitive");
  }

  // a_{n+s} = sum_{k<s} c_k a_{n+k}, where c_k multiplies x^k.
  std::vector<Bit> taps(s);
  for (std::size_t k = 0; k < s; ++k) taps[k] = polynomial[s - k];

  const std::size_t period = (std::size_t{1} << s) - 1;
  std::vector<Bit> state(seed.begin(), seed.end());
  BitSequence out;
  out.bits.reserve(period);
  for (std::size_t step = 0; step < period; ++step) {
    if (step > 0 && std::equal(state.begin(), state.end(), seed.begin())) {
      throw Error(ErrorCode::kNotPrimitive, "polynomial not primitive");
    }
    out.bits.push_back(state.front());
    Bit next = 0;
    for (std::size_t k = 0; k < s; ++k) next ^= static_cast<Bit>(taps[k] & state[k]);
    std::rotate(state.begin(), state.begin() + 1, state.end());
    state.back() = next;
  }
  if (!std::equal(state.begin(), state.end(), seed.begin())) {
    throw Error(ErrorCode::kNotPrimitive, "polynomial not primitive");
  }
  return out;
}

BitSequence generate_m_sequence(std::span<const Bit> polynomial, int degree) {
  check_degree(degree);
  const std::vector<Bit> seed(static_cast<std::size_t>(degree), 1);
  return generate_m_sequence(polynomial, degree, seed);
}

PpsSet build_pps_set(int degree, std::span<const Bit> polynomial, double mapping_phase) {
  const BitSequence base = generate_m_sequence(polynomial, degree);
  const std::size_t n = base.size() + 1;
  std::vector<std::vector<Bit>> rows;
  rows.reserve(n);
  rows.emplace_back(n, Bit{0});
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<Bit> row(base.bits);
    std::rotate(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(j - 1), row.end());
    row.push_back(0);
    rows.push_back(std::move(row));
  }
  return PpsSet(degree, std::vector<Bit>(polynomial.begin(), polynomial.end()), mapping_phase,
                std::move(rows));
}

PpsSet build_pps_set(int degree, double mapping_phase) {
  return build_pps_set(degree, primitive_polynomial(degree), mapping_phase);
}

Complex correlate(const PhaseSequence& a, const PhaseSequence& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch, "correlate: sequence lengths differ (" +
                                                std::to_string(a.size()) + " vs " +
                                                std::to_string(b.size()) + ")");
  }
  const auto pa = a.phasors();
  const auto pb = b.phasors();
  Complex acc{};
  for (std::size_t k = 0; k < pa.size(); ++k) acc += pa[k] * std::conj(pb[k]);
  return acc / static_cast<double>(pa.size());
}

Complex balance_sum(const PhaseSequence& seq, double theta) {
  Complex acc{};
  for (const Complex& p : seq.phasors()) acc += p;
  return acc * std::polar(1.0, theta);
}

std::size_t sequence_product(std::size_t i, std::size_t j, const PpsSet& set) {
  const PhaseSequence& a = set[i];
  const PhaseSequence& b = set[j];
  if (set.has_pi_mapping()) {
    // e^{i pi x} e^{i pi y} = e^{i pi (x xor y)}.
    if (auto k = set.find_xor(i, j)) return *k;
  } else {
    for (const auto& candidate : set.sequences()) {
      bool match = true;
      for (std::size_t k = 0; k < a.size() && match; ++k) {
        match = std::abs(a.phasors()[k] * b.phasors()[k] - candidate.phasors()[k]) <
                kPhaseMatchTol;
      }
      if (match) return candidate.index();
    }
  }
  throw Error(ErrorCode::kClosureViolated, "closure violated: product of sequences " +
                                               std::to_string(i) + " and " + std::to_string(j) +
                                               " is not in the set");
}

}  // namespace ppsim
