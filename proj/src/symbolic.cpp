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

#include "ppsim/symbolic.hpp"

#include <set>

#include "ppsim/error.hpp"

namespace ppsim {

SymbolicField& SymbolicField::add(Mode mode, std::size_t index, Complex coeff) {
  Terms& terms = mode == Mode::k0 ? mode0_ : mode1_;
  const Complex updated = terms[index] + coeff;
  if (updated == Complex{}) {
    terms.erase(index);
  } else {
    terms[index] = updated;
  }
  return *this;
}

SymbolicField& SymbolicField::set(Mode mode, std::size_t index, Complex coeff) {
  Terms& terms = mode == Mode::k0 ? mode0_ : mode1_;
  if (coeff == Complex{}) {
    terms.erase(index);
  } else {
    terms[index] = coeff;
  }
  return *this;
}

Complex SymbolicField::coefficient(Mode mode, std::size_t index) const {
  const Terms& t = terms(mode);
  auto it = t.find(index);
  return it == t.end() ? Complex{} : it->second;
}

ClassicalField to_waveform(const SymbolicField& sf, const PpsSet& set) {
  ClassicalField out(set.length());
  for (Mode m : {Mode::k0, Mode::k1}) {
    auto amps = out.mode(m);
    for (const auto& [index, coeff] : sf.terms(m)) {
      const auto phasors = set[index].phasors();
      for (std::size_t k = 0; k < amps.size(); ++k) amps[k] += coeff * phasors[k];
    }
  }
  return out;
}

std::pair<Complex, Complex> symbolic_demodulate(const SymbolicField& sf, std::size_t j) {
  return {sf.coefficient(Mode::k0, j), sf.coefficient(Mode::k1, j)};
}

namespace {

struct SingleMode {
  std::size_t index = 0;
  Complex alpha{};
  Complex beta{};
};

SingleMode as_single_pps(const SymbolicField& sf, const char* which) {
  std::set<std::size_t> indices;
  for (Mode m : {Mode::k0, Mode::k1}) {
    for (const auto& [index, coeff] : sf.terms(m)) indices.insert(index);
  }
  if (indices.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("direct_product: field ") + which +
                    " must carry exactly one PPS, found " + std::to_string(indices.size()));
  }
  const std::size_t index = *indices.begin();
  return {index, sf.coefficient(Mode::k0, index), sf.coefficient(Mode::k1, index)};
}

}  // namespace

DirectProduct direct_product(const SymbolicField& a, const SymbolicField& b, const PpsSet& set) {
  const SingleMode fa = as_single_pps(a, "a");
  const SingleMode fb = as_single_pps(b, "b");
  DirectProduct out;
  out.sequence_index = sequence_product(fa.index, fb.index, set);
  const Complex ca[2] = {fa.alpha, fa.beta};
  const Complex cb[2] = {fb.alpha, fb.beta};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const Complex c = ca[x] * cb[y];
      if (c != Complex{}) out.terms[std::string{char('0' + x), char('0' + y)}] = c;
    }
  }
  return out;
}

}  // namespace ppsim
