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

#include "ppsim/algorithms.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "ppsim/error.hpp"
#include "ppsim/symbolic.hpp"

namespace ppsim {

namespace {

std::size_t bit_width_of(std::uint64_t v) {
  std::size_t w = 0;
  while (v) {
    ++w;
    v >>= 1;
  }
  return w;
}

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

/// Fills default widths; checks everything except base > 1.
ShorInstance fill_widths(const ShorInstance& in) {
  ShorInstance inst = in;
  if (inst.modulus < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must be >= 2");
  if (inst.base == 0 || inst.base >= inst.modulus) {
    throw Error(ErrorCode::kInvalidArgument, "base must satisfy 0 < a < N");
  }
  if (std::gcd(inst.base, inst.modulus) != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "base " + std::to_string(inst.base) + " shares a factor with " +
                    std::to_string(inst.modulus) + "; pick a coprime base");
  }
  if (inst.x_bits == 0) inst.x_bits = bit_width_of(inst.modulus - 1);
  if (inst.f_bits == 0) inst.f_bits = bit_width_of(inst.modulus - 1);
  if (inst.x_bits >= 32 || inst.f_bits >= 32) {
    throw Error(ErrorCode::kBudgetExceeded, "register widths must stay below 32 bits");
  }
  if ((std::uint64_t{1} << inst.x_bits) < inst.modulus) {
    throw Error(ErrorCode::kInvalidArgument, "x register must satisfy 2^x_bits >= N");
  }
  if ((std::uint64_t{1} << inst.f_bits) < inst.modulus) {
    throw Error(ErrorCode::kBudgetExceeded, "f register too narrow for values mod N");
  }
  return inst;
}

std::vector<ClassicalField> synthesize(const PlacementTable& table, const PpsSet& set) {
  std::vector<ClassicalField> fields;
  fields.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    SymbolicField sf;
    for (std::size_t j = 0; j < table.size(); ++j) {
      const Placement& p = table.at(i, j);
      sf.set(Mode::k0, j + 1, static_cast<double>(p.mode0));
      sf.set(Mode::k1, j + 1, static_cast<double>(p.mode1));
    }
    fields.push_back(to_waveform(sf, set));
  }
  return fields;
}

}  // namespace

StateSpec StateSpec::parse(std::string_view text) {
  if (text == "psi+") return {StateKind::kBellPsiPlus, 2};
  if (text == "psi-") return {StateKind::kBellPsiMinus, 2};
  if (text == "phi+") return {StateKind::kBellPhiPlus, 2};
  if (text == "phi-") return {StateKind::kBellPhiMinus, 2};
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view name = text.substr(0, colon);
    const std::size_t n = parse_size(text.substr(colon + 1), "state size");
    if (name == "product") return {StateKind::kProduct, n};
    if (name == "ghz") return {StateKind::kGhz, n};
    if (name == "w") return {StateKind::kW, n};
  }
  throw Error(ErrorCode::kParse, "unknown state '" + std::string(text) +
                                     "' (expected product:N, ghz:N, w:N, psi+, psi-, phi+, phi-)");
}

TypicalStateResult typical_state(const StateSpec& spec, const PpsSet& set, double tau) {
  GateArray array = [&] {
    switch (spec.kind) {
      case StateKind::kProduct: return product_array(spec.n, set);
      case StateKind::kBellPsiPlus: return bell_array(BellVariant::kPsiPlus, set);
      case StateKind::kBellPsiMinus: return bell_array(BellVariant::kPsiMinus, set);
      case StateKind::kBellPhiPlus: return bell_array(BellVariant::kPhiPlus, set);
      case StateKind::kBellPhiMinus: return bell_array(BellVariant::kPhiMinus, set);
      case StateKind::kGhz: return ghz_array(spec.n, set);
      case StateKind::kW: return w_array(spec.n, set);
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown state kind");
  }();
  const std::size_t n = array.arity();
  auto fields = array.run(canonical_inputs(set, n));
  const auto refs = reference_sequences(set, n);
  auto matrix = mode_status_matrix(fields, refs, tau * array.nominal_gain());
  auto state = reconstruct(matrix);
  return {std::move(array), std::move(fields), std::move(matrix), std::move(state)};
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  Wide b = base % modulus;
  while (exp) {
    if (exp & 1U) result = result * b % modulus;
    b = b * b % modulus;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

ShorInstance ShorInstance::validated() const {
  if (base <= 1) throw Error(ErrorCode::kInvalidArgument, "base must satisfy 1 < a < N");
  return fill_widths(*this);
}

std::size_t shor_groups(const ShorInstance& in) {
  const ShorInstance inst = fill_widths(in);
  const std::uint64_t span = std::uint64_t{1} << inst.x_bits;
  if (inst.groups != 0) {
    if (inst.groups > span || span % inst.groups != 0) {
      throw Error(ErrorCode::kInvalidArgument, "group count must be a power of two <= 2^x_bits");
    }
    return inst.groups;
  }
  for (std::uint64_t g = 1; g <= span; g <<= 1) {
    bool constant = true;
    for (std::uint64_t x = g; x < span && constant; ++x) {
      constant = mod_pow(inst.base, x, inst.modulus) == mod_pow(inst.base, x % g, inst.modulus);
    }
    if (constant) return static_cast<std::size_t>(g);
  }
  return static_cast<std::size_t>(span);
}

PlacementTable shor_encode(const ShorInstance& in, const PpsSet& set) {
  const ShorInstance inst = fill_widths(in);
  const std::size_t n = inst.x_bits + inst.f_bits;
  if (n > set.usable()) {
    throw Error(ErrorCode::kBudgetExceeded,
                "widths insufficient: " + std::to_string(n) + " fields need " + std::to_string(n) +
                    " PPSs, set has " + std::to_string(set.usable()));
  }
  const std::size_t groups = shor_groups(inst);
  if (groups > n) {
    throw Error(ErrorCode::kBudgetExceeded,
                "widths insufficient: " + std::to_string(groups) + " residue classes need as many "
                "rotations, only " + std::to_string(n) + " fields available");
  }
  PlacementTable table(n);
  const std::uint64_t span = std::uint64_t{1} << inst.x_bits;
  for (std::uint64_t x = 0; x < span; ++x) {
    const SequencePermutation rot(n, static_cast<std::size_t>(x % groups) + 1);
    const std::uint64_t word = (x << inst.f_bits) | mod_pow(inst.base, x, inst.modulus);
    for (std::size_t i = 1; i <= n; ++i) {
      Placement& cell = table.at(i - 1, rot(i) - 1);
      if ((word >> (n - i)) & 1U) {
        cell.mode1 = 1;
      } else {
        cell.mode0 = 1;
      }
    }
  }
  return table;
}

std::vector<std::uint64_t> distinct_f_values(const SimulatedState& state, std::size_t f_bits) {
  std::set<std::uint64_t> values;
  for (const auto& [bits, c] : state.terms()) {
    if (bits.size() < f_bits) throw Error(ErrorCode::kLengthMismatch, "state narrower than f register");
    std::uint64_t v = 0;
    for (char ch : std::string_view(bits).substr(bits.size() - f_bits)) v = (v << 1) | (ch == '1');
    values.insert(v);
  }
  return {values.begin(), values.end()};
}

ShorResult shor_factor(const ShorInstance& in, const PpsSet& set, double tau) {
  const ShorInstance inst = in.validated();
  const PlacementTable table = shor_encode(inst, set);
  const GateArray array = compile_placement(table, set);
  const std::size_t n = table.size();
  const auto fields = array.run(canonical_inputs(set, n));
  const auto refs = reference_sequences(set, n);

  ShorResult result;
  result.groups = shor_groups(inst);
  result.gate_count = array.count(NodeKind::kModeGate);
  result.combiner_count = array.count(NodeKind::kCombine);
  result.matrix = mode_status_matrix(fields, refs, tau * array.nominal_gain());
  result.state = reconstruct(result.matrix);
  result.period = distinct_f_values(result.state, inst.f_bits).size();

  const std::uint64_t r = result.period;
  const std::uint64_t modulus = inst.modulus;
  auto unusable = [&](const std::string& why) {
    return Error(ErrorCode::kPeriodUnusable,
                 "period unusable, retry with different a (r = " + std::to_string(r) + ": " + why + ")");
  };
  if (r == 0 || r % 2 != 0) throw unusable("odd period");
  const std::uint64_t half = mod_pow(inst.base, r / 2, modulus);
  if (half == modulus - 1) throw unusable("a^(r/2) = -1 mod N");
  const std::uint64_t p = std::gcd(half + modulus - 1, modulus);
  const std::uint64_t q = std::gcd(half + 1, modulus);
  if (p == 1 || p == modulus || q == 1 || q == modulus) throw unusable("trivial gcd");
  result.factors = {std::min(p, q), std::max(p, q)};
  return result;
}

std::size_t GroverDatabase::rotation_of(std::size_t position) const {
  auto it = rotations.find(entries.at(position));
  if (it != rotations.end()) return it->second;
  return position % width + 1;
}

void GroverDatabase::validate() const {
  if (width == 0 || width > 63) throw Error(ErrorCode::kInvalidArgument, "database width must lie in 1..63");
  std::set<std::uint64_t> seen;
  for (std::uint64_t x : entries) {
    if (x >> width) {
      throw Error(ErrorCode::kInvalidArgument,
                  "entry " + std::to_string(x) + " does not fit in " + std::to_string(width) + " bits");
    }
    if (!seen.insert(x).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate entry " + std::to_string(x));
    }
  }
  for (const auto& [entry, rot] : rotations) {
    if (rot == 0 || rot > width) {
      throw Error(ErrorCode::kInvalidArgument, "rotation for entry " + std::to_string(entry) +
                                                   " must lie in 1.." + std::to_string(width));
    }
  }
}

PlacementTable grover_placement(const GroverDatabase& db) {
  db.validate();
  const std::size_t n = db.width;
  PlacementTable table(n);
  for (std::size_t pos = 0; pos < db.entries.size(); ++pos) {
    const SequencePermutation rot(n, db.rotation_of(pos));
    const std::uint64_t x = db.entries[pos];
    for (std::size_t i = 1; i <= n; ++i) {
      Placement& cell = table.at(i - 1, rot(i) - 1);
      if ((x >> (n - i)) & 1U) {
        cell.mode1 = 1;
      } else {
        cell.mode0 = 1;
      }
    }
  }
  return table;
}

std::vector<ClassicalField> grover_encode(const GroverDatabase& db, const PpsSet& set) {
  if (db.width > set.usable()) {
    throw Error(ErrorCode::kBudgetExceeded, "database width " + std::to_string(db.width) +
                                                " exceeds the " + std::to_string(set.usable()) +
                                                " usable PPSs");
  }
  return synthesize(grover_placement(db), set);
}

std::vector<ClassicalField> grover_gate(std::span<const ClassicalField> fields, std::uint64_t query,
                                        std::size_t width) {
  if (fields.size() != width) {
    throw Error(ErrorCode::kArityMismatch, "expected " + std::to_string(width) + " fields, got " +
                                               std::to_string(fields.size()));
  }
  if (width < 64 && (query >> width)) {
    throw Error(ErrorCode::kInvalidArgument,
                "query " + std::to_string(query) + " does not fit in " + std::to_string(width) + " bits");
  }
  std::vector<ClassicalField> gated;
  gated.reserve(width);
  for (std::size_t i = 0; i < width; ++i) {
    const bool one = (query >> (width - 1 - i)) & 1U;
    gated.push_back(apply_mode_gate(fields[i], one ? ModeGateKind::kC : ModeGateKind::kB));
  }
  return gated;
}

std::vector<std::size_t> witness_rotations(const ModeStatusMatrix& m) {
  std::vector<std::size_t> out;
  for (const auto& r : cyclic_permutations(m.rows())) {
    bool all = true;
    for (std::size_t i = 1; i <= m.rows() && all; ++i) all = !m.at(i - 1, r(i) - 1).is_zero();
    if (all) out.push_back(r.rotation());
  }
  return out;
}

GroverResult grover_search_fields(std::span<const ClassicalField> fields, std::uint64_t query,
                                  std::size_t width, const PpsSet& set, double tau) {
  const auto gated = grover_gate(fields, query, width);
  const auto refs = reference_sequences(set, width);
  GroverResult result;
  result.matrix = mode_status_matrix(gated, refs, tau);
  const auto witnesses = witness_rotations(result.matrix);
  result.found = !witnesses.empty();
  if (result.found) result.witness = witnesses.front();
  return result;
}

GroverResult grover_search(const GroverDatabase& db, std::uint64_t query, const PpsSet& set,
                           double tau) {
  const auto fields = grover_encode(db, set);
  return grover_search_fields(fields, query, db.width, set, tau);
}

}  // namespace ppsim
