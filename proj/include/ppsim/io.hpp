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
/// Readers and writers for every artifact the CLI exchanges.
///
/// PPS set text format:
///
///     # ppsim pps-set
///     degree: 3
///     polynomial: 1,0,1,1        (x^s first)
///     mapping: pi                (pi, pi/2, or radians)
///     rows:
///     0,0,0,0,0,0,0,0
///     1,1,1,0,0,1,0,0
///     ...
///
/// Everything else is JSON:
///   field        {"slot_count": N, "mode0": [[re, im], ...], "mode1": [...]}
///   field list   {"fields": [field, ...]}
///   symbolic     {"mode0": [{"pps": j, "re": x, "im": y}, ...], "mode1": [...]}
///   circuit      {"nodes": [{"id", "kind", ...params}], "edges": [{"from", "to"}]}
///   matrix       {"rows": n, "cols": m, "cells": [["(1,0)", "0", ...], ...]}
///   placement    {"n": n, "cells": [["(1,0)", ...], ...]}
///   state        [{"bitstring": "00", "coefficient": 1}, ...]
///   database     [61, 63, ...] or {"width": 8, "entries": [...], "rotations": {"61": 1}}

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ppsim/algorithms.hpp"
#include "ppsim/demod.hpp"
#include "ppsim/field.hpp"
#include "ppsim/gate_array.hpp"
#include "ppsim/pps.hpp"
#include "ppsim/reconstruct.hpp"
#include "ppsim/symbolic.hpp"

namespace ppsim::io {

using Json = nlohmann::json;

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);
Json read_json(const std::filesystem::path& path);

std::string format_mapping(double mapping_phase);
double parse_mapping(std::string_view text);
std::vector<Bit> parse_bits_csv(std::string_view text);
std::string format_bits_csv(std::span<const Bit> bits);

std::string write_pps_text(const PpsSet& set);
PpsSet read_pps_text(std::string_view text);

Json field_to_json(const ClassicalField& field);
ClassicalField field_from_json(const Json& j);
Json fields_to_json(std::span<const ClassicalField> fields);
std::vector<ClassicalField> fields_from_json(const Json& j);

Json symbolic_to_json(const SymbolicField& sf);
SymbolicField symbolic_from_json(const Json& j);

Json circuit_to_json(const GateArray& array);
GateArray circuit_from_json(const Json& j);

Json matrix_to_json(const ModeStatusMatrix& m);
ModeStatusMatrix matrix_from_json(const Json& j);
std::string matrix_to_csv(const ModeStatusMatrix& m);
ModeStatusMatrix matrix_from_csv(std::string_view text);

Json placement_to_json(const PlacementTable& table);
PlacementTable placement_from_json(const Json& j);

Json state_to_json(const SimulatedState& state);
SimulatedState state_from_json(const Json& j);

Json database_to_json(const GroverDatabase& db);
GroverDatabase database_from_json(const Json& j);

}  // namespace ppsim::io
