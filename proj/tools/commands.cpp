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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppsim/algorithms.hpp"
#include "ppsim/error.hpp"
#include "ppsim/io.hpp"

namespace ppsim::cli {

namespace {

using io::Json;

constexpr const char* kSchemas = R"TXT(File formats:
  pps set (text)
    # ppsim pps-set
    degree: 3
    polynomial: 1,0,1,1          coefficients, x^s first
    mapping: pi                  pi, pi/2, or radians
    rows:
    0,0,0,0,0,0,0,0              one comma-separated 0/1 row per sequence
  fields (JSON)     {"fields": [{"slot_count": N, "mode0": [[re,im],...], "mode1": [[re,im],...]}]}
  symbolic (JSON)   {"symbolic": [{"mode0": [{"pps": j, "re": x, "im": y}], "mode1": [...]}]}
  circuit (JSON)    {"nodes": [{"id": 0, "kind": "input", "port": 0}, ...],
                     "edges": [{"from": 0, "to": 1}, ...]}
                    kinds: input/output (port), split (ratios | fanout), gate (gate: A|B|C|D),
                           unitary (chi, theta), phase_flip, combine (fanin)
  matrix (JSON)     {"rows": n, "cols": m, "cells": [["(1,0)", "0", "(0,-1)", ...], ...]}
  matrix (CSV)      one row per line, cells quoted: "(1,0)","0"
  placement (JSON)  {"n": n, "cells": [["(1,0)", "0", ...], ...]}   row = field, column = PPS
  state (JSON)      [{"bitstring": "00", "coefficient": 1}, ...]
  database (JSON)   [61, 63, ...] or {"width": 8, "entries": [...], "rotations": {"61": 1, ...}}

Exit status: 0 ok, 1 internal, 2 usage, 3 invalid_argument, 4 degenerate_state,
  5 not_primitive, 6 length_mismatch, 7 closure_violated, 8 invalid_graph,
  9 arity_mismatch, 10 budget_exceeded, 11 period_unusable, 12 unrepresentable,
  13 parse, 14 io. Errors print one line: "error: <code>: <message>".)TXT";

struct SetOptions {
  std::string pps_path;
  int degree = 0;
  std::string mapping = "pi";
};

void add_set_options(CLI::App* cmd, SetOptions& o, bool with_file) {
  if (with_file) cmd->add_option("--pps", o.pps_path, "PPS set file (text format)");
  cmd->add_option("--degree", o.degree, "Degree s of a built-in PPS set (2..16)");
  cmd->add_option("--mapping", o.mapping, "Mapping phase for a built-in set: pi, pi/2, or radians");
}

/// The PPS set selected by --pps, else --degree, else the smallest built-in
/// degree providing `needed` usable sequences.
PpsSet load_set(const SetOptions& o, std::size_t needed) {
  if (!o.pps_path.empty()) return io::read_pps_text(io::read_text(o.pps_path));
  const double mapping = io::parse_mapping(o.mapping);
  if (o.degree != 0) return build_pps_set(o.degree, mapping);
  int s = 2;
  while (((std::size_t{1} << s) - 1) < needed) ++s;
  return build_pps_set(s, mapping);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_or_print(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

ModeStatusMatrix load_matrix(const std::string& path) {
  const std::string text = io::read_text(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    try {
      return io::matrix_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::kParse, "'" + path + "': " + e.what());
    }
  }
  return io::matrix_from_csv(text);
}

/// Fields from a field-list file, or from a symbolic list synthesized on `set`.
std::vector<ClassicalField> load_fields(const std::string& path, const PpsSet* set) {
  const Json j = io::read_json(path);
  if (j.is_object() && j.contains("symbolic")) {
    if (set == nullptr) throw Error(ErrorCode::kInvalidArgument, "symbolic inputs need a PPS set");
    std::vector<ClassicalField> fields;
    for (const Json& sf : j.at("symbolic")) fields.push_back(to_waveform(io::symbolic_from_json(sf), *set));
    return fields;
  }
  return io::fields_from_json(j);
}

std::string join_kets(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += s + '\n';
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ppsim: classical-field simulation of entangled states with pseudorandom phase sequences", "ppsim"};
  app.footer(kSchemas);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // pps gen
  CLI::App* pps = app.add_subcommand("pps", "PPS set utilities");
  pps->require_subcommand(1);
  CLI::App* pps_gen = pps->add_subcommand("gen", "Generate a PPS set and write it in text format");
  int gen_degree = 0;
  std::string gen_poly, gen_mapping = "pi", gen_out;
  pps_gen->add_option("--degree", gen_degree, "Degree s; the set holds 2^s sequences")->required();
  pps_gen->add_option("--poly", gen_poly, "Polynomial coefficients, x^s first (default: built-in primitive)");
  pps_gen->add_option("--mapping", gen_mapping, "Phase of a 1 symbol: pi, pi/2, or radians");
  pps_gen->add_option("--out", gen_out, "Output path (default: stdout)");

  // simulate
  CLI::App* sim = app.add_subcommand("simulate", "Run fields through a gate-array circuit");
  std::string sim_circuit, sim_inputs, sim_dump;
  double sim_tau = kDefaultThreshold;
  SetOptions sim_set;
  sim->add_option("--circuit", sim_circuit, "Circuit JSON")->required();
  sim->add_option("--inputs", sim_inputs,
                  "Input fields JSON (field list or symbolic list); default: canonical inputs");
  add_set_options(sim, sim_set, true);
  sim->add_option("--tau", sim_tau, "Decision threshold before circuit gain scaling");
  sim->add_option("--dump-fields", sim_dump, "Write output fields JSON here");

  // demod
  CLI::App* dem = app.add_subcommand("demod", "Demodulate fields into a mode status matrix");
  std::string dem_fields, dem_format = "json";
  double dem_tau = kDefaultThreshold;
  SetOptions dem_set;
  dem->add_option("--fields", dem_fields, "Fields JSON")->required();
  add_set_options(dem, dem_set, true);
  dem->add_option("--tau", dem_tau, "Decision threshold");
  dem->add_option("--format", dem_format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));

  // reconstruct
  CLI::App* rec = app.add_subcommand("reconstruct", "Reconstruct the simulated state from a matrix");
  std::string rec_matrix, rec_format = "json";
  std::size_t rec_samples = 0;
  std::uint64_t rec_seed = 0;
  rec->add_option("--matrix", rec_matrix, "Matrix JSON or CSV")->required();
  rec->add_option("--sample", rec_samples, "Draw K measurement outcomes instead");
  rec->add_option("--seed", rec_seed, "Seed for --sample");
  rec->add_option("--format", rec_format, "Output format")->check(CLI::IsMember({"json", "human"}));

  // state
  CLI::App* st = app.add_subcommand("state", "Build a typical entangled state end to end");
  std::string st_kind, st_format = "human", st_circuit;
  double st_tau = kDefaultThreshold;
  SetOptions st_set;
  st->add_option("--kind", st_kind, "product:N, ghz:N, w:N, psi+, psi-, phi+, phi-")->required();
  add_set_options(st, st_set, true);
  st->add_option("--tau", st_tau, "Decision threshold before circuit gain scaling");
  st->add_option("--format", st_format, "Output format")->check(CLI::IsMember({"json", "human"}));
  st->add_option("--circuit-out", st_circuit, "Write the gate array JSON here");

  // compile
  CLI::App* cmp = app.add_subcommand("compile", "Compile a placement table into a gate-array circuit");
  std::string cmp_placement, cmp_out;
  SetOptions cmp_set;
  cmp->add_option("--placement", cmp_placement, "Placement JSON")->required();
  add_set_options(cmp, cmp_set, true);
  cmp->add_option("--out", cmp_out, "Output path (default: stdout)");

  // shor
  CLI::App* sh = app.add_subcommand("shor", "Period finding and factoring");
  ShorInstance shor_in;
  double sh_tau = kDefaultThreshold;
  bool sh_json = false;
  SetOptions sh_set;
  sh->add_option("--modulus", shor_in.modulus, "N to factor")->required();
  sh->add_option("--base", shor_in.base, "Base a, 1 < a < N, coprime to N")->required();
  sh->add_option("--groups", shor_in.groups, "Rotation classes G (default: derived)");
  add_set_options(sh, sh_set, false);
  sh->add_option("--tau", sh_tau, "Decision threshold before circuit gain scaling");
  sh->add_flag("--json", sh_json, "Emit JSON");

  // grover
  CLI::App* gr = app.add_subcommand("grover", "Database membership search");
  std::string gr_db;
  std::uint64_t gr_query = 0;
  double gr_tau = kDefaultThreshold;
  bool gr_json = false;
  SetOptions gr_set;
  gr->add_option("--db", gr_db, "Database JSON")->required();
  gr->add_option("--query", gr_query, "Entry to look up")->required();
  add_set_options(gr, gr_set, false);
  gr->add_option("--tau", gr_tau, "Decision threshold");
  gr->add_flag("--json", gr_json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (pps_gen->parsed()) {
      const double mapping = io::parse_mapping(gen_mapping);
      const PpsSet set = gen_poly.empty()
                             ? build_pps_set(gen_degree, mapping)
                             : build_pps_set(gen_degree, io::parse_bits_csv(gen_poly), mapping);
      write_or_print(gen_out, out, io::write_pps_text(set));
    } else if (sim->parsed()) {
      const GateArray array = io::circuit_from_json(io::read_json(sim_circuit));
      const bool have_set = !sim_set.pps_path.empty() || sim_set.degree != 0 || sim_inputs.empty();
      std::optional<PpsSet> set;
      if (have_set) set = load_set(sim_set, array.arity());
      const auto inputs = sim_inputs.empty() ? canonical_inputs(*set, array.arity())
                                             : load_fields(sim_inputs, set ? &*set : nullptr);
      const auto outputs = array.run(inputs);
      const Json dumped = io::fields_to_json(outputs);
      if (!sim_dump.empty()) io::write_text(sim_dump, dumped.dump(2) + "\n");
      if (set) {
        const auto matrix =
            mode_status_matrix(outputs, reference_sequences(*set, outputs.size()), sim_tau * array.nominal_gain());
        emit(out, Json{{"matrix", io::matrix_to_json(matrix)}, {"state", io::state_to_json(reconstruct(matrix))}});
      } else if (sim_dump.empty()) {
        emit(out, dumped);
      }
    } else if (dem->parsed()) {
      const auto fields = load_fields(dem_fields, nullptr);
      const PpsSet set = load_set(dem_set, fields.size());
      const auto matrix = mode_status_matrix(fields, reference_sequences(set, fields.size()), dem_tau);
      if (dem_format == "csv") {
        out << io::matrix_to_csv(matrix);
      } else if (dem_format == "human") {
        out << matrix.to_string();
      } else {
        emit(out, io::matrix_to_json(matrix));
      }
    } else if (rec->parsed()) {
      const auto matrix = load_matrix(rec_matrix);
      if (rec->count("--sample") > 0) {
        const auto draws = sample_measurements(matrix, rec_samples, rec_seed);
        if (rec_format == "human") {
          out << join_kets(draws);
        } else {
          emit(out, Json{{"seed", rec_seed}, {"samples", draws}});
        }
      } else {
        const auto state = reconstruct(matrix);
        if (rec_format == "human") {
          out << state.to_string() << '\n';
        } else {
          emit(out, io::state_to_json(state));
        }
      }
    } else if (st->parsed()) {
      const StateSpec spec = StateSpec::parse(st_kind);
      const std::size_t n = (spec.kind == StateKind::kProduct || spec.kind == StateKind::kGhz ||
                             spec.kind == StateKind::kW)
                                ? spec.n
                                : 2;
      const PpsSet set = load_set(st_set, n);
      const auto result = typical_state(spec, set, st_tau);
      if (!st_circuit.empty()) io::write_text(st_circuit, io::circuit_to_json(result.array).dump(2) + "\n");
      if (st_format == "json") {
        emit(out, Json{{"matrix", io::matrix_to_json(result.matrix)},
                       {"state", io::state_to_json(result.state)}});
      } else {
        out << result.matrix.to_string() << result.state.to_string() << '\n';
      }
    } else if (cmp->parsed()) {
      const PlacementTable table = io::placement_from_json(io::read_json(cmp_placement));
      const PpsSet set = load_set(cmp_set, table.size());
      write_or_print(cmp_out, out, io::circuit_to_json(compile_placement(table, set)).dump(2) + "\n");
    } else if (sh->parsed()) {
      const ShorInstance inst = shor_in.validated();
      const PpsSet set = load_set(sh_set, inst.x_bits + inst.f_bits);
      const ShorResult r = shor_factor(inst, set, sh_tau);
      if (sh_json) {
        emit(out, Json{{"modulus", inst.modulus},
                       {"base", inst.base},
                       {"period", r.period},
                       {"factors", {r.factors.first, r.factors.second}},
                       {"groups", r.groups},
                       {"gates", r.gate_count},
                       {"combiners", r.combiner_count},
                       {"matrix", io::matrix_to_json(r.matrix)},
                       {"state", io::state_to_json(r.state)}});
      } else {
        out << "period: " << r.period << '\n'
            << "factors: " << r.factors.first << " x " << r.factors.second << '\n'
            << "state: " << r.state.to_string() << '\n';
      }
    } else if (gr->parsed()) {
      const GroverDatabase db = io::database_from_json(io::read_json(gr_db));
      const PpsSet set = load_set(gr_set, db.width);
      const GroverResult r = grover_search(db, gr_query, set, gr_tau);
      if (gr_json) {
        Json j{{"query", gr_query}, {"found", r.found}};
        j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
        j["matrix"] = io::matrix_to_json(r.matrix);
        emit(out, j);
      } else {
        out << (r.found ? "found" : "not found");
        if (r.witness) out << " (witness R_" << *r.witness << ")";
        out << '\n';
      }
    }
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return kFirstErrorCode + static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace ppsim::cli
