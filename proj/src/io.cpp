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

#include "ppsim/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ppsim/error.hpp"

namespace ppsim::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParse, what); }

/// Runs `fn`, turning JSON access errors into parse errors tagged with `what`.
template <typename Fn>
auto guarded(std::string_view what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    parse_error(std::string(what) + ": " + e.what());
  }
}

Json complex_array(std::span<const Complex> values) {
  Json arr = Json::array();
  for (const Complex& c : values) arr.push_back({c.real(), c.imag()});
  return arr;
}

std::vector<Complex> complex_vector(const Json& arr) {
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const Json& pair : arr) {
    if (!pair.is_array() || pair.size() != 2) parse_error("complex values are [re, im] pairs");
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

std::vector<std::vector<std::string>> cell_grid(const Json& cells) {
  std::vector<std::vector<std::string>> grid;
  for (const Json& row : cells) {
    std::vector<std::string> r;
    for (const Json& c : row) r.push_back(c.is_number() ? std::to_string(c.get<int>()) : c.get<std::string>());
    grid.push_back(std::move(r));
  }
  return grid;
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path.string() + "'");
}

Json read_json(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error("'" + path.string() + "': " + e.what());
  }
}

std::string format_mapping(double mapping_phase) {
  if (mapping_phase == kMappingPi) return "pi";
  if (mapping_phase == kMappingHalfPi) return "pi/2";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, mapping_phase);
  return std::string(buf, ptr);
}

double parse_mapping(std::string_view text) {
  text = trim(text);
  if (text == "pi") return kMappingPi;
  if (text == "pi/2") return kMappingHalfPi;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    parse_error("bad mapping phase '" + std::string(text) + "' (expected pi, pi/2 or radians)");
  }
  return value;
}

std::vector<Bit> parse_bits_csv(std::string_view text) {
  std::vector<Bit> bits;
  text = trim(text);
  if (text.empty()) return bits;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string_view tok = trim(text.substr(start, comma - start));
    if (tok == "0") {
      bits.push_back(0);
    } else if (tok == "1") {
      bits.push_back(1);
    } else {
      parse_error("expected 0 or 1, got '" + std::string(tok) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return bits;
}

std::string format_bits_csv(std::span<const Bit> bits) {
  std::string out;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (k) out += ',';
    out += bits[k] ? '1' : '0';
  }
  return out;
}

std::string write_pps_text(const PpsSet& set) {
  std::string out = "# ppsim pps-set\n";
  out += "degree: " + std::to_string(set.degree()) + "\n";
  out += "polynomial: " + format_bits_csv(set.polynomial()) + "\n";
  out += "mapping: " + format_mapping(set.mapping_phase()) + "\n";
  out += "rows:\n";
  for (const auto& seq : set.sequences()) out += format_bits_csv(seq.bits()) + "\n";
  return out;
}

PpsSet read_pps_text(std::string_view text) {
  std::optional<int> degree;
  std::vector<Bit> polynomial;
  double mapping = kMappingPi;
  std::vector<std::vector<Bit>> rows;
  bool in_rows = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (in_rows) {
      rows.push_back(parse_bits_csv(line));
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) parse_error("pps file: expected 'key: value', got '" + raw + "'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    if (key == "degree") {
      int d = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc{} || ptr != value.data() + value.size()) parse_error("pps file: bad degree");
      degree = d;
    } else if (key == "polynomial") {
      polynomial = parse_bits_csv(value);
    } else if (key == "mapping") {
      mapping = parse_mapping(value);
    } else if (key == "rows") {
      in_rows = true;
    } else {
      parse_error("pps file: unknown key '" + std::string(key) + "'");
    }
  }
  if (!degree) parse_error("pps file: missing degree");
  if (!in_rows) parse_error("pps file: missing rows section");
  return PpsSet(*degree, std::move(polynomial), mapping, std::move(rows));
}

Json field_to_json(const ClassicalField& field) {
  return Json{{"slot_count", field.slot_count()},
              {"mode0", complex_array(field.mode(Mode::k0))},
              {"mode1", complex_array(field.mode(Mode::k1))}};
}

ClassicalField field_from_json(const Json& j) {
  return guarded("field", [&] {
    const auto slots = j.at("slot_count").get<std::size_t>();
    auto m0 = complex_vector(j.at("mode0"));
    auto m1 = complex_vector(j.at("mode1"));
    if (m0.size() != slots || m1.size() != slots) {
      throw Error(ErrorCode::kLengthMismatch, "field: slot_count does not match sample count");
    }
    return ClassicalField(std::move(m0), std::move(m1));
  });
}

Json fields_to_json(std::span<const ClassicalField> fields) {
  Json arr = Json::array();
  for (const auto& f : fields) arr.push_back(field_to_json(f));
  return Json{{"fields", std::move(arr)}};
}

std::vector<ClassicalField> fields_from_json(const Json& j) {
  return guarded("field list", [&] {
    std::vector<ClassicalField> out;
    for (const Json& f : j.at("fields")) out.push_back(field_from_json(f));
    return out;
  });
}

Json symbolic_to_json(const SymbolicField& sf) {
  Json out = Json::object();
  for (Mode m : {Mode::k0, Mode::k1}) {
    Json arr = Json::array();
    for (const auto& [index, c] : sf.terms(m)) {
      arr.push_back({{"pps", index}, {"re", c.real()}, {"im", c.imag()}});
    }
    out[m == Mode::k0 ? "mode0" : "mode1"] = std::move(arr);
  }
  return out;
}

SymbolicField symbolic_from_json(const Json& j) {
  return guarded("symbolic field", [&] {
    SymbolicField sf;
    for (Mode m : {Mode::k0, Mode::k1}) {
      const char* key = m == Mode::k0 ? "mode0" : "mode1";
      if (!j.contains(key)) continue;
      for (const Json& t : j.at(key)) {
        sf.add(m, t.at("pps").get<std::size_t>(),
               Complex(t.value("re", 0.0), t.value("im", 0.0)));
      }
    }
    return sf;
  });
}

Json circuit_to_json(const GateArray& array) {
  Json nodes = Json::array();
  for (std::size_t id = 0; id < array.nodes().size(); ++id) {
    const Node& n = array.nodes()[id];
    Json node{{"id", id}, {"kind", std::string(to_string(n.kind))}};
    switch (n.kind) {
      case NodeKind::kInput:
      case NodeKind::kOutput: node["port"] = n.port; break;
      case NodeKind::kSplit: node["ratios"] = n.split_ratios; break;
      case NodeKind::kModeGate: node["gate"] = std::string(to_string(n.gate)); break;
      case NodeKind::kUnitary:
        node["chi"] = n.unitary.chi;
        node["theta"] = n.unitary.theta;
        break;
      case NodeKind::kCombine: node["fanin"] = n.fanin; break;
      case NodeKind::kPhaseFlip: break;
    }
    nodes.push_back(std::move(node));
  }
  Json edges = Json::array();
  for (const Edge& e : array.edges()) edges.push_back({{"from", e.from}, {"to", e.to}});
  return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

GateArray circuit_from_json(const Json& j) {
  return guarded("circuit", [&] {
    std::map<long long, NodeId> ids;
    std::vector<Node> nodes;
    for (const Json& jn : j.at("nodes")) {
      const long long id = jn.at("id").get<long long>();
      if (!ids.emplace(id, nodes.size()).second) parse_error("circuit: duplicate node id " + std::to_string(id));
      Node n;
      n.kind = parse_node_kind(jn.at("kind").get<std::string>());
      switch (n.kind) {
        case NodeKind::kInput:
        case NodeKind::kOutput: n.port = jn.at("port").get<std::size_t>(); break;
        case NodeKind::kSplit:
          if (jn.contains("ratios")) {
            n.split_ratios = jn.at("ratios").get<std::vector<double>>();
          } else {
            n.split_ratios.assign(jn.at("fanout").get<std::size_t>(), 1.0);
          }
          break;
        case NodeKind::kModeGate: n.gate = parse_mode_gate(jn.at("gate").get<std::string>()); break;
        case NodeKind::kUnitary:
          n.unitary = {jn.at("chi").get<double>(), jn.at("theta").get<double>()};
          break;
        case NodeKind::kCombine: n.fanin = jn.at("fanin").get<std::size_t>(); break;
        case NodeKind::kPhaseFlip: break;
      }
      nodes.push_back(std::move(n));
    }
    std::vector<Edge> edges;
    for (const Json& je : j.at("edges")) {
      const auto from = ids.find(je.at("from").get<long long>());
      const auto to = ids.find(je.at("to").get<long long>());
      if (from == ids.end() || to == ids.end()) parse_error("circuit: edge references unknown node");
      edges.push_back({from->second, to->second});
    }
    return GateArray(std::move(nodes), std::move(edges));
  });
}

Json matrix_to_json(const ModeStatusMatrix& m) {
  Json cells = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    cells.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"cells", std::move(cells)}};
}

ModeStatusMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const Json& cells = j.is_array() ? j : j.at("cells");
    ModeStatusMatrix m = ModeStatusMatrix::from_cells(cell_grid(cells));
    if (j.is_object() && j.contains("rows") &&
        (j.at("rows").get<std::size_t>() != m.rows() || j.at("cols").get<std::size_t>() != m.cols())) {
      throw Error(ErrorCode::kLengthMismatch, "matrix: declared dimensions do not match cells");
    }
    return m;
  });
}

std::string matrix_to_csv(const ModeStatusMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += '"' + m.at(i, j).to_string() + '"';
    }
    out += '\n';
  }
  return out;
}

ModeStatusMatrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<std::string>> grid;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') {
        quoted = !quoted;
      } else if (ch == ',' && !quoted) {
        row.push_back(cell);
        cell.clear();
      } else if (ch != '\r') {
        cell += ch;
      }
    }
    if (quoted) parse_error("matrix csv: unterminated quote");
    row.push_back(cell);
    grid.push_back(std::move(row));
  }
  return ModeStatusMatrix::from_cells(grid);
}

Json placement_to_json(const PlacementTable& table) {
  Json out = matrix_to_json(table.expected_matrix());
  return Json{{"n", table.size()}, {"cells", out.at("cells")}};
}

PlacementTable placement_from_json(const Json& j) {
  return guarded("placement", [&] {
    const ModeStatusMatrix m = ModeStatusMatrix::from_cells(cell_grid(j.at("cells")));
    if (!m.square()) throw Error(ErrorCode::kLengthMismatch, "placement table must be square");
    PlacementTable table(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t k = 0; k < m.cols(); ++k) table.at(i, k) = {m.at(i, k).a, m.at(i, k).b};
    }
    return table;
  });
}

Json state_to_json(const SimulatedState& state) {
  Json arr = Json::array();
  for (const auto& [bits, c] : state.terms()) arr.push_back({{"bitstring", bits}, {"coefficient", c}});
  return arr;
}

SimulatedState state_from_json(const Json& j) {
  return guarded("state", [&] {
    const Json& arr = j.is_array() ? j : j.at("state");
    if (arr.empty()) return SimulatedState(j.is_object() ? j.value("qubits", std::size_t{0}) : 0);
    SimulatedState state(arr.front().at("bitstring").get<std::string>().size());
    for (const Json& t : arr) {
      const auto bits = t.at("bitstring").get<std::string>();
      if (bits.find_first_not_of("01") != std::string::npos) parse_error("state: bad bitstring '" + bits + "'");
      state.add(bits, t.at("coefficient").get<long long>());
    }
    return state;
  });
}

Json database_to_json(const GroverDatabase& db) {
  Json rot = Json::object();
  for (const auto& [entry, r] : db.rotations) rot[std::to_string(entry)] = r;
  return Json{{"width", db.width}, {"entries", db.entries}, {"rotations", std::move(rot)}};
}

GroverDatabase database_from_json(const Json& j) {
  return guarded("database", [&] {
    GroverDatabase db;
    if (j.is_array()) {
      db.entries = j.get<std::vector<std::uint64_t>>();
    } else {
      db.width = j.value("width", std::size_t{8});
      db.entries = j.at("entries").get<std::vector<std::uint64_t>>();
      if (j.contains("rotations")) {
        for (const auto& [key, value] : j.at("rotations").items()) {
          std::uint64_t entry = 0;
          auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), entry);
          if (ec != std::errc{} || ptr != key.data() + key.size()) parse_error("database: bad rotation key '" + key + "'");
          db.rotations[entry] = value.get<std::size_t>();
        }
      }
    }
    db.validate();
    return db;
  });
}

}  // namespace ppsim::io
