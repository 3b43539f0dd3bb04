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

#include "ppsim/gate_array.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "ppsim/error.hpp"

namespace ppsim {

namespace {

[[noreturn]] void invalid_graph(const std::string& what) {
  throw Error(ErrorCode::kInvalidGraph, "gate array: " + what);
}

std::string node_label(NodeId id, const Node& node) {
  return std::string(to_string(node.kind)) + " node " + std::to_string(id);
}

std::vector<double> split_amplitudes(const Node& node) {
  const double total = std::accumulate(node.split_ratios.begin(), node.split_ratios.end(), 0.0);
  std::vector<double> amps;
  amps.reserve(node.split_ratios.size());
  for (double r : node.split_ratios) amps.push_back(std::sqrt(r / total));
  return amps;
}

void check_budget(std::size_t n, const PpsSet& set) {
  if (n > set.usable()) {
    throw Error(ErrorCode::kBudgetExceeded, std::to_string(n) + " fields need " +
                                                std::to_string(n) + " PPSs, set has " +
                                                std::to_string(set.usable()) + " usable");
  }
}

}  // namespace

std::string_view to_string(ModeGateKind kind) {
  switch (kind) {
    case ModeGateKind::kA: return "A";
    case ModeGateKind::kB: return "B";
    case ModeGateKind::kC: return "C";
    case ModeGateKind::kD: return "D";
  }
  return "?";
}

ModeGateKind parse_mode_gate(std::string_view text) {
  if (text == "A") return ModeGateKind::kA;
  if (text == "B") return ModeGateKind::kB;
  if (text == "C") return ModeGateKind::kC;
  if (text == "D") return ModeGateKind::kD;
  throw Error(ErrorCode::kParse, "unknown mode gate '" + std::string(text) + "'");
}

ClassicalField apply_mode_gate(const ClassicalField& field, ModeGateKind kind) {
  switch (kind) {
    case ModeGateKind::kA: return ClassicalField(field.slot_count());
    case ModeGateKind::kB: {
      auto m0 = field.mode(Mode::k0);
      return ClassicalField({m0.begin(), m0.end()}, std::vector<Complex>(field.slot_count()));
    }
    case ModeGateKind::kC: {
      auto m1 = field.mode(Mode::k1);
      return ClassicalField(std::vector<Complex>(field.slot_count()), {m1.begin(), m1.end()});
    }
    case ModeGateKind::kD: return field;
  }
  return field;
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kInput: return "input";
    case NodeKind::kSplit: return "split";
    case NodeKind::kModeGate: return "gate";
    case NodeKind::kUnitary: return "unitary";
    case NodeKind::kPhaseFlip: return "phase_flip";
    case NodeKind::kCombine: return "combine";
    case NodeKind::kOutput: return "output";
  }
  return "?";
}

NodeKind parse_node_kind(std::string_view text) {
  for (NodeKind k : {NodeKind::kInput, NodeKind::kSplit, NodeKind::kModeGate, NodeKind::kUnitary,
                     NodeKind::kPhaseFlip, NodeKind::kCombine, NodeKind::kOutput}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::kParse, "unknown node kind '" + std::string(text) + "'");
}

GateArray::GateArray(std::vector<Node> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  const std::size_t count = nodes_.size();
  out_edges_.resize(count);
  in_edges_.resize(count);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.from >= count || edge.to >= count) {
      invalid_graph("edge " + std::to_string(e) + " references a missing node");
    }
    out_edges_[edge.from].push_back(e);
    in_edges_[edge.to].push_back(e);
  }

  std::vector<NodeId> inputs, outputs;
  for (NodeId id = 0; id < count; ++id) {
    const Node& node = nodes_[id];
    const std::size_t in = in_edges_[id].size();
    const std::size_t out = out_edges_[id].size();
    auto expect = [&](std::size_t want_in, std::size_t want_out) {
      if (in != want_in || out != want_out) {
        invalid_graph(node_label(id, node) + " has in/out degree " + std::to_string(in) + "/" +
                      std::to_string(out) + ", expected " + std::to_string(want_in) + "/" +
                      std::to_string(want_out));
      }
    };
    switch (node.kind) {
      case NodeKind::kInput:
        expect(0, 1);
        inputs.push_back(id);
        break;
      case NodeKind::kOutput:
        expect(1, 0);
        outputs.push_back(id);
        break;
      case NodeKind::kSplit: {
        const auto& r = node.split_ratios;
        if (r.empty()) invalid_graph(node_label(id, node) + " has no outputs");
        if (std::any_of(r.begin(), r.end(), [](double x) { return !(x >= 0.0) || !std::isfinite(x); }) ||
            std::accumulate(r.begin(), r.end(), 0.0) <= 0.0) {
          invalid_graph(node_label(id, node) + " has invalid power ratios");
        }
        expect(1, r.size());
        break;
      }
      case NodeKind::kCombine:
        if (node.fanin == 0) invalid_graph(node_label(id, node) + " has zero fan-in");
        expect(node.fanin, 1);
        break;
      case NodeKind::kModeGate:
      case NodeKind::kUnitary:
      case NodeKind::kPhaseFlip:
        expect(1, 1);
        break;
    }
  }
  if (inputs.size() != outputs.size()) {
    invalid_graph(std::to_string(inputs.size()) + " inputs but " + std::to_string(outputs.size()) +
                  " outputs");
  }
  const std::size_t n = inputs.size();
  inputs_.assign(n, count);
  outputs_.assign(n, count);
  for (NodeId id : inputs) {
    const std::size_t port = nodes_[id].port;
    if (port >= n || inputs_[port] != count) invalid_graph("input ports must be 0..n-1, each once");
    inputs_[port] = id;
  }
  for (NodeId id : outputs) {
    const std::size_t port = nodes_[id].port;
    if (port >= n || outputs_[port] != count) invalid_graph("output ports must be 0..n-1, each once");
    outputs_[port] = id;
  }

  // Kahn's algorithm; leftover nodes sit on a cycle.
  std::vector<std::size_t> pending(count);
  std::queue<NodeId> ready;
  for (NodeId id = 0; id < count; ++id) {
    pending[id] = in_edges_[id].size();
    if (pending[id] == 0) ready.push(id);
  }
  while (!ready.empty()) {
    const NodeId id = ready.front();
    ready.pop();
    order_.push_back(id);
    for (std::size_t e : out_edges_[id]) {
      if (--pending[edges_[e].to] == 0) ready.push(edges_[e].to);
    }
  }
  if (order_.size() != count) invalid_graph("graph contains a cycle");
}

std::size_t GateArray::count(NodeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [kind](const Node& n) { return n.kind == kind; }));
}

std::size_t GateArray::count(ModeGateKind kind) const {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [kind](const Node& n) {
    return n.kind == NodeKind::kModeGate && n.gate == kind;
  }));
}

double GateArray::nominal_gain() const {
  constexpr double kDead = std::numeric_limits<double>::infinity();
  // Smallest live path gain arriving on each edge; infinity marks "no live path".
  std::vector<double> edge_gain(edges_.size(), kDead);
  double result = kDead;
  for (NodeId id : order_) {
    const Node& node = nodes_[id];
    double in_gain = kDead;
    if (node.kind == NodeKind::kInput) {
      in_gain = 1.0;
    } else {
      for (std::size_t e : in_edges_[id]) in_gain = std::min(in_gain, edge_gain[e]);
    }
    if (node.kind == NodeKind::kModeGate && node.gate == ModeGateKind::kA) in_gain = kDead;
    if (node.kind == NodeKind::kOutput) {
      result = std::min(result, in_gain);
      continue;
    }
    if (node.kind == NodeKind::kSplit) {
      const auto amps = split_amplitudes(node);
      for (std::size_t k = 0; k < amps.size(); ++k) {
        edge_gain[out_edges_[id][k]] = amps[k] == 0.0 ? kDead : in_gain * amps[k];
      }
    } else {
      for (std::size_t e : out_edges_[id]) edge_gain[e] = in_gain;
    }
  }
  return result == kDead ? 1.0 : result;
}

std::vector<ClassicalField> GateArray::run(std::span<const ClassicalField> inputs) const {
  if (inputs.size() != arity()) {
    throw Error(ErrorCode::kArityMismatch, "gate array expects " + std::to_string(arity()) +
                                               " input fields, got " +
                                               std::to_string(inputs.size()));
  }
  for (const auto& f : inputs) {
    if (f.slot_count() != inputs.front().slot_count()) {
      throw Error(ErrorCode::kLengthMismatch, "gate array inputs differ in slot count");
    }
  }
  std::vector<ClassicalField> edge_value(edges_.size());
  std::vector<ClassicalField> outputs(arity());
  for (NodeId id : order_) {
    const Node& node = nodes_[id];
    const auto& ins = in_edges_[id];
    const auto& outs = out_edges_[id];
    switch (node.kind) {
      case NodeKind::kInput:
        edge_value[outs.front()] = inputs[node.port];
        break;
      case NodeKind::kOutput:
        outputs[node.port] = std::move(edge_value[ins.front()]);
        break;
      case NodeKind::kSplit: {
        const auto amps = split_amplitudes(node);
        for (std::size_t k = 0; k < outs.size(); ++k) {
          edge_value[outs[k]] = edge_value[ins.front()] * Complex{amps[k]};
        }
        break;
      }
      case NodeKind::kModeGate:
        edge_value[outs.front()] = apply_mode_gate(edge_value[ins.front()], node.gate);
        break;
      case NodeKind::kUnitary:
        edge_value[outs.front()] = apply_unitary(edge_value[ins.front()], node.unitary);
        break;
      case NodeKind::kPhaseFlip:
        edge_value[outs.front()] = edge_value[ins.front()] * Complex{-1.0};
        break;
      case NodeKind::kCombine: {
        ClassicalField sum = std::move(edge_value[ins.front()]);
        for (std::size_t k = 1; k < ins.size(); ++k) sum += edge_value[ins[k]];
        edge_value[outs.front()] = std::move(sum);
        break;
      }
    }
  }
  return outputs;
}

NodeId GateArrayBuilder::add(Node node) {
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

NodeId GateArrayBuilder::add_input(std::size_t port) {
  Node n;
  n.kind = NodeKind::kInput;
  n.port = port;
  return add(std::move(n));
}

NodeId GateArrayBuilder::add_output(std::size_t port) {
  Node n;
  n.kind = NodeKind::kOutput;
  n.port = port;
  return add(std::move(n));
}

NodeId GateArrayBuilder::add_split(std::size_t fanout) {
  return add_split(std::vector<double>(fanout, 1.0));
}

NodeId GateArrayBuilder::add_split(std::vector<double> power_ratios) {
  Node n;
  n.kind = NodeKind::kSplit;
  n.split_ratios = std::move(power_ratios);
  return add(std::move(n));
}

NodeId GateArrayBuilder::add_gate(ModeGateKind kind) {
  Node n;
  n.kind = NodeKind::kModeGate;
  n.gate = kind;
  return add(std::move(n));
}

NodeId GateArrayBuilder::add_unitary(Unitary2 u) {
  Node n;
  n.kind = NodeKind::kUnitary;
  n.unitary = u;
  return add(std::move(n));
}

NodeId GateArrayBuilder::add_phase_flip() {
  Node n;
  n.kind = NodeKind::kPhaseFlip;
  return add(std::move(n));
}

NodeId GateArrayBuilder::add_combine(std::size_t fanin) {
  Node n;
  n.kind = NodeKind::kCombine;
  n.fanin = fanin;
  return add(std::move(n));
}

GateArrayBuilder& GateArrayBuilder::connect(NodeId from, NodeId to) {
  edges_.push_back({from, to});
  return *this;
}

GateArray GateArrayBuilder::build() const { return GateArray(nodes_, edges_); }

std::vector<ClassicalField> run_array(const GateArray& array,
                                      std::span<const ClassicalField> inputs) {
  return array.run(inputs);
}

std::vector<ClassicalField> canonical_inputs(const PpsSet& set, std::size_t n) {
  check_budget(n, set);
  std::vector<ClassicalField> fields;
  fields.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) fields.push_back(make_single_pps_field(set, k, 1.0, 1.0));
  return fields;
}

PlacementTable::PlacementTable(std::size_t n) : n_(n), cells_(n * n) {}

Placement& PlacementTable::at(std::size_t field, std::size_t pps) {
  if (field >= n_ || pps >= n_) throw Error(ErrorCode::kInvalidArgument, "placement index out of range");
  return cells_[field * n_ + pps];
}

const Placement& PlacementTable::at(std::size_t field, std::size_t pps) const {
  if (field >= n_ || pps >= n_) throw Error(ErrorCode::kInvalidArgument, "placement index out of range");
  return cells_[field * n_ + pps];
}

ModeStatusMatrix PlacementTable::expected_matrix() const {
  ModeStatusMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = ModeStatus(at(i, j).mode0, at(i, j).mode1);
  }
  return m;
}

GateArray compile_placement(const PlacementTable& table, const PpsSet& set) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty placement table");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Placement& p = table.at(i, j);
      if (std::abs(p.mode0) > 1 || std::abs(p.mode1) > 1) {
        throw Error(ErrorCode::kInvalidArgument, "placement signs must be -1, 0 or +1");
      }
      if (!p.empty() && j + 1 >= set.size()) {
        throw Error(ErrorCode::kBudgetExceeded, "cell demands PPS index " + std::to_string(j + 1) +
                                                    " but the set has " +
                                                    std::to_string(set.size()) + " sequences");
      }
    }
  }
  check_budget(n, set);

  struct Branch {
    std::size_t row;
    ModeGateKind gate;
    bool flip;
  };
  std::vector<std::vector<Branch>> buses(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Placement& p = table.at(i, j);
      if (p.empty()) continue;
      if (p.mode0 != 0 && p.mode0 == p.mode1) {
        buses[j].push_back({i, ModeGateKind::kD, p.mode0 < 0});
        continue;
      }
      if (p.mode0 != 0) buses[j].push_back({i, ModeGateKind::kB, p.mode0 < 0});
      if (p.mode1 != 0) buses[j].push_back({i, ModeGateKind::kC, p.mode1 < 0});
    }
  }
  // Every input must reach an output and every output must be fed, so unused
  // buses and empty rows get a blocked (Gate A) branch.
  std::vector<std::size_t> fed(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (buses[j].empty()) buses[j].push_back({j, ModeGateKind::kA, false});
    for (const Branch& b : buses[j]) ++fed[b.row];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (fed[i] == 0) {
      buses[i].push_back({i, ModeGateKind::kA, false});
      ++fed[i];
    }
  }

  GateArrayBuilder builder;
  std::vector<NodeId> sink(n);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId out = builder.add_output(i);
    if (fed[i] == 1) {
      sink[i] = out;
    } else {
      sink[i] = builder.add_combine(fed[i]);
      builder.connect(sink[i], out);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const NodeId in = builder.add_input(j);
    NodeId source = in;
    if (buses[j].size() > 1) {
      source = builder.add_split(buses[j].size());
      builder.connect(in, source);
    }
    for (const Branch& b : buses[j]) {
      NodeId tail = builder.add_gate(b.gate);
      builder.connect(source, tail);
      if (b.flip) {
        const NodeId flip = builder.add_phase_flip();
        builder.connect(tail, flip);
        tail = flip;
      }
      builder.connect(tail, sink[b.row]);
    }
  }
  return builder.build();
}

std::string_view to_string(BellVariant v) {
  switch (v) {
    case BellVariant::kPsiPlus: return "psi+";
    case BellVariant::kPsiMinus: return "psi-";
    case BellVariant::kPhiPlus: return "phi+";
    case BellVariant::kPhiMinus: return "phi-";
  }
  return "?";
}

BellVariant parse_bell_variant(std::string_view text) {
  for (BellVariant v : {BellVariant::kPsiPlus, BellVariant::kPsiMinus, BellVariant::kPhiPlus,
                        BellVariant::kPhiMinus}) {
    if (to_string(v) == text) return v;
  }
  throw Error(ErrorCode::kParse, "unknown Bell variant '" + std::string(text) + "'");
}

GateArray bell_array(BellVariant variant, const PpsSet& set) {
  const bool phi = variant == BellVariant::kPhiPlus || variant == BellVariant::kPhiMinus;
  const bool minus = variant == BellVariant::kPsiMinus || variant == BellVariant::kPhiMinus;
  PlacementTable table(2);
  // Field 1: lambda^(1)|0> +- lambda^(2)|1>.
  table.at(0, 0).mode0 = 1;
  table.at(0, 1).mode1 = minus ? -1 : 1;
  // Field 2: lambda^(2) on |0> (psi) or |1> (phi), lambda^(1) on the other mode.
  if (phi) {
    table.at(1, 1).mode1 = 1;
    table.at(1, 0).mode0 = 1;
  } else {
    table.at(1, 1).mode0 = 1;
    table.at(1, 0).mode1 = 1;
  }
  return compile_placement(table, set);
}

GateArray ghz_array(std::size_t n, const PpsSet& set) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "GHZ array needs n >= 2");
  check_budget(n, set);
  PlacementTable table(n);
  for (std::size_t i = 0; i < n; ++i) {
    table.at(i, i).mode0 = 1;
    table.at(i, (i + 1) % n).mode1 = 1;
  }
  return compile_placement(table, set);
}

GateArray w_array(std::size_t n, const PpsSet& set) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "W array needs n >= 2");
  check_budget(n, set);
  GateArrayBuilder b;
  const NodeId merge = b.add_combine(n);
  for (std::size_t k = 0; k < n; ++k) {
    const NodeId in = b.add_input(k);
    const NodeId gate = b.add_gate(k == 0 ? ModeGateKind::kC : ModeGateKind::kB);
    b.connect(in, gate).connect(gate, merge);
  }
  // Splitter i taps 1/(n - i) of the remaining power, so every line ends up
  // with 1/n.
  NodeId rest = merge;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const NodeId split = b.add_split(std::vector<double>{1.0, static_cast<double>(n - i - 1)});
    b.connect(rest, split);
    b.connect(split, b.add_output(i));
    rest = split;
  }
  b.connect(rest, b.add_output(n - 1));
  return b.build();
}

GateArray product_array(std::size_t n, const PpsSet& set) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "product array needs n >= 1");
  check_budget(n, set);
  GateArrayBuilder b;
  for (std::size_t k = 0; k < n; ++k) {
    const NodeId in = b.add_input(k);
    const NodeId gate = b.add_gate(ModeGateKind::kD);
    b.connect(in, gate).connect(gate, b.add_output(k));
  }
  return b.build();
}

}  // namespace ppsim
