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
/// Mode-control gates, gate-array DAGs, and a compiler from PPS placement
/// tables to arrays.
///
/// A gate array takes n fields in and produces n fields. Nodes are Input,
/// Split, ModeGate, Unitary, PhaseFlip, Combine, and Output; edges carry one
/// field each. A Split sends a scaled copy of its input down each out-edge
/// (in edge insertion order), a Combine sums its inputs.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppsim/demod.hpp"
#include "ppsim/field.hpp"
#include "ppsim/pps.hpp"

namespace ppsim {

/// A blocks everything, B passes mode |0>, C passes mode |1>, D passes both.
enum class ModeGateKind { kA, kB, kC, kD };

std::string_view to_string(ModeGateKind kind);
ModeGateKind parse_mode_gate(std::string_view text);

ClassicalField apply_mode_gate(const ClassicalField& field, ModeGateKind kind);

enum class NodeKind { kInput, kSplit, kModeGate, kUnitary, kPhaseFlip, kCombine, kOutput };

std::string_view to_string(NodeKind kind);
NodeKind parse_node_kind(std::string_view text);

using NodeId = std::size_t;

struct Node {
  NodeKind kind = NodeKind::kModeGate;
  /// Input/Output: field position.
  std::size_t port = 0;
  /// Split: relative output powers, one per out-edge.
  std::vector<double> split_ratios;
  ModeGateKind gate = ModeGateKind::kD;
  Unitary2 unitary{};
  /// Combine: number of in-edges.
  std::size_t fanin = 0;
};

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
};

/// Validated, immutable gate array.
class GateArray {
 public:
  /// Checks per-kind degrees, port numbering (0..n-1 once each for inputs and
  /// outputs) and acyclicity.
  GateArray(std::vector<Node> nodes, std::vector<Edge> edges);

  std::size_t arity() const noexcept { return inputs_.size(); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<NodeId>& topological_order() const noexcept { return order_; }

  std::size_t count(NodeKind kind) const;
  std::size_t count(ModeGateKind kind) const;

  /// Smallest product of split amplitudes along any input-to-output path not
  /// blocked by a Gate A. Unit-coefficient placements come out of the array
  /// scaled by at least this much, so it is the scale for decision thresholds.
  double nominal_gain() const;

  std::vector<ClassicalField> run(std::span<const ClassicalField> inputs) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_edges_;
  std::vector<std::vector<std::size_t>> in_edges_;
  std::vector<NodeId> order_;
  std::vector<NodeId> inputs_;   // by port
  std::vector<NodeId> outputs_;  // by port
};

class GateArrayBuilder {
 public:
  NodeId add(Node node);
  NodeId add_input(std::size_t port);
  NodeId add_output(std::size_t port);
  /// Equal-power split.
  NodeId add_split(std::size_t fanout);
  NodeId add_split(std::vector<double> power_ratios);
  NodeId add_gate(ModeGateKind kind);
  NodeId add_unitary(Unitary2 u);
  NodeId add_phase_flip();
  NodeId add_combine(std::size_t fanin);
  GateArrayBuilder& connect(NodeId from, NodeId to);

  GateArray build() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
};

std::vector<ClassicalField> run_array(const GateArray& array,
                                      std::span<const ClassicalField> inputs);

/// e^{i lambda^(k)} (|0> + |1>) for k = 1..n.
std::vector<ClassicalField> canonical_inputs(const PpsSet& set, std::size_t n);

/// Declares, per output field i and PPS lambda^(j+1), the sign carried on each
/// mode (-1, 0, +1).
struct Placement {
  int mode0 = 0;
  int mode1 = 0;

  bool empty() const noexcept { return mode0 == 0 && mode1 == 0; }
  bool operator==(const Placement&) const = default;
};

class PlacementTable {
 public:
  PlacementTable() = default;
  explicit PlacementTable(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Placement& at(std::size_t field, std::size_t pps);
  const Placement& at(std::size_t field, std::size_t pps) const;

  /// The mode status matrix a perfect demodulation of the placement yields.
  ModeStatusMatrix expected_matrix() const;

  bool operator==(const PlacementTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Placement> cells_;
};

/// One bus per canonical input; every nonempty cell taps its bus through a
/// split, selects modes with Gate B/C/D, optionally flips phase, and is summed
/// into its output line. Splits and combines are only inserted where fanout
/// or fanin exceeds one.
GateArray compile_placement(const PlacementTable& table, const PpsSet& set);

enum class BellVariant { kPsiPlus, kPsiMinus, kPhiPlus, kPhiMinus };

std::string_view to_string(BellVariant v);
BellVariant parse_bell_variant(std::string_view text);

/// Two-field arrays turning canonical inputs into the Bell fields; the minus
/// variants flip the phase of field 1's mode |1> branch.
GateArray bell_array(BellVariant variant, const PpsSet& set);

/// Field i carries lambda^(i) on |0> and lambda^(i+1 mod n) on |1>.
GateArray ghz_array(std::size_t n, const PpsSet& set);

/// All n outputs equal lambda^(1)|1> + sum_{j>=2} lambda^(j)|0>, built by
/// merging the gated inputs and fanning out through n - 1 two-way beam
/// splitters.
GateArray w_array(std::size_t n, const PpsSet& set);

/// n parallel Gate D wires.
GateArray product_array(std::size_t n, const PpsSet& set);

}  // namespace ppsim
