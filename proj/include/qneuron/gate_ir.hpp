// Copyright 2026 The qneuron Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qneuron {

/**
 * Wire convention: wire 0 is the least significant bit of the
 * computational-basis index.
 */
enum class GateKind { H, X, RZ, CNOT, MCX, GlobalPhase, Barrier };

struct Gate {
  GateKind kind = GateKind::H;
  /** Unused for GlobalPhase and Barrier. */
  unsigned target = 0;
  /** One entry for CNOT; sorted, at least one entry for MCX. */
  std::vector<unsigned> controls;
  /** RZ rotation or global phase, in radians. */
  double angle = 0.0;

  static Gate h(unsigned wire);
  static Gate x(unsigned wire);
  /** diag(exp(-i w/2), exp(i w/2)). */
  static Gate rz(unsigned wire, double omega);
  static Gate cnot(unsigned control, unsigned target);
  static Gate mcx(std::vector<unsigned> controls, unsigned target);
  static Gate global_phase(double lambda);
  /** Stage boundary across every wire; no action on the state. */
  static Gate barrier();

  /** Wires the gate acts on; empty for GlobalPhase and Barrier. */
  std::vector<unsigned> wires() const;

  bool operator==(const Gate &) const = default;
};

const char *gate_kind_name(GateKind kind);

/** Ordered gate list; gates execute left to right. */
class QubitCircuit {
 public:
  explicit QubitCircuit(unsigned num_wires, std::string provenance = {});

  /** Validates wire range, wire distinctness and angle finiteness. */
  QubitCircuit &add(Gate gate);

  /** Appends every gate of `other`, which may not be wider than this. */
  QubitCircuit &append(const QubitCircuit &other);

  unsigned num_wires() const noexcept { return num_wires_; }
  const std::vector<Gate> &gates() const noexcept { return gates_; }
  const std::string &provenance() const noexcept { return provenance_; }
  void set_provenance(std::string tag) { provenance_ = std::move(tag); }

  std::size_t count(GateKind kind) const;

  bool operator==(const QubitCircuit &) const = default;

 private:
  unsigned num_wires_;
  std::vector<Gate> gates_;
  std::string provenance_;
};

struct CostMetrics {
  std::size_t size = 0;
  std::size_t depth = 0;
  unsigned width = 0;

  bool operator==(const CostMetrics &) const = default;
};

struct CostOptions {
  /** Count GlobalPhase gates toward size (never toward depth). */
  bool count_global_phase = false;
  /** Count MCX gates toward size and depth. */
  bool count_multi_controlled = false;
};

/**
 * size: gate count (Barrier never counted).
 * depth: longest path in the gate DAG, one step per gate on every wire it
 * touches; a Barrier aligns all wires to the current maximum.
 * width: number of wires.
 */
CostMetrics cost_metrics(const QubitCircuit &c, const CostOptions &options = {});

inline constexpr unsigned kDenseWireLimit = 12;

/** Dense 2^w x 2^w unitary of the whole circuit (w <= kDenseWireLimit). */
Eigen::MatrixXcd unitary_of(const QubitCircuit &c);

}  // namespace qneuron
