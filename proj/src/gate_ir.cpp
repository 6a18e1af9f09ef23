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


#include "qneuron/gate_ir.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qneuron/error.hpp"

namespace qneuron {

namespace {
const char *const kModule = "gate-ir";
using cd = std::complex<double>;
}  // namespace

Gate Gate::h(unsigned wire) { return Gate{GateKind::H, wire, {}, 0.0}; }
Gate Gate::x(unsigned wire) { return Gate{GateKind::X, wire, {}, 0.0}; }
Gate Gate::rz(unsigned wire, double omega) {
  return Gate{GateKind::RZ, wire, {}, omega};
}
Gate Gate::cnot(unsigned control, unsigned target) {
  return Gate{GateKind::CNOT, target, {control}, 0.0};
}
Gate Gate::mcx(std::vector<unsigned> controls, unsigned target) {
  std::sort(controls.begin(), controls.end());
  return Gate{GateKind::MCX, target, std::move(controls), 0.0};
}
Gate Gate::global_phase(double lambda) {
  return Gate{GateKind::GlobalPhase, 0, {}, lambda};
}
Gate Gate::barrier() { return Gate{GateKind::Barrier, 0, {}, 0.0}; }

std::vector<unsigned> Gate::wires() const {
  if (kind == GateKind::GlobalPhase || kind == GateKind::Barrier) return {};
  std::vector<unsigned> w = controls;
  w.push_back(target);
  return w;
}

const char *gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::RZ: return "rz";
    case GateKind::CNOT: return "cx";
    case GateKind::MCX: return "mcx";
    case GateKind::GlobalPhase: return "gphase";
    case GateKind::Barrier: return "barrier";
  }
  return "?";
}

QubitCircuit::QubitCircuit(unsigned num_wires, std::string provenance)
    : num_wires_(num_wires), provenance_(std::move(provenance)) {
  if (num_wires == 0) {
    throw ValidationError(kModule, "a circuit needs at least one wire");
  }
}

QubitCircuit &QubitCircuit::add(Gate gate) {
  if (!std::isfinite(gate.angle)) {
    throw ValidationError(kModule, "gate angle is not finite");
  }
  switch (gate.kind) {
    case GateKind::CNOT:
      if (gate.controls.size() != 1) {
        throw ValidationError(kModule, "cx takes exactly one control");
      }
      break;
    case GateKind::MCX:
      if (gate.controls.empty()) {
        throw ValidationError(kModule, "mcx needs at least one control");
      }
      std::sort(gate.controls.begin(), gate.controls.end());
      break;
    default:
      if (!gate.controls.empty()) {
        throw ValidationError(kModule, std::string(gate_kind_name(gate.kind)) +
                                           " takes no controls");
      }
  }
  std::vector<unsigned> w = gate.wires();
  for (unsigned q : w) {
    if (q >= num_wires_) {
      throw ValidationError(kModule, "wire q" + std::to_string(q) +
                                         " out of range for a " +
                                         std::to_string(num_wires_) +
                                         "-wire circuit");
    }
  }
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end()) {
    throw ValidationError(kModule, "gate wires must be distinct");
  }
  gates_.push_back(std::move(gate));
  return *this;
}

QubitCircuit &QubitCircuit::append(const QubitCircuit &other) {
  if (other.num_wires() > num_wires_) {
    throw ValidationError(kModule, "appended circuit is wider than target");
  }
  for (const Gate &g : other.gates()) add(g);
  return *this;
}

std::size_t QubitCircuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(),
                    [kind](const Gate &g) { return g.kind == kind; }));
}

CostMetrics cost_metrics(const QubitCircuit &c, const CostOptions &options) {
  CostMetrics m;
  m.width = c.num_wires();
  std::vector<std::size_t> level(c.num_wires(), 0);
  for (const Gate &g : c.gates()) {
    switch (g.kind) {
      case GateKind::Barrier: {
        const std::size_t top = *std::max_element(level.begin(), level.end());
        std::fill(level.begin(), level.end(), top);
        continue;
      }
      case GateKind::GlobalPhase:
        if (options.count_global_phase) ++m.size;
        continue;
      case GateKind::MCX:
        if (!options.count_multi_controlled) continue;
        break;
      default:
        break;
    }
    ++m.size;
    const std::vector<unsigned> w = g.wires();
    std::size_t l = 0;
    for (unsigned q : w) l = std::max(l, level[q]);
    ++l;
    for (unsigned q : w) level[q] = l;
    m.depth = std::max(m.depth, l);
  }
  return m;
}

Eigen::MatrixXcd unitary_of(const QubitCircuit &c) {
  const unsigned w = c.num_wires();
  if (w > kDenseWireLimit) {
    throw ValidationError(kModule, "dense unitary limited to " +
                                       std::to_string(kDenseWireLimit) +
                                       " wires, circuit has " +
                                       std::to_string(w));
  }
  const Eigen::Index dim = Eigen::Index{1} << w;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  const double s = 1.0 / std::sqrt(2.0);

  // Left-multiply by each gate; rows are basis indices of the output.
  for (const Gate &g : c.gates()) {
    switch (g.kind) {
      case GateKind::Barrier:
        break;
      case GateKind::GlobalPhase:
        u *= std::polar(1.0, g.angle);
        break;
      case GateKind::RZ: {
        const Eigen::Index bit = Eigen::Index{1} << g.target;
        const cd lo = std::polar(1.0, -g.angle / 2);
        const cd hi = std::polar(1.0, g.angle / 2);
        for (Eigen::Index r = 0; r < dim; ++r) u.row(r) *= (r & bit) ? hi : lo;
        break;
      }
      case GateKind::H: {
        const Eigen::Index bit = Eigen::Index{1} << g.target;
        for (Eigen::Index r = 0; r < dim; ++r) {
          if (r & bit) continue;
          const Eigen::RowVectorXcd a = u.row(r);
          const Eigen::RowVectorXcd b = u.row(r | bit);
          u.row(r) = s * (a + b);
          u.row(r | bit) = s * (a - b);
        }
        break;
      }
      case GateKind::X:
      case GateKind::CNOT:
      case GateKind::MCX: {
        Eigen::Index mask = 0;
        for (unsigned q : g.controls) mask |= Eigen::Index{1} << q;
        const Eigen::Index bit = Eigen::Index{1} << g.target;
        for (Eigen::Index r = 0; r < dim; ++r) {
          if ((r & bit) || (r & mask) != mask) continue;
          u.row(r).swap(u.row(r | bit));
        }
        break;
      }
    }
  }
  return u;
}

}  // namespace qneuron
