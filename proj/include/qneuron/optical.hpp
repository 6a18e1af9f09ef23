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
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qneuron/encoding.hpp"

namespace qneuron {

// Single-photon linear optics. With one photon in N spatial modes the
// Heisenberg relation b_k = sum_j u_kj a_j acts on the photon's N amplitudes
// exactly as the N x N mode matrix u, so states are length-N vectors and
// every element is an N x N unitary. No Fock space is built.

/**
 * Acts on modes (a, b) as
 *   [[cos eta, -exp(-i xi) sin eta],
 *    [exp(i xi) sin eta, cos eta]].
 */
struct BeamSplitter {
  double eta = 0.0;
  double xi = 0.0;
  unsigned mode_a = 0;
  unsigned mode_b = 1;

  Eigen::Matrix2cd matrix() const;
  bool operator==(const BeamSplitter &) const = default;
};

/** diag(exp(i beta_k)) over all modes. */
struct PhaseShifterLayer {
  std::vector<double> phases;

  bool operator==(const PhaseShifterLayer &) const = default;
};

using OpticalElement = std::variant<BeamSplitter, PhaseShifterLayer>;

/** Ordered element list; elements execute left to right. */
class OpticalCircuit {
 public:
  explicit OpticalCircuit(unsigned modes);

  OpticalCircuit &add(OpticalElement element);
  OpticalCircuit &append(const OpticalCircuit &other);

  unsigned modes() const noexcept { return modes_; }
  const std::vector<OpticalElement> &elements() const noexcept { return elements_; }
  std::size_t beam_splitter_count() const;

  bool operator==(const OpticalCircuit &) const = default;

 private:
  unsigned modes_;
  std::vector<OpticalElement> elements_;
};

/** Reversed element order with each element conjugate-transposed. */
OpticalCircuit adjoint(const OpticalCircuit &c);

struct MeshEntry {
  double eta = 0.0;
  /** Mode carrying the parent amplitude. */
  unsigned mode_a = 0;
  /** Mode that receives the split-off amplitude; empty for a padding slot. */
  std::optional<unsigned> mode_b;
  /** eta == pi/2: no element is emitted. */
  bool skipped = false;

  bool operator==(const MeshEntry &) const = default;
};

/**
 * Beam-splitter pyramid for a nonnegative unit vector c. layers[0] is the
 * pair layer over c itself (computed first); layers.back() is the single
 * root splitter. The photon meets the layers from the back to the front.
 * permutation[k] is the output mode that carries c_k.
 */
struct MeshPlan {
  unsigned modes = 0;
  std::vector<std::vector<MeshEntry>> layers;
  std::vector<unsigned> permutation;

  /** Emitted beam splitters in execution order. */
  OpticalCircuit circuit() const;

  bool operator==(const MeshPlan &) const = default;
};

struct MeshOptions {
  // Leave out splitters whose odd input is zero (eta = pi/2). Turning this off
  // emits them as swaps; only the output mode labels change.
  bool skip_quarter_turns = true;
};

MeshPlan mesh_synthesize(std::span<const double> c, const MeshOptions &options = {});

/** N x N mode transformation, unitary within 1e-10. */
class ModeUnitary {
 public:
  explicit ModeUnitary(Eigen::MatrixXcd matrix);

  unsigned modes() const noexcept { return static_cast<unsigned>(matrix_.rows()); }
  const Eigen::MatrixXcd &matrix() const noexcept { return matrix_; }
  ModeUnitary adjoint() const { return ModeUnitary(matrix_.adjoint()); }

 private:
  Eigen::MatrixXcd matrix_;
};

ModeUnitary compose_unitary(const OpticalCircuit &c);
ModeUnitary compose_unitary(const MeshPlan &plan);

/** Mesh that spreads a photon in mode 0 evenly over N >= 2 modes. */
MeshPlan uniform_mesh(unsigned N);
ModeUnitary uniform_md(unsigned N);

/** amplitudes[k] is the amplitude of one photon in mode k; unit norm. */
class PhotonState {
 public:
  explicit PhotonState(Eigen::VectorXcd amplitudes);
  static PhotonState in_mode(unsigned modes, unsigned k);

  unsigned modes() const noexcept { return static_cast<unsigned>(amps_.size()); }
  const Eigen::VectorXcd &amplitudes() const noexcept { return amps_; }
  /** Probability of detecting the photon in mode k. */
  double probability(unsigned k) const { return std::norm(amps_(k)); }

 private:
  Eigen::VectorXcd amps_;
};

PhotonState simulate_photon(const ModeUnitary &u, const PhotonState &input);

/** Input state followed by the state after each stage. */
std::vector<PhotonState> simulate_stages(std::span<const OpticalCircuit> stages,
                                         const PhotonState &input);

/** Mesh, one merged phase layer carrying theta - phi, then the mesh adjoint. */
struct OpticalNeuron {
  MeshPlan mesh;
  OpticalCircuit md;
  OpticalCircuit phases;
  OpticalCircuit md_dagger;

  OpticalCircuit circuit() const;
  std::vector<OpticalCircuit> stages() const { return {md, phases, md_dagger}; }
  std::vector<double> phase_layer() const;
};

OpticalNeuron optical_neuron_circuit(const AngleVector &theta, const AngleVector &phi);

/** Probability of the photon returning to mode 0; N >= 2, no padding. */
double neuron_optical(const AngleVector &theta, const AngleVector &phi);

struct OpticalCostMetrics {
  /** Beam splitters. */
  std::size_t size = 0;
  /** Single-mode phase shifters (N per phase layer). */
  std::size_t phase_shifters = 0;
  /** Longest element path plus one detection layer. */
  std::size_t depth = 0;
  /** log2 N. */
  double width = 0.0;

  bool operator==(const OpticalCostMetrics &) const = default;
};

OpticalCostMetrics optical_cost_metrics(const OpticalCircuit &c);

}  // namespace qneuron
