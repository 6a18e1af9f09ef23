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

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qneuron/encoding.hpp"
#include "qneuron/gate_ir.hpp"

namespace qneuron {

/** Phases beta_k of the operator diag(exp(i beta_k)), dimension 2^n, n >= 1. */
class DiagonalTarget {
 public:
  explicit DiagonalTarget(std::vector<double> beta);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return beta_.size(); }
  std::span<const double> beta() const noexcept { return beta_; }

 private:
  std::vector<double> beta_;
  unsigned num_qubits_ = 0;
};

/**
 * Gray:     M_st = (-1)^(b_s . g_t) / 2^n, g_t the reflected Gray code of t.
 * Hadamard: M_st = (-1)^(b_s . b_t) / 2^(n-1).
 */
enum class MatrixKind { Gray, Hadamard };

struct AngleSolution {
  std::vector<double> alpha;
  MatrixKind kind = MatrixKind::Gray;
};

inline std::uint64_t gray_code(std::uint64_t t) { return t ^ (t >> 1); }

/** Parity of the bitwise AND of a and b. */
inline int dot_parity(std::uint64_t a, std::uint64_t b) {
  return __builtin_popcountll(a & b) & 1;
}

inline constexpr unsigned kMaxMatrixQubits = 12;

Eigen::MatrixXd build_M(MatrixKind kind, unsigned n);

/** Unnormalized in-place Walsh-Hadamard transform; size must be 2^k. */
void walsh_hadamard(std::span<double> v);

/** Solves M alpha = beta with a fast Walsh-Hadamard transform. */
AngleSolution solve_alpha(const DiagonalTarget &target, MatrixKind kind);

/**
 * Gray-code walk. Wires 0..n-1 carry data, wire n is the ancilla. The ancilla
 * takes 2^n RZ(-2 alpha_t / 2^n) rotations, each followed by a CNOT from the
 * data wire at the bit where g_t and g_{t+1} differ; the final CNOT closes
 * the cycle back to g_0 and returns the ancilla to |0>. On (data, |0>) the
 * circuit applies diag(exp(i beta_s)) exactly.
 */
QubitCircuit synth_alg1(const DiagonalTarget &target);

struct Alg2Options {
  /** Gray-ordered terms, CNOT cancellation and depth scheduling. */
  bool optimize = true;
  /** Emit the alpha_0 term as a GlobalPhase gate. */
  bool include_global_phase = true;
};

/**
 * Per-index construction over n wires: for each index q >= 1 an RZ on the
 * wire of q's most significant set bit, sandwiched by CNOTs from the wires
 * of q's other set bits. alpha_0 contributes only a global phase. Optimized
 * output has 2^n - 1 RZ and 2^n - 2 CNOT gates.
 */
QubitCircuit synth_alg2(const DiagonalTarget &target, const Alg2Options &options = {});

/**
 * Removes pairs of identical CNOTs that become adjacent once commuting gates
 * between them are skipped. The unitary is unchanged.
 */
QubitCircuit cancel_cnot_pairs(const QubitCircuit &c);

/** beta_k = theta_k - phi_k. */
DiagonalTarget merged_diagonal(const AngleVector &theta, const AngleVector &phi);

}  // namespace qneuron
