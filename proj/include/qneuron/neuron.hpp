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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qneuron/encoding.hpp"
#include "qneuron/gate_ir.hpp"
#include "qneuron/optical.hpp"
#include "qneuron/statevector.hpp"

namespace qneuron {

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct NeuronOptions {
  bool qubit_gray = true;
  bool qubit_hadamard = true;
  bool optical = true;
  Strategy strategy = Strategy::Ancilla;
  /** Optimized Hadamard-algorithm diagonal. */
  bool optimize = true;
  /** Count the global-phase gate toward qubit circuit size. */
  bool paper_count = false;
  /** Zero-pad non-power-of-two inputs for the qubit backends. */
  bool pad = true;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = kDefaultSeed;
};

struct QubitBackendResult {
  double probability = 0.0;
  CostMetrics cost;
  std::optional<Histogram> histogram;

  bool operator==(const QubitBackendResult &) const = default;
};

struct OpticalBackendResult {
  double probability = 0.0;
  OpticalCostMetrics cost;
  std::optional<Histogram> histogram;

  bool operator==(const OpticalBackendResult &) const = default;
};

struct NeuronReport {
  AngleVector theta;
  AngleVector phi;
  std::size_t dimension = 0;
  std::size_t padded_dimension = 0;
  bool padding_applied = false;
  Strategy strategy = Strategy::Ancilla;
  /** Fidelity of the vectors as given. */
  double analytic = 0.0;
  /** Fidelity of the zero-padded pair, when padding was applied. */
  std::optional<double> analytic_padded;
  std::optional<QubitBackendResult> qubit_gray;
  std::optional<QubitBackendResult> qubit_hadamard;
  std::optional<OpticalBackendResult> optical;
  /** Largest |p - analytic| over backends, against the vectors each consumed. */
  double max_deviation = 0.0;

  bool operator==(const NeuronReport &) const = default;
};

/**
 * Runs one (input, weight) pair through the analytic fidelity and every
 * enabled backend. Qubit backends see the zero-padded pair; the optical
 * backend sees the vectors unpadded.
 */
NeuronReport evaluate(const AngleVector &x, const AngleVector &w,
                      const NeuronOptions &options = {});

/** One report per pair, in input order. Pairs are evaluated concurrently. */
std::vector<NeuronReport> evaluate_batch(
    std::span<const std::pair<AngleVector, AngleVector>> pairs,
    const NeuronOptions &options = {});

}  // namespace qneuron
