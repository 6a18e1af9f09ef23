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

#include "qneuron/encoding.hpp"
#include "qneuron/gate_ir.hpp"
#include "qneuron/statevector.hpp"

namespace qneuron {

enum class Algorithm { Gray, Hadamard };

struct QubitNeuronOptions {
  Algorithm algorithm = Algorithm::Gray;
  Strategy strategy = Strategy::Ancilla;
  /** Hadamard algorithm only. */
  bool optimize = true;
  /** Hadamard algorithm only; the phase never affects the probabilities. */
  bool include_global_phase = true;
};

/**
 * Stage-wise neuron circuit over n = log2 N data wires:
 *
 *   H^n | U(theta - phi) | H^n | X^n [| MCX(data -> ancilla)]
 *
 * Stages are separated by barriers. Wire n is the ancilla; it is present for
 * the Gray algorithm (which needs it for the diagonal) and for the ancilla
 * strategy (MCX target). theta and phi must share a power-of-two dimension.
 */
QubitCircuit neuron_circuit(const AngleVector &theta, const AngleVector &phi,
                            const QubitNeuronOptions &options);

/**
 * Ancilla: p1 is the probability of the ancilla reading 1.
 * MeasureAll: p1 is the probability of every data wire reading 1 after the
 * X layer, i.e. of the all-zeros data outcome before it.
 */
MeasurementOutcome measure_neuron(const StateVector &final_state,
                                  unsigned data_wires, Strategy strategy);

MeasurementOutcome neuron_qubit(const AngleVector &theta, const AngleVector &phi,
                                const QubitNeuronOptions &options);

const char *algorithm_name(Algorithm a);
const char *strategy_name(Strategy s);

}  // namespace qneuron
