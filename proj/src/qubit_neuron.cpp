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


#include "qneuron/qubit_neuron.hpp"

#include <algorithm>
#include <numeric>

#include "qneuron/diag_synth.hpp"
#include "qneuron/error.hpp"

namespace qneuron {

QubitCircuit neuron_circuit(const AngleVector &theta, const AngleVector &phi,
                            const QubitNeuronOptions &options) {
  const DiagonalTarget target = merged_diagonal(theta, phi);
  const unsigned n = target.num_qubits();
  const bool ancilla =
      options.algorithm == Algorithm::Gray || options.strategy == Strategy::Ancilla;

  QubitCircuit diag =
      options.algorithm == Algorithm::Gray
          ? synth_alg1(target)
          : synth_alg2(target, {options.optimize, options.include_global_phase});

  QubitCircuit c(n + (ancilla ? 1 : 0),
                 std::string("neuron-") + algorithm_name(options.algorithm) + "-" +
                     strategy_name(options.strategy));
  for (unsigned q = 0; q < n; ++q) c.add(Gate::h(q));
  c.add(Gate::barrier());
  c.append(diag);
  c.add(Gate::barrier());
  for (unsigned q = 0; q < n; ++q) c.add(Gate::h(q));
  c.add(Gate::barrier());
  for (unsigned q = 0; q < n; ++q) c.add(Gate::x(q));
  if (options.strategy == Strategy::Ancilla) {
    std::vector<unsigned> controls(n);
    std::iota(controls.begin(), controls.end(), 0u);
    c.add(Gate::barrier());
    c.add(Gate::mcx(std::move(controls), n));
  }
  return c;
}

MeasurementOutcome measure_neuron(const StateVector &final_state,
                                  unsigned data_wires, Strategy strategy) {
  MeasurementOutcome out;
  out.strategy = strategy;
  if (strategy == Strategy::Ancilla) {
    out.p1 = probability_one(final_state, data_wires);
  } else {
    const auto dist = marginal_distribution(final_state, data_wires);
    out.p1 = dist.back();
  }
  out.p1 = std::clamp(out.p1, 0.0, 1.0);
  out.p0 = 1.0 - out.p1;
  return out;
}

MeasurementOutcome neuron_qubit(const AngleVector &theta, const AngleVector &phi,
                                const QubitNeuronOptions &options) {
  const QubitCircuit c = neuron_circuit(theta, phi, options);
  const unsigned n = ceil_log2(theta.size());
  const StateVector out = run(c, StateVector::basis(c.num_wires()));
  return measure_neuron(out, n, options.strategy);
}

const char *algorithm_name(Algorithm a) {
  return a == Algorithm::Gray ? "gray" : "hadamard";
}

const char *strategy_name(Strategy s) {
  return s == Strategy::Ancilla ? "ancilla" : "measure-all";
}

}  // namespace qneuron
