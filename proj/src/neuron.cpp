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


#include "qneuron/neuron.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "qneuron/error.hpp"
#include "qneuron/qubit_neuron.hpp"

namespace qneuron {

namespace {

const char *const kModule = "neuron";

QubitBackendResult run_qubit_backend(const AngleVector &theta, const AngleVector &phi,
                                     Algorithm algorithm, const NeuronOptions &options,
                                     std::uint64_t seed) {
  QubitNeuronOptions q;
  q.algorithm = algorithm;
  q.strategy = options.strategy;
  q.optimize = options.optimize;
  const QubitCircuit c = neuron_circuit(theta, phi, q);
  const StateVector out = run(c, StateVector::basis(c.num_wires()));
  const MeasurementOutcome m = measure_neuron(out, ceil_log2(theta.size()), options.strategy);

  QubitBackendResult r;
  r.probability = m.p1;
  r.cost = cost_metrics(c, {.count_global_phase = options.paper_count});
  if (options.shots) r.histogram = sample(m, *options.shots, seed);
  return r;
}

}  // namespace

NeuronReport evaluate(const AngleVector &x, const AngleVector &w,
                      const NeuronOptions &options) {
  if (x.size() != w.size()) {
    throw ValidationError(kModule, "dimension mismatch: input has " +
                                       std::to_string(x.size()) + " entries, weight has " +
                                       std::to_string(w.size()));
  }
  if (x.size() < 2) {
    throw ValidationError(kModule, "neuron needs vectors of dimension >= 2");
  }

  NeuronReport report;
  report.theta = x;
  report.phi = w;
  report.dimension = x.size();
  report.padded_dimension = qubit_dim(x.size());
  report.strategy = options.strategy;
  report.analytic = analytic_fidelity(x, w);

  const bool want_qubit = options.qubit_gray || options.qubit_hadamard;
  AngleVector xq = x, wq = w;
  double analytic_qubit = report.analytic;
  if (want_qubit && report.padded_dimension != x.size()) {
    if (!options.pad) {
      throw ValidationError(kModule, "dimension " + std::to_string(x.size()) +
                                         " is not a power of two and padding is off");
    }
    xq = pad_to_qubit_dim(x);
    wq = pad_to_qubit_dim(w);
    analytic_qubit = analytic_fidelity(xq, wq);
    report.padding_applied = true;
    report.analytic_padded = analytic_qubit;
  }

  double dev = 0.0;
  if (options.qubit_gray) {
    report.qubit_gray = run_qubit_backend(xq, wq, Algorithm::Gray, options, options.seed);
    dev = std::max(dev, std::abs(report.qubit_gray->probability - analytic_qubit));
  }
  if (options.qubit_hadamard) {
    report.qubit_hadamard =
        run_qubit_backend(xq, wq, Algorithm::Hadamard, options, options.seed + 1);
    dev = std::max(dev, std::abs(report.qubit_hadamard->probability - analytic_qubit));
  }
  if (options.optical) {
    const OpticalNeuron neuron = optical_neuron_circuit(x, w);
    OpticalBackendResult r;
    r.probability = std::clamp(
        simulate_photon(compose_unitary(neuron.circuit()),
                        PhotonState::in_mode(neuron.mesh.modes, 0))
            .probability(0),
        0.0, 1.0);
    r.cost = optical_cost_metrics(neuron.circuit());
    if (options.shots) {
      r.histogram = sample({1.0 - r.probability, r.probability, options.strategy},
                           *options.shots, options.seed + 2);
    }
    dev = std::max(dev, std::abs(r.probability - report.analytic));
    report.optical = std::move(r);
  }
  report.max_deviation = dev;
  return report;
}

std::vector<NeuronReport> evaluate_batch(
    std::span<const std::pair<AngleVector, AngleVector>> pairs,
    const NeuronOptions &options) {
  std::vector<NeuronReport> out(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();) {
      try {
        out[i] = evaluate(pairs[i].first, pairs[i].second, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(pairs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto &t : pool) t.join();
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace qneuron
