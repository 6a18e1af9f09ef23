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


#include "qneuron/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "qneuron/error.hpp"

namespace qneuron {

namespace {

const char *const kModule = "statevector-sim";

void check_width(unsigned w) {
  if (w > kMaxSimWires) {
    throw ValidationError(kModule, "simulation limited to " +
                                       std::to_string(kMaxSimWires) +
                                       " wires, got " + std::to_string(w));
  }
}

}  // namespace

StateVector::StateVector(std::vector<Amplitude> amplitudes)
    : amps_(std::move(amplitudes)) {
  const std::size_t d = amps_.size();
  if (d < 2 || !std::has_single_bit(d)) {
    throw ValidationError(kModule, "state length must be a power of two >= 2");
  }
  num_wires_ = static_cast<unsigned>(std::countr_zero(d));
  check_width(num_wires_);
  if (std::abs(norm_squared() - 1.0) > 1e-10) {
    throw ValidationError(kModule, "initial state is not normalized");
  }
}

StateVector StateVector::basis(unsigned num_wires, std::uint64_t index) {
  if (num_wires == 0) throw ValidationError(kModule, "state needs at least one wire");
  check_width(num_wires);
  const std::uint64_t dim = std::uint64_t{1} << num_wires;
  if (index >= dim) throw ValidationError(kModule, "basis index out of range");
  std::vector<Amplitude> a(dim);
  a[index] = 1.0;
  return StateVector(std::move(a), num_wires);
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto &a : amps_) s += std::norm(a);
  return s;
}

void apply_gate(std::span<Amplitude> amps, unsigned num_wires, const Gate &g) {
  const std::uint64_t dim = std::uint64_t{1} << num_wires;
  switch (g.kind) {
    case GateKind::Barrier:
      return;
    case GateKind::GlobalPhase: {
      const Amplitude f = std::polar(1.0, g.angle);
      for (auto &a : amps) a *= f;
      return;
    }
    default:
      break;
  }
  const std::uint64_t stride = std::uint64_t{1} << g.target;
  std::uint64_t mask = 0;
  for (unsigned q : g.controls) mask |= std::uint64_t{1} << q;
  const double s = 1.0 / std::sqrt(2.0);
  const Amplitude lo = std::polar(1.0, -g.angle / 2);
  const Amplitude hi = std::polar(1.0, g.angle / 2);

  // Blocks of 2*stride; i0 has the target bit clear, i1 = i0 + stride.
  for (std::uint64_t base = 0; base < dim; base += stride << 1) {
    for (std::uint64_t i0 = base; i0 < base + stride; ++i0) {
      const std::uint64_t i1 = i0 + stride;
      switch (g.kind) {
        case GateKind::H: {
          const Amplitude a = amps[i0], b = amps[i1];
          amps[i0] = s * (a + b);
          amps[i1] = s * (a - b);
          break;
        }
        case GateKind::RZ:
          amps[i0] *= lo;
          amps[i1] *= hi;
          break;
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::MCX:
          if ((i0 & mask) == mask) std::swap(amps[i0], amps[i1]);
          break;
        default:
          break;
      }
    }
  }
}

StateVector run(const QubitCircuit &c, const StateVector &initial) {
  if (c.num_wires() != initial.num_wires()) {
    throw ValidationError(kModule, "circuit width " + std::to_string(c.num_wires()) +
                                       " does not match state width " +
                                       std::to_string(initial.num_wires()));
  }
  std::vector<Amplitude> amps(initial.amps_);
  for (const Gate &g : c.gates()) apply_gate(amps, c.num_wires(), g);
  return StateVector(std::move(amps), c.num_wires());
}

std::vector<StateVector> run_traced(const QubitCircuit &c, const StateVector &initial) {
  if (c.num_wires() != initial.num_wires()) {
    throw ValidationError(kModule, "circuit width does not match state width");
  }
  std::vector<StateVector> trace{initial};
  std::vector<Amplitude> amps(initial.amps_);
  for (const Gate &g : c.gates()) {
    if (g.kind == GateKind::Barrier) {
      trace.push_back(StateVector(amps, c.num_wires()));
    } else {
      apply_gate(amps, c.num_wires(), g);
    }
  }
  trace.push_back(StateVector(std::move(amps), c.num_wires()));
  return trace;
}

double probability_one(const StateVector &s, unsigned wire) {
  if (wire >= s.num_wires()) throw ValidationError(kModule, "wire out of range");
  const std::uint64_t bit = std::uint64_t{1} << wire;
  double p = 0.0;
  const auto a = s.amplitudes();
  for (std::uint64_t k = 0; k < a.size(); ++k) {
    if (k & bit) p += std::norm(a[k]);
  }
  return p;
}

std::vector<double> marginal_distribution(const StateVector &s, unsigned k) {
  if (k == 0 || k > s.num_wires()) {
    throw ValidationError(kModule, "marginal wire count out of range");
  }
  const std::uint64_t low = (std::uint64_t{1} << k) - 1;
  std::vector<double> dist(low + 1, 0.0);
  const auto a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) dist[i & low] += std::norm(a[i]);
  return dist;
}

Histogram sample(const MeasurementOutcome &outcome, std::uint64_t shots,
                 std::uint64_t seed) {
  if (shots == 0) throw ValidationError(kModule, "shots must be at least 1");
  std::mt19937_64 rng(seed);
  const double p = std::clamp(outcome.p1, 0.0, 1.0);
  std::binomial_distribution<std::uint64_t> draw(shots, p);
  Histogram h;
  h.shots = shots;
  h.ones = draw(rng);
  h.zeros = shots - h.ones;
  return h;
}

}  // namespace qneuron
