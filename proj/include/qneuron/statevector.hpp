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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qneuron/gate_ir.hpp"

namespace qneuron {

using Amplitude = std::complex<double>;

/** Normalized amplitudes over 2^w basis states, wire 0 least significant. */
class StateVector {
 public:
  /** Throws unless the length is 2^w (w >= 1) and the norm is 1 within 1e-10. */
  explicit StateVector(std::vector<Amplitude> amplitudes);

  static StateVector basis(unsigned num_wires, std::uint64_t index = 0);

  unsigned num_wires() const noexcept { return num_wires_; }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  Amplitude operator[](std::uint64_t k) const { return amps_[k]; }
  double norm_squared() const;

 private:
  friend StateVector run(const QubitCircuit &, const StateVector &);
  friend std::vector<StateVector> run_traced(const QubitCircuit &, const StateVector &);
  StateVector(std::vector<Amplitude> amplitudes, unsigned num_wires)
      : amps_(std::move(amplitudes)), num_wires_(num_wires) {}

  std::vector<Amplitude> amps_;
  unsigned num_wires_ = 0;
};

inline constexpr unsigned kMaxSimWires = 24;

/** In-place stride update of `amps` (length 2^num_wires) by one gate. */
void apply_gate(std::span<Amplitude> amps, unsigned num_wires, const Gate &g);

/** Applies every gate in order. The circuit must be exactly as wide as the state. */
StateVector run(const QubitCircuit &c, const StateVector &initial);

/**
 * Like run(), also returning the state at each Barrier. The first element is
 * the initial state and the last is the final state.
 */
std::vector<StateVector> run_traced(const QubitCircuit &c, const StateVector &initial);

/** Probability that `wire` reads 1. */
double probability_one(const StateVector &s, unsigned wire);

/**
 * Marginal distribution of wires 0..k-1, indexed by their integer value
 * (wire 0 least significant).
 */
std::vector<double> marginal_distribution(const StateVector &s, unsigned k);

enum class Strategy { Ancilla, MeasureAll };

struct MeasurementOutcome {
  double p0 = 1.0;
  double p1 = 0.0;
  Strategy strategy = Strategy::Ancilla;
};

struct Histogram {
  std::uint64_t shots = 0;
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;

  bool operator==(const Histogram &) const = default;
};

/** Binomial draw of `shots` outcomes with p1 from a seeded mt19937_64. */
Histogram sample(const MeasurementOutcome &outcome, std::uint64_t shots,
                 std::uint64_t seed);

}  // namespace qneuron
