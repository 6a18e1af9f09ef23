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
#include <cstddef>
#include <span>
#include <vector>

namespace qneuron {

/**
 * Phase vector (radians). Entries produced by rescale() lie in [0, pi];
 * user-supplied angles may be any finite reals.
 */
class AngleVector {
 public:
  AngleVector() = default;
  explicit AngleVector(std::vector<double> angles);

  std::size_t size() const noexcept { return angles_.size(); }
  bool empty() const noexcept { return angles_.empty(); }
  double operator[](std::size_t k) const { return angles_[k]; }
  std::span<const double> values() const noexcept { return angles_; }
  auto begin() const noexcept { return angles_.begin(); }
  auto end() const noexcept { return angles_.end(); }

  bool operator==(const AngleVector &) const = default;

 private:
  std::vector<double> angles_;
};

struct RescaleResult {
  AngleVector angles;
  /** min == max; every entry was mapped to 0. */
  bool degenerate = false;
};

/** Affine map of each entry onto [0, pi] using the vector's own min and max. */
RescaleResult rescale(std::span<const double> raw);

/** Smallest exponent e with 2^e >= n (n >= 1). */
unsigned ceil_log2(std::size_t n);

/** 2^ceil_log2(n). */
std::size_t qubit_dim(std::size_t n);

/** Zero-extends to qubit_dim(v.size()). */
AngleVector pad_to_qubit_dim(const AngleVector &v);

/** (1/N) sum_k exp(i (theta_k - phi_k)). */
std::complex<double> overlap(const AngleVector &theta, const AngleVector &phi);

/** |overlap(theta, phi)|^2. */
double analytic_fidelity(const AngleVector &theta, const AngleVector &phi);

}  // namespace qneuron
