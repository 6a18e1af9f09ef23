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


#include "qneuron/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qneuron/error.hpp"

namespace qneuron {

namespace {
const char *const kModule = "encoding";
}

AngleVector::AngleVector(std::vector<double> angles)
    : angles_(std::move(angles)) {
  for (double a : angles_) {
    if (!std::isfinite(a)) {
      throw ValidationError(kModule, "angle vector has a non-finite entry");
    }
  }
}

RescaleResult rescale(std::span<const double> raw) {
  if (raw.empty()) {
    throw ValidationError(kModule, "cannot rescale an empty vector");
  }
  for (double v : raw) {
    if (!std::isfinite(v)) {
      throw ValidationError(kModule, "raw vector has a non-finite entry");
    }
  }
  const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  RescaleResult result;
  std::vector<double> out(raw.size(), 0.0);
  if (lo == hi) {
    result.degenerate = true;
  } else {
    const double span = hi - lo;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      out[k] = (raw[k] - lo) / span * std::numbers::pi;
    }
    // pin the endpoints against rounding in the division
    out[lo_it - raw.begin()] = 0.0;
    out[hi_it - raw.begin()] = std::numbers::pi;
  }
  result.angles = AngleVector(std::move(out));
  return result;
}

unsigned ceil_log2(std::size_t n) {
  if (n == 0) throw ValidationError(kModule, "dimension must be at least 1");
  unsigned e = 0;
  while ((std::size_t{1} << e) < n) ++e;
  return e;
}

std::size_t qubit_dim(std::size_t n) { return std::size_t{1} << ceil_log2(n); }

AngleVector pad_to_qubit_dim(const AngleVector &v) {
  std::vector<double> out(v.begin(), v.end());
  out.resize(qubit_dim(v.size()), 0.0);
  return AngleVector(std::move(out));
}

std::complex<double> overlap(const AngleVector &theta, const AngleVector &phi) {
  if (theta.size() != phi.size()) {
    throw ValidationError(
        kModule, "dimension mismatch: input has " +
                     std::to_string(theta.size()) + " entries, weight has " +
                     std::to_string(phi.size()));
  }
  if (theta.empty()) throw ValidationError(kModule, "empty angle vectors");
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t k = 0; k < theta.size(); ++k) {
    sum += std::polar(1.0, theta[k] - phi[k]);
  }
  return sum / static_cast<double>(theta.size());
}

double analytic_fidelity(const AngleVector &theta, const AngleVector &phi) {
  return std::min(1.0, std::norm(overlap(theta, phi)));
}

}  // namespace qneuron
