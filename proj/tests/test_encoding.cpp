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


#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qneuron/encoding.hpp"
#include "qneuron/error.hpp"

using namespace qneuron;
using oracle::pi;

namespace {

AngleVector av(std::vector<double> v) { return AngleVector(std::move(v)); }

}  // namespace

TEST_CASE("rescale maps min and max onto 0 and pi") {
  const std::vector<double> raw{0.0, 5.0, 10.0};
  const auto r = rescale(raw);
  CHECK_FALSE(r.degenerate);
  CHECK(r.angles[0] == 0.0);
  CHECK(r.angles[1] == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(r.angles[2] == pi);
}

TEST_CASE("rescale of a constant vector is degenerate and all zero") {
  const std::vector<double> raw{2.5, 2.5, 2.5, 2.5};
  const auto r = rescale(raw);
  CHECK(r.degenerate);
  for (double a : r.angles) CHECK(a == 0.0);
}

TEST_CASE("rescale rejects empty and non-finite input") {
  CHECK_THROWS_AS(rescale(std::vector<double>{}), ValidationError);
  CHECK_THROWS_AS(rescale(std::vector<double>{1.0, NAN}), ValidationError);
  CHECK_THROWS_AS(av({0.0, INFINITY}), ValidationError);
}

TEST_CASE("rescale is order preserving and stays in [0, pi]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto raw = oracle::random_angles(rng, 2 + trial % 15, -50.0, 50.0);
    const auto r = rescale(raw);
    for (std::size_t j = 0; j < raw.size(); ++j) {
      CHECK(r.angles[j] >= 0.0);
      CHECK(r.angles[j] <= pi);
      for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[j] <= raw[k]) CHECK(r.angles[j] <= r.angles[k]);
      }
    }
  }
}

TEST_CASE("padding helpers") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(17) == 5);
  CHECK(qubit_dim(5) == 8);
  CHECK_THROWS_AS(ceil_log2(0), ValidationError);
  const auto p = pad_to_qubit_dim(av({1.0, 2.0, 3.0}));
  CHECK(p == av({1.0, 2.0, 3.0, 0.0}));
}

TEST_CASE("fidelity of the reference pairs") {
  const auto x4 = av({pi / 6, pi / 3, pi / 2, pi / 5});
  const auto w4 = av({pi / 2, pi / 8, 0, 0});
  CHECK(analytic_fidelity(x4, w4) == doctest::Approx(0.386890).epsilon(1e-6));
  const auto x3 = av({pi / 7, pi / 3, pi / 2});
  const auto w3 = av({pi / 2, pi / 8, pi / 6});
  CHECK(analytic_fidelity(x3, w3) == doctest::Approx(0.368068).epsilon(1e-6));
  // the 3-dim pair padded with one matched zero phase
  CHECK(analytic_fidelity(pad_to_qubit_dim(x3), pad_to_qubit_dim(w3)) ==
        doctest::Approx(0.485443).epsilon(1e-6));
}

TEST_CASE("fidelity trivial endpoints") {
  const auto x = av({0.3, 1.2, 2.9, 0.1, 0.7});
  CHECK(analytic_fidelity(x, x) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(analytic_fidelity(av({0.0, pi}), av({0.0, 0.0})) < 1e-30);
  CHECK_THROWS_AS(analytic_fidelity(av({0.0, 1.0}), av({0.0})), ValidationError);
}

TEST_CASE("fidelity matches the cosine and sine sums oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 20;
    const auto t = oracle::random_angles(rng, n, -10, 10);
    const auto p = oracle::random_angles(rng, n, -10, 10);
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = t[k] - p[k];
    const double f = analytic_fidelity(av(t), av(p));
    CHECK(f == doctest::Approx(oracle::fidelity_from_sums(d)).epsilon(1e-12));
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
  }
}

TEST_CASE("fidelity ignores a common phase offset") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> shift(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 10;
    const auto t = oracle::random_angles(rng, n);
    const auto p = oracle::random_angles(rng, n);
    auto t2 = t;
    const double c = shift(rng);
    for (double &v : t2) v += c;
    CHECK(std::abs(analytic_fidelity(av(t), av(p)) - analytic_fidelity(av(t2), av(p))) <
          1e-12);
  }
}

TEST_CASE("fidelity is invariant under a joint permutation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 10;
    auto t = oracle::random_angles(rng, n);
    auto p = oracle::random_angles(rng, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> tp(n), pp(n);
    for (std::size_t k = 0; k < n; ++k) {
      tp[k] = t[perm[k]];
      pp[k] = p[perm[k]];
    }
    CHECK(std::abs(analytic_fidelity(av(t), av(p)) - analytic_fidelity(av(tp), av(pp))) <
          1e-12);
  }
}

TEST_CASE("corrected cosine expansion equals the modulus form") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = oracle::random_angles(rng, 1 + trial % 16, -pi, pi);
    const auto zero = std::vector<double>(d.size(), 0.0);
    CHECK(std::abs(oracle::cosine_expansion(d, 2.0) - analytic_fidelity(av(d), av(zero))) <
          1e-12);
  }
  // a pair coefficient of one undercounts the reference 4-dim example
  const std::vector<double> d{pi / 6 - pi / 2, pi / 3 - pi / 8, pi / 2, pi / 5};
  CHECK(oracle::cosine_expansion(d, 1.0) == doctest::Approx(0.318445).epsilon(1e-6));
}
