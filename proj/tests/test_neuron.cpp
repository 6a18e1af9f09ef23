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


#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qneuron/error.hpp"
#include "qneuron/json_io.hpp"
#include "qneuron/neuron.hpp"

using namespace qneuron;
using oracle::pi;

TEST_CASE("reference 4-dim pair on every backend") {
  const AngleVector x({pi / 6, pi / 3, pi / 2, pi / 5});
  const AngleVector w({pi / 2, pi / 8, 0, 0});
  const auto r = evaluate(x, w);
  CHECK_FALSE(r.padding_applied);
  CHECK_FALSE(r.analytic_padded.has_value());
  for (double p : {r.analytic, r.qubit_gray->probability, r.qubit_hadamard->probability,
                   r.optical->probability}) {
    CHECK(std::abs(p - 0.386) < 1e-3);
  }
  CHECK(r.max_deviation < 1e-9);
}

TEST_CASE("reference 3-dim pair pads the qubit backends") {
  const AngleVector x({pi / 7, pi / 3, pi / 2});
  const AngleVector w({pi / 2, pi / 8, pi / 6});
  const auto r = evaluate(x, w);
  CHECK(r.padding_applied);
  CHECK(r.padded_dimension == 4);
  CHECK(std::abs(r.analytic - 0.368) < 1e-3);
  CHECK(std::abs(r.optical->probability - 0.368) < 1e-3);
  REQUIRE(r.analytic_padded.has_value());
  CHECK(std::abs(r.qubit_gray->probability - *r.analytic_padded) < 1e-9);
  CHECK(r.qubit_gray->cost.width == 3);
  CHECK(r.optical->cost.size == 4);
  NeuronOptions strict;
  strict.pad = false;
  CHECK_THROWS_AS(evaluate(x, w, strict), ValidationError);
  strict.qubit_gray = strict.qubit_hadamard = false;
  CHECK_NOTHROW(evaluate(x, w, strict));
}

TEST_CASE("identical vectors give one everywhere") {
  for (std::size_t n : {2, 3, 5, 8}) {
    const AngleVector x(std::vector<double>(n, 0.4));
    const auto r = evaluate(x, x);
    CHECK(r.analytic == doctest::Approx(1.0));
    CHECK(r.qubit_gray->probability == doctest::Approx(1.0));
    CHECK(r.qubit_hadamard->probability == doctest::Approx(1.0));
    CHECK(r.optical->probability == doctest::Approx(1.0));
  }
}

TEST_CASE("evaluate rejects bad dimensions") {
  CHECK_THROWS_AS(evaluate(AngleVector({0.1}), AngleVector({0.2})), ValidationError);
  try {
    evaluate(AngleVector({0.1, 0.2}), AngleVector({0.2}));
    FAIL("expected a ValidationError");
  } catch (const ValidationError &e) {
    CHECK(e.module() == "neuron");
  }
}

TEST_CASE("backends agree on random pairs") {
  std::mt19937_64 rng(89);
  for (std::size_t n : {2, 3, 4, 5, 8, 16}) {
    for (int trial = 0; trial < 200; ++trial) {
      const AngleVector x(oracle::random_angles(rng, n));
      const AngleVector w(oracle::random_angles(rng, n));
      const auto r = evaluate(x, w);
      CHECK(r.max_deviation < 1e-9);
      for (double p : {r.qubit_gray->probability, r.qubit_hadamard->probability,
                       r.optical->probability}) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
      }
      if (!r.padding_applied) {
        CHECK(std::abs(r.qubit_gray->probability - r.optical->probability) < 1e-9);
      }
    }
  }
}

TEST_CASE("batch evaluation keeps order and matches serial results") {
  std::mt19937_64 rng(97);
  std::vector<std::pair<AngleVector, AngleVector>> pairs;
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + k % 7;
    pairs.emplace_back(AngleVector(oracle::random_angles(rng, n)),
                       AngleVector(oracle::random_angles(rng, n)));
  }
  NeuronOptions opts;
  opts.shots = 1000;
  const auto batch = evaluate_batch(pairs, opts);
  REQUIRE(batch.size() == pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    CHECK(batch[k] == evaluate(pairs[k].first, pairs[k].second, opts));
  }
  pairs.emplace_back(AngleVector({0.1, 0.2}), AngleVector({0.1}));
  CHECK_THROWS_AS(evaluate_batch(pairs, opts), ValidationError);
}

TEST_CASE("report json round trip") {
  std::mt19937_64 rng(101);
  for (std::size_t n : {2, 3, 6}) {
    NeuronOptions opts;
    opts.shots = 256;
    opts.strategy = n == 6 ? Strategy::MeasureAll : Strategy::Ancilla;
    const auto r = evaluate(AngleVector(oracle::random_angles(rng, n)),
                            AngleVector(oracle::random_angles(rng, n)), opts);
    const json j = r;
    const NeuronReport back = json::parse(j.dump()).get<NeuronReport>();
    CHECK(back == r);
  }
}

TEST_CASE("mesh json round trip") {
  std::mt19937_64 rng(103);
  for (unsigned n : {2u, 3u, 7u, 8u}) {
    const MeshPlan plan = mesh_synthesize(oracle::random_unit_nonnegative(rng, n));
    CHECK(mesh_from_json(json::parse(mesh_to_json(plan).dump())) == plan);
  }
  CHECK_THROWS(vector_from_json(json::parse("[1, \"a\"]"), "input"));
  CHECK_THROWS(vector_from_json(json::parse("[]"), "input"));
}
