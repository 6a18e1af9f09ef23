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
#include "qneuron/circuit_text.hpp"
#include "qneuron/error.hpp"
#include "qneuron/gate_ir.hpp"
#include "random_circuit.hpp"

using namespace qneuron;

TEST_CASE("gate validation") {
  QubitCircuit c(3);
  CHECK_THROWS_AS(c.add(Gate::h(3)), ValidationError);
  CHECK_THROWS_AS(c.add(Gate::cnot(1, 1)), ValidationError);
  CHECK_THROWS_AS(c.add(Gate::mcx({0, 2}, 2)), ValidationError);
  CHECK_THROWS_AS(c.add(Gate::rz(0, NAN)), ValidationError);
  CHECK_THROWS_AS(c.add(Gate{GateKind::H, 0, {1}, 0.0}), ValidationError);
  CHECK_THROWS_AS(c.add(Gate{GateKind::CNOT, 0, {1, 2}, 0.0}), ValidationError);
  CHECK_THROWS_AS(QubitCircuit(0), ValidationError);
  CHECK(c.gates().empty());
  c.add(Gate::mcx({2, 0}, 1));
  CHECK(c.gates()[0].controls == std::vector<unsigned>{0, 2});
}

TEST_CASE("cost of simple circuits") {
  QubitCircuit c(3);
  c.add(Gate::h(0)).add(Gate::h(1)).add(Gate::h(2));
  CHECK(cost_metrics(c) == CostMetrics{3, 1, 3});
  c.add(Gate::cnot(0, 2)).add(Gate::rz(1, 0.5));
  CHECK(cost_metrics(c) == CostMetrics{5, 2, 3});
  c.add(Gate::global_phase(0.1));
  CHECK(cost_metrics(c).size == 5);
  CHECK(cost_metrics(c, {.count_global_phase = true}).size == 6);
  CHECK(cost_metrics(c, {.count_global_phase = true}).depth == 2);
  c.add(Gate::mcx({0, 1}, 2));
  CHECK(cost_metrics(c).size == 5);
  CHECK(cost_metrics(c, {.count_multi_controlled = true}) == CostMetrics{6, 3, 3});
}

TEST_CASE("barrier aligns every wire") {
  QubitCircuit c(2);
  c.add(Gate::h(0)).add(Gate::h(0)).add(Gate::barrier()).add(Gate::h(1));
  CHECK(cost_metrics(c) == CostMetrics{3, 3, 2});
}

TEST_CASE("depth never exceeds size and a shared wire serializes") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = testing::random_circuit(rng, 1 + trial % 6, trial % 40);
    const auto m = cost_metrics(c);
    CHECK(m.depth <= m.size);
    CHECK(m.width >= 1);
  }
  QubitCircuit chain(4);
  chain.add(Gate::h(2)).add(Gate::cnot(2, 0)).add(Gate::rz(2, 1.0)).add(Gate::cnot(1, 2));
  chain.add(Gate::mcx({0, 2}, 3));
  const auto m = cost_metrics(chain, {.count_multi_controlled = true});
  CHECK(m.depth == m.size);
}

TEST_CASE("unitary_of agrees with the Kronecker oracle") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned w = 1 + trial % 6;
    const auto c = testing::random_circuit(rng, w, 25);
    const Eigen::MatrixXcd u = unitary_of(c);
    CHECK((u - oracle::circuit_matrix(c)).cwiseAbs().maxCoeff() < 1e-12);
    const auto dim = u.rows();
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("unitary of a concatenation is the product in reverse order") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned w = 1 + trial % 5;
    const auto a = testing::random_circuit(rng, w, 15);
    const auto b = testing::random_circuit(rng, w, 15);
    QubitCircuit ab = a;
    ab.append(b);
    CHECK((unitary_of(ab) - unitary_of(b) * unitary_of(a)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("dense unitary width limit") {
  CHECK_THROWS_AS(unitary_of(QubitCircuit(kDenseWireLimit + 1)), ValidationError);
}

TEST_CASE("text format of single gates") {
  CHECK(gate_text(Gate::h(0)) == "h q0");
  CHECK(gate_text(Gate::x(1)) == "x q1");
  CHECK(gate_text(Gate::rz(2, -oracle::pi / 4)) == "rz(-0.78539816339744828) q2");
  CHECK(gate_text(Gate::cnot(0, 2)) == "cx q0 q2");
  CHECK(gate_text(Gate::mcx({1, 0}, 2)) == "mcx q0,q1 q2");
}

TEST_CASE("export then parse is the identity") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = testing::random_circuit(rng, 1 + trial % 7, trial % 50);
    if (trial % 3 == 0) c.add(Gate::barrier());
    c.set_provenance(trial % 2 ? "gray" : "");
    const QubitCircuit back = parse_text(export_text(c));
    CHECK(back == c);
  }
}

TEST_CASE("parser rejects malformed text") {
  CHECK_THROWS_AS(parse_text("h q0\n"), ValidationError);
  CHECK_THROWS_AS(parse_text("qreg q[2]\nfoo q0\n"), ValidationError);
  CHECK_THROWS_AS(parse_text("qreg q[2]\nrz(abc) q0\n"), ValidationError);
  CHECK_THROWS_AS(parse_text("qreg q[2]\ncx q0 q5\n"), ValidationError);
  CHECK_THROWS_AS(parse_text("qreg q[2]\nh q0 q1\n"), ValidationError);
  CHECK_NOTHROW(parse_text("qreg q[2]\nh q0\n\ncx q0 q1\n"));
}
