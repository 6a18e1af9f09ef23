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


#include "qneuron/json_io.hpp"

#include <cmath>
#include <string>

#include "qneuron/error.hpp"

namespace qneuron {

namespace {

const char *strategy_label(Strategy s) {
  return s == Strategy::Ancilla ? "ancilla" : "measure-all";
}

Strategy strategy_from_label(const std::string &s) {
  if (s == "ancilla") return Strategy::Ancilla;
  if (s == "measure-all") return Strategy::MeasureAll;
  throw ValidationError("neuron", "unknown strategy '" + s + "'");
}

template <class Backend>
json backend_to_json(const Backend &b) {
  json j{{"probability", b.probability}, {"cost", b.cost}};
  if (b.histogram) j["histogram"] = *b.histogram;
  return j;
}

template <class Backend>
Backend backend_from_json(const json &j) {
  Backend b;
  b.probability = j.at("probability").get<double>();
  b.cost = j.at("cost").get<decltype(b.cost)>();
  if (j.contains("histogram")) b.histogram = j.at("histogram").get<Histogram>();
  return b;
}

}  // namespace

void to_json(json &j, const CostMetrics &m) {
  j = json{{"size", m.size}, {"depth", m.depth}, {"width", m.width}};
}

void from_json(const json &j, CostMetrics &m) {
  m.size = j.at("size").get<std::size_t>();
  m.depth = j.at("depth").get<std::size_t>();
  m.width = j.at("width").get<unsigned>();
}

void to_json(json &j, const OpticalCostMetrics &m) {
  j = json{{"size", m.size},
           {"depth", m.depth},
           {"width", m.width},
           {"phase_shifters", m.phase_shifters}};
}

void from_json(const json &j, OpticalCostMetrics &m) {
  m.size = j.at("size").get<std::size_t>();
  m.depth = j.at("depth").get<std::size_t>();
  m.width = j.at("width").get<double>();
  m.phase_shifters = j.at("phase_shifters").get<std::size_t>();
}

void to_json(json &j, const Histogram &h) {
  j = json{{"shots", h.shots}, {"counts", {{"0", h.zeros}, {"1", h.ones}}}};
}

void from_json(const json &j, Histogram &h) {
  h.shots = j.at("shots").get<std::uint64_t>();
  h.zeros = j.at("counts").at("0").get<std::uint64_t>();
  h.ones = j.at("counts").at("1").get<std::uint64_t>();
}

void to_json(json &j, const NeuronReport &r) {
  j = json{{"dimension", r.dimension},
           {"padded_dimension", r.padded_dimension},
           {"padding_applied", r.padding_applied},
           {"strategy", strategy_label(r.strategy)},
           {"theta", std::vector<double>(r.theta.begin(), r.theta.end())},
           {"phi", std::vector<double>(r.phi.begin(), r.phi.end())},
           {"analytic", r.analytic}};
  if (r.analytic_padded) j["analytic_padded"] = *r.analytic_padded;
  json backends = json::object();
  if (r.qubit_gray) backends["qubit_gray"] = backend_to_json(*r.qubit_gray);
  if (r.qubit_hadamard) backends["qubit_hadamard"] = backend_to_json(*r.qubit_hadamard);
  if (r.optical) backends["optical"] = backend_to_json(*r.optical);
  j["backends"] = std::move(backends);
  j["max_deviation"] = r.max_deviation;
}

void from_json(const json &j, NeuronReport &r) {
  r.dimension = j.at("dimension").get<std::size_t>();
  r.padded_dimension = j.at("padded_dimension").get<std::size_t>();
  r.padding_applied = j.at("padding_applied").get<bool>();
  r.strategy = strategy_from_label(j.at("strategy").get<std::string>());
  r.theta = AngleVector(j.at("theta").get<std::vector<double>>());
  r.phi = AngleVector(j.at("phi").get<std::vector<double>>());
  r.analytic = j.at("analytic").get<double>();
  r.analytic_padded.reset();
  if (j.contains("analytic_padded")) r.analytic_padded = j.at("analytic_padded").get<double>();
  const json &b = j.at("backends");
  r.qubit_gray.reset();
  r.qubit_hadamard.reset();
  r.optical.reset();
  if (b.contains("qubit_gray")) r.qubit_gray = backend_from_json<QubitBackendResult>(b["qubit_gray"]);
  if (b.contains("qubit_hadamard")) {
    r.qubit_hadamard = backend_from_json<QubitBackendResult>(b["qubit_hadamard"]);
  }
  if (b.contains("optical")) r.optical = backend_from_json<OpticalBackendResult>(b["optical"]);
  r.max_deviation = j.at("max_deviation").get<double>();
}

json mesh_to_json(const MeshPlan &plan, const std::vector<double> &phase_layer) {
  json layers = json::array();
  for (const auto &layer : plan.layers) {
    json entries = json::array();
    for (const MeshEntry &e : layer) {
      json modes = json::array({e.mode_a});
      if (e.mode_b) {
        modes.push_back(*e.mode_b);
      } else {
        modes.push_back(nullptr);
      }
      entries.push_back(
          json{{"eta", e.eta}, {"xi", 0.0}, {"modes", modes}, {"skipped", e.skipped}});
    }
    layers.push_back(std::move(entries));
  }
  std::vector<double> phases = phase_layer;
  if (phases.empty()) phases.assign(plan.modes, 0.0);
  return json{{"modes", plan.modes},
              {"layers", std::move(layers)},
              {"phase_layer", phases},
              {"permutation", plan.permutation}};
}

MeshPlan mesh_from_json(const json &j) {
  MeshPlan plan;
  plan.modes = j.at("modes").get<unsigned>();
  for (const json &layer : j.at("layers")) {
    std::vector<MeshEntry> entries;
    for (const json &e : layer) {
      MeshEntry m;
      m.eta = e.at("eta").get<double>();
      const json &modes = e.at("modes");
      m.mode_a = modes.at(0).get<unsigned>();
      if (!modes.at(1).is_null()) m.mode_b = modes.at(1).get<unsigned>();
      m.skipped = e.value("skipped", false);
      if (!m.skipped && !m.mode_b) {
        throw ValidationError("optical", "active beam splitter needs two modes");
      }
      entries.push_back(m);
    }
    plan.layers.push_back(std::move(entries));
  }
  plan.permutation = j.at("permutation").get<std::vector<unsigned>>();
  return plan;
}

std::vector<double> vector_from_json(const json &j, const char *what) {
  if (!j.is_array()) {
    throw ValidationError("encoding", std::string(what) + " must be a JSON array of numbers");
  }
  std::vector<double> v;
  v.reserve(j.size());
  for (const json &e : j) {
    if (!e.is_number()) {
      throw ValidationError("encoding", std::string(what) + " has a non-numeric entry");
    }
    const double d = e.get<double>();
    if (!std::isfinite(d)) {
      throw ValidationError("encoding", std::string(what) + " has a non-finite entry");
    }
    v.push_back(d);
  }
  if (v.empty()) throw ValidationError("encoding", std::string(what) + " is empty");
  return v;
}

}  // namespace qneuron
