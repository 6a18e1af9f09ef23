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

#include <optional>
#include <vector>

#include "json.hpp"
#include "qneuron/gate_ir.hpp"
#include "qneuron/neuron.hpp"
#include "qneuron/optical.hpp"
#include "qneuron/statevector.hpp"

namespace qneuron {

using nlohmann::json;

// {"size": ..., "depth": ..., "width": ...}
void to_json(json &j, const CostMetrics &m);
void from_json(const json &j, CostMetrics &m);

// {"size", "depth", "width", "phase_shifters"}
void to_json(json &j, const OpticalCostMetrics &m);
void from_json(const json &j, OpticalCostMetrics &m);

// {"shots", "counts": {"0": n0, "1": n1}}
void to_json(json &j, const Histogram &h);
void from_json(const json &j, Histogram &h);

void to_json(json &j, const NeuronReport &r);
void from_json(const json &j, NeuronReport &r);

/**
 * {"modes": N,
 *  "layers": [[{"eta": r, "xi": 0.0, "modes": [i, j], "skipped": false}, ...], ...],
 *  "phase_layer": [b_0, ..., b_{N-1}],
 *  "permutation": [...]}
 *
 * layers[0] is the pair layer over the amplitudes; a padding slot has
 * "modes": [i, null]. phase_layer defaults to zeros.
 */
json mesh_to_json(const MeshPlan &plan, const std::vector<double> &phase_layer = {});
MeshPlan mesh_from_json(const json &j);

/** Parses a JSON array of finite numbers. */
std::vector<double> vector_from_json(const json &j, const char *what);

}  // namespace qneuron
