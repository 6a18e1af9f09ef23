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

#include <string>
#include <string_view>

#include "qneuron/gate_ir.hpp"

namespace qneuron {

/**
 * Line-oriented QASM-like text, one gate per line:
 *
 *   // provenance: gray
 *   qreg q[3]
 *   h q0
 *   rz(-0.78539816339744828) q2
 *   cx q0 q2
 *   mcx q0,q1 q2
 *   gphase(0.5)
 *   barrier
 *
 * Angles are printed with 17 significant digits, so parse_text(export_text(c))
 * reproduces c bit-exactly.
 */
std::string export_text(const QubitCircuit &c);

/** Text form of a single gate, without a trailing newline. */
std::string gate_text(const Gate &g);

QubitCircuit parse_text(std::string_view text);

}  // namespace qneuron
