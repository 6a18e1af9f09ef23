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


#include "qneuron/circuit_text.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <vector>

#include "qneuron/error.hpp"

namespace qneuron {

namespace {

const char *const kModule = "gate-ir";
const std::string_view kProvenancePrefix = "// provenance: ";

std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string &msg) {
  throw ValidationError(kModule,
                        "circuit text line " + std::to_string(line) + ": " + msg);
}

unsigned parse_wire(std::string_view tok, std::size_t line) {
  if (tok.size() < 2 || tok[0] != 'q') fail(line, "expected wire like q0");
  unsigned v = 0;
  for (char ch : tok.substr(1)) {
    if (ch < '0' || ch > '9') fail(line, "bad wire index '" + std::string(tok) + "'");
    v = v * 10 + static_cast<unsigned>(ch - '0');
  }
  return v;
}

double parse_angle(std::string_view tok, std::size_t line) {
  const std::string s(tok);
  errno = 0;
  char *end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    fail(line, "bad angle '" + s + "'");
  }
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// "rz(0.5)" -> {"rz", "0.5"}
std::pair<std::string_view, std::optional<std::string_view>> split_param(
    std::string_view head, std::size_t line) {
  const auto open = head.find('(');
  if (open == std::string_view::npos) return {head, std::nullopt};
  if (head.back() != ')') fail(line, "unterminated parameter list");
  return {head.substr(0, open), head.substr(open + 1, head.size() - open - 2)};
}

}  // namespace

std::string gate_text(const Gate &g) {
  const std::string name = gate_kind_name(g.kind);
  switch (g.kind) {
    case GateKind::H:
    case GateKind::X:
      return name + " q" + std::to_string(g.target);
    case GateKind::RZ:
      return "rz(" + format_angle(g.angle) + ") q" + std::to_string(g.target);
    case GateKind::CNOT:
      return "cx q" + std::to_string(g.controls.at(0)) + " q" +
             std::to_string(g.target);
    case GateKind::MCX: {
      std::string s = "mcx ";
      for (std::size_t i = 0; i < g.controls.size(); ++i) {
        if (i) s += ',';
        s += 'q' + std::to_string(g.controls[i]);
      }
      return s + " q" + std::to_string(g.target);
    }
    case GateKind::GlobalPhase:
      return "gphase(" + format_angle(g.angle) + ")";
    case GateKind::Barrier:
      return "barrier";
  }
  return {};
}

std::string export_text(const QubitCircuit &c) {
  std::string out;
  if (!c.provenance().empty()) {
    out += kProvenancePrefix;
    out += c.provenance();
    out += '\n';
  }
  out += "qreg q[" + std::to_string(c.num_wires()) + "]\n";
  for (const Gate &g : c.gates()) {
    out += gate_text(g);
    out += '\n';
  }
  return out;
}

QubitCircuit parse_text(std::string_view text) {
  std::optional<QubitCircuit> circ;
  std::string provenance;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (raw.starts_with(kProvenancePrefix)) {
      provenance = std::string(trim(raw.substr(kProvenancePrefix.size())));
      if (circ) circ->set_provenance(provenance);
      continue;
    }
    const std::string_view line = trim(raw);
    if (line.empty() || line.starts_with("//")) continue;

    const auto toks = split_ws(line);
    const auto [name, param] = split_param(toks[0], line_no);

    if (name == "qreg") {
      if (circ) fail(line_no, "duplicate qreg");
      if (toks.size() != 2 || !toks[1].starts_with("q[") || !toks[1].ends_with("]")) {
        fail(line_no, "expected 'qreg q[N]'");
      }
      const auto n = parse_wire("q" + std::string(toks[1].substr(2, toks[1].size() - 3)),
                                line_no);
      circ.emplace(n, provenance);
      continue;
    }
    if (!circ) fail(line_no, "gate before qreg declaration");

    const auto add = [&](Gate g) {
      try {
        circ->add(std::move(g));
      } catch (const ValidationError &e) {
        fail(line_no, e.what());
      }
    };
    const auto want_args = [&](std::size_t n) {
      if (toks.size() != n + 1) {
        fail(line_no, std::string(name) + " expects " + std::to_string(n) +
                          " operand(s)");
      }
    };
    const auto want_param = [&](bool yes) {
      if (param.has_value() != yes) {
        fail(line_no, std::string(name) + (yes ? " needs" : " takes no") +
                          " angle parameter");
      }
    };

    if (name == "h" || name == "x") {
      want_param(false);
      want_args(1);
      const unsigned w = parse_wire(toks[1], line_no);
      add(name == "h" ? Gate::h(w) : Gate::x(w));
    } else if (name == "rz") {
      want_param(true);
      want_args(1);
      add(Gate::rz(parse_wire(toks[1], line_no), parse_angle(*param, line_no)));
    } else if (name == "cx") {
      want_param(false);
      want_args(2);
      add(Gate::cnot(parse_wire(toks[1], line_no), parse_wire(toks[2], line_no)));
    } else if (name == "mcx") {
      want_param(false);
      want_args(2);
      std::vector<unsigned> controls;
      std::string_view list = toks[1];
      while (!list.empty()) {
        const auto comma = list.find(',');
        controls.push_back(parse_wire(list.substr(0, comma), line_no));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
      }
      add(Gate::mcx(std::move(controls), parse_wire(toks[2], line_no)));
    } else if (name == "gphase") {
      want_param(true);
      want_args(0);
      add(Gate::global_phase(parse_angle(*param, line_no)));
    } else if (name == "barrier") {
      want_param(false);
      want_args(0);
      add(Gate::barrier());
    } else {
      fail(line_no, "unknown gate '" + std::string(name) + "'");
    }
  }
  if (!circ) throw ValidationError(kModule, "circuit text has no qreg declaration");
  return std::move(*circ);
}

}  // namespace qneuron
