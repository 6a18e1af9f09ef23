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


#include "qneuron/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qneuron/circuit_text.hpp"
#include "qneuron/diag_synth.hpp"
#include "qneuron/encoding.hpp"
#include "qneuron/error.hpp"
#include "qneuron/json_io.hpp"
#include "qneuron/neuron.hpp"
#include "qneuron/optical.hpp"
#include "qneuron/qubit_neuron.hpp"

namespace qneuron {

namespace {

const char *const kUnits =
    "All angles are in radians. Vector files hold a JSON array of finite numbers.";

struct GlobalFlags {
  std::string out;
  std::string format = "json";
  bool paper_count = false;
  std::optional<std::uint64_t> seed;
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw CliError("cannot write '" + path + "'");
  f << content;
}

void emit(const GlobalFlags &g, std::ostream &out, const std::string &content) {
  if (g.out.empty()) {
    out << content;
  } else {
    write_file(g.out, content);
  }
}

json parse_json(const std::string &text, const std::string &origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw CliError("malformed JSON in " + origin + ": " + e.what());
  }
}

std::vector<double> load_vector(const std::string &path, const char *what) {
  return vector_from_json(parse_json(read_file(path), path), what);
}

// Inline JSON when the argument starts with '[', otherwise a file path.
std::vector<double> load_vector_arg(const std::string &arg, const char *what) {
  const auto pos = arg.find_first_not_of(" \t");
  if (pos != std::string::npos && arg[pos] == '[') {
    return vector_from_json(parse_json(arg, what), what);
  }
  return load_vector(arg, what);
}

AngleVector to_angles(std::vector<double> v, bool rescaled) {
  if (rescaled) return AngleVector(std::move(v));
  return rescale(v).angles;
}

std::uint64_t resolve_seed(const GlobalFlags &g) {
  if (g.seed) return *g.seed;
  if (const char *env = std::getenv("QNEURON_SEED")) {
    char *end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*env == '\0' || *end != '\0') throw CliError("QNEURON_SEED is not an integer");
    return v;
  }
  return kDefaultSeed;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_format(const GlobalFlags &g) {
  if (g.format != "json" && g.format != "csv") {
    throw CliError("--format must be json or csv");
  }
}

std::string histogram_csv(double p1, const std::optional<Histogram> &h) {
  std::string s = "outcome_label,probability,count\n";
  s += "0," + fmt_double(1.0 - p1) + "," + (h ? std::to_string(h->zeros) : "") + "\n";
  s += "1," + fmt_double(p1) + "," + (h ? std::to_string(h->ones) : "") + "\n";
  return s;
}

std::string bitstring(std::uint64_t v, unsigned width) {
  std::string s(width, '0');
  for (unsigned b = 0; b < width; ++b) {
    if ((v >> b) & 1u) s[width - 1 - b] = '1';
  }
  return s;
}

const char *kReportCsvHeader =
    "N,analytic,analytic_padded,p_gray,p_hadamard,p_optical,"
    "size_gray,depth_gray,width_gray,size_hadamard,depth_hadamard,width_hadamard,"
    "size_optical,depth_optical,width_optical\n";

std::string report_csv_row(const NeuronReport &r) {
  std::string s = std::to_string(r.dimension) + "," + fmt_double(r.analytic) + ",";
  s += r.analytic_padded ? fmt_double(*r.analytic_padded) : "";
  auto prob = [](const auto &b) { return b ? fmt_double(b->probability) : std::string(); };
  s += "," + prob(r.qubit_gray) + "," + prob(r.qubit_hadamard) + "," + prob(r.optical);
  auto qcost = [](const std::optional<QubitBackendResult> &b) {
    if (!b) return std::string(",,");
    return std::to_string(b->cost.size) + "," + std::to_string(b->cost.depth) + "," +
           std::to_string(b->cost.width);
  };
  s += "," + qcost(r.qubit_gray) + "," + qcost(r.qubit_hadamard) + ",";
  if (r.optical) {
    s += std::to_string(r.optical->cost.size) + "," + std::to_string(r.optical->cost.depth) +
         "," + fmt_double(r.optical->cost.width);
  } else {
    s += ",,";
  }
  return s + "\n";
}

Algorithm parse_algorithm(const std::string &s) {
  return s == "gray" ? Algorithm::Gray : Algorithm::Hadamard;
}

Strategy parse_strategy(const std::string &s) {
  return s == "ancilla" ? Strategy::Ancilla : Strategy::MeasureAll;
}

void add_vector_inputs(CLI::App *sub, std::string &input, std::string &weight,
                       bool &rescaled) {
  sub->add_option("--input", input, "input vector x (JSON array file)")->required();
  sub->add_option("--weight", weight, "weight vector w (JSON array file)")->required();
  sub->add_flag("--rescaled", rescaled,
                "vectors are already phases in radians; otherwise each is rescaled "
                "onto [0, pi] by its own min and max");
}

std::string error_json(const std::string &module, const std::string &message) {
  return json{{"error", message}, {"module", module}}.dump() + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"qneuron: phase-encoded neuron circuits for qubit and linear-optical backends",
               "qneuron"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(kUnits);

  GlobalFlags g;
  app.add_option("--out", g.out, "output file (default: standard output)");
  app.add_option("--format", g.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--paper-count", g.paper_count,
               "count the global-phase gate toward qubit circuit size");
  app.add_option("--seed", g.seed,
                 "RNG seed for shot sampling (fallback: QNEURON_SEED, then " +
                     std::to_string(kDefaultSeed) + ")");

  // rescale
  std::string rescale_input;
  auto *rescale_cmd = app.add_subcommand(
      "rescale", "map a raw vector onto phases in [0, pi]: (v - min) / (max - min) * pi");
  rescale_cmd->add_option("--input", rescale_input, "raw vector (JSON array file)")
      ->required();
  rescale_cmd->footer(
      "Output: {\"angles\": [radians...], \"degenerate\": bool}. A constant vector is "
      "degenerate and maps to all zeros.");

  // synth
  std::string synth_algorithm, synth_beta;
  bool synth_optimize = false, synth_neuron_mode = false;
  auto *synth_cmd =
      app.add_subcommand("synth", "synthesize a circuit for diag(exp(i beta_k))");
  synth_cmd->add_option("--algorithm", synth_algorithm, "gray or hadamard")
      ->required()
      ->check(CLI::IsMember({"gray", "hadamard"}));
  synth_cmd->add_option("--beta", synth_beta,
                        "phases beta (radians), inline JSON array or file; length 2^n")
      ->required();
  synth_cmd->add_flag("--optimize", synth_optimize,
                      "hadamard: Gray term order, CNOT cancellation, depth scheduling");
  synth_cmd->add_flag("--neuron-mode", synth_neuron_mode,
                      "hadamard: drop the global-phase term");
  synth_cmd->footer(
      "Writes the circuit as QASM-like text to --out and a sidecar <out>.json with "
      "{\"algorithm\", \"matrix\", \"alpha\", \"counts\", \"cost\"}. Gray circuits use "
      "wire n as ancilla; wire 0 is the least significant index bit.");

  // mesh
  std::string mesh_amplitudes;
  auto *mesh_cmd = app.add_subcommand(
      "mesh", "beam-splitter pyramid preparing a nonnegative unit amplitude vector");
  mesh_cmd->add_option("--amplitudes", mesh_amplitudes, "amplitudes c (JSON array file)")
      ->required();
  mesh_cmd->footer(
      "Output: {\"modes\": N, \"layers\": [[{\"eta\", \"xi\", \"modes\": [i, j], "
      "\"skipped\"}...]...], \"phase_layer\": [...], \"permutation\": [...]}. layers[0] "
      "pairs the amplitudes; the photon meets the last layer first. eta in radians.");

  // run-qubit
  std::string rq_input, rq_weight, rq_algorithm = "gray", rq_strategy = "ancilla", rq_emit;
  bool rq_rescaled = false, rq_no_optimize = false;
  std::optional<std::uint64_t> rq_shots;
  auto *rq_cmd = app.add_subcommand("run-qubit", "simulate the qubit neuron circuit");
  add_vector_inputs(rq_cmd, rq_input, rq_weight, rq_rescaled);
  rq_cmd->add_option("--algorithm", rq_algorithm, "gray or hadamard")
      ->check(CLI::IsMember({"gray", "hadamard"}));
  rq_cmd->add_option("--strategy", rq_strategy, "ancilla or measure-all")
      ->check(CLI::IsMember({"ancilla", "measure-all"}));
  rq_cmd->add_option("--shots", rq_shots, "sample this many shots")->check(CLI::PositiveNumber);
  rq_cmd->add_flag("--no-optimize", rq_no_optimize, "unoptimized hadamard diagonal");
  rq_cmd->add_option("--emit-circuit", rq_emit, "also write the circuit text here");
  rq_cmd->footer(
      "Report: {\"p0\", \"p1\", \"analytic\", \"cost\": {\"size\", \"depth\", \"width\"}, "
      "...}; CSV: outcome_label,probability,count. Inputs are zero-padded to 2^n.");

  // run-optical
  std::string ro_input, ro_weight;
  bool ro_rescaled = false;
  std::optional<std::uint64_t> ro_shots;
  auto *ro_cmd =
      app.add_subcommand("run-optical", "simulate the single-photon optical neuron");
  add_vector_inputs(ro_cmd, ro_input, ro_weight, ro_rescaled);
  ro_cmd->add_option("--shots", ro_shots, "sample this many shots")->check(CLI::PositiveNumber);
  ro_cmd->footer(
      "Report: {\"probability\" (photon in mode 0), \"analytic\", \"cost\", \"mesh\"}. "
      "No padding; N >= 2.");

  // compare
  std::string cmp_input, cmp_weight, cmp_batch, cmp_strategy = "ancilla";
  bool cmp_rescaled = false;
  std::optional<std::uint64_t> cmp_shots;
  auto *cmp_cmd = app.add_subcommand(
      "compare", "analytic fidelity against both qubit backends and the optical backend");
  cmp_cmd->add_option("--input", cmp_input, "input vector x (JSON array file)");
  cmp_cmd->add_option("--weight", cmp_weight, "weight vector w (JSON array file)");
  cmp_cmd->add_option("--batch", cmp_batch,
                      "JSON array of {\"input\": [...], \"weight\": [...]} pairs");
  cmp_cmd->add_flag("--rescaled", cmp_rescaled, "vectors are already phases in radians");
  cmp_cmd->add_option("--strategy", cmp_strategy, "ancilla or measure-all")
      ->check(CLI::IsMember({"ancilla", "measure-all"}));
  cmp_cmd->add_option("--shots", cmp_shots, "sample this many shots per backend")
      ->check(CLI::PositiveNumber);
  cmp_cmd->footer(
      "JSON report per pair; CSV columns: N,analytic,analytic_padded,p_gray,p_hadamard,"
      "p_optical, then size/depth/width for gray, hadamard and optical.");

  // cost
  std::string cost_circuit;
  auto *cost_cmd = app.add_subcommand("cost", "size, depth and width of a circuit text file");
  cost_cmd->add_option("--circuit", cost_circuit, "circuit text file")->required();
  cost_cmd->footer(
      "Output: {\"size\", \"depth\", \"width\"}. MCX gates and barriers are not counted; "
      "global phase counts toward size only with --paper-count. Gate angles are in radians.");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << error_json("cli", e.what());
    return 2;
  }

  try {
    check_format(g);
    if (*rescale_cmd) {
      const auto r = rescale(load_vector(rescale_input, "input"));
      json j{{"angles", std::vector<double>(r.angles.begin(), r.angles.end())},
             {"degenerate", r.degenerate}};
      emit(g, out, dump(j));
    } else if (*synth_cmd) {
      if (g.out.empty()) throw CliError("synth requires --out");
      const DiagonalTarget target(load_vector_arg(synth_beta, "beta"));
      const bool gray = synth_algorithm == "gray";
      const QubitCircuit c =
          gray ? synth_alg1(target)
               : synth_alg2(target, {synth_optimize, !synth_neuron_mode});
      const AngleSolution sol =
          solve_alpha(target, gray ? MatrixKind::Gray : MatrixKind::Hadamard);
      json sidecar{{"algorithm", synth_algorithm},
                   {"matrix", gray ? "gray" : "hadamard"},
                   {"alpha", sol.alpha},
                   {"counts",
                    {{"rz", c.count(GateKind::RZ)},
                     {"cnot", c.count(GateKind::CNOT)},
                     {"global_phase", c.count(GateKind::GlobalPhase)},
                     {"total", c.gates().size()}}},
                   {"cost", cost_metrics(c, {.count_global_phase = g.paper_count})}};
      write_file(g.out, export_text(c));
      write_file(g.out + ".json", dump(sidecar));
    } else if (*mesh_cmd) {
      const MeshPlan plan = mesh_synthesize(load_vector(mesh_amplitudes, "amplitudes"));
      emit(g, out, dump(mesh_to_json(plan)));
    } else if (*rq_cmd) {
      const AngleVector x = to_angles(load_vector(rq_input, "input"), rq_rescaled);
      const AngleVector w = to_angles(load_vector(rq_weight, "weight"), rq_rescaled);
      if (x.size() != w.size()) {
        throw ValidationError("neuron", "dimension mismatch: input has " +
                                            std::to_string(x.size()) + " entries, weight has " +
                                            std::to_string(w.size()));
      }
      const AngleVector xq = pad_to_qubit_dim(x), wq = pad_to_qubit_dim(w);
      QubitNeuronOptions opts;
      opts.algorithm = parse_algorithm(rq_algorithm);
      opts.strategy = parse_strategy(rq_strategy);
      opts.optimize = !rq_no_optimize;
      const QubitCircuit c = neuron_circuit(xq, wq, opts);
      const unsigned n = ceil_log2(xq.size());
      const StateVector state = run(c, StateVector::basis(c.num_wires()));
      const MeasurementOutcome m = measure_neuron(state, n, opts.strategy);
      std::optional<Histogram> hist;
      if (rq_shots) hist = sample(m, *rq_shots, resolve_seed(g));
      if (!rq_emit.empty()) write_file(rq_emit, export_text(c));

      if (g.format == "csv") {
        emit(g, out, histogram_csv(m.p1, hist));
      } else {
        json j{{"algorithm", rq_algorithm},
               {"strategy", rq_strategy},
               {"dimension", x.size()},
               {"padded_dimension", xq.size()},
               {"padding_applied", xq.size() != x.size()},
               {"p0", m.p0},
               {"p1", m.p1},
               {"analytic", analytic_fidelity(xq, wq)},
               {"cost", cost_metrics(c, {.count_global_phase = g.paper_count})},
               {"multi_controlled", c.count(GateKind::MCX)}};
        if (xq.size() != x.size()) j["analytic_unpadded"] = analytic_fidelity(x, w);
        if (hist) j["histogram"] = *hist;
        if (opts.strategy == Strategy::MeasureAll) {
          json dist = json::array();
          const auto p = marginal_distribution(state, n);
          for (std::uint64_t k = 0; k < p.size(); ++k) {
            dist.push_back({{"outcome", bitstring(k, n)}, {"probability", p[k]}});
          }
          j["distribution"] = std::move(dist);
        }
        emit(g, out, dump(j));
      }
    } else if (*ro_cmd) {
      const AngleVector x = to_angles(load_vector(ro_input, "input"), ro_rescaled);
      const AngleVector w = to_angles(load_vector(ro_weight, "weight"), ro_rescaled);
      const OpticalNeuron neuron = optical_neuron_circuit(x, w);
      const OpticalCircuit circuit = neuron.circuit();
      const double p = std::clamp(simulate_photon(compose_unitary(circuit),
                                                  PhotonState::in_mode(neuron.mesh.modes, 0))
                                      .probability(0),
                                  0.0, 1.0);
      std::optional<Histogram> hist;
      if (ro_shots) {
        hist = sample({1.0 - p, p, Strategy::Ancilla}, *ro_shots, resolve_seed(g));
      }
      if (g.format == "csv") {
        emit(g, out, histogram_csv(p, hist));
      } else {
        json j{{"dimension", x.size()},
               {"probability", p},
               {"p0", 1.0 - p},
               {"analytic", analytic_fidelity(x, w)},
               {"cost", optical_cost_metrics(circuit)},
               {"mesh", mesh_to_json(neuron.mesh, neuron.phase_layer())}};
        if (hist) j["histogram"] = *hist;
        emit(g, out, dump(j));
      }
    } else if (*cmp_cmd) {
      NeuronOptions opts;
      opts.strategy = parse_strategy(cmp_strategy);
      opts.paper_count = g.paper_count;
      opts.shots = cmp_shots;
      opts.seed = resolve_seed(g);
      if (!cmp_batch.empty()) {
        if (!cmp_input.empty() || !cmp_weight.empty()) {
          throw CliError("--batch excludes --input/--weight");
        }
        const json pairs_json = parse_json(read_file(cmp_batch), cmp_batch);
        if (!pairs_json.is_array()) throw CliError("batch file must hold a JSON array");
        std::vector<std::pair<AngleVector, AngleVector>> pairs;
        for (const json &p : pairs_json) {
          if (!p.is_object() || !p.contains("input") || !p.contains("weight")) {
            throw CliError("batch entries need \"input\" and \"weight\"");
          }
          pairs.emplace_back(to_angles(vector_from_json(p["input"], "input"), cmp_rescaled),
                             to_angles(vector_from_json(p["weight"], "weight"), cmp_rescaled));
        }
        const auto reports = evaluate_batch(pairs, opts);
        if (g.format == "json") {
          emit(g, out, dump(json(reports)));
        } else {
          std::string csv = kReportCsvHeader;
          for (const auto &r : reports) csv += report_csv_row(r);
          emit(g, out, csv);
        }
      } else {
        if (cmp_input.empty() || cmp_weight.empty()) {
          throw CliError("compare needs --input and --weight, or --batch");
        }
        const AngleVector x = to_angles(load_vector(cmp_input, "input"), cmp_rescaled);
        const AngleVector w = to_angles(load_vector(cmp_weight, "weight"), cmp_rescaled);
        const NeuronReport r = evaluate(x, w, opts);
        if (g.format == "json") {
          emit(g, out, dump(json(r)));
        } else {
          emit(g, out, std::string(kReportCsvHeader) + report_csv_row(r));
        }
      }
    } else if (*cost_cmd) {
      const QubitCircuit c = parse_text(read_file(cost_circuit));
      emit(g, out, json(cost_metrics(c, {.count_global_phase = g.paper_count})).dump() + "\n");
    }
  } catch (const ValidationError &e) {
    err << error_json(e.module(), e.what());
    return 2;
  } catch (const CliError &e) {
    err << error_json("cli", e.what());
    return 2;
  } catch (const json::exception &e) {
    err << error_json("cli", e.what());
    return 2;
  }
  return 0;
}

}  // namespace qneuron
