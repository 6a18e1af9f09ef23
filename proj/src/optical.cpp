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


#include "qneuron/optical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qneuron/error.hpp"

namespace qneuron {

namespace {

const char *const kModule = "optical";
using cd = std::complex<double>;

struct Node {
  double amplitude = 0.0;
  bool present = true;  // false for a padding zero
};

}  // namespace

Eigen::Matrix2cd BeamSplitter::matrix() const {
  Eigen::Matrix2cd m;
  const double c = std::cos(eta), s = std::sin(eta);
  m << c, -s * std::polar(1.0, -xi), s * std::polar(1.0, xi), c;
  return m;
}

OpticalCircuit::OpticalCircuit(unsigned modes) : modes_(modes) {
  if (modes == 0) throw ValidationError(kModule, "an optical circuit needs a mode");
}

OpticalCircuit &OpticalCircuit::add(OpticalElement element) {
  if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
    if (bs->mode_a >= modes_ || bs->mode_b >= modes_) {
      throw ValidationError(kModule, "beam splitter mode index out of range");
    }
    if (bs->mode_a == bs->mode_b) {
      throw ValidationError(kModule, "beam splitter needs two distinct modes");
    }
    if (!std::isfinite(bs->eta) || !std::isfinite(bs->xi)) {
      throw ValidationError(kModule, "beam splitter angle is not finite");
    }
  } else {
    const auto &ps = std::get<PhaseShifterLayer>(element);
    if (ps.phases.size() != modes_) {
      throw ValidationError(kModule, "phase layer has " + std::to_string(ps.phases.size()) +
                                         " phases for " + std::to_string(modes_) + " modes");
    }
    for (double p : ps.phases) {
      if (!std::isfinite(p)) throw ValidationError(kModule, "phase is not finite");
    }
  }
  elements_.push_back(std::move(element));
  return *this;
}

OpticalCircuit &OpticalCircuit::append(const OpticalCircuit &other) {
  if (other.modes() != modes_) throw ValidationError(kModule, "mode count mismatch");
  for (const auto &e : other.elements()) add(e);
  return *this;
}

std::size_t OpticalCircuit::beam_splitter_count() const {
  return static_cast<std::size_t>(
      std::count_if(elements_.begin(), elements_.end(), [](const OpticalElement &e) {
        return std::holds_alternative<BeamSplitter>(e);
      }));
}

OpticalCircuit adjoint(const OpticalCircuit &c) {
  OpticalCircuit out(c.modes());
  for (auto it = c.elements().rbegin(); it != c.elements().rend(); ++it) {
    if (const auto *bs = std::get_if<BeamSplitter>(&*it)) {
      BeamSplitter d = *bs;
      d.eta = -d.eta;
      out.add(d);
    } else {
      PhaseShifterLayer ps = std::get<PhaseShifterLayer>(*it);
      for (double &p : ps.phases) p = -p;
      out.add(std::move(ps));
    }
  }
  return out;
}

OpticalCircuit MeshPlan::circuit() const {
  OpticalCircuit c(modes);
  for (auto layer = layers.rbegin(); layer != layers.rend(); ++layer) {
    for (const MeshEntry &e : *layer) {
      if (e.skipped) continue;
      c.add(BeamSplitter{e.eta, 0.0, e.mode_a, *e.mode_b});
    }
  }
  return c;
}

MeshPlan mesh_synthesize(std::span<const double> c, const MeshOptions &options) {
  if (c.empty()) throw ValidationError(kModule, "amplitude vector is empty");
  double norm2 = 0.0;
  for (double v : c) {
    if (!std::isfinite(v)) throw ValidationError(kModule, "amplitude is not finite");
    if (v < 0.0) throw ValidationError(kModule, "amplitudes must be nonnegative");
    norm2 += v * v;
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) {
    throw ValidationError(kModule, "amplitude vector is not unit norm");
  }

  const unsigned layer_count = ceil_log2(c.size());
  // levels[0] holds c; levels[l + 1] holds the pair norms of levels[l].
  std::vector<std::vector<Node>> levels(1);
  for (double v : c) levels[0].push_back({v, true});

  MeshPlan plan;
  plan.modes = static_cast<unsigned>(c.size());
  plan.layers.resize(layer_count);
  for (unsigned l = 0; l < layer_count; ++l) {
    auto &vec = levels[l];
    if (vec.size() % 2 == 1) vec.push_back({0.0, false});
    std::vector<Node> next;
    for (std::size_t t = 0; t < vec.size() / 2; ++t) {
      const double a = vec[2 * t].amplitude;
      const double b = vec[2 * t + 1].amplitude;
      const double r = std::hypot(a, b);
      MeshEntry e;
      if (b == 0.0) {
        e.eta = std::numbers::pi / 2;
        e.skipped = options.skip_quarter_turns || !vec[2 * t + 1].present;
      } else {
        e.eta = std::acos(std::clamp(b / r, -1.0, 1.0));
      }
      plan.layers[l].push_back(e);
      next.push_back({r, true});
    }
    levels.push_back(std::move(next));
  }

  // Assign modes from the root down. A splitter keeps the odd child on the
  // parent's mode and sends the even child to a fresh mode; a skipped pair
  // keeps the even child in place.
  std::vector<std::vector<unsigned>> mode_of(layer_count + 1);
  mode_of[layer_count] = {0};
  unsigned used = 1;
  for (unsigned l = layer_count; l-- > 0;) {
    const auto &parents = mode_of[l + 1];
    mode_of[l].assign(levels[l].size(), 0);
    // one splitter per real parent; a padding slot in the parent level has no mode
    std::vector<std::size_t> order(plan.layers[l].size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return parents[x] < parents[y]; });
    unsigned fresh = 0;
    for (std::size_t t : order) {
      MeshEntry &e = plan.layers[l][t];
      const unsigned m = parents[t];
      const std::size_t even = 2 * t, odd = 2 * t + 1;
      e.mode_a = m;
      if (!levels[l][odd].present) {
        mode_of[l][even] = m;
      } else {
        const unsigned j = used + fresh++;
        e.mode_b = j;
        if (e.skipped) {
          mode_of[l][even] = m;
          mode_of[l][odd] = j;
        } else {
          mode_of[l][odd] = m;
          mode_of[l][even] = j;
        }
      }
    }
    used += fresh;
  }
  if (used != plan.modes) {
    throw ValidationError(kModule, "internal: mesh used " + std::to_string(used) +
                                       " modes for " + std::to_string(plan.modes));
  }
  plan.permutation.assign(mode_of[0].begin(), mode_of[0].begin() +
                                                  static_cast<std::ptrdiff_t>(c.size()));
  return plan;
}

ModeUnitary::ModeUnitary(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw ValidationError(kModule, "mode matrix must be square and nonempty");
  }
  const Eigen::MatrixXcd err =
      matrix_.adjoint() * matrix_ - Eigen::MatrixXcd::Identity(matrix_.rows(), matrix_.rows());
  if (err.cwiseAbs().maxCoeff() >= 1e-10) {
    throw ValidationError(kModule, "mode matrix is not unitary");
  }
}

ModeUnitary compose_unitary(const OpticalCircuit &c) {
  const Eigen::Index n = c.modes();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  for (const auto &element : c.elements()) {
    if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
      const Eigen::Matrix2cd b = bs->matrix();
      const Eigen::RowVectorXcd ra = u.row(bs->mode_a);
      const Eigen::RowVectorXcd rb = u.row(bs->mode_b);
      u.row(bs->mode_a) = b(0, 0) * ra + b(0, 1) * rb;
      u.row(bs->mode_b) = b(1, 0) * ra + b(1, 1) * rb;
    } else {
      const auto &ps = std::get<PhaseShifterLayer>(element);
      for (Eigen::Index k = 0; k < n; ++k) u.row(k) *= std::polar(1.0, ps.phases[k]);
    }
  }
  return ModeUnitary(std::move(u));
}

ModeUnitary compose_unitary(const MeshPlan &plan) { return compose_unitary(plan.circuit()); }

MeshPlan uniform_mesh(unsigned N) {
  if (N < 2) throw ValidationError(kModule, "uniform multiport needs N >= 2");
  const std::vector<double> c(N, 1.0 / std::sqrt(static_cast<double>(N)));
  return mesh_synthesize(c);
}

ModeUnitary uniform_md(unsigned N) { return compose_unitary(uniform_mesh(N)); }

PhotonState::PhotonState(Eigen::VectorXcd amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw ValidationError(kModule, "photon state has no modes");
  if (std::abs(amps_.squaredNorm() - 1.0) > 1e-10) {
    throw ValidationError(kModule, "photon state is not unit norm");
  }
}

PhotonState PhotonState::in_mode(unsigned modes, unsigned k) {
  if (k >= modes) throw ValidationError(kModule, "mode index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(modes);
  v(k) = 1.0;
  return PhotonState(std::move(v));
}

PhotonState simulate_photon(const ModeUnitary &u, const PhotonState &input) {
  if (u.modes() != input.modes()) {
    throw ValidationError(kModule, "state has " + std::to_string(input.modes()) +
                                       " modes, unitary has " + std::to_string(u.modes()));
  }
  return PhotonState(u.matrix() * input.amplitudes());
}

std::vector<PhotonState> simulate_stages(std::span<const OpticalCircuit> stages,
                                         const PhotonState &input) {
  std::vector<PhotonState> trace{input};
  for (const auto &stage : stages) {
    trace.push_back(simulate_photon(compose_unitary(stage), trace.back()));
  }
  return trace;
}

OpticalCircuit OpticalNeuron::circuit() const {
  OpticalCircuit c = md;
  c.append(phases);
  c.append(md_dagger);
  return c;
}

std::vector<double> OpticalNeuron::phase_layer() const {
  return std::get<PhaseShifterLayer>(phases.elements().at(0)).phases;
}

OpticalNeuron optical_neuron_circuit(const AngleVector &theta, const AngleVector &phi) {
  if (theta.size() != phi.size()) {
    throw ValidationError(kModule, "dimension mismatch: " + std::to_string(theta.size()) +
                                       " vs " + std::to_string(phi.size()));
  }
  const auto N = static_cast<unsigned>(theta.size());
  OpticalNeuron neuron{uniform_mesh(N), OpticalCircuit(N), OpticalCircuit(N),
                       OpticalCircuit(N)};
  neuron.md = neuron.mesh.circuit();
  std::vector<double> beta(N, 0.0);
  for (unsigned k = 0; k < N; ++k) {
    beta[neuron.mesh.permutation[k]] = theta[k] - phi[k];
  }
  neuron.phases.add(PhaseShifterLayer{std::move(beta)});
  neuron.md_dagger = adjoint(neuron.md);
  return neuron;
}

double neuron_optical(const AngleVector &theta, const AngleVector &phi) {
  const OpticalNeuron neuron = optical_neuron_circuit(theta, phi);
  const PhotonState out = simulate_photon(compose_unitary(neuron.circuit()),
                                          PhotonState::in_mode(neuron.mesh.modes, 0));
  return std::clamp(out.probability(0), 0.0, 1.0);
}

OpticalCostMetrics optical_cost_metrics(const OpticalCircuit &c) {
  OpticalCostMetrics m;
  m.width = std::log2(static_cast<double>(c.modes()));
  std::vector<std::size_t> level(c.modes(), 0);
  std::size_t depth = 0;
  for (const auto &element : c.elements()) {
    if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
      ++m.size;
      const std::size_t l = std::max(level[bs->mode_a], level[bs->mode_b]) + 1;
      level[bs->mode_a] = level[bs->mode_b] = l;
      depth = std::max(depth, l);
    } else {
      m.phase_shifters += c.modes();
      const std::size_t l = *std::max_element(level.begin(), level.end()) + 1;
      std::fill(level.begin(), level.end(), l);
      depth = std::max(depth, l);
    }
  }
  m.depth = depth + 1;
  return m;
}

}  // namespace qneuron
