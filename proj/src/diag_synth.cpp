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


#include "qneuron/diag_synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qneuron/error.hpp"

namespace qneuron {

namespace {

const char *const kModule = "diag-synth";

bool commutes_with_cnot(const Gate &g, unsigned control, unsigned target) {
  switch (g.kind) {
    case GateKind::GlobalPhase:
      return true;
    case GateKind::Barrier:
      return false;
    case GateKind::RZ:
      return g.target != target;
    case GateKind::H:
      return g.target != target && g.target != control;
    case GateKind::X:
      return g.target != control;
    case GateKind::CNOT:
    case GateKind::MCX:
      return g.target != control &&
             std::find(g.controls.begin(), g.controls.end(), target) ==
                 g.controls.end();
  }
  return false;
}

class Reservation {
 public:
  explicit Reservation(unsigned wires) : busy_(wires), reads_(wires) {}

  bool busy(unsigned w, std::size_t t) const {
    return t < busy_[w].size() && busy_[w][t];
  }
  void occupy(unsigned w, std::size_t t) {
    if (busy_[w].size() <= t) busy_[w].resize(t + 1, false);
    busy_[w][t] = true;
  }
  void add_read(unsigned w, std::size_t t) { reads_[w].push_back(t); }
  bool read_within(unsigned w, std::size_t lo, std::size_t hi) const {
    return std::any_of(reads_[w].begin(), reads_[w].end(),
                       [&](std::size_t t) { return lo <= t && t <= hi; });
  }
  std::size_t horizon() const {
    std::size_t h = 0;
    for (const auto &b : busy_) h = std::max(h, b.size());
    return h;
  }

 private:
  std::vector<std::vector<bool>> busy_;
  std::vector<std::vector<std::size_t>> reads_;
};

// Earliest-start placement of a gate sequence from time `start`, each gate
// strictly after the previous one.
std::vector<std::size_t> place_from(const Reservation &res,
                                    std::span<const Gate> seq,
                                    std::size_t start) {
  std::vector<std::size_t> times;
  times.reserve(seq.size());
  std::size_t t = start;
  for (const Gate &g : seq) {
    const auto w = g.wires();
    while (std::any_of(w.begin(), w.end(),
                       [&](unsigned q) { return res.busy(q, t); })) {
      ++t;
    }
    times.push_back(t++);
  }
  return times;
}

// Reorders a diagonal block built from per-target Gray walks so that walks on
// different targets overlap in time. Each target wire m carries one walk:
// an optional leading RZ on the clean wire, then alternating CNOT/RZ gates
// targeting m. Between the walk's first and last CNOT wire m holds a parity
// rather than its basis value, so no other walk may read m as a control in
// that window. Walks are placed from the highest target down.
QubitCircuit schedule_walks(const QubitCircuit &c) {
  const unsigned n = c.num_wires();
  std::vector<std::vector<Gate>> walks(n);
  QubitCircuit out(n, c.provenance());
  for (const Gate &g : c.gates()) {
    if (g.kind == GateKind::GlobalPhase) {
      out.add(g);
    } else {
      walks[g.target].push_back(g);
    }
  }

  Reservation res(n);
  struct Timed {
    std::size_t time;
    Gate gate;
  };
  std::vector<Timed> timed;

  for (unsigned m = n; m-- > 0;) {
    const auto &walk = walks[m];
    if (walk.empty()) continue;
    const bool has_cnot = std::any_of(walk.begin(), walk.end(), [](const Gate &g) {
      return g.kind == GateKind::CNOT;
    });
    std::vector<std::size_t> times;
    std::size_t float_time = 0;
    const bool floats = has_cnot && walk.front().kind == GateKind::RZ;
    std::span<const Gate> rest(walk);
    if (floats) rest = rest.subspan(1);

    if (!has_cnot) {
      times = place_from(res, rest, 0);
    } else {
      std::size_t best_end = 0;
      bool found = false;
      const std::size_t horizon = res.horizon();
      for (std::size_t s = 0;; ++s) {
        if (found && s + rest.size() > best_end + 1) break;
        auto cand = place_from(res, rest, s);
        std::size_t lo = 0, hi = 0;
        bool first = true;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (rest[i].kind != GateKind::CNOT) continue;
          if (first) lo = cand[i];
          hi = cand[i];
          first = false;
        }
        if (res.read_within(m, lo, hi)) {
          if (s > horizon) {
            throw ValidationError(kModule, "walk scheduling did not converge");
          }
          continue;
        }
        std::size_t end = cand.back();
        std::size_t t0 = 0;
        if (floats) {
          while (res.busy(m, t0) || (lo <= t0 && t0 <= hi) ||
                 std::find(cand.begin(), cand.end(), t0) != cand.end()) {
            ++t0;
          }
          end = std::max(end, t0);
        }
        if (!found || end < best_end) {
          found = true;
          best_end = end;
          times = std::move(cand);
          float_time = t0;
        }
      }
    }

    auto commit = [&](const Gate &g, std::size_t t) {
      for (unsigned q : g.wires()) res.occupy(q, t);
      if (g.kind == GateKind::CNOT) res.add_read(g.controls[0], t);
      timed.push_back({t, g});
    };
    if (floats) commit(walk.front(), float_time);
    for (std::size_t i = 0; i < rest.size(); ++i) commit(rest[i], times[i]);
  }

  std::stable_sort(timed.begin(), timed.end(),
                   [](const Timed &a, const Timed &b) { return a.time < b.time; });
  for (auto &tg : timed) out.add(std::move(tg.gate));
  return out;
}

}  // namespace

DiagonalTarget::DiagonalTarget(std::vector<double> beta) : beta_(std::move(beta)) {
  const std::size_t d = beta_.size();
  if (d < 2 || !std::has_single_bit(d)) {
    throw ValidationError(kModule, "diagonal dimension must be a power of two >= 2, got " +
                                       std::to_string(d));
  }
  for (double b : beta_) {
    if (!std::isfinite(b)) throw ValidationError(kModule, "non-finite phase");
  }
  num_qubits_ = static_cast<unsigned>(std::countr_zero(d));
}

Eigen::MatrixXd build_M(MatrixKind kind, unsigned n) {
  if (n < 1 || n > kMaxMatrixQubits) {
    throw ValidationError(kModule, "build_M supports 1 <= n <= " +
                                       std::to_string(kMaxMatrixQubits));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  const double scale = kind == MatrixKind::Gray ? 1.0 / static_cast<double>(dim)
                                                : 2.0 / static_cast<double>(dim);
  Eigen::MatrixXd m(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    for (Eigen::Index t = 0; t < dim; ++t) {
      const auto col = kind == MatrixKind::Gray ? gray_code(t) : std::uint64_t(t);
      m(s, t) = dot_parity(s, col) ? -scale : scale;
    }
  }
  return m;
}

void walsh_hadamard(std::span<double> v) {
  if (!std::has_single_bit(v.size())) {
    throw ValidationError(kModule, "transform length must be a power of two");
  }
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = v[j];
        const double b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

// With H the +-1 Sylvester matrix (H^2 = 2^n I):
//   Gray:     beta = H P alpha / 2^n, (P alpha)_{g_t} = alpha_t  =>  alpha_t = (H beta)_{g_t}
//   Hadamard: beta = H alpha / 2^(n-1)                           =>  alpha = H beta / 2
AngleSolution solve_alpha(const DiagonalTarget &target, MatrixKind kind) {
  std::vector<double> h(target.beta().begin(), target.beta().end());
  walsh_hadamard(h);
  AngleSolution sol;
  sol.kind = kind;
  sol.alpha.resize(h.size());
  for (std::size_t t = 0; t < h.size(); ++t) {
    sol.alpha[t] = kind == MatrixKind::Gray ? h[gray_code(t)] : h[t] / 2.0;
  }
  return sol;
}

QubitCircuit synth_alg1(const DiagonalTarget &target) {
  const unsigned n = target.num_qubits();
  const std::size_t dim = target.size();
  const unsigned ancilla = n;
  const AngleSolution sol = solve_alpha(target, MatrixKind::Gray);

  QubitCircuit c(n + 1, "gray");
  for (std::size_t t = 0; t < dim; ++t) {
    c.add(Gate::rz(ancilla, -2.0 * sol.alpha[t] / static_cast<double>(dim)));
    const std::uint64_t flip = gray_code(t) ^ gray_code((t + 1) % dim);
    c.add(Gate::cnot(static_cast<unsigned>(std::countr_zero(flip)), ancilla));
  }
  return c;
}

QubitCircuit synth_alg2(const DiagonalTarget &target, const Alg2Options &options) {
  const unsigned n = target.num_qubits();
  const std::size_t dim = target.size();
  const AngleSolution sol = solve_alpha(target, MatrixKind::Hadamard);
  // Parity term q carries coefficient alpha_q / 2^(n-1); RZ(w) on a wire of
  // parity p contributes -(w/2)(-1)^p, so w = -2 * coefficient.
  const double norm = 2.0 / static_cast<double>(dim);

  QubitCircuit c(n, options.optimize ? "hadamard-optimized" : "hadamard");
  if (options.include_global_phase) c.add(Gate::global_phase(sol.alpha[0] * norm));

  auto emit_term = [&](std::uint64_t q) {
    const auto msb = static_cast<unsigned>(std::bit_width(q) - 1);
    std::vector<unsigned> controls;
    for (unsigned b = 0; b < msb; ++b) {
      if ((q >> b) & 1u) controls.push_back(b);
    }
    for (unsigned ctl : controls) c.add(Gate::cnot(ctl, msb));
    c.add(Gate::rz(msb, -2.0 * sol.alpha[q] * norm));
    for (unsigned ctl : controls) c.add(Gate::cnot(ctl, msb));
  };

  if (!options.optimize) {
    for (std::uint64_t q = 1; q < dim; ++q) emit_term(q);
    return c;
  }
  // Terms sharing a most significant bit m are visited in Gray order of
  // their lower bits, so consecutive sandwiches differ by one CNOT control.
  for (unsigned m = 0; m < n; ++m) {
    const std::uint64_t lower = std::uint64_t{1} << m;
    for (std::uint64_t j = 0; j < lower; ++j) emit_term(lower | gray_code(j));
  }
  return schedule_walks(cancel_cnot_pairs(c));
}

QubitCircuit cancel_cnot_pairs(const QubitCircuit &c) {
  std::vector<Gate> out;
  out.reserve(c.gates().size());
  for (const Gate &g : c.gates()) {
    if (g.kind == GateKind::CNOT) {
      const unsigned ctl = g.controls[0];
      bool cancelled = false;
      for (std::size_t i = out.size(); i-- > 0;) {
        if (out[i] == g) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          cancelled = true;
          break;
        }
        if (!commutes_with_cnot(out[i], ctl, g.target)) break;
      }
      if (cancelled) continue;
    }
    out.push_back(g);
  }
  QubitCircuit result(c.num_wires(), c.provenance());
  for (auto &g : out) result.add(std::move(g));
  return result;
}

DiagonalTarget merged_diagonal(const AngleVector &theta, const AngleVector &phi) {
  if (theta.size() != phi.size()) {
    throw ValidationError(kModule, "dimension mismatch: " + std::to_string(theta.size()) +
                                       " vs " + std::to_string(phi.size()));
  }
  std::vector<double> beta(theta.size());
  for (std::size_t k = 0; k < beta.size(); ++k) beta[k] = theta[k] - phi[k];
  return DiagonalTarget(std::move(beta));
}

}  // namespace qneuron
