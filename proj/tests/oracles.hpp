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


// Reference implementations used only by the tests. They are written from the
// defining formulas and share no code with the library kernels.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qneuron/gate_ir.hpp"

namespace qneuron::oracle {

using cd = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

// Full 2^w matrix of a single-wire operator, built as a Kronecker product with
// wire w-1 leftmost (wire 0 is the least significant index bit).
inline Eigen::MatrixXcd embed_1q(const Eigen::Matrix2cd &g, unsigned wire, unsigned w) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = static_cast<int>(w) - 1; q >= 0; --q) {
    const Eigen::Matrix2cd f =
        static_cast<unsigned>(q) == wire ? g : Eigen::Matrix2cd::Identity();
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        next.block(2 * i, 2 * j, 2, 2) = m(i, j) * f;
      }
    }
    m = std::move(next);
  }
  return m;
}

// Controlled-X as a sum of projectors: P0 (x) I + P1...1 (x) X.
inline Eigen::MatrixXcd controlled_x(const std::vector<unsigned> &controls, unsigned target,
                                     unsigned w) {
  const std::size_t dim = std::size_t{1} << w;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    bool all = true;
    for (unsigned c : controls) all = all && ((col >> c) & 1u);
    const std::size_t row = all ? col ^ (std::size_t{1} << target) : col;
    m(row, col) = 1.0;
  }
  return m;
}

inline Eigen::MatrixXcd gate_matrix(const Gate &g, unsigned w) {
  const std::size_t dim = std::size_t{1} << w;
  const double s = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H: {
      Eigen::Matrix2cd h;
      h << s, s, s, -s;
      return embed_1q(h, g.target, w);
    }
    case GateKind::X: {
      Eigen::Matrix2cd x;
      x << 0, 1, 1, 0;
      return embed_1q(x, g.target, w);
    }
    case GateKind::RZ: {
      Eigen::Matrix2cd rz = Eigen::Matrix2cd::Zero();
      rz(0, 0) = std::polar(1.0, -g.angle / 2);
      rz(1, 1) = std::polar(1.0, g.angle / 2);
      return embed_1q(rz, g.target, w);
    }
    case GateKind::CNOT:
    case GateKind::MCX:
      return controlled_x(g.controls, g.target, w);
    case GateKind::GlobalPhase:
      return std::polar(1.0, g.angle) * Eigen::MatrixXcd::Identity(dim, dim);
    case GateKind::Barrier:
      break;
  }
  return Eigen::MatrixXcd::Identity(dim, dim);
}

inline Eigen::MatrixXcd circuit_matrix(const QubitCircuit &c) {
  const std::size_t dim = std::size_t{1} << c.num_wires();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate &g : c.gates()) u = gate_matrix(g, c.num_wires()) * u;
  return u;
}

// Sylvester Hadamard matrix (entries +-1) built by repeated Kronecker doubling.
inline Eigen::MatrixXd sylvester(unsigned n) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Ones(1, 1);
  for (unsigned k = 0; k < n; ++k) {
    Eigen::MatrixXd next(h.rows() * 2, h.cols() * 2);
    next << h, h, h, -h;
    h = std::move(next);
  }
  return h;
}

// Gray: column t is Sylvester column g_t scaled by 1/2^n. Hadamard: 2/2^n.
inline Eigen::MatrixXd gray_matrix(unsigned n) {
  const Eigen::MatrixXd h = sylvester(n);
  Eigen::MatrixXd m(h.rows(), h.cols());
  for (Eigen::Index t = 0; t < h.cols(); ++t) m.col(t) = h.col(t ^ (t >> 1));
  return m / static_cast<double>(h.rows());
}

inline Eigen::MatrixXd hadamard_matrix(unsigned n) {
  return sylvester(n) * (2.0 / static_cast<double>(std::size_t{1} << n));
}

inline std::vector<double> dense_solve(const Eigen::MatrixXd &m, std::span<const double> beta) {
  Eigen::VectorXd b(static_cast<Eigen::Index>(beta.size()));
  for (std::size_t k = 0; k < beta.size(); ++k) b(static_cast<Eigen::Index>(k)) = beta[k];
  const Eigen::VectorXd a = m.fullPivLu().solve(b);
  return {a.data(), a.data() + a.size()};
}

// |(1/N) sum e^{i d_k}|^2 from separate cosine and sine sums.
inline double fidelity_from_sums(std::span<const double> delta) {
  double c = 0.0, s = 0.0;
  for (double d : delta) {
    c += std::cos(d);
    s += std::sin(d);
  }
  const double n = static_cast<double>(delta.size());
  return (c * c + s * s) / (n * n);
}

// Pairwise cosine expansion with coefficient `pair_coeff` / N^2.
inline double cosine_expansion(std::span<const double> delta, double pair_coeff) {
  const double n = static_cast<double>(delta.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < delta.size(); ++j) {
    for (std::size_t k = j + 1; k < delta.size(); ++k) acc += std::cos(delta[k] - delta[j]);
  }
  return 1.0 / n + pair_coeff / (n * n) * acc;
}

inline std::vector<double> random_angles(std::mt19937_64 &rng, std::size_t n,
                                         double lo = 0.0, double hi = pi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (double &x : v) x = d(rng);
  return v;
}

inline std::vector<double> random_unit_nonnegative(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  std::vector<double> v(n);
  double s = 0.0;
  for (double &x : v) {
    x = d(rng);
    s += x * x;
  }
  for (double &x : v) x /= std::sqrt(s);
  return v;
}

// Max elementwise distance after aligning the phase of the first nonzero entry.
inline double phase_aligned_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  cd ref{1.0, 0.0};
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (std::abs(a(k)) > 1e-6 && std::abs(b(k)) > 1e-6) {
      ref = a(k) / b(k);
      ref /= std::abs(ref);
      break;
    }
  }
  return (a - ref * b).cwiseAbs().maxCoeff();
}

}  // namespace qneuron::oracle
