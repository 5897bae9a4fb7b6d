// Copyright 2026 The GaugeKit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUGEKIT_GAUGECOND_HPP_
#define GAUGEKIT_GAUGECOND_HPP_

// Gauge conditions on unitary paths.
//
// Strong condition: paths G~(t) that leave the Hamiltonian itself invariant,
//   H = G~ H G~^{-1} + (hbar/i) G~ d/dt(G~^{-1}),
// so they permute solutions of one and the same equation.  For a constant
// Hamiltonian every constant unitary K generates such a path by dressing:
// G~(t) = U(t) K U(t)^dagger with U(t) = exp(-i H0 t / hbar).
//
// Weak condition: coefficient shifts of the connection along the mean-value
// direction, A'^i = A^i + c(t) lambda^i(t), which drop out of the adjoint
// transport equation (f_jk^i Omega^j lambda^k = 0 for Omega parallel to
// lambda) and therefore leave the mean values unchanged.

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gaugekit/adjoint.hpp"
#include "gaugekit/errors.hpp"
#include "gaugekit/gauge.hpp"
#include "gaugekit/lie.hpp"
#include "gaugekit/timefn.hpp"

namespace gaugekit {

// A connection shift Omega^i(t) = c(t) lambda^i(t), parallel to the
// mean-value vector at every time by construction.
struct WeakGaugeShift {
  TimeFunction c;
  AdjointTrajectory trajectory;

  Eigen::VectorXd omega(double t) const { return c(t) * trajectory.value(t); }
};

// Largest deviation of the Hamiltonian from invariance under the path:
// max over the grid of || H - (G~ H G~^{-1} + (hbar/i) G~ d/dt(G~^{-1})) ||_F.
inline double check_strong(const HamiltonianPath& h, const GroupPath& gt,
                           const std::vector<double>& grid) {
  if (h.dimension() != gt.dimension()) {
    throw dimension_error("check_strong: Hamiltonian dimension " +
                          std::to_string(h.dimension()) + " does not match path dimension " +
                          std::to_string(gt.dimension()));
  }
  if (grid.empty()) throw invalid_argument_error("check_strong: grid must be non-empty");
  const HamiltonianPath transformed = gauge_transform_hamiltonian(h, gt);
  double worst = 0.0;
  for (double t : grid) {
    worst = std::max(worst, (h.value(t) - transformed.value(t)).norm());
  }
  return worst;
}

// The dressed stabilizer G~(t) = U(t) K U(t)^dagger, U(t) = exp(-i H0 t / hbar),
// for a constant Hamiltonian H0 and a constant unitary K.  It satisfies the
// strong condition by construction, and K -> G~ is a group homomorphism.
inline GroupPath stabilizer_constant(const Eigen::MatrixXcd& h0, const Eigen::MatrixXcd& k,
                                     double hbar = 1.0) {
  if (h0.rows() != h0.cols() || k.rows() != k.cols() || h0.rows() != k.rows()) {
    throw dimension_error("stabilizer_constant: H0 and K must be square with equal sizes");
  }
  if (!(hbar > 0.0)) throw invalid_argument_error("stabilizer_constant: hbar must be positive");
  const int n = static_cast<int>(h0.rows());
  const double herm_residual = (h0 - h0.adjoint()).norm();
  if (!(herm_residual < 1e-10)) {
    throw hermiticity_error("stabilizer_constant: H0 is not Hermitian", herm_residual);
  }
  const double unit_residual =
      (k.adjoint() * k - Eigen::MatrixXcd::Identity(n, n)).norm();
  if (!(unit_residual < 1e-10)) {
    throw invalid_argument_error("stabilizer_constant: K is not unitary, ||K^H K - I|| = " +
                                 detail::fmt_g(unit_residual));
  }

  // Diagonalize once; the symmetrized H0 kills the O(eps) Hermiticity defect.
  const Eigen::MatrixXcd h_sym = 0.5 * (h0 + h0.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h_sym);
  if (eig.info() != Eigen::Success) {
    throw numerical_error("stabilizer_constant: eigendecomposition failed");
  }
  const Eigen::MatrixXcd v = eig.eigenvectors();
  const Eigen::VectorXd ev = eig.eigenvalues();
  const Eigen::MatrixXcd k_eig = (v.adjoint() * k * v).eval();  // K in the eigenbasis

  // In the eigenbasis, G~(t) = D(t) K D(t)^dagger with D = diag(e^{-i e_k t / hbar}),
  // so entry (r, c) of U K U^dagger is K_rc e^{-i (e_r - e_c) t / hbar} and the
  // derivative brings down -i (e_r - e_c) / hbar.
  auto dressed = [v, ev, k_eig, hbar, n](double t, bool derivative) {
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const double gap = (ev[r] - ev[c]) / hbar;
        std::complex<double> entry = k_eig(r, c) * std::polar(1.0, -gap * t);
        if (derivative) entry *= std::complex<double>(0.0, -gap);
        m(r, c) = entry;
      }
    }
    return (v * m * v.adjoint()).eval();
  };
  auto value = [dressed](double t) { return dressed(t, false); };
  auto deriv = [dressed](double t) { return dressed(t, true); };
  return GroupPath::matrix_path(std::move(value), std::move(deriv), n);
}

// Shift the connection coefficients along a prescribed parallel direction:
// A'(t) = A(t) + c(t) lambda^i(t) J_i.
inline Connection apply_weak_shift(const Connection& a, const WeakGaugeShift& shift) {
  const LieBasis& basis = a.basis();
  if (shift.trajectory.dimension() != basis.dim() ||
      shift.trajectory.basis().n != a.dimension()) {
    throw dimension_error("apply_weak_shift: trajectory and connection bases do not match");
  }
  const Interval domain = a.domain()
                              .intersect(shift.trajectory.domain())
                              .intersect(shift.c.domain());
  const TimeFunction c = shift.c;
  const AdjointTrajectory traj = shift.trajectory;
  auto fn = [a, c, traj, basis](double t) {
    return (a.value(t) + c(t) * from_coefficients(traj.value(t), basis)).eval();
  };
  return Connection(a.dimension(), std::move(fn), basis, domain);
}

// A'(t)^i = A(t)^i + c(t) lambda^i(t), lambda taken from the pair's own mean
// values.  The shift direction follows the reference trajectory pointwise,
// which is what makes the mean-value flow insensitive to it.
inline Connection weak_shift(const Connection& a, const SolutionPair& pair,
                             const TimeFunction& c) {
  return apply_weak_shift(a, WeakGaugeShift{c, mean_values(pair)});
}

// max over the grid of || f_jk^i (A^j - A'^j) lambda^k ||_2 — zero exactly
// when the two connections differ only along the mean-value direction.
inline double check_weak(const Connection& a, const Connection& a_shifted,
                         const AdjointTrajectory& traj, const std::vector<double>& grid) {
  const LieBasis& basis = a.basis();
  if (a_shifted.basis().dim() != basis.dim() || a_shifted.dimension() != a.dimension() ||
      traj.dimension() != basis.dim() || traj.basis().n != a.dimension()) {
    throw dimension_error("check_weak: connections and trajectory must share a basis");
  }
  if (grid.empty()) throw invalid_argument_error("check_weak: grid must be non-empty");
  double worst = 0.0;
  for (double t : grid) {
    const Eigen::VectorXd diff = a.coefficients(t) - a_shifted.coefficients(t);
    // f_jk^i diff^j lambda^k = -adjoint_rhs(diff, lambda).
    worst = std::max(worst, adjoint_rhs(diff, traj.value(t), basis).norm());
  }
  return worst;
}

}  // namespace gaugekit

#endif  // GAUGEKIT_GAUGECOND_HPP_
