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

#ifndef GAUGEKIT_ADJOINT_HPP_
#define GAUGEKIT_ADJOINT_HPP_

// Mean-value dynamics in the adjoint representation.
//
// For a state transported by a connection A = A^i J_i, the real mean values
// lambda^i(t) = <psi(t)| iJ_i |psi(t)> satisfy the adjoint transport equation
//
//   d lambda^i / dt + f_jk^i A^j(t) lambda^k(t) = 0 ,
//
// the Ehrenfest counterpart of the state equation.  For two-level systems
// lambda is half the Bloch vector and the adjoint flow is a rigid rotation.
// Trajectory derivatives are always computed analytically from the exact
// state derivative, never by finite differences, so residuals isolate
// equation error.

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gaugekit/detail/dopri5.hpp"
#include "gaugekit/errors.hpp"
#include "gaugekit/gauge.hpp"
#include "gaugekit/lie.hpp"
#include "gaugekit/timefn.hpp"

namespace gaugekit {

// A real trajectory in the adjoint representation, one component per
// generator of the attached basis, with an exact derivative callable.
class AdjointTrajectory {
 public:
  AdjointTrajectory(std::function<Eigen::VectorXd(double)> lambda_fn,
                    std::function<Eigen::VectorXd(double)> derivative_fn, LieBasis basis,
                    Interval domain)
      : fn_(std::move(lambda_fn)),
        dfn_(std::move(derivative_fn)),
        basis_(std::move(basis)),
        domain_(domain) {
    if (!fn_ || !dfn_) {
      throw invalid_argument_error("AdjointTrajectory: callables must be non-null");
    }
    if (domain_.empty()) throw invalid_argument_error("AdjointTrajectory: empty domain");
  }

  const LieBasis& basis() const { return basis_; }
  const Interval& domain() const { return domain_; }
  int dimension() const { return basis_.dim(); }

  Eigen::VectorXd value(double t) const { return checked(fn_(t), t); }
  Eigen::VectorXd derivative(double t) const { return checked(dfn_(t), t); }

 private:
  Eigen::VectorXd checked(Eigen::VectorXd v, double t) const {
    if (!domain_.contains(t)) {
      throw invalid_argument_error("AdjointTrajectory: time " + detail::fmt_g(t) +
                                   " outside domain");
    }
    if (v.size() != basis_.dim()) {
      throw dimension_error("AdjointTrajectory: component count " + std::to_string(v.size()) +
                            " does not match the basis dimension " +
                            std::to_string(basis_.dim()));
    }
    return v;
  }

  std::function<Eigen::VectorXd(double)> fn_;
  std::function<Eigen::VectorXd(double)> dfn_;
  LieBasis basis_;
  Interval domain_;
};

// lambda^i(t) = <psi(t)| iJ_i |psi(t)>, with the exact derivative
// d lambda^i/dt = 2 Re <psi_dot| iJ_i |psi>.  The generators come from the
// pair's connection basis, so the components line up with A^i for residuals.
inline AdjointTrajectory mean_values(const SolutionPair& pair) {
  const LieBasis& basis = pair.connection.basis();
  // Hermitian observables M_i = i J_i.
  std::vector<Eigen::MatrixXcd> observables;
  observables.reserve(basis.generators.size());
  for (const auto& j : basis.generators) {
    observables.push_back((std::complex<double>(0.0, 1.0) * j).eval());
  }
  const StatePath psi = pair.state;
  const int m = basis.dim();

  auto lambda_fn = [psi, observables, m](double t) {
    const Eigen::VectorXcd v = psi.value(t);
    Eigen::VectorXd out(m);
    for (int i = 0; i < m; ++i) {
      const std::complex<double> z = v.dot(observables[i] * v);
      if (std::abs(z.imag()) >= 1e-13) {
        throw numerical_error("mean_values: expectation of a Hermitian observable came out "
                              "complex (imaginary part " +
                              detail::fmt_g(z.imag()) + " at t = " + detail::fmt_g(t) + ")");
      }
      out[i] = z.real();
    }
    return out;
  };
  auto derivative_fn = [psi, observables, m](double t) {
    const Eigen::VectorXcd v = psi.value(t);
    const Eigen::VectorXcd dv = psi.derivative(t);
    Eigen::VectorXd out(m);
    for (int i = 0; i < m; ++i) out[i] = 2.0 * dv.dot(observables[i] * v).real();
    return out;
  };
  return AdjointTrajectory(std::move(lambda_fn), std::move(derivative_fn), basis,
                           pair.state.domain());
}

// Right-hand side of the adjoint transport equation:
// (d lambda/dt)^i = -f_jk^i A^j lambda^k.
inline Eigen::VectorXd adjoint_rhs(const Eigen::VectorXd& a_coeffs,
                                   const Eigen::VectorXd& lambda, const LieBasis& basis) {
  const int m = basis.dim();
  if (a_coeffs.size() != m || lambda.size() != m) {
    throw dimension_error("adjoint_rhs: coefficient sizes " + std::to_string(a_coeffs.size()) +
                          " / " + std::to_string(lambda.size()) +
                          " do not match the basis dimension " + std::to_string(m));
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(m);
  for (int j = 0; j < m; ++j) {
    if (a_coeffs[j] == 0.0) continue;
    for (int k = 0; k < m; ++k) {
      if (lambda[k] == 0.0) continue;
      for (int i = 0; i < m; ++i) {
        out[i] -= basis.structure_constant(j, k, i) * a_coeffs[j] * lambda[k];
      }
    }
  }
  return out;
}

// Numerically integrate the adjoint equation from lambda0 across the
// interval with the same embedded Runge-Kutta oracle used for states.
inline AdjointTrajectory integrate_adjoint(const Connection& a, const Eigen::VectorXd& lambda0,
                                           Interval interval, double rtol = 1e-10,
                                           double atol = 1e-12) {
  const LieBasis& basis = a.basis();
  if (lambda0.size() != basis.dim()) {
    throw dimension_error("integrate_adjoint: lambda0 has size " +
                          std::to_string(lambda0.size()) + ", basis dimension is " +
                          std::to_string(basis.dim()));
  }
  if (!(rtol >= 1e-13)) {
    throw invalid_argument_error("integrate_adjoint: rtol must be at least 1e-13");
  }
  if (!(atol > 0.0)) throw invalid_argument_error("integrate_adjoint: atol must be positive");
  if (!interval.finite() || !(interval.length() > 0.0)) {
    throw invalid_argument_error(
        "integrate_adjoint: interval must be finite with positive length");
  }

  auto rhs = [a, basis](double t, const Eigen::VectorXcd& y) -> Eigen::VectorXcd {
    const Eigen::VectorXd lam = y.real();
    return adjoint_rhs(a.coefficients(t), lam, basis).cast<std::complex<double>>();
  };
  detail::Dopri5Options options;
  options.rtol = rtol;
  options.atol = atol;
  auto solution = std::make_shared<const detail::Dopri5Solution>(detail::dopri5_integrate(
      rhs, interval.lo, interval.hi, lambda0.cast<std::complex<double>>(), options));

  auto lambda_fn = [solution](double t) -> Eigen::VectorXd { return solution->value(t).real(); };
  auto derivative_fn = [solution, a, basis](double t) {
    return adjoint_rhs(a.coefficients(t), solution->value(t).real(), basis);
  };
  return AdjointTrajectory(std::move(lambda_fn), std::move(derivative_fn), basis, interval);
}

// max over the grid of || d lambda/dt + f_jk^i A^j lambda^k ||_2.
inline double adjoint_residual(const AdjointTrajectory& traj, const Connection& a,
                               const std::vector<double>& grid) {
  if (traj.dimension() != a.basis().dim() || traj.basis().n != a.dimension()) {
    throw dimension_error("adjoint_residual: trajectory and connection bases do not match");
  }
  if (grid.empty()) throw invalid_argument_error("adjoint_residual: grid must be non-empty");
  double worst = 0.0;
  for (double t : grid) {
    const Eigen::VectorXd defect =
        traj.derivative(t) - adjoint_rhs(a.coefficients(t), traj.value(t), a.basis());
    worst = std::max(worst, defect.norm());
  }
  return worst;
}

}  // namespace gaugekit

#endif  // GAUGEKIT_ADJOINT_HPP_
