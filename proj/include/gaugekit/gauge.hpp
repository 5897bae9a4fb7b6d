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

#ifndef GAUGEKIT_GAUGE_HPP_
#define GAUGEKIT_GAUGE_HPP_

// Frame changes for n-level quantum systems.
//
// A Hamiltonian path H(t) induces a u(n) connection A(t) = (i/hbar) H(t),
// and the Schrodinger equation becomes the parallel-transport condition
// d/dt psi + A psi = 0.  A unitary path G(t) acts on connections by
//
//   A'(t) = G A G^{-1} + G d/dt(G^{-1}),
//
// and on states by psi'(t) = G(t) psi(t).  If (A, psi) solves the transport
// equation then so does (A', psi'), exactly.  This header provides the domain
// types (HamiltonianPath, Connection, StatePath, SolutionPair), the transform
// operations, and two families of exactly solvable seed systems from which
// new solvable systems are generated by transformation.

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gaugekit/errors.hpp"
#include "gaugekit/lie.hpp"
#include "gaugekit/timefn.hpp"

namespace gaugekit {

// A time-dependent Hermitian matrix t -> H(t), together with hbar.
// Evaluation checks Hermiticity and throws hermiticity_error (reporting the
// offending time and residual) when the backing function drifts off the
// Hermitian manifold by more than `hermiticity_tolerance`.
class HamiltonianPath {
 public:
  HamiltonianPath(int n, std::function<Eigen::MatrixXcd(double)> matrix_fn,
                  double hbar = 1.0, Interval domain = Interval::all(),
                  double hermiticity_tolerance = 1e-12)
      : n_(n),
        fn_(std::move(matrix_fn)),
        hbar_(hbar),
        domain_(domain),
        herm_tol_(hermiticity_tolerance) {
    if (n_ < 1) throw invalid_argument_error("HamiltonianPath: dimension must be at least 1");
    if (!fn_) throw invalid_argument_error("HamiltonianPath: matrix function must be callable");
    if (!(hbar_ > 0.0)) throw invalid_argument_error("HamiltonianPath: hbar must be positive");
    if (domain_.empty()) throw invalid_argument_error("HamiltonianPath: empty domain");
  }

  // A constant Hamiltonian, defined on all of time by default.
  static HamiltonianPath constant(const Eigen::MatrixXcd& h0, double hbar = 1.0,
                                  Interval domain = Interval::all()) {
    if (h0.rows() != h0.cols()) throw dimension_error("HamiltonianPath: matrix must be square");
    const Eigen::MatrixXcd frozen = h0;
    return HamiltonianPath(static_cast<int>(h0.rows()),
                           [frozen](double) { return frozen; }, hbar, domain);
  }

  int dimension() const { return n_; }
  double hbar() const { return hbar_; }
  const Interval& domain() const { return domain_; }
  double hermiticity_tolerance() const { return herm_tol_; }

  Eigen::MatrixXcd value(double t) const {
    if (!domain_.contains(t)) {
      throw invalid_argument_error("HamiltonianPath: time " + detail::fmt_g(t) +
                                   " outside domain");
    }
    Eigen::MatrixXcd h = fn_(t);
    if (h.rows() != n_ || h.cols() != n_) {
      throw dimension_error("HamiltonianPath: backing function returned a " +
                            std::to_string(h.rows()) + "x" + std::to_string(h.cols()) +
                            " matrix, expected " + std::to_string(n_) + "x" +
                            std::to_string(n_));
    }
    const double residual = (h - h.adjoint()).norm();
    if (!(residual < herm_tol_)) {
      throw hermiticity_error("HamiltonianPath: matrix not Hermitian at t = " +
                                  detail::fmt_g(t),
                              residual);
    }
    return h;
  }

 private:
  int n_;
  std::function<Eigen::MatrixXcd(double)> fn_;
  double hbar_;
  Interval domain_;
  double herm_tol_;
};

// A time-dependent skew-Hermitian matrix t -> A(t) (a u(n) connection pulled
// back to the time axis), with a generator basis attached so the coefficient
// view A^i(t) is available.  Evaluation checks skew-Hermiticity.
class Connection {
 public:
  Connection(int n, std::function<Eigen::MatrixXcd(double)> matrix_fn, LieBasis basis,
             Interval domain = Interval::all(), double skew_tolerance = 1e-12)
      : n_(n),
        fn_(std::move(matrix_fn)),
        basis_(std::move(basis)),
        domain_(domain),
        skew_tol_(skew_tolerance) {
    if (n_ < 1) throw invalid_argument_error("Connection: dimension must be at least 1");
    if (!fn_) throw invalid_argument_error("Connection: matrix function must be callable");
    if (basis_.n != n_) {
      throw dimension_error("Connection: basis acts on " + std::to_string(basis_.n) +
                            "-level systems, connection on " + std::to_string(n_));
    }
    if (domain_.empty()) throw invalid_argument_error("Connection: empty domain");
  }

  Connection(int n, std::function<Eigen::MatrixXcd(double)> matrix_fn)
      : Connection(n, std::move(matrix_fn), un_basis(n)) {}

  int dimension() const { return n_; }
  const LieBasis& basis() const { return basis_; }
  const Interval& domain() const { return domain_; }
  double skew_tolerance() const { return skew_tol_; }

  Eigen::MatrixXcd value(double t) const {
    if (!domain_.contains(t)) {
      throw invalid_argument_error("Connection: time " + detail::fmt_g(t) + " outside domain");
    }
    Eigen::MatrixXcd a = fn_(t);
    if (a.rows() != n_ || a.cols() != n_) {
      throw dimension_error("Connection: backing function returned a " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " matrix, expected " + std::to_string(n_) + "x" +
                            std::to_string(n_));
    }
    const double residual = (a + a.adjoint()).norm();
    if (!(residual < skew_tol_)) {
      throw hermiticity_error("Connection: matrix not skew-Hermitian at t = " +
                                  detail::fmt_g(t),
                              residual);
    }
    return a;
  }

  // Coefficients of A(t) in the attached generator basis: A = c^i J_i.
  Eigen::VectorXd coefficients(double t) const {
    return gaugekit::coefficients(value(t), basis_);
  }

 private:
  int n_;
  std::function<Eigen::MatrixXcd(double)> fn_;
  LieBasis basis_;
  Interval domain_;
  double skew_tol_;
};

// A state trajectory t -> psi(t) with an exact derivative callable.  Both
// callables are closed-form compositions (no numerical differentiation), so
// transport residuals computed from them reflect algebra, not step size.
class StatePath {
 public:
  StatePath(int n, std::function<Eigen::VectorXcd(double)> state_fn,
            std::function<Eigen::VectorXcd(double)> derivative_fn, Interval domain)
      : n_(n), fn_(std::move(state_fn)), dfn_(std::move(derivative_fn)), domain_(domain) {
    if (n_ < 1) throw invalid_argument_error("StatePath: dimension must be at least 1");
    if (!fn_ || !dfn_) throw invalid_argument_error("StatePath: callables must be non-null");
    if (domain_.empty()) throw invalid_argument_error("StatePath: empty domain");
  }

  int dimension() const { return n_; }
  const Interval& domain() const { return domain_; }

  Eigen::VectorXcd value(double t) const {
    check_time(t);
    Eigen::VectorXcd v = fn_(t);
    if (v.size() != n_) {
      throw dimension_error("StatePath: backing function returned size " +
                            std::to_string(v.size()) + ", expected " + std::to_string(n_));
    }
    return v;
  }

  Eigen::VectorXcd derivative(double t) const {
    check_time(t);
    Eigen::VectorXcd v = dfn_(t);
    if (v.size() != n_) {
      throw dimension_error("StatePath: derivative function returned size " +
                            std::to_string(v.size()) + ", expected " + std::to_string(n_));
    }
    return v;
  }

  // The state at the left endpoint of the domain.
  Eigen::VectorXcd initial_state() const {
    if (!std::isfinite(domain_.lo)) {
      throw invalid_argument_error("StatePath: initial state needs a finite left endpoint");
    }
    return value(domain_.lo);
  }

 private:
  void check_time(double t) const {
    if (!domain_.contains(t)) {
      throw invalid_argument_error("StatePath: time " + detail::fmt_g(t) + " outside domain [" +
                                   detail::fmt_g(domain_.lo) + ", " + detail::fmt_g(domain_.hi) +
                                   "]");
    }
  }

  int n_;
  std::function<Eigen::VectorXcd(double)> fn_;
  std::function<Eigen::VectorXcd(double)> dfn_;
  Interval domain_;
};

// How a SolutionPair came to be.
enum class PairProvenance { seed, gauge_transformed };

// A connection together with a state that parallel-transports along it:
// d/dt psi + A psi = 0.  `transform` records the unitary path applied by the
// most recent frame change (empty for seeds).
struct SolutionPair {
  Connection connection;
  StatePath state;
  PairProvenance provenance = PairProvenance::seed;
  std::optional<GroupPath> transform = std::nullopt;
};

// ---------------------------------------------------------------------------
// Hamiltonian <-> connection
// ---------------------------------------------------------------------------

// A(t) = (i/hbar) H(t).  Skew-Hermitian whenever H is Hermitian.
inline Connection hamiltonian_to_connection(const HamiltonianPath& h, LieBasis basis) {
  const std::complex<double> scale(0.0, 1.0 / h.hbar());
  auto fn = [h, scale](double t) { return (scale * h.value(t)).eval(); };
  return Connection(h.dimension(), std::move(fn), std::move(basis), h.domain());
}

inline Connection hamiltonian_to_connection(const HamiltonianPath& h) {
  return hamiltonian_to_connection(h, un_basis(h.dimension()));
}

// H(t) = -i hbar A(t); inverse of hamiltonian_to_connection.
inline HamiltonianPath connection_to_hamiltonian(const Connection& a, double hbar = 1.0) {
  const std::complex<double> scale(0.0, -hbar);
  auto fn = [a, scale](double t) { return (scale * a.value(t)).eval(); };
  return HamiltonianPath(a.dimension(), std::move(fn), hbar, a.domain());
}

// ---------------------------------------------------------------------------
// Frame changes
// ---------------------------------------------------------------------------

// psi'(t) = G(t) psi(t), with exact derivative Gdot psi + G psidot.
inline StatePath gauge_transform_state(const StatePath& psi, const GroupPath& g) {
  if (g.dimension() != psi.dimension()) {
    throw dimension_error("gauge_transform_state: path acts on " +
                          std::to_string(g.dimension()) + "-level systems, state has " +
                          std::to_string(psi.dimension()));
  }
  const Interval dom = psi.domain().intersect(g.domain());
  if (dom.empty()) {
    throw invalid_argument_error("gauge_transform_state: state and path domains do not overlap");
  }
  auto fn = [psi, g](double t) { return (g.value(t) * psi.value(t)).eval(); };
  auto dfn = [psi, g](double t) {
    const auto [val, dot] = g.value_and_derivative(t);
    return (dot * psi.value(t) + val * psi.derivative(t)).eval();
  };
  return StatePath(psi.dimension(), std::move(fn), std::move(dfn), dom);
}

// A'(t) = G A G^{-1} + G d/dt(G^{-1}), with d/dt(G^{-1}) = -G^{-1} Gdot G^{-1}
// taken from the same consistent (G, Gdot) evaluation.  For unitary G the
// inverse is the adjoint.
inline Connection gauge_transform_connection(const Connection& a, const GroupPath& g) {
  if (g.dimension() != a.dimension()) {
    throw dimension_error("gauge_transform_connection: path acts on " +
                          std::to_string(g.dimension()) + "-level systems, connection has " +
                          std::to_string(a.dimension()));
  }
  const Interval dom = a.domain().intersect(g.domain());
  if (dom.empty()) {
    throw invalid_argument_error(
        "gauge_transform_connection: connection and path domains do not overlap");
  }
  auto fn = [a, g](double t) {
    const auto [val, dot] = g.value_and_derivative(t);
    const Eigen::MatrixXcd ginv = val.adjoint();
    const Eigen::MatrixXcd dginv = (-(ginv * dot) * ginv).eval();
    return (val * a.value(t) * ginv + val * dginv).eval();
  };
  return Connection(a.dimension(), std::move(fn), a.basis(), dom,
                    /*skew_tolerance=*/1e-11);
}

// H'(t) = G H G^{-1} + (hbar/i) G d/dt(G^{-1}).  Hermitian whenever H is
// Hermitian and G unitary; consistent with the connection route:
// (i/hbar) H' = A'.
inline HamiltonianPath gauge_transform_hamiltonian(const HamiltonianPath& h, const GroupPath& g) {
  if (g.dimension() != h.dimension()) {
    throw dimension_error("gauge_transform_hamiltonian: path acts on " +
                          std::to_string(g.dimension()) + "-level systems, Hamiltonian has " +
                          std::to_string(h.dimension()));
  }
  const Interval dom = h.domain().intersect(g.domain());
  if (dom.empty()) {
    throw invalid_argument_error(
        "gauge_transform_hamiltonian: Hamiltonian and path domains do not overlap");
  }
  const std::complex<double> hbar_over_i(0.0, -h.hbar());
  auto fn = [h, g, hbar_over_i](double t) {
    const auto [val, dot] = g.value_and_derivative(t);
    const Eigen::MatrixXcd ginv = val.adjoint();
    const Eigen::MatrixXcd dginv = (-(ginv * dot) * ginv).eval();
    return (val * h.value(t) * ginv + hbar_over_i * (val * dginv)).eval();
  };
  return HamiltonianPath(h.dimension(), std::move(fn), h.hbar(), dom,
                         /*hermiticity_tolerance=*/1e-11);
}

// Transform connection and state together; the result solves the transport
// equation exactly whenever the input does.
inline SolutionPair gauge_transform_pair(const SolutionPair& pair, const GroupPath& g) {
  Connection a = gauge_transform_connection(pair.connection, g);
  StatePath psi = gauge_transform_state(pair.state, g);
  return SolutionPair{std::move(a), std::move(psi), PairProvenance::gauge_transformed, g};
}

// ---------------------------------------------------------------------------
// Seed solutions
// ---------------------------------------------------------------------------

namespace detail {

inline void check_seed_arguments(Eigen::Index n, Eigen::Index psi_size, const Interval& interval,
                                 double hbar, const char* who) {
  if (psi_size != n) {
    throw dimension_error(std::string(who) + ": initial state has size " +
                          std::to_string(psi_size) + ", expected " + std::to_string(n));
  }
  if (!(hbar > 0.0)) throw invalid_argument_error(std::string(who) + ": hbar must be positive");
  if (!interval.finite() || interval.empty() || !(interval.length() > 0.0)) {
    throw invalid_argument_error(std::string(who) +
                                 ": interval must be finite with positive length");
  }
}

}  // namespace detail

// Exact solution for a constant Hamiltonian: psi(t) = exp(-i H0 (t - t0)/hbar) psi0,
// computed through the eigendecomposition of H0.  The derivative is the exact
// -(i/hbar) H0 psi(t).
inline SolutionPair seed_constant(const Eigen::MatrixXcd& h0, const Eigen::VectorXcd& psi0,
                                  Interval interval, double hbar = 1.0) {
  if (h0.rows() != h0.cols()) throw dimension_error("seed_constant: H0 must be square");
  const int n = static_cast<int>(h0.rows());
  detail::check_seed_arguments(n, psi0.size(), interval, hbar, "seed_constant");
  const double herm_residual = (h0 - h0.adjoint()).norm();
  if (!(herm_residual < 1e-12)) {
    throw hermiticity_error("seed_constant: H0 not Hermitian", herm_residual);
  }
  // Use the symmetrized matrix everywhere so state, derivative, and connection
  // agree to machine precision.
  const Eigen::MatrixXcd h_sym = 0.5 * (h0 + h0.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h_sym);
  if (es.info() != Eigen::Success) {
    throw numerical_error("seed_constant: eigendecomposition failed");
  }
  const Eigen::MatrixXcd v = es.eigenvectors();
  const Eigen::VectorXd evals = es.eigenvalues();
  const Eigen::VectorXcd c = v.adjoint() * psi0;
  const double t0 = interval.lo;

  auto state_fn = [v, evals, c, t0, hbar, n](double t) {
    Eigen::VectorXcd rotated(n);
    for (int k = 0; k < n; ++k) {
      rotated[k] = std::polar(1.0, -evals[k] * (t - t0) / hbar) * c[k];
    }
    return (v * rotated).eval();
  };
  const std::complex<double> minus_i_over_hbar(0.0, -1.0 / hbar);
  auto deriv_fn = [state_fn, h_sym, minus_i_over_hbar](double t) {
    return (minus_i_over_hbar * (h_sym * state_fn(t))).eval();
  };
  const Eigen::MatrixXcd a0 = (std::complex<double>(0.0, 1.0 / hbar) * h_sym).eval();
  Connection a(n, [a0](double) { return a0; }, un_basis(n), interval);
  StatePath psi(n, std::move(state_fn), std::move(deriv_fn), interval);
  return SolutionPair{std::move(a), std::move(psi), PairProvenance::seed, std::nullopt};
}

// Exact solution for a diagonal Hamiltonian H(t) = diag(E_k(t)):
//   psi_k(t) = exp(-(i/hbar) Int_{t0}^{t} E_k ds) psi0_k ,
// with the running integrals evaluated by the TimeFunction antiderivative.
inline SolutionPair seed_diagonal(const std::vector<TimeFunction>& energies,
                                  const Eigen::VectorXcd& psi0, Interval interval,
                                  double hbar = 1.0) {
  const int n = static_cast<int>(energies.size());
  if (n < 1) throw invalid_argument_error("seed_diagonal: need at least one energy level");
  detail::check_seed_arguments(n, psi0.size(), interval, hbar, "seed_diagonal");
  for (int k = 0; k < n; ++k) {
    if (!energies[k].domain().contains(interval.lo) ||
        !energies[k].domain().contains(interval.hi)) {
      throw invalid_argument_error("seed_diagonal: energy level " + std::to_string(k) +
                                   " is not defined on the whole interval");
    }
  }
  const double t0 = interval.lo;
  const std::vector<TimeFunction> e = energies;  // owned copy for the closures
  const Eigen::VectorXcd psi0_copy = psi0;

  auto state_fn = [e, psi0_copy, t0, hbar, n](double t) {
    Eigen::VectorXcd out(n);
    for (int k = 0; k < n; ++k) {
      const double theta = -e[k].antiderivative(t0, t) / hbar;
      out[k] = std::polar(1.0, theta) * psi0_copy[k];
    }
    return out;
  };
  auto deriv_fn = [e, state_fn, hbar, n](double t) {
    const Eigen::VectorXcd psi = state_fn(t);
    Eigen::VectorXcd out(n);
    for (int k = 0; k < n; ++k) {
      out[k] = std::complex<double>(0.0, -e[k](t) / hbar) * psi[k];
    }
    return out;
  };
  auto a_fn = [e, hbar, n](double t) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) a(k, k) = std::complex<double>(0.0, e[k](t) / hbar);
    return a;
  };
  Connection a(n, std::move(a_fn), un_basis(n), interval);
  StatePath psi(n, std::move(state_fn), std::move(deriv_fn), interval);
  return SolutionPair{std::move(a), std::move(psi), PairProvenance::seed, std::nullopt};
}

}  // namespace gaugekit

#endif  // GAUGEKIT_GAUGE_HPP_
