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

#ifndef GAUGEKIT_SPINHALF_HPP_
#define GAUGEKIT_SPINHALF_HPP_

// Spin-1/2 specialization: magnetic-field language for two-level systems.
//
// A field B(t) with coupling mu induces the connection A = mu B^i J_i.  For a
// frame rotation about a fixed axis, the transformed field has a closed form
// (a rotation of B plus a derivative term whose sign convention is resolved
// empirically by the verify module).  Bloch vectors give the real picture of
// a spinor, and the constant-to-rotating worked example wires everything
// together into one exactly solvable pair.

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "gaugekit/errors.hpp"
#include "gaugekit/gauge.hpp"
#include "gaugekit/lie.hpp"
#include "gaugekit/timefn.hpp"

namespace gaugekit {

// A 3-component magnetic field with the coupling mu that converts field units
// into angular frequency.  Construct either from an analytic
// VectorTimeFunction or from a plain evaluation function (used for derived
// fields that have no closed algebraic node form).
class FieldPath {
 public:
  FieldPath(VectorTimeFunction b, double mu)
      : fn_([b](double t) -> Eigen::Vector3d { return b.value(t); }),
        mu_(mu),
        domain_(b.domain()),
        analytic_(std::move(b)) {
    validate();
    if (analytic_->dimension() != 3) {
      throw dimension_error("FieldPath: field must have exactly 3 components, got " +
                            std::to_string(analytic_->dimension()));
    }
  }

  FieldPath(std::function<Eigen::Vector3d(double)> fn, double mu, Interval domain)
      : fn_(std::move(fn)), mu_(mu), domain_(domain), analytic_(std::nullopt) {
    if (!fn_) throw invalid_argument_error("FieldPath: evaluation function must be callable");
    validate();
  }

  double mu() const { return mu_; }
  const Interval& domain() const { return domain_; }

  // The analytic backing, when this field was built from one.
  const std::optional<VectorTimeFunction>& analytic() const { return analytic_; }

  Eigen::Vector3d value(double t) const {
    if (!domain_.contains(t)) {
      throw invalid_argument_error("FieldPath: time " + detail::fmt_g(t) + " outside domain");
    }
    return fn_(t);
  }

 private:
  void validate() const {
    if (!(mu_ > 0.0)) throw invalid_argument_error("FieldPath: mu must be positive");
    if (domain_.empty()) throw invalid_argument_error("FieldPath: empty domain");
  }

  std::function<Eigen::Vector3d(double)> fn_;
  double mu_;
  Interval domain_;
  std::optional<VectorTimeFunction> analytic_;
};

// The real 3-vector picture of a spinor: n^i = psi^dag sigma^i psi.
struct BlochVector {
  Eigen::Vector3d n;
};

// A(t) = mu B^i(t) J_i.  In matrix form,
//   A = (-mu/2) [ i B^3        i B^1 + B^2 ]
//               [ i B^1 - B^2  -i B^3      ].
inline Connection field_to_connection(const FieldPath& fp) {
  const double mu = fp.mu();
  auto fn = [fp, mu](double t) {
    const Eigen::Vector3d b = fp.value(t);
    Eigen::MatrixXcd a(2, 2);
    a(0, 0) = std::complex<double>(0.0, -0.5 * mu * b[2]);
    a(0, 1) = std::complex<double>(-0.5 * mu * b[1], -0.5 * mu * b[0]);
    a(1, 0) = std::complex<double>(0.5 * mu * b[1], -0.5 * mu * b[0]);
    a(1, 1) = std::complex<double>(0.0, 0.5 * mu * b[2]);
    return a;
  };
  return Connection(2, std::move(fn), su2_basis(), fp.domain());
}

// Closed-form transformed field for a frame rotation about a fixed axis:
//
//   B' = B cos a - (B x ahat) sin a + 2 ahat (B . ahat) sin^2(a/2)
//        + sign * (1/mu) d(alpha)/dt ,         a = |alpha(t)| .
//
// The first three terms rotate B by -a about ahat (length-preserving); the
// last term is the frame's own angular velocity, whose sign convention is the
// one resolved by verify::resolve_sign_convention().  Near a = 0 the
// 0/0 factors are replaced by their series expansions.  The formula is exact
// only when alpha(t) keeps a fixed direction, so evaluation rejects
// time-varying axes and points at the matrix route instead.
inline FieldPath b_prime_closed_form(const FieldPath& fp, const VectorTimeFunction& alpha,
                                     int sign) {
  if (sign != 1 && sign != -1) {
    throw invalid_argument_error("b_prime_closed_form: sign must be +1 or -1");
  }
  if (alpha.dimension() != 3) {
    throw dimension_error("b_prime_closed_form: alpha must have exactly 3 components, got " +
                          std::to_string(alpha.dimension()));
  }
  const VectorTimeFunction alpha_dot = alpha.derivative();
  const Interval dom = fp.domain().intersect(alpha.domain());
  if (dom.empty()) {
    throw invalid_argument_error("b_prime_closed_form: field and alpha domains do not overlap");
  }
  const double mu = fp.mu();
  const double s = static_cast<double>(sign);

  auto fn = [fp, alpha, alpha_dot, mu, s](double t) -> Eigen::Vector3d {
    const Eigen::Vector3d b = fp.value(t);
    const Eigen::Vector3d av = alpha.value(t);
    const Eigen::Vector3d ad = alpha_dot.value(t);

    // The closed form assumes a fixed rotation axis, i.e. alpha x alpha_dot = 0.
    const double scale = av.norm() * ad.norm();
    if (scale > 0.0 && av.cross(ad).norm() > 1e-9 * scale) {
      throw unsupported_error(
          "b_prime_closed_form: alpha(t) changes direction at t = " + detail::fmt_g(t) +
          " (|alpha x alpha_dot| = " + detail::fmt_g(av.cross(ad).norm()) +
          "); the closed form only holds for a fixed axis -- transform the "
          "connection with gauge_transform_connection instead");
    }

    const double a = av.norm();
    Eigen::Vector3d rotated;
    if (a >= 1e-8) {
      const Eigen::Vector3d ahat = av / a;
      const double sh = std::sin(0.5 * a);
      rotated = b * std::cos(a) - b.cross(ahat) * std::sin(a) +
                2.0 * ahat * (b.dot(ahat)) * sh * sh;
    } else {
      // Series guards for the 0/0 factors: sin(a)/a and 2 sin^2(a/2)/a^2.
      const double sinc = 1.0 - a * a / 6.0;
      const double half_sq = 0.5 - a * a / 24.0;
      rotated = b * std::cos(a) - b.cross(av) * sinc + av * (b.dot(av)) * half_sq;
    }
    return rotated + (s / mu) * ad;
  };
  return FieldPath(std::move(fn), mu, dom);
}

// n^i = psi^dag sigma^i psi.  |n| equals ||psi||^2.
inline BlochVector bloch_vector(const Eigen::VectorXcd& psi) {
  if (psi.size() != 2) {
    throw dimension_error("bloch_vector: state must have exactly 2 components, got " +
                          std::to_string(psi.size()));
  }
  const std::complex<double> cross = std::conj(psi[0]) * psi[1];
  BlochVector out;
  out.n[0] = 2.0 * cross.real();
  out.n[1] = 2.0 * cross.imag();
  out.n[2] = std::norm(psi[0]) - std::norm(psi[1]);
  return out;
}

// The constant-to-rotating worked example.  Seed: constant field B0 along z
// with state components rotating at +/- mu B0 / 2; frame: rotation about x
// with angle omega t; result: the rotating-field pair whose connection is
// built from the closed-form transformed field under the given sign
// convention.  With the consistent sign the pair certifies; with the other
// sign the connection and state disagree by a residual of order |omega|.
inline SolutionPair example_constant_to_rotating(double b0, double omega,
                                                 std::complex<double> psi10,
                                                 std::complex<double> psi20, double mu,
                                                 int sign) {
  if (sign != 1 && sign != -1) {
    throw invalid_argument_error("example_constant_to_rotating: sign must be +1 or -1");
  }
  if (!(mu > 0.0)) {
    throw invalid_argument_error("example_constant_to_rotating: mu must be positive");
  }
  const Interval interval{0.0, omega != 0.0 ? 20.0 / std::abs(omega) : 10.0};

  // Seed: H0 = -(mu B0 / 2) sigma_3 (hbar = 1), solved exactly.
  Eigen::Matrix2cd h0 = Eigen::Matrix2cd::Zero();
  h0(0, 0) = -0.5 * mu * b0;
  h0(1, 1) = 0.5 * mu * b0;
  Eigen::Vector2cd psi0;
  psi0 << psi10, psi20;
  const SolutionPair seed = seed_constant(h0, psi0, interval);

  // Frame rotation about x: alpha(t) = omega t (1, 0, 0).
  const VectorTimeFunction alpha{TimeFunction::polynomial({0.0, omega}),
                                 TimeFunction::constant(0.0), TimeFunction::constant(0.0)};
  const GroupPath g = GroupPath::axis_angle(alpha, +1, su2_basis());

  const FieldPath b(VectorTimeFunction{TimeFunction::constant(0.0), TimeFunction::constant(0.0),
                                       TimeFunction::constant(b0)},
                    mu);
  const FieldPath b_prime = b_prime_closed_form(b, alpha, sign);

  Connection a_prime = field_to_connection(b_prime);
  // Restrict to the certification window.
  Connection a_windowed(2,
                        [a_prime](double t) { return a_prime.value(t); }, a_prime.basis(),
                        interval);
  StatePath psi_prime = gauge_transform_state(seed.state, g);
  return SolutionPair{std::move(a_windowed), std::move(psi_prime),
                      PairProvenance::gauge_transformed, g};
}

}  // namespace gaugekit

#endif  // GAUGEKIT_SPINHALF_HPP_
