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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gaugekit/errors.hpp"
#include "gaugekit/gauge.hpp"
#include "gaugekit/lie.hpp"
#include "gaugekit/spinhalf.hpp"
#include "gaugekit/timefn.hpp"
#include "gaugekit/verify.hpp"
#include "oracles.hpp"

using gaugekit::FieldPath;
using gaugekit::GroupPath;
using gaugekit::Interval;
using gaugekit::TimeFunction;
using gaugekit::VectorTimeFunction;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

VectorTimeFunction random_field_components(std::mt19937& gen) {
  return VectorTimeFunction{oracles::random_smooth(gen, 0.9), oracles::random_smooth(gen, 0.9),
                            oracles::random_smooth(gen, 0.9)};
}

// alpha(t) = profile(t) * axis, a fixed-direction rotation.
VectorTimeFunction fixed_axis_alpha(const Eigen::Vector3d& axis, const TimeFunction& profile) {
  return VectorTimeFunction{TimeFunction::scaled(axis[0], profile),
                            TimeFunction::scaled(axis[1], profile),
                            TimeFunction::scaled(axis[2], profile)};
}

}  // namespace

TEST_CASE("field along z maps to the diagonal connection", "[spinhalf]") {
  const double mu = 1.7, b0 = 1.1;
  const FieldPath b(VectorTimeFunction{TimeFunction::constant(0.0), TimeFunction::constant(0.0),
                                       TimeFunction::constant(b0)},
                    mu);
  const auto a = gaugekit::field_to_connection(b);
  const Eigen::MatrixXcd m = a.value(0.7);
  CHECK(std::abs(m(0, 0) - cplx(0.0, -0.5 * mu * b0)) < 1e-16);
  CHECK(std::abs(m(1, 1) - cplx(0.0, +0.5 * mu * b0)) < 1e-16);
  CHECK(std::abs(m(0, 1)) == 0.0);
  CHECK(std::abs(m(1, 0)) == 0.0);

  const FieldPath zero(VectorTimeFunction{TimeFunction::constant(0.0),
                                          TimeFunction::constant(0.0),
                                          TimeFunction::constant(0.0)},
                       mu);
  CHECK(gaugekit::field_to_connection(zero).value(1.0).norm() == 0.0);
}

TEST_CASE("field-to-connection round-trips through basis coefficients", "[spinhalf]") {
  std::mt19937 gen(137);
  for (int rep = 0; rep < 5; ++rep) {
    const double mu = oracles::uniform(gen, 0.5, 2.5);
    const FieldPath b(random_field_components(gen), mu);
    const auto a = gaugekit::field_to_connection(b);
    for (double t : {0.0, 0.9, 2.4}) {
      const Eigen::Vector3d bv = b.value(t);
      const Eigen::VectorXd c = a.coefficients(t);
      for (int i = 0; i < 3; ++i) CHECK(std::abs(c[i] - mu * bv[i]) < 1e-14);
      // Entry-level check of the matrix form.
      const Eigen::MatrixXcd m = a.value(t);
      CHECK(std::abs(m(0, 1) - cplx(-0.5 * mu * bv[1], -0.5 * mu * bv[0])) < 1e-15);
      CHECK(std::abs(m(1, 0) - cplx(+0.5 * mu * bv[1], -0.5 * mu * bv[0])) < 1e-15);
    }
  }
}

TEST_CASE("zero rotation leaves the field unchanged", "[spinhalf]") {
  std::mt19937 gen(139);
  const FieldPath b(random_field_components(gen), 1.3);
  const VectorTimeFunction alpha{TimeFunction::constant(0.0), TimeFunction::constant(0.0),
                                 TimeFunction::constant(0.0)};
  const auto bp = gaugekit::b_prime_closed_form(b, alpha, -1);
  for (double t : {0.0, 1.1, 3.7}) {
    CHECK((bp.value(t) - b.value(t)).norm() < 1e-15);
  }
}

TEST_CASE("rotating frame of a constant z-field: closed form", "[spinhalf]") {
  const double mu = 1.0, b0 = 1.0, omega = 0.3;
  const FieldPath b(VectorTimeFunction{TimeFunction::constant(0.0), TimeFunction::constant(0.0),
                                       TimeFunction::constant(b0)},
                    mu);
  const VectorTimeFunction alpha{TimeFunction::polynomial({0.0, omega}),
                                 TimeFunction::constant(0.0), TimeFunction::constant(0.0)};
  for (int sign : {+1, -1}) {
    const auto bp = gaugekit::b_prime_closed_form(b, alpha, sign);
    for (double t : {0.0, 2.2, 7.9, 21.0}) {
      const Eigen::Vector3d v = bp.value(t);
      CHECK(std::abs(v[0] - sign * omega / mu) < 1e-14);
      CHECK(std::abs(v[1] - (-b0 * std::sin(omega * t))) < 1e-14);
      CHECK(std::abs(v[2] - b0 * std::cos(omega * t)) < 1e-14);
    }
  }
}

TEST_CASE("closed form agrees with the matrix route for fixed axes", "[spinhalf]") {
  const int sign = gaugekit::resolve_sign_convention();
  REQUIRE(sign == -1);
  std::mt19937 gen(149);
  const auto grid = gaugekit::linspace(0.0, 5.0, 50);
  for (int rep = 0; rep < 3; ++rep) {
    Eigen::Vector3d axis;
    for (int i = 0; i < 3; ++i) axis[i] = oracles::uniform(gen, -1.0, 1.0);
    axis.normalize();
    const auto profile = oracles::random_smooth(gen, 1.2);
    const VectorTimeFunction alpha = fixed_axis_alpha(axis, profile);
    const double mu = oracles::uniform(gen, 0.6, 2.0);
    const FieldPath b(random_field_components(gen), mu);

    const auto bp = gaugekit::b_prime_closed_form(b, alpha, sign);
    const auto g = GroupPath::axis_angle(alpha, +1, gaugekit::su2_basis());
    const auto ap = gaugekit::gauge_transform_connection(gaugekit::field_to_connection(b), g);

    double worst = 0.0;
    for (double t : grid) {
      const Eigen::Vector3d via_matrix = Eigen::Vector3d(ap.coefficients(t)) / mu;
      worst = std::max(worst, (bp.value(t) - via_matrix).norm());
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("the small-angle guard matches the matrix route", "[spinhalf]") {
  const int sign = gaugekit::resolve_sign_convention();
  std::mt19937 gen(151);
  Eigen::Vector3d axis(0.6, -0.64, 0.48);
  axis.normalize();
  // alpha = 0.01 t * axis: |alpha| crosses the 1e-8 guard threshold near t = 1e-6.
  const VectorTimeFunction alpha = fixed_axis_alpha(axis, TimeFunction::polynomial({0.0, 0.01}));
  const FieldPath b(random_field_components(gen), 1.0);
  const auto bp = gaugekit::b_prime_closed_form(b, alpha, sign);
  const auto g = GroupPath::axis_angle(alpha, +1, gaugekit::su2_basis());
  const auto ap = gaugekit::gauge_transform_connection(gaugekit::field_to_connection(b), g);
  for (double t : {1e-10, 1e-7, 1e-5, 1e-3}) {
    const Eigen::Vector3d via_matrix = Eigen::Vector3d(ap.coefficients(t));
    CHECK((bp.value(t) - via_matrix).norm() < 1e-10);
  }
  // Exactly zero angle with a nonzero angular velocity is well-defined.
  const Eigen::Vector3d at_zero = bp.value(0.0);
  const Eigen::Vector3d expected = b.value(0.0) + sign * 0.01 * axis;
  CHECK((at_zero - expected).norm() < 1e-14);
}

TEST_CASE("a direction-changing rotation is rejected with guidance", "[spinhalf]") {
  std::mt19937 gen(157);
  const FieldPath b(random_field_components(gen), 1.0);
  const VectorTimeFunction alpha{TimeFunction::sinusoid(1.0, 1.0, kPi / 2),  // cos t
                                 TimeFunction::sinusoid(1.0, 1.0, 0.0),      // sin t
                                 TimeFunction::constant(0.0)};
  const auto bp = gaugekit::b_prime_closed_form(b, alpha, -1);
  try {
    bp.value(0.4);
    FAIL("expected unsupported_error");
  } catch (const gaugekit::unsupported_error& e) {
    CHECK(std::string(e.what()).find("gauge_transform_connection") != std::string::npos);
  }
}

TEST_CASE("the rotation part of the transformed field preserves length", "[spinhalf]") {
  std::mt19937 gen(163);
  for (int sign : {+1, -1}) {
    Eigen::Vector3d axis;
    for (int i = 0; i < 3; ++i) axis[i] = oracles::uniform(gen, -1.0, 1.0);
    axis.normalize();
    const VectorTimeFunction alpha = fixed_axis_alpha(axis, oracles::random_smooth(gen, 1.5));
    const VectorTimeFunction alpha_dot = alpha.derivative();
    const double mu = 1.4;
    const FieldPath b(random_field_components(gen), mu);
    const auto bp = gaugekit::b_prime_closed_form(b, alpha, sign);
    for (double t : gaugekit::linspace(0.0, 5.0, 50)) {
      const Eigen::Vector3d without_drive =
          bp.value(t) - (static_cast<double>(sign) / mu) * Eigen::Vector3d(alpha_dot.value(t));
      CHECK(std::abs(without_drive.norm() - b.value(t).norm()) < 1e-11);
    }
  }
}

TEST_CASE("Bloch vectors of reference states", "[spinhalf]") {
  Eigen::Vector2cd up;
  up << 1.0, 0.0;
  const Eigen::Vector3d n_up = gaugekit::bloch_vector(up).n;
  CHECK(n_up[0] == 0.0);
  CHECK(n_up[1] == 0.0);
  CHECK(n_up[2] == 1.0);

  Eigen::Vector2cd plus;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Eigen::Vector3d n_plus = gaugekit::bloch_vector(plus).n;
  CHECK(std::abs(n_plus[0] - 1.0) < 1e-15);
  CHECK(std::abs(n_plus[1]) < 1e-15);
  CHECK(std::abs(n_plus[2]) < 1e-15);

  std::mt19937 gen(167);
  for (int rep = 0; rep < 10; ++rep) {
    const Eigen::VectorXcd psi = oracles::random_state(gen, 2);
    const Eigen::Vector3d n = gaugekit::bloch_vector(psi).n;
    CHECK(std::abs(n.norm() - psi.squaredNorm()) < 1e-13);
  }

  Eigen::Vector3cd wrong;
  wrong << 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(gaugekit::bloch_vector(wrong), gaugekit::dimension_error);
}

TEST_CASE("worked example: initial time is the identity", "[spinhalf]") {
  const cplx psi10(0.3, 0.5), psi20(-0.7, 0.2);
  const auto pair = gaugekit::example_constant_to_rotating(1.0, 0.3, psi10, psi20, 1.0, -1);
  const Eigen::VectorXcd at0 = pair.state.value(0.0);
  CHECK(std::abs(at0[0] - psi10) < 1e-15);
  CHECK(std::abs(at0[1] - psi20) < 1e-15);
  CHECK(pair.provenance == gaugekit::PairProvenance::gauge_transformed);
  CHECK(pair.transform.has_value());
}

TEST_CASE("worked example: half-turn sends spin-up to the rotated phase", "[spinhalf]") {
  const double b0 = 1.0, omega = 0.3, mu = 1.0;
  const auto pair = gaugekit::example_constant_to_rotating(b0, omega, 1.0, 0.0, mu, -1);
  const double t = kPi / omega;  // alpha = pi: cos(pi/2) = 0, sin(pi/2) = 1
  const Eigen::VectorXcd psi = pair.state.value(t);
  CHECK(std::abs(psi[0]) < 1e-13);
  const cplx expected2 = -cplx(0.0, 1.0) * std::polar(1.0, +0.5 * mu * b0 * t);
  CHECK(std::abs(psi[1] - expected2) < 1e-13);
}

TEST_CASE("worked example: state matches the closed form everywhere", "[spinhalf]") {
  const double b0 = 1.0, omega = 0.3, mu = 1.0;
  const cplx psi10 = cplx(1.0, 0.0) / std::sqrt(2.0);
  const cplx psi20 = cplx(0.0, 1.0) / std::sqrt(2.0);
  const auto pair = gaugekit::example_constant_to_rotating(b0, omega, psi10, psi20, mu, -1);
  double worst = 0.0;
  for (double t : gaugekit::linspace(0.0, 20.0 / omega, 100)) {
    const double half = 0.5 * omega * t;
    const cplx up = std::polar(1.0, +0.5 * mu * b0 * t) * psi10;
    const cplx dn = std::polar(1.0, -0.5 * mu * b0 * t) * psi20;
    const cplx e1 = std::cos(half) * up - cplx(0.0, 1.0) * std::sin(half) * dn;
    const cplx e2 = -cplx(0.0, 1.0) * std::sin(half) * up + std::cos(half) * dn;
    const Eigen::VectorXcd psi = pair.state.value(t);
    worst = std::max({worst, std::abs(psi[0] - e1), std::abs(psi[1] - e2)});
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("worked example certifies under the resolved sign and fails under the other",
          "[spinhalf]") {
  const int sign = gaugekit::resolve_sign_convention();
  const cplx psi10 = cplx(1.0, 0.0) / std::sqrt(2.0);
  const cplx psi20 = cplx(0.0, 1.0) / std::sqrt(2.0);

  const auto good = gaugekit::example_constant_to_rotating(1.0, 0.3, psi10, psi20, 1.0, sign);
  const Interval window{0.0, 20.0 / 0.3};
  const auto good_report = gaugekit::certify(good, window);
  INFO(good_report.diagnostic);
  CHECK(good_report.pass);
  CHECK(good_report.max_schrodinger_residual < 1e-9);

  const auto bad = gaugekit::example_constant_to_rotating(1.0, 0.3, psi10, psi20, 1.0, -sign);
  const auto bad_report = gaugekit::certify(bad, window);
  CHECK_FALSE(bad_report.pass);
  CHECK(bad_report.max_schrodinger_residual > 1e-3);
}

TEST_CASE("Bloch norm is conserved along the worked example", "[spinhalf]") {
  const auto pair = gaugekit::example_constant_to_rotating(
      1.0, 0.3, cplx(0.6, 0.0), cplx(0.0, 0.8), 1.0, -1);
  const double n0 = gaugekit::bloch_vector(pair.state.value(0.0)).n.norm();
  double drift = 0.0;
  for (double t : gaugekit::linspace(0.0, 20.0 / 0.3, 200)) {
    drift = std::max(drift,
                     std::abs(gaugekit::bloch_vector(pair.state.value(t)).n.norm() - n0));
  }
  CHECK(drift < 1e-10);
}

TEST_CASE("spin-half constructors validate their inputs", "[spinhalf]") {
  std::mt19937 gen(173);
  CHECK_THROWS_AS(FieldPath(random_field_components(gen), 0.0), gaugekit::invalid_argument_error);
  CHECK_THROWS_AS(FieldPath(VectorTimeFunction{TimeFunction::constant(0.0),
                                               TimeFunction::constant(0.0)},
                            1.0),
                  gaugekit::dimension_error);
  const FieldPath b(random_field_components(gen), 1.0);
  const VectorTimeFunction alpha{TimeFunction::constant(0.0), TimeFunction::constant(0.0),
                                 TimeFunction::constant(0.0)};
  CHECK_THROWS_AS(gaugekit::b_prime_closed_form(b, alpha, 0), gaugekit::invalid_argument_error);
  CHECK_THROWS_AS(gaugekit::example_constant_to_rotating(1.0, 0.3, 1.0, 0.0, 1.0, 2),
                  gaugekit::invalid_argument_error);
  CHECK_THROWS_AS(gaugekit::example_constant_to_rotating(1.0, 0.3, 1.0, 0.0, -1.0, 1),
                  gaugekit::invalid_argument_error);
}
