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

#ifndef GAUGEKIT_LIE_HPP_
#define GAUGEKIT_LIE_HPP_

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "gaugekit/errors.hpp"
#include "gaugekit/timefn.hpp"

namespace gaugekit {

// Generator basis of u(n) (or of su(2)): skew-Hermitian matrices J_i with
// [J_i, J_j] = f_{ij}^k J_k, normalized so that the pairing -2 tr(J_i J_j)
// is the identity Gram matrix. Coefficient extraction is then a diagonal
// solve.
struct LieBasis {
  int n = 0;                                // fundamental representation size
  std::vector<Eigen::MatrixXcd> generators;
  std::vector<double> structure_constants;  // flat (i*dim + j)*dim + k
  Eigen::MatrixXd inner_product_gram;
  int central_index = -1;                   // -1 when the basis has no center

  int dim() const { return static_cast<int>(generators.size()); }

  double structure_constant(int i, int j, int k) const {
    const int m = dim();
    return structure_constants[static_cast<std::size_t>((i * m + j) * m + k)];
  }

  // Adjoint-representation matrix of J_j: (R_j)_{ik} = f_{jk}^i, so that
  // [R_i, R_j] = f_{ij}^k R_k like the fundamental generators.
  Eigen::MatrixXd adjoint_rep(int j) const {
    const int m = dim();
    Eigen::MatrixXd r(m, m);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) r(i, k) = structure_constant(j, k, i);
    return r;
  }
};

namespace detail {

inline void set_f(LieBasis& basis, int i, int j, int k, double value) {
  const int m = basis.dim();
  basis.structure_constants[static_cast<std::size_t>((i * m + j) * m + k)] = value;
}

inline Eigen::MatrixXd compute_gram(const std::vector<Eigen::MatrixXcd>& gens) {
  const int m = static_cast<int>(gens.size());
  Eigen::MatrixXd gram(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gram(i, j) = -2.0 * (gens[static_cast<std::size_t>(i)] *
                                                     gens[static_cast<std::size_t>(j)])
                                                        .trace()
                                                        .real();
  return gram;
}

}  // namespace detail

// The three su(2) generators J_i = -(i/2) sigma_i with exact Levi-Civita
// structure constants.
inline LieBasis su2_basis() {
  using cplx = std::complex<double>;
  LieBasis basis;
  basis.n = 2;
  basis.generators.resize(3, Eigen::MatrixXcd::Zero(2, 2));
  basis.generators[0] << cplx(0, 0), cplx(0, -0.5), cplx(0, -0.5), cplx(0, 0);
  basis.generators[1] << cplx(0, 0), cplx(-0.5, 0), cplx(0.5, 0), cplx(0, 0);
  basis.generators[2] << cplx(0, -0.5), cplx(0, 0), cplx(0, 0), cplx(0, 0.5);
  basis.structure_constants.assign(27, 0.0);
  detail::set_f(basis, 0, 1, 2, 1.0);
  detail::set_f(basis, 1, 2, 0, 1.0);
  detail::set_f(basis, 2, 0, 1, 1.0);
  detail::set_f(basis, 1, 0, 2, -1.0);
  detail::set_f(basis, 2, 1, 0, -1.0);
  detail::set_f(basis, 0, 2, 1, -1.0);
  basis.inner_product_gram = detail::compute_gram(basis.generators);
  basis.central_index = -1;
  return basis;
}

// The n^2 generators of u(n): generalized Gell-Mann matrices scaled by
// -(i/2), plus the central element -(i/sqrt(2n)) I appended last. Structure
// constants are obtained by projecting pairwise commutators onto the basis;
// antisymmetry is filled in exactly, and entries involving the central
// element are exactly zero (commutators are traceless).
inline LieBasis un_basis(int n) {
  if (n < 1) throw invalid_argument_error("un_basis: n must be >= 1");
  using cplx = std::complex<double>;
  const cplx minus_i_half(0.0, -0.5);

  LieBasis basis;
  basis.n = n;
  // Hermitian Gell-Mann matrices in the conventional order: for each level
  // l+1 the symmetric/antisymmetric off-diagonal pairs, then the diagonal one.
  for (int l = 1; l < n; ++l) {
    for (int j = 0; j < l; ++j) {
      Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(n, n);
      sym(j, l) = cplx(1, 0);
      sym(l, j) = cplx(1, 0);
      basis.generators.push_back(minus_i_half * sym);
      Eigen::MatrixXcd asym = Eigen::MatrixXcd::Zero(n, n);
      asym(j, l) = cplx(0, -1);
      asym(l, j) = cplx(0, 1);
      basis.generators.push_back(minus_i_half * asym);
    }
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(n, n);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int m = 0; m < l; ++m) diag(m, m) = cplx(scale, 0);
    diag(l, l) = cplx(-scale * l, 0);
    basis.generators.push_back(minus_i_half * diag);
  }
  basis.generators.push_back(cplx(0.0, -1.0 / std::sqrt(2.0 * n)) *
                             Eigen::MatrixXcd::Identity(n, n));
  basis.central_index = basis.dim() - 1;

  basis.inner_product_gram = detail::compute_gram(basis.generators);

  const int m = basis.dim();
  basis.structure_constants.assign(static_cast<std::size_t>(m) * m * m, 0.0);
  for (int i = 0; i < m; ++i) {
    if (i == basis.central_index) continue;
    const auto& ji = basis.generators[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      if (j == basis.central_index) continue;
      const auto& jj = basis.generators[static_cast<std::size_t>(j)];
      const Eigen::MatrixXcd comm = ji * jj - jj * ji;
      for (int k = 0; k < m; ++k) {
        if (k == basis.central_index) continue;
        const double val =
            -2.0 * (basis.generators[static_cast<std::size_t>(k)] * comm).trace().real() /
            basis.inner_product_gram(k, k);
        detail::set_f(basis, i, j, k, val);
        detail::set_f(basis, j, i, k, -val);
      }
    }
  }
  return basis;
}

// Extracts real coordinates c with X = c^i J_i from a skew-Hermitian matrix.
inline Eigen::VectorXd coefficients(const Eigen::MatrixXcd& x, const LieBasis& basis) {
  if (x.rows() != basis.n || x.cols() != basis.n) {
    throw dimension_error("coefficients: matrix is " + std::to_string(x.rows()) + "x" +
                          std::to_string(x.cols()) + ", basis acts on n = " +
                          std::to_string(basis.n));
  }
  const double herm = (x + x.adjoint()).norm();
  if (!(herm < 1e-10)) {
    throw hermiticity_error(
        "coefficients: input is not skew-Hermitian, ||X + X^H||_F = " + detail::fmt_g(herm),
        herm);
  }
  const int m = basis.dim();
  Eigen::VectorXd c(m);
  for (int i = 0; i < m; ++i) {
    c[i] = -2.0 * (basis.generators[static_cast<std::size_t>(i)] * x).trace().real() /
           basis.inner_product_gram(i, i);
  }
  return c;
}

// Assembles c^i J_i back into a matrix (inverse of `coefficients`).
inline Eigen::MatrixXcd from_coefficients(const Eigen::VectorXd& c, const LieBasis& basis) {
  if (c.size() != basis.dim()) {
    throw dimension_error("from_coefficients: got " + std::to_string(c.size()) +
                          " coordinates for a basis of dimension " + std::to_string(basis.dim()));
  }
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(basis.n, basis.n);
  for (int i = 0; i < basis.dim(); ++i) x += c[i] * basis.generators[static_cast<std::size_t>(i)];
  return x;
}

// Closed-form exponential of sign * alpha^i J_i for su(2):
// cos(a/2) I + sign * (-i unit(alpha).sigma) sin(a/2), a = |alpha|. The a = 0
// singularity of the unit vector is removable and handled explicitly.
inline Eigen::Matrix2cd exp_su2(const Eigen::Vector3d& alpha, int sign = +1) {
  if (sign != 1 && sign != -1) throw invalid_argument_error("exp_su2: sign must be +1 or -1");
  using cplx = std::complex<double>;
  const double a = alpha.norm();
  Eigen::Matrix2cd g = std::cos(a / 2.0) * Eigen::Matrix2cd::Identity();
  if (a > 0.0) {
    Eigen::Matrix2cd pauli_dot;  // alpha . sigma
    pauli_dot << cplx(alpha[2], 0), cplx(alpha[0], -alpha[1]), cplx(alpha[0], alpha[1]),
        cplx(-alpha[2], 0);
    g += cplx(0.0, -static_cast<double>(sign) * std::sin(a / 2.0) / a) * pauli_dot;
  }
  return g;
}

// General exponential of a skew-Hermitian matrix via the Hermitian
// eigendecomposition of iX: e^X = V e^{-i Lambda} V^H, unitary by
// construction.
inline Eigen::MatrixXcd exp_unitary(const Eigen::MatrixXcd& x) {
  if (x.rows() != x.cols()) throw dimension_error("exp_unitary: matrix must be square");
  const double herm = (x + x.adjoint()).norm();
  if (!(herm < 1e-10)) {
    throw hermiticity_error(
        "exp_unitary: input is not skew-Hermitian, ||X + X^H||_F = " + detail::fmt_g(herm), herm);
  }
  const std::complex<double> i_unit(0.0, 1.0);
  const Eigen::MatrixXcd h = i_unit * x;  // Hermitian up to the checked residual
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success) {
    throw numerical_error("exp_unitary: eigendecomposition did not converge");
  }
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases[k] = std::polar(1.0, -es.eigenvalues()[k]);
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace detail {

// exp([[X, Xdot], [0, X]]) = [[e^X, D], [0, e^X]] where D is the derivative
// of the exponential along Xdot. One Pade evaluation yields a consistent
// (G, dG/dt) pair with no truncation parameter.
inline std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> expm_with_tangent(
    const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& xdot) {
  const Eigen::Index n = x.rows();
  Eigen::MatrixXcd blk = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  blk.topLeftCorner(n, n) = x;
  blk.topRightCorner(n, n) = xdot;
  blk.bottomRightCorner(n, n) = x;
  const Eigen::MatrixXcd e = blk.exp();
  return {e.topLeftCorner(n, n), e.topRightCorner(n, n)};
}

}  // namespace detail

// A differentiable path of unitary matrices G(t): either the exponential of
// coordinates along a generator basis, G(t) = exp(sign * alpha^i(t) J_i), or
// an arbitrary matrix path supplied with its own derivative.
class GroupPath {
 public:
  static GroupPath axis_angle(VectorTimeFunction alpha, int sign, LieBasis basis) {
    if (sign != 1 && sign != -1)
      throw invalid_argument_error("group path: sign must be +1 or -1");
    if (alpha.dimension() != basis.dim()) {
      throw dimension_error("group path: " + std::to_string(alpha.dimension()) +
                            " coordinates for a basis of dimension " +
                            std::to_string(basis.dim()));
    }
    VectorTimeFunction alpha_dot = alpha.derivative();
    return GroupPath(AxisAngleData{std::move(alpha), std::move(alpha_dot), sign,
                                   std::move(basis)});
  }

  static GroupPath matrix_path(std::function<Eigen::MatrixXcd(double)> value,
                               std::function<Eigen::MatrixXcd(double)> derivative, int n,
                               Interval domain = Interval::all()) {
    if (n < 1) throw invalid_argument_error("group path: n must be >= 1");
    return GroupPath(MatrixPathData{std::move(value), std::move(derivative), n, domain});
  }

  // Time-independent gauge: constant unitary matrix, zero derivative.
  static GroupPath constant(const Eigen::MatrixXcd& g) {
    if (g.rows() != g.cols()) throw dimension_error("group path: matrix must be square");
    const double unit_residual =
        (g.adjoint() * g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).norm();
    if (!(unit_residual < 1e-10)) {
      throw invalid_argument_error("group path: constant matrix is not unitary, ||G^H G - I|| = " +
                                   detail::fmt_g(unit_residual));
    }
    const int n = static_cast<int>(g.rows());
    const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(n, n);
    return matrix_path([g](double) { return g; }, [zero](double) { return zero; }, n);
  }

  Eigen::MatrixXcd value(double t) const {
    if (const auto* aa = std::get_if<AxisAngleData>(&v_)) {
      return exp_unitary(generator_combination(*aa, aa->alpha, t));
    }
    return std::get<MatrixPathData>(v_).value(t);
  }

  // Consistent pair (G(t), dG/dt(t)); for coordinate paths both blocks come
  // from one augmented exponential.
  std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> value_and_derivative(double t) const {
    if (const auto* aa = std::get_if<AxisAngleData>(&v_)) {
      const Eigen::MatrixXcd x = generator_combination(*aa, aa->alpha, t);
      const Eigen::MatrixXcd xdot = generator_combination(*aa, aa->alpha_dot, t);
      return detail::expm_with_tangent(x, xdot);
    }
    const auto& mp = std::get<MatrixPathData>(v_);
    return {mp.value(t), mp.derivative(t)};
  }

  // The pointwise inverse path t -> G(t)^{-1} = G(t)^H.
  GroupPath inverse() const {
    if (const auto* aa = std::get_if<AxisAngleData>(&v_)) {
      return GroupPath(AxisAngleData{aa->alpha, aa->alpha_dot, -aa->sign, aa->basis});
    }
    const auto& mp = std::get<MatrixPathData>(v_);
    auto value = mp.value;
    auto derivative = mp.derivative;
    return matrix_path([value](double t) { return value(t).adjoint().eval(); },
                       [derivative](double t) { return derivative(t).adjoint().eval(); }, mp.n,
                       mp.domain);
  }

  int dimension() const {
    if (const auto* aa = std::get_if<AxisAngleData>(&v_)) return aa->basis.n;
    return std::get<MatrixPathData>(v_).n;
  }

  Interval domain() const {
    if (const auto* aa = std::get_if<AxisAngleData>(&v_)) return aa->alpha.domain();
    return std::get<MatrixPathData>(v_).domain;
  }

  bool is_axis_angle() const { return std::holds_alternative<AxisAngleData>(v_); }

  const VectorTimeFunction& alpha() const { return axis_angle_data().alpha; }
  const VectorTimeFunction& alpha_derivative() const { return axis_angle_data().alpha_dot; }
  int sign() const { return axis_angle_data().sign; }
  const LieBasis& basis() const { return axis_angle_data().basis; }

 private:
  struct AxisAngleData {
    VectorTimeFunction alpha;
    VectorTimeFunction alpha_dot;
    int sign;
    LieBasis basis;
  };
  struct MatrixPathData {
    std::function<Eigen::MatrixXcd(double)> value;
    std::function<Eigen::MatrixXcd(double)> derivative;
    int n;
    Interval domain;
  };

  explicit GroupPath(AxisAngleData data) : v_(std::move(data)) {}
  explicit GroupPath(MatrixPathData data) : v_(std::move(data)) {}

  static Eigen::MatrixXcd generator_combination(const AxisAngleData& aa,
                                                const VectorTimeFunction& coords, double t) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(aa.basis.n, aa.basis.n);
    for (int i = 0; i < aa.basis.dim(); ++i) {
      x += (static_cast<double>(aa.sign) * coords[i](t)) *
           aa.basis.generators[static_cast<std::size_t>(i)];
    }
    return x;
  }

  const AxisAngleData& axis_angle_data() const {
    if (const auto* aa = std::get_if<AxisAngleData>(&v_)) return *aa;
    throw unsupported_error("group path: not an axis-angle path");
  }

  std::variant<AxisAngleData, MatrixPathData> v_;
};

// (G(t), dG/dt(t)) for any path variant.
inline std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> group_derivative(const GroupPath& g,
                                                                      double t) {
  return g.value_and_derivative(t);
}

// Pointwise matrix product outer(t) * inner(t): the path that acts like
// `inner` followed by `outer`.
inline GroupPath compose(const GroupPath& outer, const GroupPath& inner) {
  if (outer.dimension() != inner.dimension()) {
    throw dimension_error("compose: group paths act on different dimensions");
  }
  return GroupPath::matrix_path(
      [outer, inner](double t) { return (outer.value(t) * inner.value(t)).eval(); },
      [outer, inner](double t) {
        const auto [g2, g2dot] = outer.value_and_derivative(t);
        const auto [g1, g1dot] = inner.value_and_derivative(t);
        return (g2dot * g1 + g2 * g1dot).eval();
      },
      outer.dimension(), outer.domain().intersect(inner.domain()));
}

}  // namespace gaugekit

#endif  // GAUGEKIT_LIE_HPP_
