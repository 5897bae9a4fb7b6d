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

#ifndef GAUGEKIT_TIMEFN_HPP_
#define GAUGEKIT_TIMEFN_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <memory>
#include <numbers>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gaugekit/errors.hpp"

namespace gaugekit {

// Closed interval on the time axis. Infinite endpoints mean "all of R".
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  static Interval all() { return {}; }

  // Membership with one-part-in-1e12 slack so that grid endpoints computed in
  // floating point do not fall off the edge of their own interval.
  bool contains(double t) const {
    double scale = 1.0;
    if (std::isfinite(lo)) scale = std::max(scale, std::abs(lo));
    if (std::isfinite(hi)) scale = std::max(scale, std::abs(hi));
    const double slack = 1e-12 * scale;
    return t >= lo - slack && t <= hi + slack;
  }

  bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
  bool empty() const { return !(lo <= hi); }
  double length() const { return hi - lo; }

  Interval intersect(const Interval& other) const {
    return {std::max(lo, other.lo), std::min(hi, other.hi)};
  }
};

// Uniform grid with exact endpoints: t[0] == a and t[n-1] == b bit-for-bit.
inline std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw invalid_argument_error("linspace: need at least 2 points");
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i)] = a + (b - a) * (static_cast<double>(i) / (n - 1));
  }
  t.front() = a;
  t.back() = b;
  return t;
}

namespace detail {
struct TfNode;
}  // namespace detail

// A real scalar function of time, built from closed composable primitives.
// Derivatives are exact (symbolic on the primitive tree, never finite
// differences); definite integrals use the closed form where the variant has
// one and adaptive Gauss-Kronrod quadrature otherwise.
class TimeFunction {
 public:
  static TimeFunction constant(double value);
  // coeffs[k] multiplies t^k.
  static TimeFunction polynomial(std::vector<double> coeffs);
  // amplitude * sin(omega * t + phase).
  static TimeFunction sinusoid(double amplitude, double omega, double phase = 0.0);
  static TimeFunction sum(std::vector<TimeFunction> terms);
  static TimeFunction product(TimeFunction lhs, TimeFunction rhs);
  static TimeFunction scaled(double factor, TimeFunction inner);
  // pieces[i] applies on [breakpoints[i], breakpoints[i+1]); the final piece
  // also covers the right endpoint.
  static TimeFunction piecewise(std::vector<double> breakpoints, std::vector<TimeFunction> pieces);
  // Interpolates (grid[i], values[i]); order 3 = natural cubic spline,
  // order 1 = piecewise linear (not differentiable).
  static TimeFunction sampled(std::vector<double> grid, std::vector<double> values,
                              int interpolation_order = 3);

  double operator()(double t) const;
  double evaluate(double t) const { return (*this)(t); }

  // Exact derivative for analytic variants, interpolant derivative for cubic
  // samples. Throws unsupported_error for linear interpolation.
  TimeFunction derivative() const;

  // Definite integral over [t0, t1] (antisymmetric under swap). `tol` is the
  // absolute quadrature tolerance used where no closed form exists; throws
  // tolerance_error when the error estimate exceeds it.
  double antiderivative(double t0, double t1, double tol = 1e-12) const;

  Interval domain() const;

  // Wraps an existing node; library-internal, exposed for the node builders.
  explicit TimeFunction(std::shared_ptr<const detail::TfNode> node) : node_(std::move(node)) {}
  const detail::TfNode& node() const { return *node_; }

 private:
  std::shared_ptr<const detail::TfNode> node_;
};

inline TimeFunction operator+(const TimeFunction& a, const TimeFunction& b) {
  return TimeFunction::sum({a, b});
}
inline TimeFunction operator-(const TimeFunction& a) { return TimeFunction::scaled(-1.0, a); }
inline TimeFunction operator-(const TimeFunction& a, const TimeFunction& b) { return a + (-b); }
inline TimeFunction operator*(const TimeFunction& a, const TimeFunction& b) {
  return TimeFunction::product(a, b);
}
inline TimeFunction operator*(double s, const TimeFunction& f) {
  return TimeFunction::scaled(s, f);
}
inline TimeFunction operator*(const TimeFunction& f, double s) {
  return TimeFunction::scaled(s, f);
}

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ---------------------------------------------------------------------------
// Sampled data: shared interpolation backing store. s(t) on segment i is
// values[i] + b[i]*dt + c[i]*dt^2 + d[i]*dt^3 with dt = t - knots[i].
// ---------------------------------------------------------------------------
struct SplineData {
  std::vector<double> knots;
  std::vector<double> values;
  std::vector<double> b, c, d;
  int order = 3;  // 1 = piecewise linear, 3 = natural cubic
};

inline std::shared_ptr<const SplineData> make_spline(std::vector<double> knots,
                                                     std::vector<double> values, int order) {
  if (knots.size() < 2) throw invalid_argument_error("sampled: need at least 2 grid points");
  if (knots.size() != values.size())
    throw invalid_argument_error("sampled: grid and value arrays differ in size");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i] > knots[i - 1]))
      throw invalid_argument_error("sampled: grid must be strictly increasing");
  }
  if (order != 1 && order != 3)
    throw invalid_argument_error("sampled: interpolation order must be 1 or 3");

  auto s = std::make_shared<SplineData>();
  s->knots = std::move(knots);
  s->values = std::move(values);
  s->order = order;
  const std::size_t n = s->knots.size();
  const std::size_t nseg = n - 1;
  s->b.assign(nseg, 0.0);
  s->c.assign(nseg, 0.0);
  s->d.assign(nseg, 0.0);

  std::vector<double> h(nseg);
  for (std::size_t i = 0; i < nseg; ++i) h[i] = s->knots[i + 1] - s->knots[i];

  if (order == 1 || n == 2) {
    // Piecewise linear; any cubic scheme through two points is also a line.
    for (std::size_t i = 0; i < nseg; ++i) s->b[i] = (s->values[i + 1] - s->values[i]) / h[i];
    return s;
  }

  if (n == 3) {
    // Too few points for not-a-knot ends: use the unique parabola.
    const double x0 = s->knots[0], x2 = s->knots[2];
    const double y0 = s->values[0], y1 = s->values[1], y2 = s->values[2];
    const double curv = 2.0 * ((y2 - y1) / h[1] - (y1 - y0) / h[0]) / (x2 - x0);
    const double slope0 = (y1 - y0) / h[0] - curv * h[0] / 2.0;
    for (std::size_t i = 0; i < 2; ++i) {
      s->b[i] = slope0 + curv * (s->knots[i] - x0);
      s->c[i] = curv / 2.0;
      s->d[i] = 0.0;
    }
    return s;
  }

  // Cubic spline with not-a-knot end conditions: solve the tridiagonal system
  // for the interior second derivatives m[1..n-2], after eliminating m[0] and
  // m[n-1] using third-derivative continuity across the first and last
  // interior knots.
  std::vector<double> m(n, 0.0);
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), sub(n, 0.0), sup(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    sub[i] = h[i - 1];
    diag[i] = 2.0 * (h[i - 1] + h[i]);
    sup[i] = h[i];
    rhs[i] = 6.0 * ((s->values[i + 1] - s->values[i]) / h[i] -
                    (s->values[i] - s->values[i - 1]) / h[i - 1]);
  }
  // Not-a-knot at the left end: m[0] = ((h0+h1) m[1] - h0 m[2]) / h1,
  // substituted into the i=1 equation.
  diag[1] += sub[1] * (h[0] + h[1]) / h[1];
  sup[1] -= sub[1] * h[0] / h[1];
  sub[1] = 0.0;
  // Mirror image at the right end for the i=n-2 equation.
  {
    const std::size_t i = n - 2;
    diag[i] += sup[i] * (h[nseg - 1] + h[nseg - 2]) / h[nseg - 2];
    sub[i] -= sup[i] * h[nseg - 1] / h[nseg - 2];
    sup[i] = 0.0;
  }
  // Thomas algorithm on rows 1..n-2.
  for (std::size_t i = 2; i + 1 < n; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    const double upper = (i + 2 < n) ? sup[i] * m[i + 1] : 0.0;
    m[i] = (rhs[i] - upper) / diag[i];
  }
  m[0] = ((h[0] + h[1]) * m[1] - h[0] * m[2]) / h[1];
  m[n - 1] = ((h[nseg - 1] + h[nseg - 2]) * m[n - 2] - h[nseg - 1] * m[n - 3]) / h[nseg - 2];

  for (std::size_t i = 0; i < nseg; ++i) {
    s->c[i] = m[i] / 2.0;
    s->d[i] = (m[i + 1] - m[i]) / (6.0 * h[i]);
    s->b[i] = (s->values[i + 1] - s->values[i]) / h[i] - h[i] * (2.0 * m[i] + m[i + 1]) / 6.0;
  }
  return s;
}

inline double spline_eval(const SplineData& s, double t, int deriv) {
  const auto& kt = s.knots;
  if (!Interval{kt.front(), kt.back()}.contains(t)) {
    throw domain_error("sampled: t = " + std::to_string(t) + " outside [" +
                       std::to_string(kt.front()) + ", " + std::to_string(kt.back()) + "]");
  }
  if (deriv == 0) {
    // Reproduce stored samples bit-for-bit at the knots.
    auto hit = std::lower_bound(kt.begin(), kt.end(), t);
    if (hit != kt.end() && *hit == t) return s.values[static_cast<std::size_t>(hit - kt.begin())];
  }
  const auto up = std::upper_bound(kt.begin(), kt.end(), t);
  const std::size_t i = static_cast<std::size_t>(up - kt.begin());
  const std::size_t seg = (i == 0) ? 0 : std::min(i - 1, kt.size() - 2);
  const double dt = t - kt[seg];
  switch (deriv) {
    case 0:
      return s.values[seg] + dt * (s.b[seg] + dt * (s.c[seg] + dt * s.d[seg]));
    case 1:
      return s.b[seg] + dt * (2.0 * s.c[seg] + 3.0 * dt * s.d[seg]);
    case 2:
      return 2.0 * s.c[seg] + 6.0 * dt * s.d[seg];
    case 3:
      return 6.0 * s.d[seg];
    default:
      return 0.0;
  }
}

// ---------------------------------------------------------------------------
// Expression nodes.
// ---------------------------------------------------------------------------
struct ConstantNode {
  double value;
};
struct PolynomialNode {
  std::vector<double> coeffs;
};
struct SinusoidNode {
  double amplitude, omega, phase;
};
struct SumNode {
  std::vector<TimeFunction> terms;
};
struct ProductNode {
  TimeFunction lhs, rhs;
};
struct ScaledNode {
  double factor;
  TimeFunction inner;
};
struct PiecewiseNode {
  std::vector<double> breakpoints;
  std::vector<TimeFunction> pieces;
};
struct SampledNode {
  std::shared_ptr<const SplineData> data;
  int deriv_order;  // how often the interpolant has been differentiated
};

struct TfNode {
  std::variant<ConstantNode, PolynomialNode, SinusoidNode, SumNode, ProductNode, ScaledNode,
               PiecewiseNode, SampledNode>
      v;
};

template <class Alt>
std::shared_ptr<const TfNode> make_node(Alt&& alt) {
  return std::make_shared<TfNode>(TfNode{std::forward<Alt>(alt)});
}

inline std::string fmt_g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

// Adaptive Gauss-Kronrod quadrature with an absolute-tolerance contract
// (boost's knob is relative, so rescale by the L1 mass and retry once).
inline double gk_integrate(const TimeFunction& f, double a, double b, double tol) {
  using quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  const auto fn = [&](double t) { return f(t); };
  double err = 0.0, l1 = 0.0;
  double value = quad::integrate(fn, a, b, /*max_depth=*/12, /*rel_tol=*/tol, &err, &l1);
  if (!(err <= tol)) {
    const double rel = tol / std::max(1.0, l1);
    value = quad::integrate(fn, a, b, 12, rel, &err, &l1);
  }
  if (!(err <= tol)) {
    throw tolerance_error("quadrature tolerance not met: requested " + fmt_g(tol) +
                              ", achieved error estimate " + fmt_g(err),
                          tol, err);
  }
  return value;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------
inline TimeFunction TimeFunction::constant(double value) {
  return TimeFunction(detail::make_node(detail::ConstantNode{value}));
}

inline TimeFunction TimeFunction::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  return TimeFunction(detail::make_node(detail::PolynomialNode{std::move(coeffs)}));
}

inline TimeFunction TimeFunction::sinusoid(double amplitude, double omega, double phase) {
  return TimeFunction(detail::make_node(detail::SinusoidNode{amplitude, omega, phase}));
}

inline TimeFunction TimeFunction::sum(std::vector<TimeFunction> terms) {
  if (terms.empty()) return constant(0.0);
  if (terms.size() == 1) return terms.front();
  return TimeFunction(detail::make_node(detail::SumNode{std::move(terms)}));
}

inline TimeFunction TimeFunction::product(TimeFunction lhs, TimeFunction rhs) {
  return TimeFunction(detail::make_node(detail::ProductNode{std::move(lhs), std::move(rhs)}));
}

inline TimeFunction TimeFunction::scaled(double factor, TimeFunction inner) {
  return TimeFunction(detail::make_node(detail::ScaledNode{factor, std::move(inner)}));
}

inline TimeFunction TimeFunction::piecewise(std::vector<double> breakpoints,
                                            std::vector<TimeFunction> pieces) {
  if (pieces.empty()) throw invalid_argument_error("piecewise: need at least one piece");
  if (breakpoints.size() != pieces.size() + 1)
    throw invalid_argument_error("piecewise: need exactly one more breakpoint than pieces");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw invalid_argument_error("piecewise: breakpoints must be strictly increasing");
  }
  return TimeFunction(
      detail::make_node(detail::PiecewiseNode{std::move(breakpoints), std::move(pieces)}));
}

inline TimeFunction TimeFunction::sampled(std::vector<double> grid, std::vector<double> values,
                                          int interpolation_order) {
  return TimeFunction(detail::make_node(
      detail::SampledNode{detail::make_spline(std::move(grid), std::move(values),
                                              interpolation_order),
                          0}));
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------
inline double TimeFunction::operator()(double t) const {
  using namespace detail;
  return std::visit(
      overloaded{
          [&](const ConstantNode& n) -> double { return n.value; },
          [&](const PolynomialNode& n) -> double {
            double acc = 0.0;
            for (auto it = n.coeffs.rbegin(); it != n.coeffs.rend(); ++it) acc = acc * t + *it;
            return acc;
          },
          [&](const SinusoidNode& n) -> double {
            return n.amplitude * std::sin(n.omega * t + n.phase);
          },
          [&](const SumNode& n) -> double {
            double acc = n.terms.front()(t);
            for (std::size_t i = 1; i < n.terms.size(); ++i) acc += n.terms[i](t);
            return acc;
          },
          [&](const ProductNode& n) -> double { return n.lhs(t) * n.rhs(t); },
          [&](const ScaledNode& n) -> double { return n.factor * n.inner(t); },
          [&](const PiecewiseNode& n) -> double {
            const auto& bp = n.breakpoints;
            if (!Interval{bp.front(), bp.back()}.contains(t)) {
              throw domain_error("piecewise: t = " + std::to_string(t) + " outside [" +
                                 std::to_string(bp.front()) + ", " + std::to_string(bp.back()) +
                                 "]");
            }
            const auto up = std::upper_bound(bp.begin(), bp.end(), t);
            const std::size_t i = static_cast<std::size_t>(up - bp.begin());
            const std::size_t seg = (i == 0) ? 0 : std::min(i - 1, n.pieces.size() - 1);
            return n.pieces[seg](t);
          },
          [&](const SampledNode& n) -> double { return spline_eval(*n.data, t, n.deriv_order); },
      },
      node_->v);
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------
inline TimeFunction TimeFunction::derivative() const {
  using namespace detail;
  return std::visit(
      overloaded{
          [](const ConstantNode&) -> TimeFunction { return constant(0.0); },
          [](const PolynomialNode& n) -> TimeFunction {
            if (n.coeffs.size() <= 1) return constant(0.0);
            std::vector<double> d(n.coeffs.size() - 1);
            for (std::size_t k = 1; k < n.coeffs.size(); ++k)
              d[k - 1] = static_cast<double>(k) * n.coeffs[k];
            return polynomial(std::move(d));
          },
          [](const SinusoidNode& n) -> TimeFunction {
            // d/dt A sin(wt + p) = A w sin(wt + p + pi/2)
            return sinusoid(n.amplitude * n.omega, n.omega, n.phase + std::numbers::pi / 2.0);
          },
          [](const SumNode& n) -> TimeFunction {
            std::vector<TimeFunction> d;
            d.reserve(n.terms.size());
            for (const auto& f : n.terms) d.push_back(f.derivative());
            return sum(std::move(d));
          },
          [](const ProductNode& n) -> TimeFunction {
            return sum({product(n.lhs.derivative(), n.rhs), product(n.lhs, n.rhs.derivative())});
          },
          [](const ScaledNode& n) -> TimeFunction {
            return scaled(n.factor, n.inner.derivative());
          },
          [](const PiecewiseNode& n) -> TimeFunction {
            std::vector<TimeFunction> d;
            d.reserve(n.pieces.size());
            for (const auto& f : n.pieces) d.push_back(f.derivative());
            return piecewise(n.breakpoints, std::move(d));
          },
          [](const SampledNode& n) -> TimeFunction {
            if (n.data->order < 2) {
              throw unsupported_error(
                  "sampled: derivative requires interpolation order >= 2 (data is piecewise "
                  "linear)");
            }
            return TimeFunction(make_node(SampledNode{n.data, n.deriv_order + 1}));
          },
      },
      node_->v);
}

// ---------------------------------------------------------------------------
// Definite integration
// ---------------------------------------------------------------------------
inline double TimeFunction::antiderivative(double t0, double t1, double tol) const {
  if (t0 == t1) return 0.0;
  if (t1 < t0) return -antiderivative(t1, t0, tol);
  using namespace detail;
  return std::visit(
      overloaded{
          [&](const ConstantNode& n) -> double { return n.value * (t1 - t0); },
          [&](const PolynomialNode& n) -> double {
            std::vector<double> big(n.coeffs.size() + 1, 0.0);
            for (std::size_t k = 0; k < n.coeffs.size(); ++k)
              big[k + 1] = n.coeffs[k] / static_cast<double>(k + 1);
            auto horner = [&](double t) {
              double acc = 0.0;
              for (auto it = big.rbegin(); it != big.rend(); ++it) acc = acc * t + *it;
              return acc;
            };
            return horner(t1) - horner(t0);
          },
          [&](const SinusoidNode& n) -> double {
            if (n.omega == 0.0) return n.amplitude * std::sin(n.phase) * (t1 - t0);
            return -(n.amplitude / n.omega) *
                   (std::cos(n.omega * t1 + n.phase) - std::cos(n.omega * t0 + n.phase));
          },
          [&](const SumNode& n) -> double {
            double acc = 0.0;
            for (const auto& f : n.terms) acc += f.antiderivative(t0, t1, tol);
            return acc;
          },
          [&](const ProductNode&) -> double { return gk_integrate(*this, t0, t1, tol); },
          [&](const ScaledNode& n) -> double {
            return n.factor * n.inner.antiderivative(t0, t1, tol);
          },
          [&](const PiecewiseNode& n) -> double {
            const auto& bp = n.breakpoints;
            const Interval hull{bp.front(), bp.back()};
            if (!hull.contains(t0) || !hull.contains(t1)) {
              throw domain_error("piecewise: integration range [" + std::to_string(t0) + ", " +
                                 std::to_string(t1) + "] outside [" + std::to_string(bp.front()) +
                                 ", " + std::to_string(bp.back()) + "]");
            }
            double acc = 0.0;
            for (std::size_t seg = 0; seg < n.pieces.size(); ++seg) {
              const double a = std::max(t0, bp[seg]);
              const double b = std::min(t1, bp[seg + 1]);
              if (a < b) acc += n.pieces[seg].antiderivative(a, b, tol);
            }
            return acc;
          },
          [&](const SampledNode& n) -> double {
            if (n.deriv_order > 0) {
              // Integrating the k-th interpolant derivative gives the (k-1)-th.
              return spline_eval(*n.data, t1, n.deriv_order - 1) -
                     spline_eval(*n.data, t0, n.deriv_order - 1);
            }
            const auto& kt = n.data->knots;
            const Interval hull{kt.front(), kt.back()};
            if (!hull.contains(t0) || !hull.contains(t1)) {
              throw domain_error("sampled: integration range [" + std::to_string(t0) + ", " +
                                 std::to_string(t1) + "] outside [" + std::to_string(kt.front()) +
                                 ", " + std::to_string(kt.back()) + "]");
            }
            // Quadrature per knot segment: the integrand is a single cubic on
            // each, which Gauss-Kronrod resolves to machine precision.
            double acc = 0.0;
            for (std::size_t seg = 0; seg + 1 < kt.size(); ++seg) {
              const double a = std::max(t0, kt[seg]);
              const double b = std::min(t1, kt[seg + 1]);
              if (a < b) acc += gk_integrate(*this, a, b, tol);
            }
            return acc;
          },
      },
      node_->v);
}

inline Interval TimeFunction::domain() const {
  using namespace detail;
  return std::visit(
      overloaded{
          [](const ConstantNode&) { return Interval::all(); },
          [](const PolynomialNode&) { return Interval::all(); },
          [](const SinusoidNode&) { return Interval::all(); },
          [](const SumNode& n) {
            Interval dom = Interval::all();
            for (const auto& f : n.terms) dom = dom.intersect(f.domain());
            return dom;
          },
          [](const ProductNode& n) { return n.lhs.domain().intersect(n.rhs.domain()); },
          [](const ScaledNode& n) { return n.inner.domain(); },
          [](const PiecewiseNode& n) {
            return Interval{n.breakpoints.front(), n.breakpoints.back()};
          },
          [](const SampledNode& n) {
            return Interval{n.data->knots.front(), n.data->knots.back()};
          },
      },
      node_->v);
}

// An ordered tuple of time functions sharing a common domain (e.g. the three
// rotation-vector coordinates, or the components of a field).
class VectorTimeFunction {
 public:
  explicit VectorTimeFunction(std::vector<TimeFunction> components)
      : comps_(std::move(components)) {
    if (comps_.empty())
      throw invalid_argument_error("vector time function: need at least one component");
    Interval dom = Interval::all();
    for (const auto& f : comps_) dom = dom.intersect(f.domain());
    if (dom.empty())
      throw invalid_argument_error("vector time function: component domains do not overlap");
    domain_ = dom;
  }

  VectorTimeFunction(std::initializer_list<TimeFunction> components)
      : VectorTimeFunction(std::vector<TimeFunction>(components)) {}

  int dimension() const { return static_cast<int>(comps_.size()); }

  const TimeFunction& operator[](int i) const {
    if (i < 0 || i >= dimension())
      throw dimension_error("vector time function: component index out of range");
    return comps_[static_cast<std::size_t>(i)];
  }

  Eigen::VectorXd value(double t) const {
    Eigen::VectorXd v(dimension());
    for (int i = 0; i < dimension(); ++i) v[i] = comps_[static_cast<std::size_t>(i)](t);
    return v;
  }

  VectorTimeFunction derivative() const {
    std::vector<TimeFunction> d;
    d.reserve(comps_.size());
    for (const auto& f : comps_) d.push_back(f.derivative());
    return VectorTimeFunction(std::move(d));
  }

  Interval domain() const { return domain_; }

 private:
  std::vector<TimeFunction> comps_;
  Interval domain_;
};

}  // namespace gaugekit

#endif  // GAUGEKIT_TIMEFN_HPP_
