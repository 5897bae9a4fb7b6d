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

#ifndef GAUGEKIT_DETAIL_DOPRI5_HPP_
#define GAUGEKIT_DETAIL_DOPRI5_HPP_

// Embedded Runge-Kutta 5(4) integrator (Dormand-Prince coefficients) for
// complex vector ODEs  y' = f(t, y),  with adaptive step control, the
// first-same-as-last optimization, and fourth-order dense output on every
// accepted step.  Used as the independent numerical oracle; nothing in the
// exact-solution pipeline depends on it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "gaugekit/errors.hpp"
#include "gaugekit/timefn.hpp"

namespace gaugekit::detail {

struct Dopri5Options {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 0.0;  // 0 -> choose automatically
  double fixed_step = 0.0;    // > 0 -> no adaptivity, constant step (for order studies)
  long max_steps = 2000000;
};

struct Dopri5Stats {
  long accepted = 0;
  long rejected = 0;
  long function_evaluations = 0;
};

// One accepted step's quartic interpolant on [t0, t0 + h].
struct Dopri5DenseSegment {
  double t0 = 0.0;
  double h = 0.0;
  Eigen::VectorXcd r1, r2, r3, r4, r5;

  Eigen::VectorXcd eval(double t) const {
    const double theta = (t - t0) / h;
    const double omt = 1.0 - theta;
    return r1 + theta * (r2 + omt * (r3 + theta * (r4 + omt * r5)));
  }
};

// Dense numerical solution over [t_begin, t_end].
class Dopri5Solution {
 public:
  Dopri5Solution(std::vector<double> knots, std::vector<Dopri5DenseSegment> segments,
                 Dopri5Stats stats)
      : knots_(std::move(knots)), segments_(std::move(segments)), stats_(stats) {}

  double t_begin() const { return knots_.front(); }
  double t_end() const { return knots_.back(); }
  const Dopri5Stats& stats() const { return stats_; }

  Eigen::VectorXcd value(double t) const {
    const Interval dom{knots_.front(), knots_.back()};
    if (!dom.contains(t)) {
      throw invalid_argument_error("Dopri5Solution: time " + fmt_g(t) +
                                   " outside the integrated interval [" + fmt_g(dom.lo) + ", " +
                                   fmt_g(dom.hi) + "]");
    }
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    std::ptrdiff_t idx = (it - knots_.begin()) - 1;
    idx = std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(segments_.size()) - 1);
    return segments_[static_cast<std::size_t>(idx)].eval(t);
  }

 private:
  std::vector<double> knots_;
  std::vector<Dopri5DenseSegment> segments_;
  Dopri5Stats stats_;
};

inline Dopri5Solution dopri5_integrate(
    const std::function<Eigen::VectorXcd(double, const Eigen::VectorXcd&)>& f, double t0,
    double t1, const Eigen::VectorXcd& y0, const Dopri5Options& options = {}) {
  if (!(t1 > t0)) {
    throw invalid_argument_error("dopri5_integrate: need t1 > t0");
  }
  if (!std::isfinite(t0) || !std::isfinite(t1)) {
    throw invalid_argument_error("dopri5_integrate: interval must be finite");
  }
  const double rtol = options.rtol;
  const double atol = options.atol;
  if (!(rtol > 0.0) || !(atol > 0.0)) {
    throw invalid_argument_error("dopri5_integrate: tolerances must be positive");
  }

  // Butcher tableau (Dormand & Prince, 1980), with the 4th-order error
  // weights e_i = b_i - bhat_i and the dense-output weights d_i.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                   a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  constexpr double d1 = -12715105075.0 / 11282082432.0;
  constexpr double d3 = 87487479700.0 / 32700410799.0;
  constexpr double d4 = -10690763975.0 / 1880347072.0;
  constexpr double d5 = 701980252875.0 / 199316789632.0;
  constexpr double d6 = -1453857185.0 / 822651844.0;
  constexpr double d7 = 69997945.0 / 29380423.0;

  const Eigen::Index n = y0.size();
  const double span = t1 - t0;
  const bool fixed = options.fixed_step > 0.0;

  double t = t0;
  Eigen::VectorXcd y = y0;
  Dopri5Stats stats;

  auto eval = [&](double tt, const Eigen::VectorXcd& yy) {
    ++stats.function_evaluations;
    Eigen::VectorXcd v = f(tt, yy);
    if (v.size() != n) {
      throw dimension_error("dopri5_integrate: right-hand side returned size " +
                            std::to_string(v.size()) + ", expected " + std::to_string(n));
    }
    return v;
  };

  Eigen::VectorXcd k1 = eval(t, y);

  // Weighted RMS of a candidate error vector against the scale
  // atol + rtol * max(|y_i|, |y1_i|).
  auto error_norm = [&](const Eigen::VectorXcd& e, const Eigen::VectorXcd& ya,
                        const Eigen::VectorXcd& yb) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double sk = atol + rtol * std::max(std::abs(ya[i]), std::abs(yb[i]));
      const double ei = std::abs(e[i]);
      if (sk > 0.0) {
        const double q = ei / sk;
        acc += q * q;
      } else if (ei > 0.0) {
        return std::numeric_limits<double>::infinity();
      }
    }
    return n > 0 ? std::sqrt(acc / static_cast<double>(n)) : 0.0;
  };

  // Initial step selection (standard two-derivative heuristic).
  double h;
  if (fixed) {
    h = std::min(options.fixed_step, span);
  } else if (options.initial_step > 0.0) {
    h = std::min(options.initial_step, span);
  } else {
    double dnf = 0.0, dny = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double sk = atol + rtol * std::abs(y[i]);
      dnf += std::norm(k1[i] / sk);
      dny += std::norm(y[i] / sk);
    }
    h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * std::sqrt(dny / dnf);
    h = std::min(h, span);
    const Eigen::VectorXcd y_trial = y + h * k1;
    const Eigen::VectorXcd f_trial = eval(t + h, y_trial);
    double der2 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double sk = atol + rtol * std::abs(y[i]);
      der2 += std::norm((f_trial[i] - k1[i]) / sk);
    }
    der2 = std::sqrt(der2) / h;
    const double der12 = std::max(der2, std::sqrt(dnf));
    const double h1 = (der12 <= 1e-15) ? std::max(1e-6, h * 1e-3)
                                       : std::pow(0.01 / der12, 0.2);
    h = std::min({100.0 * h, h1, span});
  }

  std::vector<double> knots{t0};
  std::vector<Dopri5DenseSegment> segments;
  bool last_rejected = false;
  long steps = 0;

  // Lund-stabilized (PI) step control, matching the classic reference
  // implementation: h_new = h / clamp(err^expo1 / (facold^beta * safe)).
  constexpr double safe = 0.9, facl = 0.2, facr = 10.0, beta = 0.04;
  constexpr double expo1 = 0.2 - 0.75 * beta;
  double facold = 1e-4;

  while (t < t1) {
    if (++steps > options.max_steps) {
      throw numerical_error("dopri5_integrate: exceeded " + std::to_string(options.max_steps) +
                            " steps on [" + fmt_g(t0) + ", " + fmt_g(t1) + "] (reached t = " +
                            fmt_g(t) + ")");
    }
    const double hmin = 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0);
    if (!fixed && h < hmin) {
      throw numerical_error("dopri5_integrate: step size underflow at t = " + fmt_g(t) +
                            " (h = " + fmt_g(h) + "); the problem may be too stiff for this "
                            "non-stiff oracle");
    }
    bool last = false;
    if (t + h >= t1) {
      h = t1 - t;
      last = true;
    }

    const Eigen::VectorXcd k2 = eval(t + c2 * h, y + h * (a21 * k1));
    const Eigen::VectorXcd k3 = eval(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const Eigen::VectorXcd k4 = eval(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Eigen::VectorXcd k5 =
        eval(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Eigen::VectorXcd k6 =
        eval(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Eigen::VectorXcd y1 =
        y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
    const Eigen::VectorXcd k7 = eval(t + h, y1);

    const Eigen::VectorXcd err_vec =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double err = error_norm(err_vec, y, y1);
    const double fac11 = std::pow(err, expo1);

    if (fixed || err <= 1.0) {
      // Accept: record the dense interpolant for this step.
      Dopri5DenseSegment seg;
      seg.t0 = t;
      seg.h = h;
      seg.r1 = y;
      seg.r2 = y1 - y;
      seg.r3 = h * k1 - seg.r2;
      seg.r4 = seg.r2 - h * k7 - seg.r3;
      seg.r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
      segments.push_back(std::move(seg));

      t = last ? t1 : t + h;
      knots.push_back(t);
      y = y1;
      k1 = k7;  // first-same-as-last
      ++stats.accepted;

      if (!fixed) {
        const double fac =
            std::max(1.0 / facr, std::min(1.0 / facl, fac11 / (std::pow(facold, beta) * safe)));
        double hnew = h / fac;
        if (last_rejected) hnew = std::min(hnew, h);
        facold = std::max(err, 1e-4);
        h = hnew;
      }
      last_rejected = false;
    } else {
      ++stats.rejected;
      h /= std::min(1.0 / facl, fac11 / safe);
      last_rejected = true;
    }
  }

  return Dopri5Solution(std::move(knots), std::move(segments), stats);
}

}  // namespace gaugekit::detail

#endif  // GAUGEKIT_DETAIL_DOPRI5_HPP_
