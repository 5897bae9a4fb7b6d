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

#ifndef GAUGEKIT_ERRORS_HPP_
#define GAUGEKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gaugekit {

// Base class of every exception thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed construction arguments (empty grids, non-increasing breakpoints,
// mismatched sizes, ...).
class invalid_argument_error : public error {
 public:
  using error::error;
};

// Evaluation outside a declared domain interval.
class domain_error : public error {
 public:
  using error::error;
};

// Operand dimensions do not match.
class dimension_error : public error {
 public:
  using error::error;
};

// An operation that is not defined for the given variant (e.g. the derivative
// of linearly interpolated samples).
class unsupported_error : public error {
 public:
  using error::error;
};

// A numerical routine could not reach the requested tolerance; carries both
// the requested bound and the achieved estimate.
class tolerance_error : public error {
 public:
  tolerance_error(const std::string& what, double requested, double achieved)
      : error(what), requested_(requested), achieved_(achieved) {}

  double requested() const { return requested_; }
  double achieved() const { return achieved_; }

 private:
  double requested_;
  double achieved_;
};

// Input that must be Hermitian (or skew-Hermitian) is not; carries the
// symmetry residual in Frobenius norm.
class hermiticity_error : public error {
 public:
  hermiticity_error(const std::string& what, double residual)
      : error(what), residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

// A numerical kernel failed outright (eigensolver breakdown, step-size
// underflow in an integrator, ...).
class numerical_error : public error {
 public:
  using error::error;
};

// The sign-convention oracle could not single out one convention.
class convention_error : public error {
 public:
  using error::error;
};

// Scenario configuration rejected; carries the offending field path.
class config_error : public error {
 public:
  config_error(const std::string& field, const std::string& message)
      : error("config error at '" + field + "': " + message), field_(field) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace gaugekit

#endif  // GAUGEKIT_ERRORS_HPP_
