// Copyright 2026 The wehrl Authors
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
#pragma once

#include <stdexcept>
#include <string>

namespace wehrl {

/// Failure categories. The numeric values are shared with the C API status
/// codes, see `wehrl_status` in wehrl.h.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kNumerical = 2,
  kNotConverged = 3,
  kUndefined = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorCode::kNumerical, what) {}
};

/// Adaptive quadrature ran out of refinement levels. Carries the last
/// (finest) estimate and the difference to the previous level.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double est_error)
      : Error(ErrorCode::kNotConverged, what),
        best_estimate_(best_estimate),
        est_error_(est_error) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double est_error() const noexcept { return est_error_; }

 private:
  double best_estimate_;
  double est_error_;
};

}  // namespace wehrl
