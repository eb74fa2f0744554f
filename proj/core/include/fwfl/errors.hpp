/*
 Copyright 2026 The fwfl Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace fwfl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or sequence dimensions do not agree with the declared model/dataset.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on a scalar argument (depth, order, frequency) is violated.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// e^{jw} is (numerically) an eigenvalue of A, so the resolvent does not exist.
class SingularResolventError : public Error {
 public:
  SingularResolventError(double omega, const std::string& what)
      : Error(what), omega_(omega) {}
  double omega() const noexcept { return omega_; }

 private:
  double omega_;
};

/// The data are not collectively persistently exciting of the order required
/// by the representation result being invoked.
class CpeHypothesisError : public Error {
 public:
  using Error::Error;
};

/// The initial trajectory handed to the simulator is not consistent with the
/// data (the initial-condition equations have no solution within tolerance).
class InconsistentTrajectoryError : public Error {
 public:
  InconsistentTrajectoryError(double residual, const std::string& what)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Malformed or invalid file contents.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace fwfl
