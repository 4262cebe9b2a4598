// Copyright 2026 The qcollide Authors
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

namespace qcollide {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed or produced an invalid object (CLI exit code 3).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Raised when steady-state iteration exhausts its collision budget.
class NoSteadyStateError : public NumericalError {
 public:
  NoSteadyStateError(double last_residual, long collisions)
      : NumericalError("no steady state within budget (last residual " +
                       std::to_string(last_residual) + " after " +
                       std::to_string(collisions) + " collisions)"),
        last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

}  // namespace qcollide
