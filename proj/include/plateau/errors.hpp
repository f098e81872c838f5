// Copyright 2026 The plateau authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace plateau {

/// Bad user input: malformed config, invalid Pauli text, out-of-range values.
/// Maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A Lie-closure hit its dimension cap.  The truncated basis cannot back any
/// exact prediction, so downstream queries refuse it.  CLI exit code 2.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Neither the state nor the observable lies in i*g, so the exact mean and
/// variance formulas make no claim.  CLI exit code 3.
class OutsideTheoryError : public std::runtime_error {
 public:
  explicit OutsideTheoryError(const std::string& what) : std::runtime_error(what) {}
};

/// An iteration failed to converge within its cap where a result is required.
/// CLI exit code 4.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plateau
