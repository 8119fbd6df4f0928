// Copyright 2026 The Gaussamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUSSAMP_ERRORS_HPP_
#define GAUSSAMP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gaussamp {

/// Rejected channel parameters (non-positive total damping, negative thermal
/// occupancy, or non-finite input).
class ValidationError : public std::runtime_error {
 public:
  enum class Kind { NonPositiveGamma0, NegativeNoise, NonFinite };

  ValidationError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

  static const char* name(Kind k) {
    switch (k) {
      case Kind::NonPositiveGamma0: return "NonPositiveGamma0";
      case Kind::NegativeNoise: return "NegativeNoise";
      case Kind::NonFinite: return "NonFinite";
    }
    return "ValidationError";
  }

 private:
  Kind kind_;
};

/// The stationary-moment linear system is singular (drive resonant with the
/// damping); no residue matrices exist there.
class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A criterion was asked for outside the regime it is derived in.
class RegimeViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Correlation-matrix blocks violate hermiticity/symmetry beyond tolerance.
class MalformedCM : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bracketing search found no sign change over the whole interval.
class NoSignChange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gaussamp

#endif  // GAUSSAMP_ERRORS_HPP_
