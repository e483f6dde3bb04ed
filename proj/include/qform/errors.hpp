// Copyright 2026 The qform authors
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

#ifndef QFORM_ERRORS_HPP_
#define QFORM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qform {

// Typed error hierarchy. Every contract violation throws a named type so
// callers and tests can catch precisely; the what() string carries the
// offending values.
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// q-series: the two offsets do not differ by an integer, so the series do
// not live on a common exponent lattice and cannot be added.
struct NonIntegerOffsetGap : EngineError {
  using EngineError::EngineError;
};

// q-series: inversion (or a negative power) of a series whose leading stored
// coefficient is zero.
struct ZeroLeadingCoefficient : EngineError {
  using EngineError::EngineError;
};

// q-series: a coefficient was requested beyond the certified window.
struct OutOfPrecision : EngineError {
  using EngineError::EngineError;
};

// eta quotients: a factor's dilation delta does not divide the level N.
struct DeltaNotDividingLevel : EngineError {
  using EngineError::EngineError;
};

// generating functions: the q-shift that would normalize the series to an
// integer-exponent expansion is not a nonnegative integer.
struct NotModularShift : EngineError {
  using EngineError::EngineError;
};

// modularity metadata: a coefficient-sum divisibility hypothesis fails.
// Carries the offending sum h and the modulus it had to vanish under.
struct DivisibilityViolated : EngineError {
  DivisibilityViolated(long h_value, long required_modulus)
      : EngineError("divisibility violated: h = " + std::to_string(h_value) +
                    " is not divisible by " + std::to_string(required_modulus)),
        h(h_value),
        modulus(required_modulus) {}
  long h;
  long modulus;
};

// basis: a twisted Eisenstein series with chi(-1)psi(-1) != (-1)^k (the
// series would vanish identically), or with both characters trivial.
struct ParityMismatch : EngineError {
  using EngineError::EngineError;
};

// basis: a label that is not present in the built-in registry.
struct UnknownLabel : EngineError {
  using EngineError::EngineError;
};

// basis: the requested (weight, level, character) space is not one the
// engine has a tabulated basis for.
struct UnsupportedSpace : EngineError {
  using EngineError::EngineError;
};

// basis: the space is known but its published basis has undefined entries;
// targets in it can only be verified against the counting oracle.
struct IncompleteBasis : EngineError {
  using EngineError::EngineError;
};

// decomposition: the target is not in the span of the basis. With exact
// arithmetic this signals a modularity or basis bug, never a tolerance issue.
struct NoSolution : EngineError {
  using EngineError::EngineError;
};

// decomposition: the basis matrix is rank-deficient on the solve window.
struct UnderdeterminedBasis : EngineError {
  using EngineError::EngineError;
};

// user input (CLI / documents): malformed or inconsistent specification.
struct BadInput : EngineError {
  using EngineError::EngineError;
};

}  // namespace qform

#endif  // QFORM_ERRORS_HPP_
