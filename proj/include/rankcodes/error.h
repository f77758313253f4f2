// Copyright 2026 The rankcodes Authors.
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

#ifndef RANKCODES_ERROR_H_
#define RANKCODES_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankcodes {

enum class ErrorKind {
  // Field tower.
  kNonPrimeCharacteristic,
  kSkewDivisibilityViolated,
  kAmbientTooLarge,
  kUndeclaredSubfield,
  kZeroInput,
  // Polynomials.
  kDivisionByZeroPoly,
  kBothZero,
  kZeroPoly,
  kZeroConstantTerm,
  kZeroLowestCoefficient,
  kNotInBaseField,
  kNotCoprime,
  kNotADivisor,
  kNotARightDivisor,
  kNotCosetClosed,
  kMixedSkewOrder,
  kOrderCapExceeded,
  kDeskScaleExceeded,
  // Codes.
  kLengthMismatch,
  kNotCyclic,
  kNotSkewCyclic,
  kNotCoprimeGH,
  kEnumerationCapExceeded,
  // Analyses.
  kPathDisagreement,
  kCriterionDisagreement,
  kCheckPolyMismatch,
  kNoBetaForB,
  kVerificationFailed,
  kH0NotCentral,
  // Front end.
  kParseError,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Broad classes used by the command-line front end.
bool IsInvariantFailure(ErrorKind kind);
bool IsCapExceeded(ErrorKind kind);

}  // namespace rankcodes

#endif  // RANKCODES_ERROR_H_
