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

#include "rankcodes/error.h"

namespace rankcodes {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::kSkewDivisibilityViolated: return "SkewDivisibilityViolated";
    case ErrorKind::kAmbientTooLarge: return "AmbientTooLarge";
    case ErrorKind::kUndeclaredSubfield: return "UndeclaredSubfield";
    case ErrorKind::kZeroInput: return "ZeroInput";
    case ErrorKind::kDivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::kBothZero: return "BothZero";
    case ErrorKind::kZeroPoly: return "ZeroPoly";
    case ErrorKind::kZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::kZeroLowestCoefficient: return "ZeroLowestCoefficient";
    case ErrorKind::kNotInBaseField: return "NotInBaseField";
    case ErrorKind::kNotCoprime: return "NotCoprime";
    case ErrorKind::kNotADivisor: return "NotADivisor";
    case ErrorKind::kNotARightDivisor: return "NotARightDivisor";
    case ErrorKind::kNotCosetClosed: return "NotCosetClosed";
    case ErrorKind::kMixedSkewOrder: return "MixedSkewOrder";
    case ErrorKind::kOrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::kDeskScaleExceeded: return "DeskScaleExceeded";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kNotCyclic: return "NotCyclic";
    case ErrorKind::kNotSkewCyclic: return "NotSkewCyclic";
    case ErrorKind::kNotCoprimeGH: return "NotCoprimeGH";
    case ErrorKind::kEnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::kPathDisagreement: return "PathDisagreement";
    case ErrorKind::kCriterionDisagreement: return "CriterionDisagreement";
    case ErrorKind::kCheckPolyMismatch: return "CheckPolyMismatch";
    case ErrorKind::kNoBetaForB: return "NoBetaForB";
    case ErrorKind::kVerificationFailed: return "VerificationFailed";
    case ErrorKind::kH0NotCentral: return "H0NotCentral";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

bool IsInvariantFailure(ErrorKind kind) {
  return kind == ErrorKind::kPathDisagreement || kind == ErrorKind::kCriterionDisagreement ||
         kind == ErrorKind::kVerificationFailed;
}

bool IsCapExceeded(ErrorKind kind) {
  return kind == ErrorKind::kAmbientTooLarge || kind == ErrorKind::kDeskScaleExceeded ||
         kind == ErrorKind::kEnumerationCapExceeded || kind == ErrorKind::kOrderCapExceeded;
}

}  // namespace rankcodes
