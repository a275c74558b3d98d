// Copyright 2026 The qrindex Authors. All Rights Reserved.
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


#include "qrindex/errors.hpp"

namespace qri {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUndefinedGcd: return "undefined-gcd";
    case ErrorCode::kInvalidModulus: return "invalid-modulus";
    case ErrorCode::kNoInverse: return "no-inverse";
    case ErrorCode::kNotCoprime: return "not-coprime";
    case ErrorCode::kNotAResidue: return "not-a-residue";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kCompositeClaimedPrime: return "composite-claimed-prime";
    case ErrorCode::kRepeatedPrime: return "repeated-prime";
    case ErrorCode::kProductTooSmall: return "product-too-small";
    case ErrorCode::kZeroExponent: return "zero-exponent";
    case ErrorCode::kOracleCapExceeded: return "oracle-cap-exceeded";
    case ErrorCode::kBitSourceExhausted: return "bit-source-exhausted";
    case ErrorCode::kRejectionLimit: return "rejection-limit";
  }
  return "unknown";
}

}  // namespace qri
