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

#ifndef QRINDEX_ERRORS_HPP_
#define QRINDEX_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qri {

// Every failure raised by the library carries one of these codes. The C API
// maps them one-to-one onto qri_status values.
enum class ErrorCode {
  kUndefinedGcd,
  kInvalidModulus,
  kNoInverse,
  kNotCoprime,
  kNotAResidue,
  kPrecondition,
  kIndexOutOfRange,
  kSyntax,
  kCompositeClaimedPrime,
  kRepeatedPrime,
  kProductTooSmall,
  kZeroExponent,
  kOracleCapExceeded,
  kBitSourceExhausted,
  kRejectionLimit,
};

// Stable identifier, e.g. "not-a-residue". Used on the CLI diagnostic stream.
std::string_view ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by ModInverse; carries gcd(a, m) > 1.
class NoInverseError : public Error {
 public:
  NoInverseError(const mpz_class& gcd, const std::string& what)
      : Error(ErrorCode::kNoInverse, what), gcd_(gcd) {}

  const mpz_class& gcd() const noexcept { return gcd_; }

 private:
  mpz_class gcd_;
};

}  // namespace qri

#endif  // QRINDEX_ERRORS_HPP_
