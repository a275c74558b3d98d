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


// Brute-force ground truth. Nothing here touches the CRT, Hensel or
// Tonelli-Shanks code paths; residues are found by squaring every unit.

#ifndef QRINDEX_ORACLE_HPP_
#define QRINDEX_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qrindex/qr_index.hpp"

namespace qri::oracle {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

struct QrTable {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> residues;  // ascending, distinct
};

// Squares every x in [1, n) with gcd(x, n) = 1. Throws kOracleCapExceeded
// above cap and kPrecondition below 2.
QrTable EnumerateQr(std::uint64_t n, std::uint64_t cap = kDefaultCap);

// Trial division into a validated FactoredModulus. n >= 2.
FactoredModulus FactorByTrialDivision(std::uint64_t n);

// phi(n) by counting units.
std::uint64_t CountUnits(std::uint64_t n);

struct CertificationReport {
  std::uint64_t n = 0;
  std::uint64_t indices_checked = 0;
  std::vector<std::string> violations;  // each names its witness Z or z

  bool passed() const { return violations.empty(); }
};

// Decodes every index, compares the image with EnumerateQr(N), and checks
// that EncodeResidue inverts each decode. Failures are reported, not thrown.
CertificationReport CertifyBijection(const FactoredModulus& m,
                                     std::uint64_t cap = kDefaultCap);

struct RangeSummary {
  std::uint64_t moduli_checked = 0;
  std::uint64_t indices_checked = 0;
  std::vector<CertificationReport> failures;
};

// CertifyBijection for every n in [2, max_n], spread over worker threads
// (0 = one per hardware thread). Throws kOracleCapExceeded if max_n > cap.
RangeSummary CertifyRange(std::uint64_t max_n, unsigned threads = 0,
                          std::uint64_t cap = kDefaultCap);

}  // namespace qri::oracle

#endif  // QRINDEX_ORACLE_HPP_
