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


#include <vector>

#include "doctest.h"
#include "qrindex/errors.hpp"
#include "qrindex/oracle.hpp"

namespace qri::oracle {
namespace {

using Residues = std::vector<std::uint64_t>;

TEST_CASE("EnumerateQr") {
  CHECK(EnumerateQr(15).residues == Residues{1, 4});
  CHECK(EnumerateQr(8).residues == Residues{1});
  CHECK(EnumerateQr(21).residues == Residues{1, 4, 16});
  CHECK(EnumerateQr(2).residues == Residues{1});
  CHECK(EnumerateQr(105).residues == Residues{1, 4, 16, 46, 64, 79});
  CHECK_THROWS_AS(EnumerateQr(1), Error);
  try {
    EnumerateQr(101, 100);
    FAIL("expected kOracleCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOracleCapExceeded);
  }
}

TEST_CASE("FactorByTrialDivision") {
  const FactoredModulus m = FactorByTrialDivision(2 * 2 * 2 * 2 * 9 * 7 * 7 * 13);
  CHECK(m.two_exponent() == 4);
  CHECK(m.ToString() == "2^4 * 3^2 * 7^2 * 13");
  CHECK(FactorByTrialDivision(997).ToString() == "997");
  CHECK(FactorByTrialDivision(2).ToString() == "2");
}

TEST_CASE("Size formula matches counting for N <= 1000") {
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    const FactoredModulus m = FactorByTrialDivision(n);
    CHECK(m.index_space_size() == EnumerateQr(n).residues.size());
    CHECK(m.phi() == CountUnits(n));
  }
}

TEST_CASE("CertifyBijection") {
  const CertificationReport r15 = CertifyBijection(FactoredModulus::Parse("3*5"));
  CHECK(r15.passed());
  CHECK(r15.indices_checked == 2);
  const CertificationReport r48 = CertifyBijection(FactoredModulus::Parse("2^4*3"));
  CHECK(r48.passed());
  CHECK(r48.indices_checked == 2);

  const CertificationReport big = CertifyBijection(FactoredModulus::Parse("1009*1013"), 1000);
  CHECK_FALSE(big.passed());
}

TEST_CASE("CertifyRange") {
  const RangeSummary summary = CertifyRange(500, 4);
  CHECK(summary.moduli_checked == 499);
  CHECK(summary.failures.empty());
  CHECK_THROWS_AS(CertifyRange(2'000'000), Error);
}

}  // namespace
}  // namespace qri::oracle
