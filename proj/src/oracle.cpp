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


#include "qrindex/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "qrindex/errors.hpp"

namespace qri::oracle {

QrTable EnumerateQr(std::uint64_t n, std::uint64_t cap) {
  if (n < 2) {
    throw Error(ErrorCode::kPrecondition, "EnumerateQr needs n >= 2");
  }
  if (n > cap) {
    throw Error(ErrorCode::kOracleCapExceeded,
                "n = " + std::to_string(n) + " exceeds the oracle cap " +
                    std::to_string(cap));
  }
  std::vector<bool> hit(n, false);
  for (std::uint64_t x = 1; x < n; ++x) {
    if (std::gcd(x, n) == 1) hit[(x * x) % n] = true;
  }
  QrTable table{n, {}};
  for (std::uint64_t z = 0; z < n; ++z) {
    if (hit[z]) table.residues.push_back(z);
  }
  return table;
}

FactoredModulus FactorByTrialDivision(std::uint64_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kProductTooSmall, "cannot factor n < 2");
  }
  unsigned two_exponent = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++two_exponent;
  }
  std::vector<PrimePower> odd;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    unsigned k = 0;
    while (n % f == 0) {
      n /= f;
      ++k;
    }
    if (k > 0) odd.push_back({Nat(static_cast<unsigned long>(f)), k});
  }
  if (n > 1) odd.push_back({Nat(static_cast<unsigned long>(n)), 1});
  return FactoredModulus(two_exponent, std::move(odd));
}

std::uint64_t CountUnits(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 1; x < n; ++x) {
    if (std::gcd(x, n) == 1) ++count;
  }
  return count;
}

CertificationReport CertifyBijection(const FactoredModulus& m,
                                     std::uint64_t cap) {
  CertificationReport report;
  if (!m.n().fits_ulong_p() || m.n().get_ui() > cap) {
    report.violations.push_back("modulus " + m.n().get_str() +
                                " exceeds the oracle cap");
    return report;
  }
  const std::uint64_t n = m.n().get_ui();
  report.n = n;
  const QrTable table = EnumerateQr(n, cap);
  const Nat& size = m.index_space_size();
  if (size != table.residues.size()) {
    report.violations.push_back(
        "I_N = " + size.get_str() + " but |QR(N)| = " +
        std::to_string(table.residues.size()));
  }
  std::vector<bool> in_table(n, false);
  for (std::uint64_t z : table.residues) in_table[z] = true;
  std::vector<bool> seen(n, false);

  const std::uint64_t count = size.get_ui();
  for (std::uint64_t i = 1; i <= count; ++i) {
    ++report.indices_checked;
    const std::string witness = "Z=" + std::to_string(i);
    try {
      const Nat z = DecodeIndex(m, QrIndex{Nat(static_cast<unsigned long>(i))});
      if (z < 0 || z >= m.n()) {
        report.violations.push_back(witness + ": decoded " + z.get_str() +
                                    " outside [0, N)");
        continue;
      }
      const std::uint64_t zu = z.get_ui();
      if (!in_table[zu]) {
        report.violations.push_back(witness + ": decoded z=" +
                                    std::to_string(zu) + " not in QR(N)");
      }
      if (seen[zu]) {
        report.violations.push_back(witness + ": z=" + std::to_string(zu) +
                                    " decoded twice");
      }
      seen[zu] = true;
      const QrIndex back = EncodeResidue(m, z);
      if (back.value != i) {
        report.violations.push_back("z=" + std::to_string(zu) +
                                    ": encoded to " + back.value.get_str() +
                                    ", expected " + std::to_string(i));
      }
    } catch (const Error& e) {
      report.violations.push_back(witness + ": " + std::string(ErrorName(e.code())) +
                                  ": " + e.what());
    }
  }
  for (std::uint64_t z : table.residues) {
    if (!seen[z]) {
      report.violations.push_back("z=" + std::to_string(z) +
                                  " has no index");
    }
  }
  return report;
}

RangeSummary CertifyRange(std::uint64_t max_n, unsigned threads,
                          std::uint64_t cap) {
  if (max_n > cap) {
    throw Error(ErrorCode::kOracleCapExceeded,
                "max n = " + std::to_string(max_n) + " exceeds the oracle cap " +
                    std::to_string(cap));
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  RangeSummary summary;
  if (max_n < 2) return summary;
  std::atomic<std::uint64_t> next{2};
  std::atomic<std::uint64_t> moduli{0};
  std::atomic<std::uint64_t> indices{0};
  std::mutex failures_mu;
  auto worker = [&] {
    for (std::uint64_t n = next++; n <= max_n; n = next++) {
      const CertificationReport report =
          CertifyBijection(FactorByTrialDivision(n), cap);
      moduli += 1;
      indices += report.indices_checked;
      if (!report.passed()) {
        std::lock_guard<std::mutex> lock(failures_mu);
        summary.failures.push_back(report);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  std::sort(summary.failures.begin(), summary.failures.end(),
            [](const auto& a, const auto& b) { return a.n < b.n; });
  summary.moduli_checked = moduli;
  summary.indices_checked = indices;
  return summary;
}

}  // namespace qri::oracle
