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


#include "qrindex/sampler.hpp"

#include "qrindex/errors.hpp"

namespace qri {

bool OsBitSource::NextBit() {
  if (left_ == 0) {
    word_ = device_();
    left_ = 32;
  }
  const bool bit = word_ & 1u;
  word_ >>= 1;
  --left_;
  return bit;
}

bool SeededBitSource::NextBit() {
  if (left_ == 0) {
    word_ = engine_();
    left_ = 64;
  }
  const bool bit = word_ & 1u;
  word_ >>= 1;
  --left_;
  return bit;
}

ScriptedBitSource::ScriptedBitSource(std::string_view script) {
  for (char ch : script) {
    if (ch == '0' || ch == '1') {
      bits_.push_back(ch);
    } else if (ch != ' ') {
      throw Error(ErrorCode::kSyntax,
                  std::string("bit script may only hold '0', '1' and ' ', got '") +
                      ch + "'");
    }
  }
}

bool ScriptedBitSource::NextBit() {
  if (pos_ >= bits_.size()) {
    throw Error(ErrorCode::kBitSourceExhausted,
                "scripted bit source ran out after " +
                    std::to_string(bits_.size()) + " bits");
  }
  return bits_[pos_++] == '1';
}

std::string_view MethodName(SampleMethod method) {
  return method == SampleMethod::kIndex ? "index" : "classical";
}

Nat DrawUniform(const Nat& range, BitSource& src, RandomBitLedger& ledger) {
  if (range < 1) {
    throw Error(ErrorCode::kPrecondition, "DrawUniform needs range >= 1");
  }
  const std::size_t bits = CeilLog2(range);
  if (bits == 0) return 0;
  for (int round = 0; round < kMaxRejectionRounds; ++round) {
    ++ledger.attempts;
    Nat u = 0;
    for (std::size_t i = 0; i < bits; ++i) {
      u <<= 1;
      if (src.NextBit()) u += 1;
    }
    ledger.bits_consumed += bits;
    if (u < range) return u;
  }
  throw Error(ErrorCode::kRejectionLimit,
              "no value below " + range.get_str() + " after " +
                  std::to_string(kMaxRejectionRounds) + " rounds");
}

std::pair<Nat, RandomBitLedger> SampleResidueByIndex(const FactoredModulus& m,
                                                     BitSource& src) {
  RandomBitLedger ledger;
  const Nat z = DrawUniform(m.index_space_size(), src, ledger) + 1;
  return {DecodeIndex(m, QrIndex{z}), ledger};
}

std::pair<Nat, RandomBitLedger> SampleResidueClassical(
    const FactoredModulus& m, BitSource& src) {
  RandomBitLedger ledger;
  const Nat range = m.n() - 1;
  Nat g;
  // Same fail-closed cap as DrawUniform, applied to the gcd retries.
  for (int round = 0; round < kMaxRejectionRounds; ++round) {
    ++ledger.candidates;
    const Nat x = DrawUniform(range, src, ledger) + 1;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), m.n().get_mpz_t());
    if (g == 1) return {x * x % m.n(), ledger};
  }
  throw Error(ErrorCode::kRejectionLimit,
              "no unit modulo " + m.n().get_str() + " after " +
                  std::to_string(kMaxRejectionRounds) + " candidates");
}

std::pair<Nat, RandomBitLedger> SampleResidue(const FactoredModulus& m,
                                              BitSource& src,
                                              SampleMethod method) {
  return method == SampleMethod::kIndex ? SampleResidueByIndex(m, src)
                                        : SampleResidueClassical(m, src);
}

namespace {

SampleReport RunReport(const FactoredModulus& m, SampleMethod method,
                       std::uint64_t n_samples, std::uint64_t seed) {
  SeededBitSource src(seed);
  RandomBitLedger total;
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    total += SampleResidue(m, src, method).second;
  }
  SampleReport report;
  report.method = method;
  report.samples = n_samples;
  report.total_bits = total.bits_consumed;
  report.total_attempts = total.attempts;
  report.total_candidates = total.candidates;
  const double n = static_cast<double>(n_samples);
  report.mean_bits_per_sample = static_cast<double>(total.bits_consumed) / n;
  report.mean_attempts_per_sample = static_cast<double>(total.attempts) / n;
  report.mean_candidates_per_sample = static_cast<double>(total.candidates) / n;
  report.theoretical_floor = Log2(m.index_space_size());
  return report;
}

}  // namespace

std::pair<SampleReport, SampleReport> CompareBitBudgets(
    const FactoredModulus& m, std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) {
    throw Error(ErrorCode::kPrecondition, "n_samples must be >= 1");
  }
  return {RunReport(m, SampleMethod::kIndex, n_samples, seed),
          RunReport(m, SampleMethod::kClassical, n_samples, seed + 1)};
}

}  // namespace qri
