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


#ifndef QRINDEX_SAMPLER_HPP_
#define QRINDEX_SAMPLER_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "qrindex/numeric.hpp"
#include "qrindex/qr_index.hpp"

namespace qri {

// A stream of fair coin flips, one per call.
class BitSource {
 public:
  virtual ~BitSource() = default;
  virtual bool NextBit() = 0;
};

// std::random_device.
class OsBitSource final : public BitSource {
 public:
  bool NextBit() override;

 private:
  std::random_device device_;
  std::uint32_t word_ = 0;
  int left_ = 0;
};

// std::mt19937_64 seeded with the 64-bit seed; each 64-bit output is consumed
// least significant bit first. Fully determined by the seed.
class SeededBitSource final : public BitSource {
 public:
  explicit SeededBitSource(std::uint64_t seed) : engine_(seed) {}
  bool NextBit() override;

 private:
  std::mt19937_64 engine_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

// Replays a string of '0'/'1' characters; spaces are ignored. Running past
// the end throws kBitSourceExhausted.
class ScriptedBitSource final : public BitSource {
 public:
  explicit ScriptedBitSource(std::string_view script);
  bool NextBit() override;

  std::size_t consumed() const { return pos_; }
  std::size_t remaining() const { return bits_.size() - pos_; }

 private:
  std::string bits_;
  std::size_t pos_ = 0;
};

struct RandomBitLedger {
  std::uint64_t bits_consumed = 0;
  std::uint64_t attempts = 0;    // rejection rounds inside DrawUniform
  std::uint64_t candidates = 0;  // classical sampler: x values drawn

  RandomBitLedger& operator+=(const RandomBitLedger& other) {
    bits_consumed += other.bits_consumed;
    attempts += other.attempts;
    candidates += other.candidates;
    return *this;
  }
};

enum class SampleMethod { kIndex, kClassical };

std::string_view MethodName(SampleMethod method);

struct SampleReport {
  SampleMethod method = SampleMethod::kIndex;
  std::uint64_t samples = 0;
  std::uint64_t total_bits = 0;
  std::uint64_t total_attempts = 0;
  std::uint64_t total_candidates = 0;
  double mean_bits_per_sample = 0;
  double mean_attempts_per_sample = 0;
  double mean_candidates_per_sample = 0;
  double theoretical_floor = 0;  // log2 I_N
};

// Rejection rounds after which DrawUniform gives up.
inline constexpr int kMaxRejectionRounds = 128;

// Uniform u in [0, range): read ceil(log2 range) bits most significant first,
// accept if below range. Throws kRejectionLimit after kMaxRejectionRounds.
Nat DrawUniform(const Nat& range, BitSource& src, RandomBitLedger& ledger);

// Uniform Z in [1, I_N], decoded.
std::pair<Nat, RandomBitLedger> SampleResidueByIndex(const FactoredModulus& m,
                                                     BitSource& src);

// Uniform x in [1, N-1], retried until gcd(x, N) = 1, then squared.
std::pair<Nat, RandomBitLedger> SampleResidueClassical(
    const FactoredModulus& m, BitSource& src);

std::pair<Nat, RandomBitLedger> SampleResidue(const FactoredModulus& m,
                                              BitSource& src,
                                              SampleMethod method);

// Runs both samplers n_samples times. The index method reads from a
// SeededBitSource(seed), the classical method from SeededBitSource(seed + 1).
std::pair<SampleReport, SampleReport> CompareBitBudgets(
    const FactoredModulus& m, std::uint64_t n_samples, std::uint64_t seed);

}  // namespace qri

#endif  // QRINDEX_SAMPLER_HPP_
