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


// The indexing of quadratic residues modulo a factored N.
//
// With N = 2^k * p_1^k_1 * ... * p_r^k_r, a residue z is named by one square
// root per prime power:
//
//   odd part p^e:  y = x + c*p with 1 <= x <= (p-1)/2 and 0 <= c < p^(e-1)
//   2-part, k > 3: y = 1 + 2c with 0 <= c < 2^(k-3)
//   2-part, k <= 3: y = 1 (QR(2^k) = {1})
//
// The digits (x_1 - 1, c_1, x_2 - 1, c_2, ..., c) are packed little-endian
// into one mixed-radix numeral, giving a bijection between [1, I_N] and
// QR(N). Decoding recombines the roots by CRT and squares the result.

#ifndef QRINDEX_QR_INDEX_HPP_
#define QRINDEX_QR_INDEX_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrindex/numeric.hpp"

namespace qri {

struct PrimePower {
  Nat p;  // odd prime
  unsigned k = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// N together with its complete factorization. Immutable once built; the
// constructor validates every claim it is given.
class FactoredModulus {
 public:
  // Odd parts may arrive in any order; they are sorted by prime.
  // Throws kCompositeClaimedPrime, kRepeatedPrime, kZeroExponent or
  // kProductTooSmall.
  FactoredModulus(unsigned two_exponent, std::vector<PrimePower> odd_parts);

  // Grammar: FACTORS := TERM ('*' TERM)*, TERM := DIGITS ('^' DIGITS)?,
  // whitespace allowed around the operators. Bases in any order.
  static FactoredModulus Parse(std::string_view text);

  unsigned two_exponent() const { return two_exponent_; }
  std::span<const PrimePower> odd_parts() const { return odd_parts_; }
  std::size_t r() const { return odd_parts_.size(); }
  const Nat& n() const { return n_; }
  const Nat& phi() const { return phi_; }

  // p_i^k_i aligned with odd_parts(), and 2^k (1 when k = 0).
  std::span<const Nat> odd_moduli() const { return odd_moduli_; }
  const Nat& two_modulus() const { return two_modulus_; }

  const RadixSchedule& schedule() const { return schedule_; }
  const Nat& index_space_size() const { return schedule_.capacity(); }

  // Canonical text form, e.g. "2^4 * 3 * 5^2".
  std::string ToString() const;

 private:
  unsigned two_exponent_;
  std::vector<PrimePower> odd_parts_;
  std::vector<Nat> odd_moduli_;
  Nat two_modulus_;
  Nat n_;
  Nat phi_;
  RadixSchedule schedule_;
};

// 1-based position in [1, I_N].
struct QrIndex {
  Nat value;

  friend bool operator==(const QrIndex&, const QrIndex&) = default;
};

struct OddRoot {
  Nat x;  // 1 <= x <= (p-1)/2
  Nat c;  // 0 <= c < p^(k-1)

  friend bool operator==(const OddRoot&, const OddRoot&) = default;
};

// The per-prime data an index packs.
struct RootProfile {
  std::vector<OddRoot> odd_roots;     // aligned with odd_parts()
  std::optional<Nat> two_part_digit;  // present iff two_exponent > 3

  friend bool operator==(const RootProfile&, const RootProfile&) = default;
};

// I_N = 2^max(k-3, 0) * prod ((p_i - 1)/2) * p_i^(k_i - 1) = |QR(N)|.
Nat IndexSpaceSize(const FactoredModulus& m);

// [(p_1-1)/2, p_1^(k_1-1), ..., (p_r-1)/2, p_r^(k_r-1)] then 2^(k-3) if k > 3.
RadixSchedule MakeRadixSchedule(const FactoredModulus& m);

RootProfile ProfileFromIndex(const FactoredModulus& m, const QrIndex& index);
QrIndex IndexFromProfile(const FactoredModulus& m, const RootProfile& profile);

// y_i = x_i + c_i p_i, y = 1 + 2c, CRT, then square mod N.
Nat ResidueFromProfile(const FactoredModulus& m, const RootProfile& profile);

// Canonical roots of z. Throws kNotCoprime or kNotAResidue.
RootProfile ProfileFromResidue(const FactoredModulus& m, const Nat& z);

// The decoder: index in [1, I_N] to its quadratic residue.
Nat DecodeIndex(const FactoredModulus& m, const QrIndex& index);

// Inverse of DecodeIndex. z must lie in [0, N).
QrIndex EncodeResidue(const FactoredModulus& m, const Nat& z);

// Local characterization: z a unit, Euler's criterion at every odd prime,
// z = 1 mod 4 when k = 2 and z = 1 mod 8 when k >= 3. False outside [0, N).
bool IsQuadraticResidue(const FactoredModulus& m, const Nat& z);

}  // namespace qri

#endif  // QRINDEX_QR_INDEX_HPP_
