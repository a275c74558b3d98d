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

// Modular-arithmetic primitives and the mixed-radix codec.
//
// Values are arbitrary precision (GMP integers). Everything here is a pure
// function of its arguments; results are always reduced to the canonical
// non-negative representative.

#ifndef QRINDEX_NUMERIC_HPP_
#define QRINDEX_NUMERIC_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qri {

using Nat = mpz_class;

// A residue value together with its modulus. 0 <= value < modulus.
struct ResidueClass {
  Nat value;
  Nat modulus;
};

// Ordered radices of a mixed-radix numeral. Entries may be 1, in which case
// the corresponding digit is always 0.
class RadixSchedule {
 public:
  RadixSchedule() = default;
  explicit RadixSchedule(std::vector<Nat> radices);

  std::span<const Nat> radices() const { return radices_; }
  std::size_t size() const { return radices_.size(); }
  const Nat& operator[](std::size_t i) const { return radices_[i]; }

  // Product of all radices, i.e. the size of the codomain.
  const Nat& capacity() const { return capacity_; }

 private:
  std::vector<Nat> radices_;
  Nat capacity_ = 1;
};

struct ExtGcdResult {
  Nat g;
  Nat s;  // signed
  Nat t;  // signed
};

// g = gcd(a, b) with s*a + t*b = g. Throws kUndefinedGcd when a = b = 0.
ExtGcdResult ExtGcd(const Nat& a, const Nat& b);

// base^exp mod m by left-to-right square-and-multiply. m >= 1.
Nat ModPow(const Nat& base, const Nat& exp, const Nat& m);

// Inverse of a modulo m in (0, m). Throws NoInverseError if gcd(a, m) != 1.
Nat ModInverse(const Nat& a, const Nat& m);

// Unique x in [0, prod moduli) matching every part. Moduli must be pairwise
// coprime; a shared factor throws kNotCoprime naming the pair.
Nat CrtCombine(std::span<const ResidueClass> parts);

// Miller-Rabin. Deterministic below kDeterministicPrimeBound using the first
// twelve primes as witnesses, 64 pseudo-random rounds above it.
bool IsPrime(const Nat& n);

// Below this bound the witnesses 2, 3, ..., 37 decide primality exactly.
extern const Nat kDeterministicPrimeBound;

// Euler's criterion for an odd prime p and a unit a mod p.
bool IsResidueModPrime(const Nat& a, const Nat& p);

// Square root of a modulo the odd prime p, canonicalized into
// [1, (p - 1) / 2]. Uses a^((p+1)/4) when p = 3 mod 4, Tonelli-Shanks
// otherwise.
Nat SqrtModPrime(const Nat& a, const Nat& p);

// Lifts a root x of z mod p to the unique y mod p^k with y = x (mod p).
Nat HenselLiftSqrt(const Nat& x, const Nat& z, const Nat& p, unsigned k);

// The unique odd root y of z mod 2^k with 1 <= y < 2^(k-2). Needs k >= 4
// and z = 1 (mod 8).
Nat SqrtMod2k(const Nat& z, unsigned k);

// Little-endian positional value: d0 + r0 * (d1 + r1 * (d2 + ...)).
Nat MixedRadixEncode(std::span<const Nat> digits,
                     const RadixSchedule& schedule);
std::vector<Nat> MixedRadixDecode(const Nat& w, const RadixSchedule& schedule);

// Number of bits needed to write n - 1, i.e. ceil(log2 n) for n >= 1.
std::size_t CeilLog2(const Nat& n);

// log2(n) as a double; n >= 1.
double Log2(const Nat& n);

// Strict decimal parse (digits only). Throws kSyntax otherwise.
Nat FromDecimal(std::string_view text);

namespace internal {

// Unchecked variants for callers that already hold a validated odd prime.
Nat SqrtModOddPrime(const Nat& a, const Nat& p);
Nat HenselLiftOddPrime(const Nat& x, const Nat& z, const Nat& p, unsigned k);

}  // namespace internal

}  // namespace qri

#endif  // QRINDEX_NUMERIC_HPP_
