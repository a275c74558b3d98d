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

#include "qrindex/numeric.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "qrindex/errors.hpp"

namespace qri {

namespace {

std::string Str(const Nat& n) { return n.get_str(); }

// Non-negative remainder; mpz_class::operator% truncates toward zero.
Nat Mod(const Nat& a, const Nat& m) {
  Nat r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Nat Pow2(unsigned k) {
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

constexpr std::array<unsigned, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};
constexpr int kProbabilisticRounds = 64;
constexpr unsigned long kWitnessSeed = 0x51ed270b27a3c5e1UL;

// One Miller-Rabin round with n - 1 = d * 2^s, d odd. True if n passes.
bool MillerRabinRound(const Nat& n, const Nat& n_minus_1, const Nat& d,
                      unsigned s, const Nat& a) {
  Nat x = ModPow(a, d, n);
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool IsSmallPrime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

void RequireOddPrime(const Nat& p, const char* op) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !IsPrime(p)) {
    throw Error(ErrorCode::kPrecondition,
                std::string(op) + ": " + Str(p) + " is not an odd prime");
  }
}

}  // namespace

const Nat kDeterministicPrimeBound("3317044064679887385961981");

RadixSchedule::RadixSchedule(std::vector<Nat> radices)
    : radices_(std::move(radices)) {
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    if (radices_[i] < 1) {
      throw Error(ErrorCode::kPrecondition,
                  "radix at position " + std::to_string(i) + " is " +
                      Str(radices_[i]) + ", must be >= 1");
    }
    capacity_ *= radices_[i];
  }
}

ExtGcdResult ExtGcd(const Nat& a, const Nat& b) {
  if (a == 0 && b == 0) {
    throw Error(ErrorCode::kUndefinedGcd, "gcd(0, 0) is undefined");
  }
  // Invariant: old_s*a + old_t*b = old_r and s*a + t*b = r.
  Nat old_r = a, r = b;
  Nat old_s = 1, s = 0;
  Nat old_t = 0, t = 1;
  Nat q, tmp;
  while (r != 0) {
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  return {old_r, old_s, old_t};
}

Nat ModPow(const Nat& base, const Nat& exp, const Nat& m) {
  if (m < 1) {
    throw Error(ErrorCode::kInvalidModulus,
                "modulus must be >= 1, got " + Str(m));
  }
  if (exp < 0) {
    throw Error(ErrorCode::kPrecondition, "negative exponent");
  }
  if (m == 1) return 0;
  const Nat b = Mod(base, m);
  Nat result = 1;
  for (std::size_t bit = mpz_sizeinbase(exp.get_mpz_t(), 2); bit-- > 0;) {
    result = result * result % m;
    if (mpz_tstbit(exp.get_mpz_t(), bit)) result = result * b % m;
  }
  return result;
}

Nat ModInverse(const Nat& a, const Nat& m) {
  if (m < 2) {
    throw Error(ErrorCode::kInvalidModulus,
                "inverse needs modulus >= 2, got " + Str(m));
  }
  const ExtGcdResult r = ExtGcd(Mod(a, m), m);
  if (r.g != 1) {
    throw NoInverseError(r.g, Str(a) + " has no inverse modulo " + Str(m) +
                                  " (gcd " + Str(r.g) + ")");
  }
  return Mod(r.s, m);
}

Nat CrtCombine(std::span<const ResidueClass> parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::kPrecondition, "CRT needs at least one part");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const ResidueClass& part = parts[i];
    if (part.modulus < 1 || part.value < 0 || part.value >= part.modulus) {
      throw Error(ErrorCode::kPrecondition,
                  "CRT part " + std::to_string(i) + " is not reduced: " +
                      Str(part.value) + " mod " + Str(part.modulus));
    }
    for (std::size_t j = 0; j < i; ++j) {
      Nat g;
      mpz_gcd(g.get_mpz_t(), parts[j].modulus.get_mpz_t(),
              part.modulus.get_mpz_t());
      if (g != 1) {
        throw Error(ErrorCode::kNotCoprime,
                    "moduli " + Str(parts[j].modulus) + " and " +
                        Str(part.modulus) + " share the factor " + Str(g));
      }
    }
  }
  // Incremental recombination: x solves the first i parts modulo m.
  Nat x = parts[0].value;
  Nat m = parts[0].modulus;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const ResidueClass& part = parts[i];
    if (part.modulus == 1) continue;
    const Nat t =
        Mod((part.value - x) * ModInverse(m, part.modulus), part.modulus);
    x += m * t;
    m *= part.modulus;
  }
  return x;
}

bool IsPrime(const Nat& n) {
  if (n < 2) return false;
  for (unsigned w : kWitnesses) {
    if (n == w) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;
  }
  const Nat n_minus_1 = n - 1;
  Nat d = n_minus_1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  if (n < kDeterministicPrimeBound) {
    for (unsigned w : kWitnesses) {
      if (!MillerRabinRound(n, n_minus_1, d, s, Nat(w))) return false;
    }
    return true;
  }
  // Fixed seed keeps the verdict reproducible across runs.
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(kWitnessSeed);
  const Nat span = n - 3;
  for (int round = 0; round < kProbabilisticRounds; ++round) {
    const Nat a = rng.get_z_range(span) + 2;
    if (!MillerRabinRound(n, n_minus_1, d, s, a)) return false;
  }
  return true;
}

bool IsResidueModPrime(const Nat& a, const Nat& p) {
  return ModPow(a, (p - 1) / 2, p) == 1;
}

namespace internal {

Nat SqrtModOddPrime(const Nat& a, const Nat& p) {
  if (!IsResidueModPrime(a, p)) {
    throw Error(ErrorCode::kNotAResidue,
                Str(a) + " is not a quadratic residue modulo " + Str(p));
  }
  Nat root;
  if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
    root = ModPow(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks with p - 1 = q * 2^s.
    Nat q = p - 1;
    unsigned s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
      q >>= 1;
      ++s;
    }
    unsigned long candidate = 2;
    while (!IsSmallPrime(candidate) ||
           IsResidueModPrime(Nat(candidate), p)) {
      ++candidate;
    }
    Nat c = ModPow(Nat(candidate), q, p);
    Nat t = ModPow(a, q, p);
    root = ModPow(a, (q + 1) / 2, p);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      Nat t2i = t;
      while (t2i != 1) {
        t2i = t2i * t2i % p;
        ++i;
      }
      Nat b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      root = root * b % p;
    }
  }
  if (root > (p - 1) / 2) root = p - root;
  return root;
}

Nat HenselLiftOddPrime(const Nat& x, const Nat& z, const Nat& p, unsigned k) {
  Nat y = Mod(x, p);
  if (Mod(y * y - z, p) != 0) {
    throw Error(ErrorCode::kPrecondition,
                Str(x) + "^2 is not " + Str(z) + " modulo " + Str(p));
  }
  // y stays congruent to x mod p, so 1/(2y) mod p is fixed.
  const Nat inv_2y = ModInverse(2 * y, p);
  Nat pj = p;
  Nat f;
  for (unsigned j = 1; j < k; ++j) {
    mpz_divexact(f.get_mpz_t(), Nat(y * y - z).get_mpz_t(), pj.get_mpz_t());
    y += Mod(-f * inv_2y, p) * pj;
    pj *= p;
  }
  return Mod(y, pj);
}

}  // namespace internal

Nat SqrtModPrime(const Nat& a, const Nat& p) {
  RequireOddPrime(p, "SqrtModPrime");
  if (a < 1 || a >= p) {
    throw Error(ErrorCode::kPrecondition,
                "SqrtModPrime: " + Str(a) + " is not in [1, " + Str(p) + ")");
  }
  return internal::SqrtModOddPrime(a, p);
}

Nat HenselLiftSqrt(const Nat& x, const Nat& z, const Nat& p, unsigned k) {
  RequireOddPrime(p, "HenselLiftSqrt");
  if (k < 1) {
    throw Error(ErrorCode::kPrecondition, "HenselLiftSqrt: k must be >= 1");
  }
  if (Mod(z, p) == 0) {
    throw Error(ErrorCode::kPrecondition,
                "HenselLiftSqrt: " + Str(z) + " is not a unit modulo " +
                    Str(p));
  }
  return internal::HenselLiftOddPrime(x, z, p, k);
}

Nat SqrtMod2k(const Nat& z, unsigned k) {
  if (k < 4) {
    throw Error(ErrorCode::kPrecondition,
                "SqrtMod2k: k must be >= 4, got " + std::to_string(k));
  }
  const Nat modulus = Pow2(k);
  if (z < 0 || z >= modulus) {
    throw Error(ErrorCode::kPrecondition,
                "SqrtMod2k: " + Str(z) + " is not reduced modulo 2^" +
                    std::to_string(k));
  }
  if (mpz_fdiv_ui(z.get_mpz_t(), 8) != 1) {
    throw Error(ErrorCode::kNotAResidue,
                Str(z) + " is not a quadratic residue modulo 2^" +
                    std::to_string(k));
  }
  // y = 1 is a root mod 8. If y is a root mod 2^j (j >= 3) then exactly one
  // of y, y + 2^(j-1) is a root mod 2^(j+1).
  Nat y = 1;
  Nat half = 4;  // 2^(j-1)
  for (unsigned j = 3; j < k; ++j) {
    Nat next = half * 4;  // 2^(j+1)
    if (Mod(y * y - z, next) != 0) y += half;
    half *= 2;
  }
  // Roots are {y, -y, y + 2^(k-1), 2^(k-1) - y}; exactly one is below 2^(k-2).
  const Nat quarter = Pow2(k - 2);
  const Nat mid = Pow2(k - 1);
  for (const Nat& cand : {Nat(y), Nat(modulus - y), Mod(y + mid, modulus),
                          Mod(mid - y, modulus)}) {
    if (cand < quarter) return cand;
  }
  throw Error(ErrorCode::kPrecondition, "SqrtMod2k: no canonical root found");
}

Nat MixedRadixEncode(std::span<const Nat> digits,
                     const RadixSchedule& schedule) {
  if (digits.size() != schedule.size()) {
    throw Error(ErrorCode::kPrecondition,
                "got " + std::to_string(digits.size()) + " digits for " +
                    std::to_string(schedule.size()) + " radices");
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= schedule[i]) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "digit " + Str(digits[i]) + " at position " +
                      std::to_string(i) + " is outside [0, " +
                      Str(schedule[i]) + ")");
    }
  }
  Nat w = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    w *= schedule[i];
    w += digits[i];
  }
  return w;
}

std::vector<Nat> MixedRadixDecode(const Nat& w, const RadixSchedule& schedule) {
  if (w < 0 || w >= schedule.capacity()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                Str(w) + " is outside [0, " + Str(schedule.capacity()) + ")");
  }
  std::vector<Nat> digits(schedule.size());
  Nat rest = w;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    mpz_fdiv_qr(rest.get_mpz_t(), digits[i].get_mpz_t(), rest.get_mpz_t(),
                schedule[i].get_mpz_t());
  }
  return digits;
}

std::size_t CeilLog2(const Nat& n) {
  if (n <= 1) return 0;
  const Nat m = n - 1;
  return mpz_sizeinbase(m.get_mpz_t(), 2);
}

double Log2(const Nat& n) {
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exp);
}

Nat FromDecimal(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::kSyntax, "expected a decimal number, got ''");
  }
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw Error(ErrorCode::kSyntax, "expected a decimal number, got '" +
                                          std::string(text) + "'");
    }
  }
  return Nat(std::string(text), 10);
}

}  // namespace qri
