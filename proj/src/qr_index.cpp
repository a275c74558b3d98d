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


#include "qrindex/qr_index.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "qrindex/errors.hpp"

namespace qri {

namespace {

// Larger exponents are rejected at parse time; they would not describe a
// modulus anyone can work with.
constexpr unsigned kMaxExponent = 1u << 16;

std::string Str(const Nat& n) { return n.get_str(); }

Nat Pow(const Nat& base, unsigned e) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Nat Mod(const Nat& a, const Nat& m) {
  Nat r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

class FactorParser {
 public:
  explicit FactorParser(std::string_view text) : text_(text) {}

  // (base, exponent) terms in input order.
  std::vector<std::pair<Nat, unsigned>> Run() {
    std::vector<std::pair<Nat, unsigned>> terms;
    SkipSpace();
    terms.push_back(Term());
    SkipSpace();
    while (pos_ < text_.size()) {
      Expect('*');
      SkipSpace();
      terms.push_back(Term());
      SkipSpace();
    }
    return terms;
  }

 private:
  std::pair<Nat, unsigned> Term() {
    Nat base = Digits();
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      SkipSpace();
      const Nat e = Digits();
      if (e > kMaxExponent) {
        throw Error(ErrorCode::kSyntax,
                    "exponent " + Str(e) + " exceeds " +
                        std::to_string(kMaxExponent));
      }
      return {std::move(base), static_cast<unsigned>(e.get_ui())};
    }
    return {std::move(base), 1};
  }

  Nat Digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected digits");
    return FromDecimal(text_.substr(start, pos_ - start));
  }

  void Expect(char ch) {
    if (pos_ >= text_.size() || text_[pos_] != ch) {
      Fail(std::string("expected '") + ch + "'");
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntax, what + " at offset " +
                                        std::to_string(pos_) + " in '" +
                                        std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FactoredModulus::FactoredModulus(unsigned two_exponent,
                                 std::vector<PrimePower> odd_parts)
    : two_exponent_(two_exponent), odd_parts_(std::move(odd_parts)) {
  std::sort(odd_parts_.begin(), odd_parts_.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
  for (std::size_t i = 0; i < odd_parts_.size(); ++i) {
    const PrimePower& part = odd_parts_[i];
    if (part.k == 0) {
      throw Error(ErrorCode::kZeroExponent,
                  "prime " + Str(part.p) + " has exponent 0");
    }
    if (part.p == 2 || !IsPrime(part.p)) {
      throw Error(ErrorCode::kCompositeClaimedPrime,
                  Str(part.p) + " is not an odd prime");
    }
    if (i > 0 && odd_parts_[i - 1].p == part.p) {
      throw Error(ErrorCode::kRepeatedPrime,
                  "prime " + Str(part.p) + " appears more than once");
    }
  }

  two_modulus_ = Pow(Nat(2), two_exponent_);
  n_ = two_modulus_;
  phi_ = two_exponent_ == 0 ? Nat(1) : Pow(Nat(2), two_exponent_ - 1);
  std::vector<Nat> radices;
  radices.reserve(2 * odd_parts_.size() + 1);
  for (const PrimePower& part : odd_parts_) {
    const Nat lower = Pow(part.p, part.k - 1);
    odd_moduli_.push_back(lower * part.p);
    n_ *= odd_moduli_.back();
    phi_ *= (part.p - 1) * lower;
    radices.push_back((part.p - 1) / 2);
    radices.push_back(lower);
  }
  if (n_ < 2) {
    throw Error(ErrorCode::kProductTooSmall, "modulus must be at least 2");
  }
  if (two_exponent_ > 3) radices.push_back(Pow(Nat(2), two_exponent_ - 3));
  schedule_ = RadixSchedule(std::move(radices));
}

FactoredModulus FactoredModulus::Parse(std::string_view text) {
  unsigned two_exponent = 0;
  bool seen_two = false;
  std::vector<PrimePower> odd;
  for (auto& [base, e] : FactorParser(text).Run()) {
    if (e == 0) {
      throw Error(ErrorCode::kZeroExponent,
                  "factor " + Str(base) + " has exponent 0");
    }
    if (base == 2) {
      if (seen_two) {
        throw Error(ErrorCode::kRepeatedPrime, "prime 2 appears more than once");
      }
      seen_two = true;
      two_exponent = e;
    } else {
      odd.push_back({std::move(base), e});
    }
  }
  return FactoredModulus(two_exponent, std::move(odd));
}

std::string FactoredModulus::ToString() const {
  std::string out;
  auto append = [&out](const Nat& p, unsigned k) {
    if (!out.empty()) out += " * ";
    out += Str(p);
    if (k != 1) out += "^" + std::to_string(k);
  };
  if (two_exponent_ > 0) append(Nat(2), two_exponent_);
  for (const PrimePower& part : odd_parts_) append(part.p, part.k);
  return out;
}

Nat IndexSpaceSize(const FactoredModulus& m) { return m.index_space_size(); }

RadixSchedule MakeRadixSchedule(const FactoredModulus& m) {
  return m.schedule();
}

RootProfile ProfileFromIndex(const FactoredModulus& m, const QrIndex& index) {
  if (index.value < 1 || index.value > m.index_space_size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + Str(index.value) + " is outside [1, " +
                    Str(m.index_space_size()) + "]");
  }
  std::vector<Nat> digits = MixedRadixDecode(index.value - 1, m.schedule());
  RootProfile profile;
  profile.odd_roots.reserve(m.r());
  for (std::size_t i = 0; i < m.r(); ++i) {
    profile.odd_roots.push_back(
        {digits[2 * i] + 1, std::move(digits[2 * i + 1])});
  }
  if (m.two_exponent() > 3) profile.two_part_digit = std::move(digits.back());
  return profile;
}

QrIndex IndexFromProfile(const FactoredModulus& m, const RootProfile& profile) {
  if (profile.odd_roots.size() != m.r() ||
      profile.two_part_digit.has_value() != (m.two_exponent() > 3)) {
    throw Error(ErrorCode::kPrecondition,
                "root profile does not match the shape of " + m.ToString());
  }
  std::vector<Nat> digits;
  digits.reserve(m.schedule().size());
  for (const OddRoot& root : profile.odd_roots) {
    digits.push_back(root.x - 1);
    digits.push_back(root.c);
  }
  if (profile.two_part_digit) digits.push_back(*profile.two_part_digit);
  return {MixedRadixEncode(digits, m.schedule()) + 1};
}

Nat ResidueFromProfile(const FactoredModulus& m, const RootProfile& profile) {
  std::vector<ResidueClass> parts;
  parts.reserve(m.r() + 1);
  if (m.two_exponent() > 0) {
    Nat y = 1;
    if (profile.two_part_digit) y += 2 * *profile.two_part_digit;
    parts.push_back({std::move(y), m.two_modulus()});
  }
  for (std::size_t i = 0; i < m.r(); ++i) {
    const OddRoot& root = profile.odd_roots[i];
    parts.push_back({root.x + root.c * m.odd_parts()[i].p, m.odd_moduli()[i]});
  }
  const Nat x = CrtCombine(parts);
  return x * x % m.n();
}

RootProfile ProfileFromResidue(const FactoredModulus& m, const Nat& z) {
  if (z < 0 || z >= m.n()) {
    throw Error(ErrorCode::kPrecondition,
                Str(z) + " is not reduced modulo " + Str(m.n()));
  }
  Nat g;
  mpz_gcd(g.get_mpz_t(), z.get_mpz_t(), m.n().get_mpz_t());
  if (g != 1) {
    throw Error(ErrorCode::kNotCoprime,
                Str(z) + " shares the factor " + Str(g) + " with " +
                    Str(m.n()));
  }
  RootProfile profile;
  profile.odd_roots.reserve(m.r());
  for (std::size_t i = 0; i < m.r(); ++i) {
    const PrimePower& part = m.odd_parts()[i];
    // x is canonical, and the lift keeps y = x (mod p), so y never needs
    // folding into the lower half.
    const Nat x = internal::SqrtModOddPrime(Mod(z, part.p), part.p);
    const Nat y = internal::HenselLiftOddPrime(x, Mod(z, m.odd_moduli()[i]),
                                               part.p, part.k);
    Nat c;
    mpz_divexact(c.get_mpz_t(), Nat(y - x).get_mpz_t(), part.p.get_mpz_t());
    profile.odd_roots.push_back({x, std::move(c)});
  }
  const unsigned k = m.two_exponent();
  if (k >= 2) {
    const unsigned long need = k == 2 ? 4 : 8;
    if (mpz_fdiv_ui(z.get_mpz_t(), need) != 1) {
      throw Error(ErrorCode::kNotAResidue,
                  Str(z) + " is not a quadratic residue modulo 2^" +
                      std::to_string(k));
    }
  }
  if (k > 3) {
    const Nat y = SqrtMod2k(Mod(z, m.two_modulus()), k);
    profile.two_part_digit = (y - 1) / 2;
  }
  return profile;
}

Nat DecodeIndex(const FactoredModulus& m, const QrIndex& index) {
  return ResidueFromProfile(m, ProfileFromIndex(m, index));
}

QrIndex EncodeResidue(const FactoredModulus& m, const Nat& z) {
  return IndexFromProfile(m, ProfileFromResidue(m, z));
}

bool IsQuadraticResidue(const FactoredModulus& m, const Nat& z) {
  if (z < 1 || z >= m.n()) return false;
  Nat g;
  mpz_gcd(g.get_mpz_t(), z.get_mpz_t(), m.n().get_mpz_t());
  if (g != 1) return false;
  for (const PrimePower& part : m.odd_parts()) {
    if (!IsResidueModPrime(Mod(z, part.p), part.p)) return false;
  }
  const unsigned k = m.two_exponent();
  if (k == 2) return mpz_fdiv_ui(z.get_mpz_t(), 4) == 1;
  if (k >= 3) return mpz_fdiv_ui(z.get_mpz_t(), 8) == 1;
  return true;
}

}  // namespace qri
