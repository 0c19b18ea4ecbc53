// Copyright 2026 The tpcalc Authors
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tpcalc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class SemiringTag : std::uint8_t {
  Bool,      // ({0,1}, or, and)
  Nat,       // arbitrary-precision naturals
  QNonNeg,   // non-negative rationals
  Rational,  // rationals
  QI,        // a + b i, a and b rational
  QR2,       // a + b sqrt(2), a and b rational
  Float,     // double with tolerance; demos only
};

// CLI/literal tag: bool|nat|qnn|q|qi|qr2|f64.
std::string_view tag_name(SemiringTag tag);
std::optional<SemiringTag> tag_from_name(std::string_view name);
const std::vector<SemiringTag>& all_tags();
const std::vector<SemiringTag>& exact_tags();

// Pair of rationals (re, ext) used for both Q[i] and Q[sqrt2].
struct RationalPair {
  BigRational re;
  BigRational ext;
  friend bool operator==(const RationalPair&, const RationalPair&) = default;
};

class Scalar {
 public:
  using Payload = std::variant<bool, BigInt, BigRational, RationalPair, double>;

  Scalar();  // Bool zero
  Scalar(SemiringTag tag, Payload payload);

  SemiringTag tag() const { return tag_; }
  const Payload& payload() const { return payload_; }

  bool is_zero() const;
  bool is_one() const;

  bool as_bool() const { return std::get<bool>(payload_); }
  const BigInt& as_nat() const { return std::get<BigInt>(payload_); }
  const BigRational& as_rational() const { return std::get<BigRational>(payload_); }
  const RationalPair& as_pair() const { return std::get<RationalPair>(payload_); }
  double as_double() const { return std::get<double>(payload_); }

  // Structural equality for exact semirings; tolerance comparison for Float.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  SemiringTag tag_;
  Payload payload_;
};

// Static description of one shipped semiring instance.
struct SemiringSpec {
  SemiringTag tag;
  std::string_view name;
  bool is_cancellative;
  bool is_exact;
  Scalar zero;
  Scalar one;
};

const SemiringSpec& semiring(SemiringTag tag);

inline constexpr double kFloatTolerance = 1e-9;

Scalar zero(SemiringTag tag);
Scalar one(SemiringTag tag);
Scalar add(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
bool eq(const Scalar& a, const Scalar& b);

// Left fold of add from zero. An empty list needs the tag explicitly.
Scalar sum(const std::vector<Scalar>& values, SemiringTag tag);
Scalar sum(const std::vector<Scalar>& values);

// Canonical representative of {t | v + 1 = t + 1}.
Scalar canon_plus_one(const Scalar& v);
// Some s with s + 1 = v; throws NotRepresentableError when none exists.
Scalar sub_one(const Scalar& v);

// Integer embedding n * 1. Negative n is rejected for Bool/Nat/QNonNeg.
Scalar from_int(SemiringTag tag, long long n);
// p/q embedding for the rational-valued semirings.
Scalar from_ratio(SemiringTag tag, long long p, long long q);
Scalar make_pair_scalar(SemiringTag tag, BigRational re, BigRational ext);

Scalar parse_scalar(SemiringTag tag, std::string_view text);
std::string to_string(const Scalar& s);

// Throws TagMismatchError unless both scalars belong to `tag`.
void require_tag(const Scalar& s, SemiringTag tag);

}  // namespace tpcalc
