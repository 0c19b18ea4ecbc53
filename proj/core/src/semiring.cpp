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

#include "tpcalc/semiring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "tpcalc/error.hpp"

namespace tpcalc {

namespace {

constexpr SemiringTag kAllTags[] = {SemiringTag::Bool,     SemiringTag::Nat,
                                    SemiringTag::QNonNeg,  SemiringTag::Rational,
                                    SemiringTag::QI,       SemiringTag::QR2,
                                    SemiringTag::Float};

bool is_pair_tag(SemiringTag t) { return t == SemiringTag::QI || t == SemiringTag::QR2; }
bool is_rational_tag(SemiringTag t) {
  return t == SemiringTag::QNonNeg || t == SemiringTag::Rational;
}

Scalar::Payload zero_payload(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::Bool: return false;
    case SemiringTag::Nat: return BigInt(0);
    case SemiringTag::QNonNeg:
    case SemiringTag::Rational: return BigRational(0);
    case SemiringTag::QI:
    case SemiringTag::QR2: return RationalPair{BigRational(0), BigRational(0)};
    case SemiringTag::Float: return 0.0;
  }
  throw InvariantError("unknown semiring tag");
}

Scalar::Payload one_payload(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::Bool: return true;
    case SemiringTag::Nat: return BigInt(1);
    case SemiringTag::QNonNeg:
    case SemiringTag::Rational: return BigRational(1);
    case SemiringTag::QI:
    case SemiringTag::QR2: return RationalPair{BigRational(1), BigRational(0)};
    case SemiringTag::Float: return 1.0;
  }
  throw InvariantError("unknown semiring tag");
}

void check_same(const Scalar& a, const Scalar& b) {
  if (a.tag() != b.tag()) {
    throw TagMismatchError("semiring mismatch: " + std::string(tag_name(a.tag())) + " vs " +
                           std::string(tag_name(b.tag())));
  }
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

[[noreturn]] void bad_literal(SemiringTag tag, std::string_view text, const std::string& why) {
  throw UserError("invalid " + std::string(tag_name(tag)) + " literal '" + std::string(text) +
                  "': " + why);
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt parse_integer(std::string_view s, bool allow_sign, SemiringTag tag, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    if (!allow_sign) bad_literal(tag, whole, "sign not allowed");
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_literal(tag, whole, "expected decimal digits");
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

BigRational parse_rational(std::string_view s, SemiringTag tag, std::string_view whole) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(s, true, tag, whole));
  BigInt p = parse_integer(s.substr(0, slash), true, tag, whole);
  BigInt q = parse_integer(s.substr(slash + 1), false, tag, whole);
  if (q == 0) bad_literal(tag, whole, "zero denominator");
  return BigRational(p, q);
}

// Coefficient in front of an extension unit: "", "+", "-" or a rational.
BigRational parse_coefficient(std::string_view s, SemiringTag tag, std::string_view whole) {
  if (s.empty() || s == "+") return BigRational(1);
  if (s == "-") return BigRational(-1);
  return parse_rational(s, tag, whole);
}

RationalPair parse_pair(SemiringTag tag, std::string_view text, std::string_view unit) {
  std::string s = strip_spaces(text);
  if (s.empty()) bad_literal(tag, text, "empty");
  bool has_ext = s.size() >= unit.size() && s.compare(s.size() - unit.size(), unit.size(), unit) == 0;
  if (!has_ext) return RationalPair{parse_rational(s, tag, text), BigRational(0)};
  std::string body = s.substr(0, s.size() - unit.size());
  // Split at the last sign that is not a leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    return RationalPair{BigRational(0), parse_coefficient(body, tag, text)};
  }
  BigRational re = parse_rational(std::string_view(body).substr(0, split), tag, text);
  BigRational ext = parse_coefficient(std::string_view(body).substr(split), tag, text);
  return RationalPair{re, ext};
}

std::string rational_str(const BigRational& r) { return r.str(); }

std::string pair_str(const RationalPair& p, std::string_view unit, bool space) {
  std::string u = (space ? " " : "") + std::string(unit);
  if (p.ext == 0) return rational_str(p.re);
  if (p.re == 0) return rational_str(p.ext) + u;
  if (p.ext < 0) return rational_str(p.re) + "-" + rational_str(BigRational(-p.ext)) + u;
  return rational_str(p.re) + "+" + rational_str(p.ext) + u;
}

}  // namespace

std::string_view tag_name(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::Bool: return "bool";
    case SemiringTag::Nat: return "nat";
    case SemiringTag::QNonNeg: return "qnn";
    case SemiringTag::Rational: return "q";
    case SemiringTag::QI: return "qi";
    case SemiringTag::QR2: return "qr2";
    case SemiringTag::Float: return "f64";
  }
  return "?";
}

std::optional<SemiringTag> tag_from_name(std::string_view name) {
  for (SemiringTag t : kAllTags) {
    if (tag_name(t) == name) return t;
  }
  return std::nullopt;
}

const std::vector<SemiringTag>& all_tags() {
  static const std::vector<SemiringTag> tags(std::begin(kAllTags), std::end(kAllTags));
  return tags;
}

const std::vector<SemiringTag>& exact_tags() {
  static const std::vector<SemiringTag> tags = {SemiringTag::Bool,     SemiringTag::Nat,
                                                SemiringTag::QNonNeg,  SemiringTag::Rational,
                                                SemiringTag::QI,       SemiringTag::QR2};
  return tags;
}

Scalar::Scalar() : tag_(SemiringTag::Bool), payload_(false) {}

Scalar::Scalar(SemiringTag tag, Payload payload) : tag_(tag), payload_(std::move(payload)) {
  bool ok = false;
  switch (tag) {
    case SemiringTag::Bool: ok = std::holds_alternative<bool>(payload_); break;
    case SemiringTag::Nat:
      ok = std::holds_alternative<BigInt>(payload_);
      if (ok && std::get<BigInt>(payload_) < 0) throw UserError("nat value must be non-negative");
      break;
    case SemiringTag::QNonNeg:
      ok = std::holds_alternative<BigRational>(payload_);
      if (ok && std::get<BigRational>(payload_) < 0) {
        throw UserError("qnn value must be non-negative");
      }
      break;
    case SemiringTag::Rational: ok = std::holds_alternative<BigRational>(payload_); break;
    case SemiringTag::QI:
    case SemiringTag::QR2: ok = std::holds_alternative<RationalPair>(payload_); break;
    case SemiringTag::Float: ok = std::holds_alternative<double>(payload_); break;
  }
  if (!ok) throw InvariantError("payload does not match semiring " + std::string(tag_name(tag)));
}

bool Scalar::is_zero() const {
  switch (tag_) {
    case SemiringTag::Bool: return !as_bool();
    case SemiringTag::Nat: return as_nat().is_zero();
    case SemiringTag::QNonNeg:
    case SemiringTag::Rational: return as_rational().is_zero();
    case SemiringTag::QI:
    case SemiringTag::QR2: return as_pair().re.is_zero() && as_pair().ext.is_zero();
    case SemiringTag::Float: return std::fabs(as_double()) <= kFloatTolerance;
  }
  return false;
}

namespace {

// True for 1/1, reading the parts in place rather than through the copying
// numerator()/denominator() accessors.
bool unit_fraction(const BigRational& r) {
  const auto& parts = r.backend().data();
  return parts.numerator() == 1 && parts.denominator() == 1;
}

}  // namespace

bool Scalar::is_one() const {
  switch (tag_) {
    case SemiringTag::Bool: return as_bool();
    case SemiringTag::Nat: return as_nat() == 1;
    case SemiringTag::QNonNeg:
    case SemiringTag::Rational:
      return unit_fraction(as_rational());
    case SemiringTag::QI:
    case SemiringTag::QR2:
      return unit_fraction(as_pair().re) && as_pair().ext.is_zero();
    case SemiringTag::Float: return std::fabs(as_double() - 1.0) <= kFloatTolerance;
  }
  return false;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.tag_ != b.tag_) return false;
  if (a.tag_ == SemiringTag::Float) {
    return std::fabs(a.as_double() - b.as_double()) <= kFloatTolerance;
  }
  return a.payload_ == b.payload_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

const SemiringSpec& semiring(SemiringTag tag) {
  static const SemiringSpec specs[] = {
      {SemiringTag::Bool, "bool", false, true, Scalar(SemiringTag::Bool, zero_payload(SemiringTag::Bool)),
       Scalar(SemiringTag::Bool, one_payload(SemiringTag::Bool))},
      {SemiringTag::Nat, "nat", true, true, Scalar(SemiringTag::Nat, zero_payload(SemiringTag::Nat)),
       Scalar(SemiringTag::Nat, one_payload(SemiringTag::Nat))},
      {SemiringTag::QNonNeg, "qnn", true, true,
       Scalar(SemiringTag::QNonNeg, zero_payload(SemiringTag::QNonNeg)),
       Scalar(SemiringTag::QNonNeg, one_payload(SemiringTag::QNonNeg))},
      {SemiringTag::Rational, "q", true, true,
       Scalar(SemiringTag::Rational, zero_payload(SemiringTag::Rational)),
       Scalar(SemiringTag::Rational, one_payload(SemiringTag::Rational))},
      {SemiringTag::QI, "qi", true, true, Scalar(SemiringTag::QI, zero_payload(SemiringTag::QI)),
       Scalar(SemiringTag::QI, one_payload(SemiringTag::QI))},
      {SemiringTag::QR2, "qr2", true, true, Scalar(SemiringTag::QR2, zero_payload(SemiringTag::QR2)),
       Scalar(SemiringTag::QR2, one_payload(SemiringTag::QR2))},
      {SemiringTag::Float, "f64", true, false,
       Scalar(SemiringTag::Float, zero_payload(SemiringTag::Float)),
       Scalar(SemiringTag::Float, one_payload(SemiringTag::Float))},
  };
  return specs[static_cast<int>(tag)];
}

Scalar zero(SemiringTag tag) { return semiring(tag).zero; }
Scalar one(SemiringTag tag) { return semiring(tag).one; }

Scalar add(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (a.tag() != SemiringTag::Float) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
  }
  switch (a.tag()) {
    case SemiringTag::Bool: return Scalar(a.tag(), a.as_bool() || b.as_bool());
    case SemiringTag::Nat: return Scalar(a.tag(), BigInt(a.as_nat() + b.as_nat()));
    case SemiringTag::QNonNeg:
    case SemiringTag::Rational:
      return Scalar(a.tag(), BigRational(a.as_rational() + b.as_rational()));
    case SemiringTag::QI:
    case SemiringTag::QR2:
      return Scalar(a.tag(), RationalPair{BigRational(a.as_pair().re + b.as_pair().re),
                                          BigRational(a.as_pair().ext + b.as_pair().ext)});
    case SemiringTag::Float: return Scalar(a.tag(), a.as_double() + b.as_double());
  }
  throw InvariantError("unknown semiring tag");
}

Scalar mul(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (a.tag() != SemiringTag::Float) {
    if (a.is_one()) return b;
    if (b.is_one()) return a;
  }
  switch (a.tag()) {
    case SemiringTag::Bool: return Scalar(a.tag(), a.as_bool() && b.as_bool());
    case SemiringTag::Nat: return Scalar(a.tag(), BigInt(a.as_nat() * b.as_nat()));
    case SemiringTag::QNonNeg:
    case SemiringTag::Rational:
      return Scalar(a.tag(), BigRational(a.as_rational() * b.as_rational()));
    case SemiringTag::QI: {
      const auto& x = a.as_pair();
      const auto& y = b.as_pair();
      return Scalar(a.tag(), RationalPair{BigRational(x.re * y.re - x.ext * y.ext),
                                          BigRational(x.re * y.ext + x.ext * y.re)});
    }
    case SemiringTag::QR2: {
      const auto& x = a.as_pair();
      const auto& y = b.as_pair();
      return Scalar(a.tag(), RationalPair{BigRational(x.re * y.re + 2 * x.ext * y.ext),
                                          BigRational(x.re * y.ext + x.ext * y.re)});
    }
    case SemiringTag::Float: return Scalar(a.tag(), a.as_double() * b.as_double());
  }
  throw InvariantError("unknown semiring tag");
}

bool eq(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  return a == b;
}

Scalar sum(const std::vector<Scalar>& values, SemiringTag tag) {
  Scalar acc = zero(tag);
  for (const Scalar& v : values) acc = add(acc, v);
  return acc;
}

Scalar sum(const std::vector<Scalar>& values) {
  if (values.empty()) throw UserError("sum of an empty list needs an explicit semiring");
  return sum(values, values.front().tag());
}

Scalar canon_plus_one(const Scalar& v) {
  // Boolean: s or 1 = 1 for every s, so the class is all of R; fixed to 0.
  if (v.tag() == SemiringTag::Bool) return zero(SemiringTag::Bool);
  return v;
}

Scalar sub_one(const Scalar& v) {
  switch (v.tag()) {
    case SemiringTag::Bool:
      if (v.as_bool()) return zero(SemiringTag::Bool);
      throw NotRepresentableError("bool: no s with s or 1 = 0");
    case SemiringTag::Nat:
      if (v.as_nat() >= 1) return Scalar(v.tag(), BigInt(v.as_nat() - 1));
      throw NotRepresentableError("nat: no s with s + 1 = 0");
    case SemiringTag::QNonNeg:
      if (v.as_rational() >= 1) return Scalar(v.tag(), BigRational(v.as_rational() - 1));
      throw NotRepresentableError("qnn: no non-negative s with s + 1 = " + to_string(v));
    case SemiringTag::Rational: return Scalar(v.tag(), BigRational(v.as_rational() - 1));
    case SemiringTag::QI:
    case SemiringTag::QR2:
      return Scalar(v.tag(), RationalPair{BigRational(v.as_pair().re - 1), v.as_pair().ext});
    case SemiringTag::Float: return Scalar(v.tag(), v.as_double() - 1.0);
  }
  throw InvariantError("unknown semiring tag");
}

Scalar from_int(SemiringTag tag, long long n) {
  switch (tag) {
    case SemiringTag::Bool:
      if (n < 0) throw UserError("bool: negative integer");
      return Scalar(tag, n != 0);
    case SemiringTag::Nat: return Scalar(tag, BigInt(n));
    case SemiringTag::QNonNeg:
    case SemiringTag::Rational: return Scalar(tag, BigRational(n));
    case SemiringTag::QI:
    case SemiringTag::QR2: return Scalar(tag, RationalPair{BigRational(n), BigRational(0)});
    case SemiringTag::Float: return Scalar(tag, static_cast<double>(n));
  }
  throw InvariantError("unknown semiring tag");
}

Scalar from_ratio(SemiringTag tag, long long p, long long q) {
  if (q == 0) throw UserError("zero denominator");
  BigRational r{BigInt(p), BigInt(q)};
  if (is_rational_tag(tag)) return Scalar(tag, r);
  if (is_pair_tag(tag)) return Scalar(tag, RationalPair{r, BigRational(0)});
  if (tag == SemiringTag::Float) return Scalar(tag, static_cast<double>(p) / static_cast<double>(q));
  if (r.convert_to<BigInt>() != r) throw UserError("non-integral value for integral semiring");
  return from_int(tag, p / q);
}

Scalar make_pair_scalar(SemiringTag tag, BigRational re, BigRational ext) {
  if (!is_pair_tag(tag)) throw UserError("pair scalars exist only for qi and qr2");
  return Scalar(tag, RationalPair{std::move(re), std::move(ext)});
}

Scalar parse_scalar(SemiringTag tag, std::string_view text) {
  std::string s = strip_spaces(text);
  switch (tag) {
    case SemiringTag::Bool:
      if (s == "0") return Scalar(tag, false);
      if (s == "1") return Scalar(tag, true);
      bad_literal(tag, text, "expected 0 or 1");
    case SemiringTag::Nat: return Scalar(tag, parse_integer(s, false, tag, text));
    case SemiringTag::QNonNeg: {
      BigRational r = parse_rational(s, tag, text);
      if (r < 0) bad_literal(tag, text, "negative value");
      return Scalar(tag, r);
    }
    case SemiringTag::Rational: return Scalar(tag, parse_rational(s, tag, text));
    case SemiringTag::QI: return Scalar(tag, parse_pair(tag, text, "i"));
    case SemiringTag::QR2: return Scalar(tag, parse_pair(tag, text, "r2"));
    case SemiringTag::Float: {
      if (s.empty()) bad_literal(tag, text, "empty");
      char* end = nullptr;
      double d = std::strtod(s.c_str(), &end);
      if (end != s.c_str() + s.size() || !std::isfinite(d)) bad_literal(tag, text, "not a number");
      return Scalar(tag, d);
    }
  }
  throw InvariantError("unknown semiring tag");
}

std::string to_string(const Scalar& s) {
  switch (s.tag()) {
    case SemiringTag::Bool: return s.as_bool() ? "1" : "0";
    case SemiringTag::Nat: return s.as_nat().str();
    case SemiringTag::QNonNeg:
    case SemiringTag::Rational: return rational_str(s.as_rational());
    case SemiringTag::QI: return pair_str(s.as_pair(), "i", false);
    case SemiringTag::QR2: return pair_str(s.as_pair(), "r2", true);
    case SemiringTag::Float: {
      std::ostringstream os;
      os.precision(17);
      os << s.as_double();
      return os.str();
    }
  }
  return "?";
}

void require_tag(const Scalar& s, SemiringTag tag) {
  if (s.tag() != tag) {
    throw TagMismatchError("semiring mismatch: expected " + std::string(tag_name(tag)) + ", got " +
                           std::string(tag_name(s.tag())));
  }
}

}  // namespace tpcalc
