// Copyright 2026 The ffdot Authors.
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

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "ffdot/errors.hpp"

namespace ffdot {

/// Exact rationals (GMP-backed, always reduced, canonical sign on the
/// denominator). All identity checks in the library are carried out in this
/// type or in CycloNum over it.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// base^e for integer e; e < 0 requires base != 0.
inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw DivisionByZeroError("pow_rational: 0^negative");
  Rational acc(1);
  Rational b = base;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                          : static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return e < 0 ? Rational(1) / acc : acc;
}

inline BigInt pow_bigint(const BigInt& base, unsigned long e) {
  BigInt acc(1), b = base;
  while (e != 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

/// Canonical serialization used in reports and CSV: always "num/den",
/// including "/1" for integers, so output is byte-stable.
inline std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "num/den" or a bare integer.
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + s);
  }
}

}  // namespace ffdot
