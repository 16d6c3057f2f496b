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
#include <vector>

#include "ffdot/errors.hpp"
#include "ffdot/finite_field.hpp"
#include "ffdot/rational.hpp"

namespace ffdot {

/// An exact element of Q(zeta_p), p prime, in the power basis
/// 1, zeta, ..., zeta^(p-2); zeta^(p-1) is eliminated through
/// 1 + zeta + ... + zeta^(p-1) = 0. The representation is canonical, so
/// equality is coefficient-list equality. For p = 2 the field is Q itself
/// and the single coefficient carries the value (zeta_2 = -1 folded in).
///
/// Every character sum in the library takes values here, which is what makes
/// all identity checks exact.
class CycloNum {
 public:
  explicit CycloNum(std::uint32_t order) : p_(order), c_(basis_size(order)) {}

  CycloNum(std::uint32_t order, Rational value) : CycloNum(order) {
    c_[0] = std::move(value);
  }

  /// zeta_p^j for any integer j (reduced mod p).
  static CycloNum zeta_pow(std::uint32_t order, std::int64_t j) {
    CycloNum z(order);
    std::int64_t r = j % static_cast<std::int64_t>(order);
    if (r < 0) r += order;
    const auto e = static_cast<std::uint32_t>(r);
    if (e < order - 1) {
      z.c_[e] = 1;
    } else {
      for (auto& c : z.c_) c = -1;  // zeta^(p-1) = -(1 + zeta + ...)
    }
    return z;
  }

  std::uint32_t order() const { return p_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_) {
      if (c != 0) return false;
    }
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return false;
    }
    return true;
  }

  Rational as_rational() const {
    if (!is_rational()) {
      throw NotRationalError("cyclotomic value has nonzero zeta coefficients");
    }
    return c_[0];
  }

  CycloNum& operator+=(const CycloNum& o) {
    check_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycloNum& operator-=(const CycloNum& o) {
    check_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycloNum& operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
  }
  CycloNum operator+(const CycloNum& o) const { return CycloNum(*this) += o; }
  CycloNum operator-(const CycloNum& o) const { return CycloNum(*this) -= o; }
  CycloNum operator-() const {
    CycloNum z(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] = -c_[i];
    return z;
  }
  CycloNum operator*(const Rational& r) const { return CycloNum(*this) *= r; }

  CycloNum operator*(const CycloNum& o) const {
    check_order(o);
    // Convolve into exponent buckets mod p, then reduce to the power basis.
    std::vector<Rational> bucket(p_);
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::uint32_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j] == 0) continue;
        bucket[(i + j) % p_] += c_[i] * o.c_[j];
      }
    }
    return from_exponent_buckets(p_, bucket);
  }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

  /// Multiplication by zeta^e: a rotation of exponents. Cheaper than a full
  /// product and the workhorse of the Fourier transforms.
  CycloNum rotated(std::uint32_t zeta_exponent) const {
    const std::uint32_t e = zeta_exponent % p_;
    if (e == 0) return *this;
    std::vector<Rational> bucket(p_);
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) bucket[(i + e) % p_] = c_[i];
    }
    return from_exponent_buckets(p_, bucket);
  }

  /// Complex conjugation: zeta^j -> zeta^(p-j).
  CycloNum conjugate() const {
    std::vector<Rational> bucket(p_);
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) bucket[(p_ - i) % p_] += c_[i];
    }
    return from_exponent_buckets(p_, bucket);
  }

  /// |z|^2 = z * conj(z); the result is fixed by conjugation (real).
  CycloNum abs_sq() const { return *this * conjugate(); }

  bool operator==(const CycloNum& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ' ';
      s += rational_to_string(c_[i]);
    }
    return s + "]@z" + std::to_string(p_);
  }

  /// Canonicalize exponent buckets b_0..b_{p-1}: coefficient i becomes
  /// b_i - b_{p-1}.
  static CycloNum from_exponent_buckets(std::uint32_t order,
                                        const std::vector<Rational>& bucket) {
    CycloNum z(order);
    const Rational& top = bucket[order - 1];
    for (std::uint32_t i = 0; i + 1 < order; ++i) z.c_[i] = bucket[i] - top;
    return z;
  }

 private:
  static std::size_t basis_size(std::uint32_t order) {
    if (order < 2) throw OrderMismatchError("cyclotomic order must be >= 2");
    return order - 1;
  }

  void check_order(const CycloNum& o) const {
    if (p_ != o.p_) {
      throw OrderMismatchError("cyclotomic orders differ: " +
                               std::to_string(p_) + " vs " +
                               std::to_string(o.p_));
    }
  }

  std::uint32_t p_;
  std::vector<Rational> c_;
};

inline CycloNum operator*(const Rational& r, const CycloNum& z) { return z * r; }

/// The zeta exponent of the canonical additive character at x: chi(x) =
/// zeta_p^Tr(x).
inline std::uint32_t character_exponent(const FieldElement& x) {
  return x.field().trace(x);
}

/// chi(x) = zeta_p^Tr(x), the canonical nontrivial additive character.
inline CycloNum additive_character(const FieldElement& x) {
  return CycloNum::zeta_pow(
      static_cast<std::uint32_t>(x.field().characteristic()),
      character_exponent(x));
}

/// chi_a(x) = chi(a*x). Every nontrivial additive character arises this way
/// for a != 0, which is how chi-independence of the identities is exercised.
inline CycloNum additive_character(const FieldElement& x,
                                   const FieldElement& premultiplier) {
  return additive_character(premultiplier * x);
}

/// Accumulates sums of roots of unity Sum_i w_i * zeta^(e_i) without touching
/// rational arithmetic in the inner loop: unit-weight terms are integer
/// counters per exponent. This is exact and is what makes the big character
/// sums cheap.
class CharacterAccumulator {
 public:
  explicit CharacterAccumulator(std::uint32_t order)
      : p_(order), counts_(order, 0), weights_(order), has_weights_(false) {
    if (order < 2) throw OrderMismatchError("cyclotomic order must be >= 2");
  }

  std::uint32_t order() const { return p_; }

  void add(std::uint64_t zeta_exponent) { ++counts_[zeta_exponent % p_]; }

  void add(std::uint64_t zeta_exponent, std::uint64_t multiplicity) {
    counts_[zeta_exponent % p_] += multiplicity;
  }

  void add(std::uint64_t zeta_exponent, const Rational& weight) {
    weights_[zeta_exponent % p_] += weight;
    has_weights_ = true;
  }

  CycloNum value() const {
    std::vector<Rational> bucket(p_);
    for (std::uint32_t i = 0; i < p_; ++i) {
      bucket[i] = Rational(BigInt(counts_[i]));
      if (has_weights_) bucket[i] += weights_[i];
    }
    return CycloNum::from_exponent_buckets(p_, bucket);
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint64_t> counts_;
  std::vector<Rational> weights_;
  bool has_weights_;
};

}  // namespace ffdot
