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

#include <cassert>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ffdot/errors.hpp"

namespace ffdot {

namespace detail {

/// Deterministic primality check by trial division; fine for p <= 2^20.
inline bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t f = 3; f * f <= p; f += 2) {
    if (p % f == 0) return false;
  }
  return true;
}

/// Inverse of a mod p (p prime, a != 0 mod p), via extended Euclid.
inline std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw DivisionByZeroError("inverse of 0 mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// Dense polynomials over Z/p, lowest coefficient first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a mod m, coefficients mod p. m need not be monic.
inline Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  poly_trim(a);
  const std::uint64_t lead_inv = inv_mod_u64(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - m.size();
    if (factor != 0) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t sub = (factor * m[i]) % p;
        std::uint64_t cur = a[shift + i];
        a[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
      }
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  poly_trim(out);
  return out;
}

/// Irreducibility over F_p by trial division against every monic polynomial
/// of degree 1..deg/2.
inline bool poly_is_irreducible(const Poly& m, std::uint64_t p) {
  const std::size_t deg = m.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    // Odometer over the dd non-leading coefficients of a monic divisor.
    Poly div(dd + 1, 0);
    div[dd] = 1;
    while (true) {
      if (poly_mod(m, div, p).empty()) return false;
      std::size_t pos = 0;
      while (pos < dd && div[pos] + 1 == p) div[pos++] = 0;
      if (pos == dd) break;
      ++div[pos];
    }
  }
  return true;
}

}  // namespace detail

class FieldElement;

/// The finite field F_{p^n}, represented as F_p[x]/(m(x)) for a monic
/// irreducible modulus m. With no explicit modulus the constructor picks the
/// lexicographically smallest monic irreducible of degree n (coefficient
/// lists compared lowest degree first), so a field is determined by (p, n)
/// alone and reproducible everywhere. Prime fields fix m(x) = x.
///
/// Values are immutable and cheaply copyable; all operations are pure.
class FiniteField {
 public:
  static constexpr std::uint64_t kMaxSize = 1ull << 20;  // cap on q = p^n
  static constexpr std::uint32_t kMaxDegree = 8;

  FiniteField(std::uint64_t p, std::uint32_t n)
      : FiniteField(p, n, default_modulus(p, n), /*trusted=*/true) {}

  FiniteField(std::uint64_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
      : FiniteField(p, n, std::move(modulus), /*trusted=*/false) {}

  std::uint64_t characteristic() const { return d_->p; }
  std::uint32_t degree() const { return d_->n; }
  std::uint64_t size() const { return d_->q; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The residue class of x; only meaningful as a generator when n >= 2.
  FieldElement generator() const;
  /// Element from residues (length <= n, padded with zeros); each must be < p.
  FieldElement element(std::vector<std::uint32_t> coeffs) const;
  /// v mod p embedded as a constant polynomial.
  FieldElement scalar(std::uint64_t v) const;
  /// Element with canonical index i in [0, q): base-p digits of i are the
  /// coefficients, lowest degree first. This order is the one used by every
  /// enumeration, bitset, and file format in the library.
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& a) const;

  /// Tr(x) = x + x^p + ... + x^(p^(n-1)), as a residue in [0, p).
  std::uint32_t trace(const FieldElement& a) const;
  /// Tr(x^j ...): trace of the j-th power of the generator, j < 2n-1.
  std::uint32_t power_trace(std::uint32_t j) const { return d_->power_traces.at(j); }

  bool operator==(const FiniteField& o) const {
    return d_ == o.d_ || (d_->p == o.d_->p && d_->n == o.d_->n &&
                          d_->modulus == o.d_->modulus);
  }
  bool operator!=(const FiniteField& o) const { return !(*this == o); }

  std::string to_string() const {
    std::ostringstream os;
    os << "F_" << d_->q;
    return os.str();
  }

 private:
  friend class FieldElement;

  struct Data {
    std::uint64_t p;
    std::uint32_t n;
    std::uint64_t q;
    std::vector<std::uint32_t> modulus;  // length n+1, monic
    // t^(n+i) mod modulus for i in [0, n-1), each of length n.
    std::vector<std::vector<std::uint32_t>> reduction;
    // Tr(t^j) for j in [0, 2n-1); traces are F_p-linear so this table gives
    // the trace of any element in O(n).
    std::vector<std::uint32_t> power_traces;
  };

  FiniteField(std::uint64_t p, std::uint32_t n, std::vector<std::uint32_t> modulus,
              bool trusted) {
    validate_p_n(p, n);
    auto d = std::make_shared<Data>();
    d->p = p;
    d->n = n;
    d->q = 1;
    for (std::uint32_t i = 0; i < n; ++i) d->q *= p;
    if (n == 1) {
      d->modulus = {0, 1};  // fixed to x for prime fields
    } else {
      if (modulus.size() != n + 1) {
        throw ParseError("modulus must have degree n (n+1 coefficients)");
      }
      for (auto c : modulus) {
        if (c >= p) throw ParseError("modulus coefficient out of range");
      }
      if (modulus.back() != 1) throw ParseError("modulus must be monic");
      if (!trusted && !detail::poly_is_irreducible(modulus, p)) {
        throw ParseError("modulus is reducible over F_p");
      }
      d->modulus = std::move(modulus);
    }
    // reduction[i] = t^(n+i) mod m, built iteratively from t^n = -tail(m).
    if (n >= 2) {
      std::vector<std::uint32_t> cur(n);
      for (std::uint32_t j = 0; j < n; ++j) {
        cur[j] = static_cast<std::uint32_t>((p - d->modulus[j]) % p);
      }
      d->reduction.push_back(cur);
      for (std::uint32_t i = 1; i + 1 < n; ++i) {
        std::vector<std::uint32_t> nxt(n, 0);
        const std::uint64_t top = cur[n - 1];
        for (std::uint32_t j = n - 1; j > 0; --j) nxt[j] = cur[j - 1];
        nxt[0] = 0;
        if (top != 0) {
          for (std::uint32_t j = 0; j < n; ++j) {
            nxt[j] = static_cast<std::uint32_t>(
                (nxt[j] + top * d->reduction[0][j]) % p);
          }
        }
        d->reduction.push_back(nxt);
        cur = nxt;
      }
    }
    d->power_traces = compute_power_traces(*d);
    d_ = std::move(d);
  }

  static void validate_p_n(std::uint64_t p, std::uint32_t n) {
    if (!detail::is_prime_u64(p)) {
      throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    }
    if (n < 1 || n > kMaxDegree) {
      throw DegreeOutOfRangeError("extension degree must be in [1, " +
                                  std::to_string(kMaxDegree) + "]");
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (q > kMaxSize / p) throw CapExceededError("p^n exceeds field cap 2^20");
      q *= p;
    }
    if (q > kMaxSize) throw CapExceededError("p^n exceeds field cap 2^20");
  }

  /// Lexicographically smallest monic irreducible of degree n over F_p,
  /// coefficient lists compared lowest degree first. Candidates with
  /// constant term 0 are divisible by x and skipped outright.
  static std::vector<std::uint32_t> default_modulus(std::uint64_t p, std::uint32_t n) {
    validate_p_n(p, n);
    if (n == 1) return {0, 1};
    std::vector<std::uint32_t> cand(n + 1, 0);
    cand[n] = 1;
    cand[0] = 1;
    while (true) {
      if (detail::poly_is_irreducible(cand, p)) return cand;
      // Next candidate in ascending lex order of (c_0, ..., c_{n-1}):
      // increment c_{n-1} fastest.
      std::uint32_t pos = n;
      while (pos > 0) {
        --pos;
        if (cand[pos] + 1 < p) {
          ++cand[pos];
          break;
        }
        cand[pos] = 0;
        if (pos == 0) {
          throw Error("no irreducible polynomial found (unreachable)");
        }
      }
      // cand[0] started at 1 and only ever increments, so candidates with
      // constant term 0 (multiples of x) are never visited.
    }
  }

  static std::vector<std::uint32_t> compute_power_traces(const Data& d);

  // Raw coefficient-vector arithmetic (vectors of length n, residues < p).
  using Raw = std::vector<std::uint32_t>;

  static Raw raw_add(const Data& d, const Raw& a, const Raw& b) {
    Raw out(d.n);
    for (std::uint32_t i = 0; i < d.n; ++i) {
      const std::uint64_t s = static_cast<std::uint64_t>(a[i]) + b[i];
      out[i] = static_cast<std::uint32_t>(s >= d.p ? s - d.p : s);
    }
    return out;
  }

  static Raw raw_sub(const Data& d, const Raw& a, const Raw& b) {
    Raw out(d.n);
    for (std::uint32_t i = 0; i < d.n; ++i) {
      out[i] = static_cast<std::uint32_t>((a[i] + d.p - b[i]) % d.p);
    }
    return out;
  }

  static Raw raw_neg(const Data& d, const Raw& a) {
    Raw out(d.n);
    for (std::uint32_t i = 0; i < d.n; ++i) {
      out[i] = static_cast<std::uint32_t>((d.p - a[i]) % d.p);
    }
    return out;
  }

  static Raw raw_mul(const Data& d, const Raw& a, const Raw& b) {
    if (d.n == 1) {
      return {static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(a[0]) * b[0]) % d.p)};
    }
    std::vector<std::uint64_t> conv(2 * d.n - 1, 0);
    for (std::uint32_t i = 0; i < d.n; ++i) {
      if (a[i] == 0) continue;
      for (std::uint32_t j = 0; j < d.n; ++j) {
        conv[i + j] = (conv[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % d.p;
      }
    }
    Raw out(d.n);
    for (std::uint32_t i = 0; i < d.n; ++i) out[i] = static_cast<std::uint32_t>(conv[i]);
    for (std::uint32_t i = 0; i + 1 < d.n; ++i) {
      const std::uint64_t hi = conv[d.n + i];
      if (hi == 0) continue;
      const auto& red = d.reduction[i];
      for (std::uint32_t j = 0; j < d.n; ++j) {
        out[j] = static_cast<std::uint32_t>((out[j] + hi * red[j]) % d.p);
      }
    }
    return out;
  }

  static bool raw_is_zero(const Raw& a) {
    for (auto c : a) {
      if (c != 0) return false;
    }
    return true;
  }

  static Raw raw_pow(const Data& d, Raw base, std::uint64_t e) {
    Raw acc(d.n, 0);
    acc[0] = 1;
    while (e != 0) {
      if (e & 1) acc = raw_mul(d, acc, base);
      base = raw_mul(d, base, base);
      e >>= 1;
    }
    return acc;
  }

  /// Inverse via extended Euclid in F_p[x] modulo the field modulus.
  static Raw raw_inv(const Data& d, const Raw& a) {
    if (raw_is_zero(a)) throw DivisionByZeroError("inverse of zero");
    if (d.n == 1) {
      return {static_cast<std::uint32_t>(detail::inv_mod_u64(a[0], d.p))};
    }
    detail::Poly r0(d.modulus.begin(), d.modulus.end());
    detail::Poly r1(a.begin(), a.end());
    detail::poly_trim(r1);
    detail::Poly s0{}, s1{1};
    while (!r1.empty()) {
      // Long division r0 = qr * r1 + rem, tracking s.
      const std::uint64_t lead_inv = detail::inv_mod_u64(r1.back(), d.p);
      detail::Poly rem = r0;
      detail::Poly qr;
      detail::poly_trim(rem);
      while (rem.size() >= r1.size()) {
        const std::uint64_t factor = (rem.back() * lead_inv) % d.p;
        const std::size_t shift = rem.size() - r1.size();
        if (qr.size() < shift + 1) qr.resize(shift + 1, 0);
        qr[shift] = static_cast<std::uint32_t>(factor);
        for (std::size_t i = 0; i < r1.size(); ++i) {
          const std::uint64_t sub = (factor * r1[i]) % d.p;
          rem[shift + i] =
              static_cast<std::uint32_t>((rem[shift + i] + d.p - sub) % d.p);
        }
        rem.pop_back();
        detail::poly_trim(rem);
      }
      detail::Poly qs1 = detail::poly_mul(qr, s1, d.p);
      detail::Poly new_s = s0;
      if (new_s.size() < qs1.size()) new_s.resize(qs1.size(), 0);
      for (std::size_t i = 0; i < qs1.size(); ++i) {
        new_s[i] = static_cast<std::uint32_t>((new_s[i] + d.p - qs1[i]) % d.p);
      }
      detail::poly_trim(new_s);
      s0 = std::exchange(s1, new_s);
      r0 = std::exchange(r1, rem);
    }
    // r0 is a nonzero constant c; inverse = s0 / c reduced mod modulus.
    if (r0.size() != 1) throw Error("gcd with irreducible modulus not constant");
    const std::uint64_t c_inv = detail::inv_mod_u64(r0[0], d.p);
    detail::Poly inv = detail::poly_mod(std::move(s0),
                                        detail::Poly(d.modulus.begin(), d.modulus.end()),
                                        d.p);
    Raw out(d.n, 0);
    for (std::size_t i = 0; i < inv.size(); ++i) {
      out[i] = static_cast<std::uint32_t>((inv[i] * c_inv) % d.p);
    }
    return out;
  }

  std::shared_ptr<const Data> d_;
};

/// An element of a FiniteField: a fully reduced coefficient vector in the
/// power basis. Equality is coefficient-list equality within the same field.
class FieldElement {
 public:
  FieldElement(FiniteField field, std::vector<std::uint32_t> coeffs)
      : f_(std::move(field)), c_(std::move(coeffs)) {
    assert(c_.size() == f_.degree());
  }

  const FiniteField& field() const { return f_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  bool is_zero() const { return FiniteField::raw_is_zero(c_); }

  FieldElement operator+(const FieldElement& o) const {
    check_same_field(o);
    return FieldElement(f_, FiniteField::raw_add(*f_.d_, c_, o.c_));
  }
  FieldElement operator-(const FieldElement& o) const {
    check_same_field(o);
    return FieldElement(f_, FiniteField::raw_sub(*f_.d_, c_, o.c_));
  }
  FieldElement operator*(const FieldElement& o) const {
    check_same_field(o);
    return FieldElement(f_, FiniteField::raw_mul(*f_.d_, c_, o.c_));
  }
  FieldElement operator-() const {
    return FieldElement(f_, FiniteField::raw_neg(*f_.d_, c_));
  }
  FieldElement inv() const {
    return FieldElement(f_, FiniteField::raw_inv(*f_.d_, c_));
  }
  FieldElement operator/(const FieldElement& o) const {
    check_same_field(o);
    return *this * o.inv();
  }
  FieldElement pow(std::uint64_t e) const {
    return FieldElement(f_, FiniteField::raw_pow(*f_.d_, c_, e));
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const {
    return f_ == o.f_ && c_ == o.c_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Comma-joined coefficient list, the element syntax of the point-set
  /// text format; a single residue for prime fields.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

 private:
  void check_same_field(const FieldElement& o) const {
    if (f_ != o.f_) throw FieldMismatchError("elements of different fields");
  }

  FiniteField f_;
  std::vector<std::uint32_t> c_;
};

inline FieldElement FiniteField::zero() const {
  return FieldElement(*this, std::vector<std::uint32_t>(d_->n, 0));
}

inline FieldElement FiniteField::one() const {
  std::vector<std::uint32_t> c(d_->n, 0);
  c[0] = 1;
  return FieldElement(*this, c);
}

inline FieldElement FiniteField::generator() const {
  if (d_->n < 2) {
    throw DegreeOutOfRangeError("generator() requires an extension field");
  }
  std::vector<std::uint32_t> c(d_->n, 0);
  c[1] = 1;
  return FieldElement(*this, c);
}

inline FieldElement FiniteField::element(std::vector<std::uint32_t> coeffs) const {
  if (coeffs.size() > d_->n) {
    throw ParseError("too many coefficients for degree-" + std::to_string(d_->n) +
                     " field element");
  }
  for (auto c : coeffs) {
    if (c >= d_->p) throw ParseError("coefficient out of range [0, p)");
  }
  coeffs.resize(d_->n, 0);
  return FieldElement(*this, std::move(coeffs));
}

inline FieldElement FiniteField::scalar(std::uint64_t v) const {
  std::vector<std::uint32_t> c(d_->n, 0);
  c[0] = static_cast<std::uint32_t>(v % d_->p);
  return FieldElement(*this, c);
}

inline FieldElement FiniteField::element_at(std::uint64_t index) const {
  if (index >= d_->q) throw CapExceededError("element index out of range");
  std::vector<std::uint32_t> c(d_->n);
  for (std::uint32_t i = 0; i < d_->n; ++i) {
    c[i] = static_cast<std::uint32_t>(index % d_->p);
    index /= d_->p;
  }
  return FieldElement(*this, std::move(c));
}

inline std::uint64_t FiniteField::index_of(const FieldElement& a) const {
  if (a.field() != *this) throw FieldMismatchError("index_of: foreign element");
  std::uint64_t idx = 0;
  const auto& c = a.coeffs();
  for (std::uint32_t i = d_->n; i-- > 0;) idx = idx * d_->p + c[i];
  return idx;
}

inline std::uint32_t FiniteField::trace(const FieldElement& a) const {
  if (a.field() != *this) throw FieldMismatchError("trace: foreign element");
  std::uint64_t t = 0;
  const auto& c = a.coeffs();
  for (std::uint32_t j = 0; j < d_->n; ++j) {
    t = (t + static_cast<std::uint64_t>(c[j]) * d_->power_traces[j]) % d_->p;
  }
  return static_cast<std::uint32_t>(t);
}

inline std::vector<std::uint32_t> FiniteField::compute_power_traces(const Data& d) {
  if (d.n == 1) return {1};  // Tr = id on F_p
  std::vector<std::uint32_t> traces;
  traces.reserve(2 * d.n - 1);
  Raw t(d.n, 0);
  t[1] = 1;
  for (std::uint32_t j = 0; j < 2 * d.n - 1; ++j) {
    // t^j, then Frobenius orbit sum.
    const Raw tj = raw_pow(d, t, j);
    Raw acc = tj;
    Raw y = tj;
    for (std::uint32_t i = 1; i < d.n; ++i) {
      y = raw_pow(d, y, d.p);
      acc = raw_add(d, acc, y);
    }
    for (std::uint32_t i = 1; i < d.n; ++i) assert(acc[i] == 0);
    traces.push_back(acc[0]);
  }
  return traces;
}

/// Spec-facing constructor name.
inline FiniteField make_field(std::uint64_t p, std::uint32_t n) {
  return FiniteField(p, n);
}

}  // namespace ffdot
