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

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ffdot/cyclotomic.hpp"
#include "ffdot/rational.hpp"

namespace ffdot {

/// A closed interval with exact rational endpoints that is guaranteed to
/// contain the real quantity it stands for. Enclosures of cos/sin/sqrt come
/// from MPFR with directed rounding; every endpoint is then an exact dyadic
/// rational, so combining intervals is ordinary exact rational arithmetic
/// and introduces no further error.
struct CertifiedInterval {
  Rational lo;
  Rational hi;

  CertifiedInterval() = default;
  CertifiedInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw Error("interval with lo > hi");
  }

  static CertifiedInterval point(Rational v) {
    CertifiedInterval i;
    i.lo = v;
    i.hi = std::move(v);
    return i;
  }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }

  CertifiedInterval operator+(const CertifiedInterval& o) const {
    return {lo + o.lo, hi + o.hi};
  }
  CertifiedInterval operator-(const CertifiedInterval& o) const {
    return {lo - o.hi, hi - o.lo};
  }
  CertifiedInterval operator*(const CertifiedInterval& o) const {
    const Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
  }

  /// Scale by an exact rational.
  CertifiedInterval scaled(const Rational& r) const {
    return r >= 0 ? CertifiedInterval{lo * r, hi * r}
                  : CertifiedInterval{hi * r, lo * r};
  }
};

namespace detail {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
  ~Mpfr() { mpfr_clear(x_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }

 private:
  mpfr_t x_;
};

/// Exact dyadic value of an MPFR number.
inline Rational mpfr_to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  BigInt m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.backend().data(), x);
  Rational r(m);
  if (e >= 0) {
    r *= Rational(BigInt(1) << static_cast<unsigned>(e));
  } else {
    r /= Rational(BigInt(1) << static_cast<unsigned>(-e));
  }
  return r;
}

/// Enclosure of cos(2*pi*j/p) (kind 0) or sin(2*pi*j/p) (kind 1).
inline CertifiedInterval trig_enclosure(std::uint32_t j, std::uint32_t p,
                                        unsigned bits, bool want_sin) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 16;
  Mpfr pi_lo(prec), pi_hi(prec), th_lo(prec), th_hi(prec), t(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  // theta = 2*pi*j/p with outward rounding (j >= 0, so monotone in pi).
  mpfr_mul_ui(th_lo.get(), pi_lo.get(), 2ul * j, MPFR_RNDD);
  mpfr_div_ui(th_lo.get(), th_lo.get(), p, MPFR_RNDD);
  mpfr_mul_ui(th_hi.get(), pi_hi.get(), 2ul * j, MPFR_RNDU);
  mpfr_div_ui(th_hi.get(), th_hi.get(), p, MPFR_RNDU);

  // f over [th_lo, th_hi] is contained in the hull of the endpoint values
  // widened by the interval width, since |f'| <= 1.
  Mpfr w(prec);
  mpfr_sub(w.get(), th_hi.get(), th_lo.get(), MPFR_RNDU);
  const Rational width = mpfr_to_rational(w.get());

  auto eval = [&](mpfr_srcptr th, mpfr_rnd_t rnd) {
    if (want_sin) {
      mpfr_sin(t.get(), th, rnd);
    } else {
      mpfr_cos(t.get(), th, rnd);
    }
    return mpfr_to_rational(t.get());
  };
  const Rational a_lo = eval(th_lo.get(), MPFR_RNDD);
  const Rational a_hi = eval(th_lo.get(), MPFR_RNDU);
  const Rational b_lo = eval(th_hi.get(), MPFR_RNDD);
  const Rational b_hi = eval(th_hi.get(), MPFR_RNDU);

  Rational lo = std::min(a_lo, b_lo) - width;
  Rational hi = std::max(a_hi, b_hi) + width;
  // cos/sin stay in [-1, 1]; intersecting keeps the enclosure valid.
  lo = std::max(lo, Rational(-1));
  hi = std::min(hi, Rational(1));
  return {lo, hi};
}

}  // namespace detail

inline unsigned effective_precision(unsigned bits) {
  return bits < 64 ? 64u : bits;
}

/// Enclosure of the real part of z under zeta_p -> exp(2*pi*i/p).
/// The j = 0 basis term is rational and contributes exactly; width shrinks
/// roughly like 2^-bits.
inline CertifiedInterval embed_real(const CycloNum& z, unsigned precision_bits) {
  const unsigned bits = effective_precision(precision_bits);
  const std::uint32_t p = z.order();
  CertifiedInterval acc = CertifiedInterval::point(z.coeffs()[0]);
  if (p == 2) return acc;
  for (std::uint32_t j = 1; j + 1 < p; ++j) {
    const Rational& c = z.coeffs()[j];
    if (c == 0) continue;
    acc = acc + detail::trig_enclosure(j, p, bits, /*want_sin=*/false).scaled(c);
  }
  return acc;
}

/// Enclosure of the imaginary part of z.
inline CertifiedInterval embed_imag(const CycloNum& z, unsigned precision_bits) {
  const unsigned bits = effective_precision(precision_bits);
  const std::uint32_t p = z.order();
  CertifiedInterval acc = CertifiedInterval::point(Rational(0));
  if (p == 2) return acc;
  for (std::uint32_t j = 1; j + 1 < p; ++j) {
    const Rational& c = z.coeffs()[j];
    if (c == 0) continue;
    acc = acc + detail::trig_enclosure(j, p, bits, /*want_sin=*/true).scaled(c);
  }
  return acc;
}

/// Enclosure of sqrt over a nonnegative quantity. Negative lower endpoints
/// (possible for enclosures of values known to be >= 0) are clamped to 0.
inline CertifiedInterval interval_sqrt(const CertifiedInterval& x, unsigned bits) {
  if (x.hi < 0) throw Error("interval_sqrt of a negative interval");
  const Rational lo_in = x.lo < 0 ? Rational(0) : x.lo;
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(effective_precision(bits)) + 16;
  detail::Mpfr v(prec), r(prec);
  mpfr_set_q(v.get(), lo_in.backend().data(), MPFR_RNDD);
  mpfr_sqrt(r.get(), v.get(), MPFR_RNDD);
  Rational lo = detail::mpfr_to_rational(r.get());
  mpfr_set_q(v.get(), x.hi.backend().data(), MPFR_RNDU);
  mpfr_sqrt(r.get(), v.get(), MPFR_RNDU);
  Rational hi = detail::mpfr_to_rational(r.get());
  if (lo < 0) lo = 0;
  return {lo, hi};
}

/// Enclosure of |z|: exact for rational z, otherwise sqrt of the |z|^2
/// embedding.
inline CertifiedInterval interval_abs(const CycloNum& z, unsigned bits) {
  if (z.is_rational()) {
    Rational v = z.coeffs()[0];
    if (v < 0) v = -v;
    return CertifiedInterval::point(v);
  }
  return interval_sqrt(embed_real(z.abs_sq(), bits), bits);
}

}  // namespace ffdot
