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

//
// Exact Fourier analysis on F_q^d with respect to the canonical additive
// character chi(x) = zeta_p^Tr(x):
//
//   fhat(k) = q^-d * Sum_x chi(-x.k) f(x)        (fourier_transform)
//   f(x)    = Sum_k chi(x.k) fhat(k)             (inverse_transform)
//   Sum_k |fhat(k)|^2 = q^-d Sum_x |f(x)|^2      (plancherel_check)
//
// fourier_transform is the literal double sum; fast_transform computes the
// same table by factoring the additive group as (Z/p)^(d*n) and doing d*n
// rank-one passes, O(q^d * d*n*p) scalar multiplications instead of O(q^2d).

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ffdot/grid_function.hpp"

namespace ffdot {

/// Counts the zeta-power multiplications performed inside the transform sums
/// (the final q^-d scaling is not counted by either path).
struct TransformStats {
  std::uint64_t scalar_mults = 0;
};

namespace detail {

/// Exponent table of chi(-x.k) style pairings: trace of the dot product.
inline std::uint32_t dot_trace(const FieldVector& a, const FieldVector& b) {
  return character_exponent(dot(a, b));
}

}  // namespace detail

inline GridFunction fourier_transform(const GridFunction& f,
                                      TransformStats* stats = nullptr) {
  const FiniteField& field = f.field();
  const auto p = static_cast<std::uint32_t>(field.characteristic());
  const std::uint64_t total = f.size();
  const std::vector<FieldVector> vectors = enumerate_vectors(field, f.dim());
  const Rational scale = Rational(1, BigInt(total));
  std::vector<CycloNum> out;
  out.reserve(total);
  std::uint64_t mults = 0;
  for (std::uint64_t k = 0; k < total; ++k) {
    CycloNum acc(p);
    for (std::uint64_t x = 0; x < total; ++x) {
      if (f[x].is_zero()) continue;
      const std::uint32_t e = detail::dot_trace(vectors[x], vectors[k]);
      acc += f[x].rotated((p - e % p) % p);
      ++mults;
    }
    acc *= scale;
    out.push_back(std::move(acc));
  }
  if (stats) stats->scalar_mults += mults;
  return GridFunction(field, f.dim(), std::move(out));
}

inline GridFunction inverse_transform(const GridFunction& g,
                                      TransformStats* stats = nullptr) {
  const FiniteField& field = g.field();
  const auto p = static_cast<std::uint32_t>(field.characteristic());
  const std::uint64_t total = g.size();
  const std::vector<FieldVector> vectors = enumerate_vectors(field, g.dim());
  std::vector<CycloNum> out;
  out.reserve(total);
  std::uint64_t mults = 0;
  for (std::uint64_t x = 0; x < total; ++x) {
    CycloNum acc(p);
    for (std::uint64_t k = 0; k < total; ++k) {
      if (g[k].is_zero()) continue;
      acc += g[k].rotated(detail::dot_trace(vectors[x], vectors[k]) % p);
      ++mults;
    }
    out.push_back(std::move(acc));
  }
  if (stats) stats->scalar_mults += mults;
  return GridFunction(field, g.dim(), std::move(out));
}

/// Same output as fourier_transform. The table is viewed as a (Z/p)^(d*n)
/// array (the canonical order is a base-p odometer over all d*n
/// coefficients); a length-p DFT runs along each of the d*n axes, and the
/// output at k is read off at the coordinate vector
/// phi(k) = (Tr(t^j * k_i))_{i,j}, which linearizes Tr(x.k) over the chosen
/// basis.
inline GridFunction fast_transform(const GridFunction& f,
                                   TransformStats* stats = nullptr) {
  const FiniteField& field = f.field();
  const auto p = static_cast<std::uint32_t>(field.characteristic());
  const std::uint32_t n = field.degree();
  const std::uint32_t d = f.dim();
  const std::uint32_t axes = d * n;
  const std::uint64_t total = f.size();

  // rot[u][w] = exponent of chi(-u*w) on Z/p.
  std::vector<std::vector<std::uint32_t>> rot(p, std::vector<std::uint32_t>(p));
  for (std::uint32_t u = 0; u < p; ++u) {
    for (std::uint32_t w = 0; w < p; ++w) {
      rot[u][w] = (p - static_cast<std::uint32_t>(
                           (static_cast<std::uint64_t>(u) * w) % p)) %
                  p;
    }
  }

  std::vector<CycloNum> buf(f.values());
  std::vector<CycloNum> slice(p, CycloNum(p));
  std::uint64_t mults = 0;
  std::uint64_t stride = 1;
  for (std::uint32_t axis = 0; axis < axes; ++axis, stride *= p) {
    const std::uint64_t blocks = total / p;
    for (std::uint64_t b = 0; b < blocks; ++b) {
      const std::uint64_t base = (b / stride) * stride * p + b % stride;
      for (std::uint32_t u = 0; u < p; ++u) slice[u] = buf[base + u * stride];
      for (std::uint32_t w = 0; w < p; ++w) {
        CycloNum acc(p);
        for (std::uint32_t u = 0; u < p; ++u) {
          if (slice[u].is_zero()) continue;
          acc += slice[u].rotated(rot[u][w]);
          ++mults;
        }
        buf[base + w * stride] = std::move(acc);
      }
    }
  }

  // Permute: fhat(k) = q^-d * buf[phi(k)].
  const Rational scale = Rational(1, BigInt(total));
  std::vector<CycloNum> out;
  out.reserve(total);
  const std::uint64_t q = field.size();
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t rest = k;
    std::uint64_t target = 0;
    std::uint64_t digit_weight = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      const FieldElement ki = field.element_at(rest % q);
      rest /= q;
      const auto& c = ki.coeffs();
      for (std::uint32_t j = 0; j < n; ++j) {
        // Tr(t^j * k_i) = Sum_m c_m Tr(t^(m+j)), linear in the coefficients.
        std::uint64_t tr = 0;
        for (std::uint32_t m = 0; m < n; ++m) {
          tr = (tr + static_cast<std::uint64_t>(c[m]) * field.power_trace(m + j)) % p;
        }
        target += tr * digit_weight;
        digit_weight *= p;
      }
    }
    out.push_back(buf[target] * scale);
  }
  if (stats) stats->scalar_mults += mults;
  return GridFunction(field, d, std::move(out));
}

struct PlancherelResult {
  Rational transform_side;  // Sum_k |fhat(k)|^2
  Rational direct_side;     // q^-d Sum_x |f(x)|^2
  bool pass = false;
};

/// Exact Plancherel comparison. Both sides are computed as cyclotomic sums
/// and must come out rational (they do for every rational-valued f); a
/// NotRationalError here would mean a transform bug upstream.
inline PlancherelResult plancherel_check(const GridFunction& f) {
  const auto p = static_cast<std::uint32_t>(f.field().characteristic());
  const GridFunction fhat = fast_transform(f);
  CycloNum lhs(p), rhs(p);
  for (std::uint64_t k = 0; k < fhat.size(); ++k) lhs += fhat[k].abs_sq();
  for (std::uint64_t x = 0; x < f.size(); ++x) rhs += f[x].abs_sq();
  rhs *= Rational(1, BigInt(f.size()));
  PlancherelResult r;
  r.transform_side = lhs.as_rational();
  r.direct_side = rhs.as_rational();
  r.pass = r.transform_side == r.direct_side;
  return r;
}

}  // namespace ffdot
