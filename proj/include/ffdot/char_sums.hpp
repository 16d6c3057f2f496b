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
// Incomplete character sums over dot products and their instance bounds:
//
//   S_{A,alpha}(x) = Sum_{s != 0} Sum_{y in A} chi(s(x.y - alpha))
//   v(alpha)       = Sum_{x in B} S_{A,alpha}(x),   |v| <= (|A||B|)^1/2 q^(d+1)/2
//   dilation energy with |.| <= |A| q
//   the exact I+II+III split of the two-edge path count, and the general
//   R_0 + ... + R_k split of N_G(alpha) for trees by the number of nonzero
//   coordinates of the frequency vector s
//   the Schur row/column-sum bilinear bound, and the star-factor bound.
//
// All values are exact cyclotomic numbers; magnitude bounds are certified by
// comparing squared absolute values against exact rational right sides, with
// interval precision escalating until the comparison is decided.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffdot/cyclotomic.hpp"
#include "ffdot/dot_table.hpp"
#include "ffdot/graph.hpp"
#include "ffdot/interval.hpp"
#include "ffdot/point_set.hpp"

namespace ffdot {

enum class Verdict { kConfirmed, kViolated, kIndeterminate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed: return "CONFIRMED";
    case Verdict::kViolated: return "VIOLATED";
    case Verdict::kIndeterminate: return "INDETERMINATE";
  }
  return "?";
}

/// Precision escalation policy for certified comparisons: start at
/// start_bits, double until the comparison is decided or cap_bits is hit.
struct CertifyOptions {
  unsigned start_bits = 64;
  unsigned cap_bits = 512;
};

/// Outcome of a certified comparison lhs <= rhs. CONFIRMED means the whole
/// lhs enclosure lies at or below rhs; VIOLATED means it lies strictly
/// above; INDETERMINATE means the precision cap was reached undecided.
struct BoundCheck {
  CertifiedInterval lhs;
  Rational rhs;
  Verdict verdict = Verdict::kIndeterminate;
  unsigned precision_bits = 0;
};

/// Certifies value <= rhs for a conjugation-fixed (real) cyclotomic value.
inline BoundCheck certify_le(const CycloNum& value, const Rational& rhs,
                             CertifyOptions opts = {}) {
  if (value != value.conjugate()) {
    throw Error("certify_le: value is not real");
  }
  BoundCheck out;
  out.rhs = rhs;
  unsigned bits = opts.start_bits;
  while (true) {
    out.lhs = embed_real(value, bits);
    out.precision_bits = effective_precision(bits);
    if (out.lhs.hi <= rhs) {
      out.verdict = Verdict::kConfirmed;
      return out;
    }
    if (out.lhs.lo > rhs) {
      out.verdict = Verdict::kViolated;
      return out;
    }
    if (bits >= opts.cap_bits) {
      out.verdict = Verdict::kIndeterminate;
      return out;
    }
    bits *= 2;
  }
}

namespace detail {

inline void check_set_pair(const PointSet& a, const PointSet& b,
                           const char* what) {
  if (a.field() != b.field()) {
    throw FieldMismatchError(std::string(what) + ": sets over different fields");
  }
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError(std::string(what) +
                                 ": sets of different dimension");
  }
}

inline void check_scalar(const PointSet& a, const FieldElement& alpha,
                         const char* what) {
  if (alpha.field() != a.field()) {
    throw FieldMismatchError(std::string(what) + ": alpha over a different field");
  }
}

/// Sum over s in F_q^* and over the w-histogram of chi(s*w); the literal
/// double sum with equal terms grouped. `counts[i]` is the multiplicity of
/// the element with canonical index i.
inline CycloNum hist_character_sum(const FiniteField& f,
                                   const std::vector<std::uint64_t>& counts) {
  const auto p = static_cast<std::uint32_t>(f.characteristic());
  CharacterAccumulator acc(p);
  for (std::uint64_t widx = 0; widx < f.size(); ++widx) {
    if (counts[widx] == 0) continue;
    const FieldElement w = f.element_at(widx);
    for (std::uint64_t sidx = 1; sidx < f.size(); ++sidx) {
      acc.add(f.trace(f.element_at(sidx) * w), counts[widx]);
    }
  }
  return acc.value();
}

/// v(alpha) = Sum_{x in B} S_{A,alpha}(x), via the (x, y) -> x.y - alpha
/// histogram.
inline CycloNum v_value(const PointSet& a, const PointSet& b,
                        const FieldElement& alpha) {
  const FiniteField& f = a.field();
  std::vector<std::uint64_t> counts(f.size(), 0);
  for (const auto& x : b.points()) {
    for (const auto& y : a.points()) {
      ++counts[f.index_of(dot(x, y) - alpha)];
    }
  }
  return hist_character_sum(f, counts);
}

/// One R_m contribution: frequencies nonzero exactly on `edge_subset`.
/// Sum_{s in (F_q^*)^E'} Sum over tuples on touched vertices of
/// chi(Sum_e s_e (x_u.x_v - alpha_e)), times the product of the untouched
/// set sizes (the summand does not depend on those coordinates).
inline CycloNum r_subset_sum(const Graph& g, const std::vector<PointSet>& a_list,
                             const EdgeLabeling& alpha,
                             const std::vector<std::uint32_t>& edge_subset) {
  const FiniteField& f = a_list[0].field();
  const auto p = static_cast<std::uint32_t>(f.characteristic());
  const std::uint64_t q = f.size();
  const auto m = static_cast<std::uint32_t>(edge_subset.size());

  std::vector<std::uint32_t> touched;
  for (auto e : edge_subset) {
    touched.push_back(g.edges()[e].first);
    touched.push_back(g.edges()[e].second);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  BigInt untouched(1);
  for (std::uint32_t v = 1; v <= g.vertex_count(); ++v) {
    if (!std::binary_search(touched.begin(), touched.end(), v)) {
      untouched *= BigInt(a_list[v - 1].size());
    }
  }
  if (untouched == 0) return CycloNum(p);
  std::uint64_t tuples = 1;
  for (auto v : touched) {
    if (a_list[v - 1].size() == 0) return CycloNum(p);
    tuples *= a_list[v - 1].size();
  }
  std::uint64_t s_vectors = 1;
  for (std::uint32_t i = 0; i < m; ++i) s_vectors *= q - 1;
  if (s_vectors == 0) return CycloNum(p);  // impossible for q >= 2, m >= 1
  if (tuples > kMaxTupleVisits / s_vectors) {
    throw CapExceededError("r_decomposition: subset work exceeds tuple cap");
  }

  std::vector<std::uint32_t> tpos(g.vertex_count() + 1, 0);
  for (std::uint32_t i = 0; i < touched.size(); ++i) tpos[touched[i]] = i;

  // Per edge: endpoint positions in `touched` and the flat table of
  // x_u.x_v - alpha_e as element indices.
  struct EdgeData {
    std::uint32_t pu, pv;
    std::uint64_t cols;
    std::vector<std::uint32_t> diff;   // element index of dot - alpha
    std::vector<std::uint32_t> expo;   // trace(s_e * diff), rebuilt per s
  };
  std::vector<EdgeData> ed;
  ed.reserve(m);
  for (auto e : edge_subset) {
    const auto [u, v] = g.edges()[e];
    EdgeData item;
    item.pu = tpos[u];
    item.pv = tpos[v];
    item.cols = a_list[v - 1].size();
    const PointSet& au = a_list[u - 1];
    const PointSet& av = a_list[v - 1];
    item.diff.reserve(au.size() * av.size());
    for (const auto& xu : au.points()) {
      for (const auto& xv : av.points()) {
        item.diff.push_back(
            static_cast<std::uint32_t>(f.index_of(dot(xu, xv) - alpha.label(e))));
      }
    }
    item.expo.resize(item.diff.size());
    ed.push_back(std::move(item));
  }

  std::vector<std::uint64_t> counts(p, 0);
  std::vector<std::uint64_t> s_idx(m, 1);  // indices into F_q^*, 1..q-1
  while (true) {
    for (std::uint32_t i = 0; i < m; ++i) {
      const FieldElement s = f.element_at(s_idx[i]);
      auto& e = ed[i];
      for (std::size_t c = 0; c < e.diff.size(); ++c) {
        e.expo[c] = f.trace(s * f.element_at(e.diff[c]));
      }
    }
    // Odometer over tuples on the touched vertices.
    std::vector<std::uint32_t> pt(touched.size(), 0);
    while (true) {
      std::uint64_t expo = 0;
      for (const auto& e : ed) {
        expo += e.expo[static_cast<std::uint64_t>(pt[e.pu]) * e.cols + pt[e.pv]];
      }
      ++counts[expo % p];
      std::size_t pos = 0;
      while (pos < pt.size() &&
             pt[pos] + 1 == a_list[touched[pos] - 1].size()) {
        pt[pos++] = 0;
      }
      if (pos == pt.size()) break;
      ++pt[pos];
    }
    // Next s-vector.
    std::size_t pos = 0;
    while (pos < m && s_idx[pos] + 1 == q) s_idx[pos++] = 1;
    if (pos == m) break;
    ++s_idx[pos];
  }

  CharacterAccumulator acc(p);
  for (std::uint32_t e = 0; e < p; ++e) acc.add(e, counts[e]);
  return acc.value() * Rational(untouched);
}

}  // namespace detail

/// S_{A,alpha}(x), exact. Computed as the literal sum over s != 0 and y in A
/// (grouped by the value of x.y - alpha); the closed form
/// q*Pi^A_x(alpha) - |A| is left to the tests as an independent oracle.
inline CycloNum s_sum(const PointSet& a, const FieldElement& alpha,
                      const FieldVector& x) {
  detail::check_scalar(a, alpha, "s_sum");
  if (x.field() != a.field()) throw FieldMismatchError("s_sum: x over a different field");
  if (x.dim() != a.dim()) throw DimensionMismatchError("s_sum: x of wrong dimension");
  const FiniteField& f = a.field();
  std::vector<std::uint64_t> counts(f.size(), 0);
  for (const auto& y : a.points()) ++counts[f.index_of(dot(x, y) - alpha)];
  return detail::hist_character_sum(f, counts);
}

struct VSumResult {
  CycloNum value;
  BoundCheck bound;  // |v|^2 <= |A||B| q^(d+1)
};

/// v(alpha) with its squared bound check (squaring keeps the right side an
/// exact rational for every parity of d).
inline VSumResult v_sum(const PointSet& a, const PointSet& b,
                        const FieldElement& alpha, bool theorem_mode = true,
                        CertifyOptions opts = {}) {
  detail::check_set_pair(a, b, "v_sum");
  detail::check_scalar(a, alpha, "v_sum");
  if (theorem_mode && alpha.is_zero()) {
    throw AlphaZeroError("v_sum requires alpha != 0");
  }
  const FiniteField& f = a.field();
  const CycloNum v = detail::v_value(a, b, alpha);
  const Rational rhs = Rational(BigInt(a.size()) * BigInt(b.size()) *
                                pow_bigint(BigInt(f.size()), a.dim() + 1));
  return {v, certify_le(v.abs_sq(), rhs, opts)};
}

struct EnergyResult {
  CycloNum value;
  BoundCheck bound;  // |value|^2 <= (|A| q)^2
};

/// Sum over s, s' in F_q^* and y, y' in A with s*y = s'*y' of
/// chi(alpha(s' - s)); the dilation-energy sum behind the v bound.
inline EnergyResult dilate_energy(const PointSet& a, const FieldElement& alpha,
                                  bool theorem_mode = true,
                                  CertifyOptions opts = {}) {
  detail::check_scalar(a, alpha, "dilate_energy");
  if (theorem_mode && alpha.is_zero()) {
    throw AlphaZeroError("dilate_energy requires alpha != 0");
  }
  const FiniteField& f = a.field();
  const std::uint64_t q = f.size();
  if ((q - 1) * (q - 1) * (a.size() + 1) > kMaxTupleVisits) {
    throw CapExceededError("dilate_energy: (q-1)^2 |A| too large");
  }
  const auto p = static_cast<std::uint32_t>(f.characteristic());
  CharacterAccumulator acc(p);
  for (std::uint64_t si = 1; si < q; ++si) {
    const FieldElement s = f.element_at(si);
    for (std::uint64_t sj = 1; sj < q; ++sj) {
      const FieldElement sp = f.element_at(sj);
      const FieldElement ratio = s * sp.inv();  // s*y = s'*y'  <=>  y' = (s/s')y
      std::uint64_t pairs = 0;
      for (const auto& y : a.points()) {
        if (a.contains(y.scaled(ratio))) ++pairs;
      }
      if (pairs != 0) acc.add(f.trace(alpha * (sp - s)), pairs);
    }
  }
  const CycloNum value = acc.value();
  const Rational rhs =
      Rational(BigInt(a.size()) * BigInt(a.size()) * BigInt(q) * BigInt(q));
  return {value, certify_le(value.abs_sq(), rhs, opts)};
}

/// The exact split of a realization count by the weight (number of nonzero
/// coordinates) of the frequency vector: terms[m] = R_m, Sum_m R_m = total =
/// N_G(alpha).
struct RDecomposition {
  Graph graph;
  EdgeLabeling alpha;
  std::vector<CycloNum> terms;
  Rational total;
};

/// The two-edge path split I + II + III: I is the s = t = 0 term
/// q^-2 |A1||A2||A3|, II collects exactly one nonzero frequency, III both.
inline RDecomposition path2_decomposition(const PointSet& a1, const PointSet& a2,
                                          const PointSet& a3,
                                          const FieldElement& alpha1,
                                          const FieldElement& alpha2,
                                          bool theorem_mode = true) {
  detail::check_set_pair(a1, a2, "path2");
  detail::check_set_pair(a2, a3, "path2");
  detail::check_scalar(a1, alpha1, "path2");
  detail::check_scalar(a1, alpha2, "path2");
  if (theorem_mode && (alpha1.is_zero() || alpha2.is_zero())) {
    throw AlphaZeroError("path2_decomposition requires nonzero labels");
  }
  const FiniteField& f = a1.field();
  const auto p = static_cast<std::uint32_t>(f.characteristic());
  const Rational inv_q2 = Rational(1, BigInt(f.size()) * BigInt(f.size()));

  const CycloNum term_i(
      p, inv_q2 * Rational(BigInt(a1.size()) * BigInt(a2.size()) * BigInt(a3.size())));

  CycloNum term_ii =
      (detail::v_value(a3, a2, alpha2) * Rational(BigInt(a1.size())) +
       detail::v_value(a1, a2, alpha1) * Rational(BigInt(a3.size()))) *
      inv_q2;

  CycloNum term_iii(p);
  for (const auto& x2 : a2.points()) {
    term_iii += s_sum(a1, alpha1, x2) * s_sum(a3, alpha2, x2);
  }
  term_iii *= inv_q2;

  const CycloNum sum = term_i + term_ii + term_iii;
  EdgeLabeling alpha(Graph::path(3), {alpha1, alpha2});
  return {Graph::path(3), std::move(alpha), {term_i, term_ii, term_iii},
          sum.as_rational()};
}

/// R_m decomposition for a tree: for each m-subset E' of edges, frequencies
/// run over (F_q^*)^E' while untouched vertices contribute plain |A_i|
/// factors, so the work per subset is (q-1)^m times the product of the
/// touched sets only.
inline RDecomposition r_decomposition(const Graph& g,
                                      const std::vector<PointSet>& a_list,
                                      const EdgeLabeling& alpha,
                                      bool theorem_mode = true) {
  if (!g.is_tree()) throw NotATreeError("r_decomposition requires a tree");
  if (a_list.size() != g.vertex_count()) {
    throw DimensionMismatchError("one point set per vertex required");
  }
  for (const auto& s : a_list) {
    detail::check_set_pair(s, a_list[0], "r_decomposition");
  }
  if (alpha.graph() != g) {
    throw DimensionMismatchError("labeling is for a different graph");
  }
  const FiniteField& f = a_list[0].field();
  if (alpha.field() != f) throw FieldMismatchError("labeling over a different field");
  if (theorem_mode && !alpha.all_nonzero()) {
    throw AlphaZeroError("r_decomposition requires nonzero labels");
  }
  const auto p = static_cast<std::uint32_t>(f.characteristic());
  const std::uint64_t q = f.size();
  const std::uint32_t k = g.edge_count();
  const Rational inv_qk = pow_rational(Rational(1, BigInt(q)), k);

  std::vector<CycloNum> terms(k + 1, CycloNum(p));
  BigInt full_product(1);
  for (const auto& s : a_list) full_product *= BigInt(s.size());
  terms[0] = CycloNum(p, inv_qk * Rational(full_product));

  for (std::uint32_t m = 1; m <= k; ++m) {
    CycloNum rm(p);
    // All m-subsets of the edge set, via the descending-mask idiom.
    std::vector<bool> mask(k, false);
    for (std::uint32_t i = 0; i < m; ++i) mask[i] = true;
    do {
      std::vector<std::uint32_t> subset;
      subset.reserve(m);
      for (std::uint32_t e = 0; e < k; ++e) {
        if (mask[e]) subset.push_back(e);
      }
      rm += detail::r_subset_sum(g, a_list, alpha, subset) * inv_qk;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    terms[m] = std::move(rm);
  }

  CycloNum sum(p);
  for (const auto& t : terms) sum += t;
  return {g, alpha, std::move(terms), sum.as_rational()};
}

/// Certified Schur test: |Sum_{j,k} c_{jk} z_j y_k|^2 <= R*C*(Sum|z|^2)(Sum|y|^2)
/// with R, C the maximum absolute row/column sums. Absolute values are exact
/// for rational entries and certified enclosures otherwise; the reported rhs
/// is the certified rational lower bound of the right side at the final
/// precision.
inline BoundCheck schur_bound_check(const std::vector<std::vector<CycloNum>>& c,
                                    const std::vector<CycloNum>& z,
                                    const std::vector<CycloNum>& y,
                                    CertifyOptions opts = {}) {
  const std::size_t rows = c.size();
  if (rows == 0 || z.size() != rows) {
    throw DimensionMismatchError("schur: need one z per matrix row");
  }
  const std::size_t cols = c[0].size();
  if (cols == 0 || y.size() != cols) {
    throw DimensionMismatchError("schur: need one y per matrix column");
  }
  for (const auto& row : c) {
    if (row.size() != cols) throw DimensionMismatchError("schur: ragged matrix");
  }
  const std::uint32_t p = z[0].order();

  CycloNum bilinear(p);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t l = 0; l < cols; ++l) bilinear += c[j][l] * z[j] * y[l];
  }
  const CycloNum lhs_sq = bilinear.abs_sq();
  CycloNum sz(p), sy(p);
  for (const auto& v : z) sz += v.abs_sq();
  for (const auto& v : y) sy += v.abs_sq();

  const auto nonneg = [](CertifiedInterval i) {
    if (i.lo < 0) i.lo = 0;
    return i;
  };

  BoundCheck out;
  unsigned bits = opts.start_bits;
  while (true) {
    const CertifiedInterval lhs = embed_real(lhs_sq, bits);
    CertifiedInterval row_max = CertifiedInterval::point(Rational(0));
    for (std::size_t j = 0; j < rows; ++j) {
      CertifiedInterval sum = CertifiedInterval::point(Rational(0));
      for (std::size_t l = 0; l < cols; ++l) {
        sum = sum + interval_abs(c[j][l], bits);
      }
      row_max = {std::max(row_max.lo, sum.lo), std::max(row_max.hi, sum.hi)};
    }
    CertifiedInterval col_max = CertifiedInterval::point(Rational(0));
    for (std::size_t l = 0; l < cols; ++l) {
      CertifiedInterval sum = CertifiedInterval::point(Rational(0));
      for (std::size_t j = 0; j < rows; ++j) {
        sum = sum + interval_abs(c[j][l], bits);
      }
      col_max = {std::max(col_max.lo, sum.lo), std::max(col_max.hi, sum.hi)};
    }
    const CertifiedInterval rhs = nonneg(row_max) * nonneg(col_max) *
                                  nonneg(embed_real(sz, bits)) *
                                  nonneg(embed_real(sy, bits));
    out.lhs = lhs;
    out.precision_bits = effective_precision(bits);
    if (lhs.hi <= rhs.lo) {
      out.verdict = Verdict::kConfirmed;
      out.rhs = rhs.lo;
      return out;
    }
    if (lhs.lo > rhs.hi) {
      out.verdict = Verdict::kViolated;
      out.rhs = rhs.hi;
      return out;
    }
    if (bits >= opts.cap_bits) {
      out.verdict = Verdict::kIndeterminate;
      out.rhs = rhs.lo;
      return out;
    }
    bits *= 2;
  }
}

struct StarBoundResult {
  CycloNum value;
  BoundCheck bound;
};

/// The star character sum Sum_{x in A_center} Prod_l S_{A_l, alpha_l}(x),
/// checked in squared form against Prod_l |A_l| q^(m(d+1)) for m >= 2 leaves.
/// With a single leaf the product collapses to v(alpha) with B = A_center and
/// the right side carries the extra |A_center| factor of that bound.
inline StarBoundResult star_term_bound(const PointSet& a_center,
                                       const std::vector<PointSet>& a_leaves,
                                       const std::vector<FieldElement>& alphas,
                                       bool theorem_mode = true,
                                       CertifyOptions opts = {}) {
  if (a_leaves.empty()) throw EmptyQueryError("star needs at least one leaf");
  if (alphas.size() != a_leaves.size()) {
    throw DimensionMismatchError("one alpha per leaf required");
  }
  for (const auto& leaf : a_leaves) {
    detail::check_set_pair(leaf, a_center, "star_term_bound");
  }
  for (const auto& alpha : alphas) {
    detail::check_scalar(a_center, alpha, "star_term_bound");
    if (theorem_mode && alpha.is_zero()) {
      throw AlphaZeroError("star_term_bound requires nonzero labels");
    }
  }
  const FiniteField& f = a_center.field();
  const auto p = static_cast<std::uint32_t>(f.characteristic());
  const std::size_t m = a_leaves.size();

  CycloNum value(p);
  for (const auto& x : a_center.points()) {
    CycloNum prod(p, Rational(1));
    for (std::size_t l = 0; l < m; ++l) {
      prod *= s_sum(a_leaves[l], alphas[l], x);
    }
    value += prod;
  }

  BigInt rhs = pow_bigint(BigInt(f.size()),
                          static_cast<unsigned long>(m) * (a_center.dim() + 1));
  for (const auto& leaf : a_leaves) rhs *= BigInt(leaf.size());
  if (m == 1) rhs *= BigInt(a_center.size());
  return {value, certify_le(value.abs_sq(), Rational(rhs), opts)};
}

}  // namespace ffdot
