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

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffdot/errors.hpp"
#include "ffdot/finite_field.hpp"
#include "ffdot/rng.hpp"

namespace ffdot {

/// Number of table entries the exact transforms and exhaustive enumerations
/// will allocate: q^d <= 2^20.
inline constexpr std::uint64_t kMaxGridSize = 1ull << 20;

/// Ceiling on backtracking/enumeration work in the graph-image machinery.
inline constexpr std::uint64_t kMaxTupleVisits = 100'000'000ull;

/// A vector in F_q^d, d >= 1.
class FieldVector {
 public:
  explicit FieldVector(std::vector<FieldElement> entries)
      : e_(std::move(entries)) {
    if (e_.empty()) throw DimensionMismatchError("vector dimension must be >= 1");
    for (const auto& x : e_) {
      if (x.field() != e_[0].field()) {
        throw FieldMismatchError("vector entries from different fields");
      }
    }
  }

  const FiniteField& field() const { return e_[0].field(); }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(e_.size()); }
  const FieldElement& operator[](std::size_t i) const { return e_[i]; }
  const std::vector<FieldElement>& entries() const { return e_; }

  FieldVector operator+(const FieldVector& o) const {
    check_compatible(o);
    std::vector<FieldElement> out;
    out.reserve(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) out.push_back(e_[i] + o.e_[i]);
    return FieldVector(std::move(out));
  }
  FieldVector operator-(const FieldVector& o) const {
    check_compatible(o);
    std::vector<FieldElement> out;
    out.reserve(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) out.push_back(e_[i] - o.e_[i]);
    return FieldVector(std::move(out));
  }
  /// Scalar multiple s*v.
  FieldVector scaled(const FieldElement& s) const {
    std::vector<FieldElement> out;
    out.reserve(e_.size());
    for (const auto& x : e_) out.push_back(s * x);
    return FieldVector(std::move(out));
  }

  bool operator==(const FieldVector& o) const { return e_ == o.e_; }
  bool operator!=(const FieldVector& o) const { return !(*this == o); }

  /// Point syntax of the set file format: entries space-separated, each a
  /// comma-joined coefficient list.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ' ';
      s += e_[i].to_string();
    }
    return s;
  }

 private:
  void check_compatible(const FieldVector& o) const {
    if (field() != o.field()) throw FieldMismatchError("vectors over different fields");
    if (dim() != o.dim()) throw DimensionMismatchError("vector dimensions differ");
  }

  std::vector<FieldElement> e_;
};

inline FieldElement dot(const FieldVector& u, const FieldVector& v) {
  if (u.field() != v.field()) throw FieldMismatchError("dot: different fields");
  if (u.dim() != v.dim()) throw DimensionMismatchError("dot: dimensions differ");
  FieldElement acc = u.field().zero();
  for (std::uint32_t i = 0; i < u.dim(); ++i) acc += u[i] * v[i];
  return acc;
}

/// ||x|| = x_1^2 + ... + x_d^2 = x.x (no square root in a finite field).
inline FieldElement norm(const FieldVector& x) { return dot(x, x); }

/// q^d as u64 with an overflow/cap guard for indexing.
inline std::uint64_t grid_size_checked(const FiniteField& field, std::uint32_t d,
                                       std::uint64_t cap) {
  if (d < 1) throw DimensionMismatchError("dimension must be >= 1");
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (total > cap / field.size()) {
      throw CapExceededError("q^d exceeds cap " + std::to_string(cap));
    }
    total *= field.size();
  }
  return total;
}

/// Canonical index of a vector: base-q digits are the entry indices, entry 0
/// least significant. Combined with the base-p element indexing this makes a
/// grid table a plain base-p odometer over all d*n coefficients.
inline std::uint64_t vector_index(const FieldVector& v) {
  const FiniteField& f = v.field();
  std::uint64_t idx = 0;
  for (std::uint32_t i = v.dim(); i-- > 0;) {
    idx = idx * f.size() + f.index_of(v[i]);
  }
  return idx;
}

inline FieldVector vector_at(const FiniteField& field, std::uint32_t d,
                             std::uint64_t index) {
  std::vector<FieldElement> e;
  e.reserve(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    e.push_back(field.element_at(index % field.size()));
    index /= field.size();
  }
  return FieldVector(std::move(e));
}

/// All q^d vectors exactly once, in canonical (odometer) order.
inline std::vector<FieldVector> enumerate_vectors(const FiniteField& field,
                                                  std::uint32_t d) {
  const std::uint64_t total = grid_size_checked(field, d, kMaxGridSize);
  std::vector<FieldVector> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(vector_at(field, d, i));
  return out;
}

/// A finite subset of F_q^d: a duplicate-free ordered point list plus a
/// membership index keyed by canonical vector index. Immutable after
/// construction; doubles as the indicator function of the set.
class PointSet {
 public:
  PointSet(FiniteField field, std::uint32_t d, std::vector<FieldVector> points)
      : f_(std::move(field)), d_(d), pts_(std::move(points)) {
    grid_size_checked(f_, d_, std::uint64_t(1) << 62);  // indices must fit u64
    sorted_idx_.reserve(pts_.size());
    for (const auto& v : pts_) {
      if (v.field() != f_) throw FieldMismatchError("point from a different field");
      if (v.dim() != d_) throw DimensionMismatchError("point of wrong dimension");
      sorted_idx_.push_back(vector_index(v));
    }
    std::sort(sorted_idx_.begin(), sorted_idx_.end());
    if (std::adjacent_find(sorted_idx_.begin(), sorted_idx_.end()) !=
        sorted_idx_.end()) {
      throw ParseError("duplicate point in set");
    }
  }

  static PointSet empty(const FiniteField& field, std::uint32_t d) {
    return PointSet(field, d, {});
  }

  /// The whole of F_q^d (subject to the grid cap).
  static PointSet full_grid(const FiniteField& field, std::uint32_t d) {
    return PointSet(field, d, enumerate_vectors(field, d));
  }

  const FiniteField& field() const { return f_; }
  std::uint32_t dim() const { return d_; }
  std::size_t size() const { return pts_.size(); }
  bool is_empty() const { return pts_.empty(); }
  const std::vector<FieldVector>& points() const { return pts_; }
  const FieldVector& operator[](std::size_t i) const { return pts_[i]; }

  bool contains_index(std::uint64_t vidx) const {
    return std::binary_search(sorted_idx_.begin(), sorted_idx_.end(), vidx);
  }
  bool contains(const FieldVector& v) const {
    if (v.field() != f_ || v.dim() != d_) return false;
    return contains_index(vector_index(v));
  }

 private:
  FiniteField f_;
  std::uint32_t d_;
  std::vector<FieldVector> pts_;
  std::vector<std::uint64_t> sorted_idx_;
};

/// A uniformly random size-m subset of F_q^d from the given stream
/// (partial Fisher-Yates over the q^d canonical indices; points come out in
/// ascending index order).
inline PointSet random_point_set(const FiniteField& field, std::uint32_t d,
                                 std::uint64_t size, SplitMix64& rng) {
  const std::uint64_t total = grid_size_checked(field, d, kMaxGridSize);
  if (size > total) throw CapExceededError("requested set larger than q^d");
  std::vector<std::uint64_t> idx(total);
  for (std::uint64_t i = 0; i < total; ++i) idx[i] = i;
  for (std::uint64_t i = 0; i < size; ++i) {
    const std::uint64_t j = i + rng.next_below(total - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(size);
  std::sort(idx.begin(), idx.end());
  std::vector<FieldVector> pts;
  pts.reserve(size);
  for (auto i : idx) pts.push_back(vector_at(field, d, i));
  return PointSet(field, d, std::move(pts));
}

}  // namespace ffdot
