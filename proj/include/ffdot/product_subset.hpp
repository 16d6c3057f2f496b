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
#include <utility>
#include <vector>

#include "ffdot/errors.hpp"
#include "ffdot/point_set.hpp"
#include "ffdot/rng.hpp"

namespace ffdot {

/// S inside A_1 x ... x A_m: either the FULL product or an explicit sorted
/// list of tuples. Tuples are stored as mixed-radix codes over positions in
/// the component point lists, component 0 least significant, matching the
/// odometer convention used everywhere else.
class ProductSubset {
 public:
  static ProductSubset full(std::vector<PointSet> components) {
    return ProductSubset(std::move(components), /*is_full=*/true, {});
  }

  /// Tuples given as index vectors into the component point lists.
  static ProductSubset explicit_tuples(std::vector<PointSet> components,
                                       const std::vector<std::vector<std::uint32_t>>& tuples) {
    ProductSubset s(std::move(components), /*is_full=*/false, {});
    s.codes_.reserve(tuples.size());
    for (const auto& t : tuples) s.codes_.push_back(s.encode(t));
    std::sort(s.codes_.begin(), s.codes_.end());
    if (std::adjacent_find(s.codes_.begin(), s.codes_.end()) != s.codes_.end()) {
      throw ParseError("duplicate tuple in product subset");
    }
    return s;
  }

  static ProductSubset from_codes(std::vector<PointSet> components,
                                  std::vector<std::uint64_t> codes) {
    ProductSubset s(std::move(components), /*is_full=*/false, std::move(codes));
    std::sort(s.codes_.begin(), s.codes_.end());
    if (std::adjacent_find(s.codes_.begin(), s.codes_.end()) != s.codes_.end()) {
      throw ParseError("duplicate tuple in product subset");
    }
    if (!s.codes_.empty() && s.codes_.back() >= s.full_size_) {
      throw ParseError("tuple code out of range");
    }
    return s;
  }

  std::uint32_t arity() const { return static_cast<std::uint32_t>(comps_.size()); }
  const PointSet& component(std::uint32_t i) const { return comps_.at(i); }
  const std::vector<PointSet>& components() const { return comps_; }
  bool is_full() const { return full_; }

  /// |S|; the full product size is guarded to fit u64 at construction.
  std::uint64_t size() const { return full_ ? full_size_ : codes_.size(); }
  std::uint64_t full_product_size() const { return full_size_; }

  std::uint64_t encode(const std::vector<std::uint32_t>& tuple) const {
    if (tuple.size() != comps_.size()) throw ArityError("tuple arity mismatch");
    std::uint64_t code = 0;
    for (std::size_t i = comps_.size(); i-- > 0;) {
      if (tuple[i] >= comps_[i].size()) throw ParseError("tuple index out of range");
      code = code * comps_[i].size() + tuple[i];
    }
    return code;
  }

  std::vector<std::uint32_t> decode(std::uint64_t code) const {
    std::vector<std::uint32_t> t(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      t[i] = static_cast<std::uint32_t>(code % comps_[i].size());
      code /= comps_[i].size();
    }
    return t;
  }

  bool contains(const std::vector<std::uint32_t>& tuple) const {
    const std::uint64_t code = encode(tuple);
    if (full_) return true;
    return std::binary_search(codes_.begin(), codes_.end(), code);
  }

  /// Visits every tuple in ascending code order (odometer order for FULL).
  template <typename F>
  void for_each_tuple(F&& fn) const {
    std::vector<std::uint32_t> t(comps_.size(), 0);
    if (full_) {
      if (full_size_ == 0) return;
      while (true) {
        fn(t);
        std::size_t pos = 0;
        while (pos < t.size() && t[pos] + 1 == comps_[pos].size()) t[pos++] = 0;
        if (pos == t.size()) return;
        ++t[pos];
      }
    }
    for (const auto code : codes_) fn(decode(code));
  }

  const std::vector<std::uint64_t>& codes() const {
    if (full_) throw Error("codes() on a FULL subset");
    return codes_;
  }

 private:
  ProductSubset(std::vector<PointSet> components, bool is_full,
                std::vector<std::uint64_t> codes)
      : comps_(std::move(components)), full_(is_full), codes_(std::move(codes)) {
    if (comps_.empty()) throw ArityError("product subset needs >= 1 component");
    for (const auto& c : comps_) {
      if (c.field() != comps_[0].field()) {
        throw FieldMismatchError("components over different fields");
      }
      if (c.dim() != comps_[0].dim()) {
        throw DimensionMismatchError("components of different dimension");
      }
    }
    full_size_ = 1;
    for (const auto& c : comps_) {
      if (c.size() == 0) {
        full_size_ = 0;
        break;
      }
      if (full_size_ > (std::uint64_t(1) << 62) / c.size()) {
        throw CapExceededError("product size does not fit u64");
      }
      full_size_ *= c.size();
    }
    if (full_ && full_size_ == 0) {
      // A full product over an empty component is the empty set; normalize
      // to an explicit empty tuple list so size()/for_each keep working.
      full_ = false;
    }
  }

  std::vector<PointSet> comps_;
  bool full_;
  std::uint64_t full_size_ = 0;
  std::vector<std::uint64_t> codes_;
};

/// S' = the set of length-l prefixes of S that extend to a member of S.
inline ProductSubset project_prefix(const ProductSubset& s, std::uint32_t l) {
  if (l < 1 || l >= s.arity()) {
    throw ArityError("prefix length must satisfy 1 <= l < arity");
  }
  std::vector<PointSet> comps(s.components().begin(), s.components().begin() + l);
  if (s.is_full()) return ProductSubset::full(std::move(comps));
  std::uint64_t radix = 1;
  for (std::uint32_t i = 0; i < l; ++i) radix *= s.component(i).size();
  std::vector<std::uint64_t> prefix_codes;
  prefix_codes.reserve(s.codes().size());
  for (const auto code : s.codes()) prefix_codes.push_back(code % radix);
  std::sort(prefix_codes.begin(), prefix_codes.end());
  prefix_codes.erase(std::unique(prefix_codes.begin(), prefix_codes.end()),
                     prefix_codes.end());
  return ProductSubset::from_codes(std::move(comps), std::move(prefix_codes));
}

/// S(x_1, ..., x_l): the last-coordinate fiber over a prefix of length
/// arity-1, as a PointSet drawn from the last component.
inline PointSet fiber_of(const ProductSubset& s,
                         const std::vector<std::uint32_t>& prefix) {
  if (s.arity() < 2) throw ArityError("fiber needs arity >= 2");
  if (prefix.size() + 1 != s.arity()) {
    throw ArityError("prefix must have length arity-1");
  }
  const PointSet& last = s.component(s.arity() - 1);
  std::uint64_t prefix_code = 0;
  std::uint64_t radix = 1;
  for (std::size_t i = prefix.size(); i-- > 0;) {
    if (prefix[i] >= s.component(static_cast<std::uint32_t>(i)).size()) {
      throw ParseError("prefix index out of range");
    }
    prefix_code = prefix_code * s.component(static_cast<std::uint32_t>(i)).size() +
                  prefix[i];
  }
  for (std::uint32_t i = 0; i + 1 < s.arity(); ++i) radix *= s.component(i).size();

  std::vector<FieldVector> pts;
  if (s.is_full()) {
    pts = last.points();
  } else {
    for (const auto code : s.codes()) {
      if (code % radix == prefix_code) {
        pts.push_back(last[static_cast<std::size_t>(code / radix)]);
      }
    }
  }
  if (pts.empty()) {
    throw PrefixNotInProjectionError("prefix has no extension in S");
  }
  return PointSet(last.field(), last.dim(), std::move(pts));
}

/// Independent Bernoulli(density) sampling of the full product in odometer
/// order from stream SplitMix64(seed); density 1 returns FULL exactly.
inline ProductSubset random_product_subset(std::vector<PointSet> components,
                                           const Rational& density,
                                           std::uint64_t seed) {
  if (density <= 0 || density > 1) {
    throw ParseError("density must lie in (0, 1]");
  }
  if (density == 1) return ProductSubset::full(std::move(components));
  std::uint64_t total = 1;
  for (const auto& c : components) total *= c.size();
  if (total > kMaxTupleVisits) {
    throw CapExceededError("product too large to sample tuple-by-tuple");
  }
  SplitMix64 rng(seed);
  std::vector<std::uint64_t> codes;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (rng.bernoulli(density)) codes.push_back(code);
  }
  return ProductSubset::from_codes(std::move(components), std::move(codes));
}

}  // namespace ffdot
