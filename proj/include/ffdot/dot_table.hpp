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
#include <vector>

#include "ffdot/point_set.hpp"

namespace ffdot {

/// Pairwise dot products between two point sets as canonical element
/// indices. Precomputed when |A||B| is small enough, so the enumeration
/// cores run on plain integer lookups; falls back to on-the-fly dot products
/// above the cap.
class DotTable {
 public:
  static constexpr std::uint64_t kTableCap = 1ull << 22;

  DotTable(const PointSet& a, const PointSet& b) : a_(&a), b_(&b) {
    const std::uint64_t cells =
        static_cast<std::uint64_t>(a.size()) * static_cast<std::uint64_t>(b.size());
    if (cells == 0 || cells > kTableCap) return;
    const FiniteField& f = a.field();
    table_.reserve(cells);
    for (const auto& x : a.points()) {
      for (const auto& y : b.points()) {
        table_.push_back(static_cast<std::uint32_t>(f.index_of(dot(x, y))));
      }
    }
  }

  /// Element index of a[i] . b[j].
  std::uint32_t label(std::uint32_t i, std::uint32_t j) const {
    if (!table_.empty()) return table_[static_cast<std::uint64_t>(i) * b_->size() + j];
    const FiniteField& f = a_->field();
    return static_cast<std::uint32_t>(f.index_of(dot((*a_)[i], (*b_)[j])));
  }

 private:
  const PointSet* a_;
  const PointSet* b_;
  std::vector<std::uint32_t> table_;
};

}  // namespace ffdot
