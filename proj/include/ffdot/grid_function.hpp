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
#include <utility>
#include <vector>

#include "ffdot/cyclotomic.hpp"
#include "ffdot/point_set.hpp"

namespace ffdot {

/// A function F_q^d -> Q(zeta_p), tabulated over all q^d points in canonical
/// vector order. Indicator functions of point sets are the main inhabitants.
class GridFunction {
 public:
  GridFunction(FiniteField field, std::uint32_t d, std::vector<CycloNum> values)
      : f_(std::move(field)), d_(d), v_(std::move(values)) {
    const std::uint64_t total = grid_size_checked(f_, d_, kMaxGridSize);
    if (v_.size() != total) {
      throw DimensionMismatchError("grid table must have exactly q^d entries");
    }
    const auto p = static_cast<std::uint32_t>(f_.characteristic());
    for (const auto& z : v_) {
      if (z.order() != p) {
        throw OrderMismatchError("grid values must live in Q(zeta_p)");
      }
    }
  }

  static GridFunction zero(const FiniteField& field, std::uint32_t d) {
    const std::uint64_t total = grid_size_checked(field, d, kMaxGridSize);
    return GridFunction(
        field, d,
        std::vector<CycloNum>(
            total, CycloNum(static_cast<std::uint32_t>(field.characteristic()))));
  }

  static GridFunction constant(const FiniteField& field, std::uint32_t d,
                               const Rational& value) {
    const std::uint64_t total = grid_size_checked(field, d, kMaxGridSize);
    return GridFunction(
        field, d,
        std::vector<CycloNum>(
            total, CycloNum(static_cast<std::uint32_t>(field.characteristic()),
                            value)));
  }

  static GridFunction indicator(const PointSet& a) {
    GridFunction g = zero(a.field(), a.dim());
    for (const auto& v : a.points()) {
      g.v_[vector_index(v)] =
          CycloNum(static_cast<std::uint32_t>(a.field().characteristic()),
                   Rational(1));
    }
    return g;
  }

  const FiniteField& field() const { return f_; }
  std::uint32_t dim() const { return d_; }
  std::uint64_t size() const { return v_.size(); }
  const CycloNum& operator[](std::uint64_t i) const { return v_[i]; }
  const std::vector<CycloNum>& values() const { return v_; }

  bool operator==(const GridFunction& o) const {
    return f_ == o.f_ && d_ == o.d_ && v_ == o.v_;
  }
  bool operator!=(const GridFunction& o) const { return !(*this == o); }

 private:
  FiniteField f_;
  std::uint32_t d_;
  std::vector<CycloNum> v_;
};

}  // namespace ffdot
