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
// The Pi-objects: dot-product and distance sets Pi(A), Delta(A); fiber counts
// Pi^A_{x1..xl}(t1..tl); images Pi_{x1..xl}(A); and the graph image Pi_G(S)
// of edge labelings realized by tuples with x_i . x_j = alpha({i,j}) on every
// edge, together with the per-labeling realization count N_G(alpha).

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ffdot/dot_table.hpp"
#include "ffdot/graph.hpp"
#include "ffdot/point_set.hpp"
#include "ffdot/product_subset.hpp"

namespace ffdot {

/// Pi(A) = { x.y : x, y in A }, as elements sorted by canonical index.
inline std::vector<FieldElement> dot_product_set(const PointSet& a) {
  const FiniteField& f = a.field();
  if (a.size() * a.size() > kMaxTupleVisits) {
    throw CapExceededError("dot_product_set: |A|^2 too large");
  }
  std::vector<bool> seen(f.size(), false);
  for (const auto& x : a.points()) {
    for (const auto& y : a.points()) seen[f.index_of(dot(x, y))] = true;
  }
  std::vector<FieldElement> out;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (seen[i]) out.push_back(f.element_at(i));
  }
  return out;
}

/// Delta(A) = { ||x - y|| : x, y in A }.
inline std::vector<FieldElement> distance_set(const PointSet& a) {
  const FiniteField& f = a.field();
  if (a.size() * a.size() > kMaxTupleVisits) {
    throw CapExceededError("distance_set: |A|^2 too large");
  }
  std::vector<bool> seen(f.size(), false);
  for (const auto& x : a.points()) {
    for (const auto& y : a.points()) seen[f.index_of(norm(x - y))] = true;
  }
  std::vector<FieldElement> out;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (seen[i]) out.push_back(f.element_at(i));
  }
  return out;
}

namespace detail {

inline void check_probe_family(const PointSet& a,
                               const std::vector<FieldVector>& xs) {
  for (const auto& x : xs) {
    if (x.field() != a.field()) throw FieldMismatchError("probe from different field");
    if (x.dim() != a.dim()) throw DimensionMismatchError("probe of wrong dimension");
  }
}

}  // namespace detail

/// Pi^A_{x1..xl}(t1..tl) = |{ y in A : x_i . y = t_i for all i }|.
inline std::uint64_t pi_fiber_count(const PointSet& a,
                                    const std::vector<FieldVector>& xs,
                                    const std::vector<FieldElement>& ts) {
  if (xs.empty()) throw EmptyQueryError("fiber count needs l >= 1");
  if (xs.size() != ts.size()) {
    throw DimensionMismatchError("one target per probe vector required");
  }
  detail::check_probe_family(a, xs);
  std::uint64_t count = 0;
  for (const auto& y : a.points()) {
    bool all = true;
    for (std::size_t i = 0; all && i < xs.size(); ++i) {
      all = dot(xs[i], y) == ts[i];
    }
    count += all ? 1 : 0;
  }
  return count;
}

/// Pi_{x1..xl}(A) = { (x_1.y, ..., x_l.y) : y in A }, the support of the
/// fiber counts, as an arity-l label bitset.
inline LabelSet pi_image(const PointSet& a, const std::vector<FieldVector>& xs) {
  if (xs.empty()) throw EmptyQueryError("image needs l >= 1");
  detail::check_probe_family(a, xs);
  const FiniteField& f = a.field();
  LabelSet out(f.size(), static_cast<std::uint32_t>(xs.size()));
  for (const auto& y : a.points()) {
    std::uint64_t code = 0;
    for (std::size_t i = xs.size(); i-- > 0;) {
      code = code * f.size() + f.index_of(dot(xs[i], y));
    }
    out.set(code);
  }
  return out;
}

namespace detail {

struct GraphProblem {
  std::vector<std::uint32_t> order;   // processing order (vertex ids)
  std::vector<std::uint32_t> pos_of;  // vertex id -> position in order
  // back_edges[pos]: edges whose later endpoint (in the order) sits at pos;
  // these become decided the moment position pos is filled.
  std::vector<std::vector<std::uint32_t>> back_edges;
};

inline GraphProblem make_problem(const Graph& g,
                                 const std::vector<std::uint32_t>* order_override) {
  if (!g.is_connected()) throw DisconnectedError("graph is not connected");
  GraphProblem pr;
  pr.order = order_override ? *order_override : g.default_order();
  g.check_processing_order(pr.order);
  pr.pos_of.assign(g.vertex_count() + 1, 0);
  for (std::uint32_t i = 0; i < pr.order.size(); ++i) pr.pos_of[pr.order[i]] = i;
  pr.back_edges.assign(g.vertex_count(), {});
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges()[e];
    pr.back_edges[std::max(pr.pos_of[u], pr.pos_of[v])].push_back(e);
  }
  return pr;
}

inline void check_components(const Graph& g, const std::vector<PointSet>& sets) {
  if (sets.size() != g.vertex_count()) {
    throw DimensionMismatchError("one point set per vertex required");
  }
  for (const auto& s : sets) {
    if (s.field() != sets[0].field()) throw FieldMismatchError("mixed fields");
    if (s.dim() != sets[0].dim()) throw DimensionMismatchError("mixed dimensions");
  }
}

}  // namespace detail

/// Pi_G(S): all labelings realized by some tuple of S. Vertices are processed
/// in a connectivity-respecting order with edge labels fixed the moment both
/// endpoints are placed; the resulting set is order-independent. An explicit
/// S is walked tuple-by-tuple instead.
inline LabelSet graph_image(const Graph& g, const ProductSubset& s,
                            const std::vector<std::uint32_t>* order_override = nullptr) {
  detail::check_components(g, s.components());
  const FiniteField& f = s.component(0).field();
  const std::uint64_t q = f.size();
  LabelSet image(q, g.edge_count(), g.edges());
  if (s.size() == 0) return image;

  std::vector<DotTable> edge_dot;
  edge_dot.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    edge_dot.emplace_back(s.component(u - 1), s.component(v - 1));
  }

  // Precomputed weights q^e for assembling labeling codes.
  std::vector<std::uint64_t> weight(g.edge_count(), 1);
  for (std::uint32_t e = 1; e < g.edge_count(); ++e) weight[e] = weight[e - 1] * q;

  if (!s.is_full()) {
    for (const auto code : s.codes()) {
      const auto tuple = s.decode(code);
      std::uint64_t label_code = 0;
      for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edges()[e];
        label_code += weight[e] * edge_dot[e].label(tuple[u - 1], tuple[v - 1]);
      }
      image.set(label_code);
    }
    return image;
  }

  if (s.full_product_size() > kMaxTupleVisits) {
    throw CapExceededError("graph_image: full product exceeds tuple cap");
  }
  const detail::GraphProblem pr = detail::make_problem(g, order_override);
  const std::uint32_t k = g.vertex_count();
  std::vector<std::uint32_t> choice(k, 0);  // point index per position

  // DFS over positions; `code` carries the partial labeling code of all
  // edges whose endpoints are both placed.
  auto rec = [&](auto&& self, std::uint32_t t, std::uint64_t code) -> void {
    if (t == k) {
      image.set(code);
      return;
    }
    const PointSet& cand = s.component(pr.order[t] - 1);
    for (std::uint32_t i = 0; i < cand.size(); ++i) {
      choice[t] = i;
      std::uint64_t next_code = code;
      for (const auto e : pr.back_edges[t]) {
        const auto [u, v] = g.edges()[e];
        next_code += weight[e] * edge_dot[e].label(choice[pr.pos_of[u]],
                                                   choice[pr.pos_of[v]]);
      }
      self(self, t + 1, next_code);
    }
  };
  rec(rec, 0, 0);
  return image;
}

/// N_G(alpha): the number of tuples of the full product realizing alpha.
/// Backtracks in a connectivity-respecting order, pruning candidates that
/// violate any edge constraint to an already placed vertex.
inline std::uint64_t count_realizations(const Graph& g,
                                        const std::vector<PointSet>& a_list,
                                        const EdgeLabeling& alpha,
                                        const std::vector<std::uint32_t>* order_override = nullptr) {
  detail::check_components(g, a_list);
  if (alpha.graph() != g) throw DimensionMismatchError("labeling is for a different graph");
  const FiniteField& f = a_list[0].field();
  if (alpha.field() != f) throw FieldMismatchError("labeling over a different field");
  for (const auto& s : a_list) {
    if (s.size() == 0) return 0;
  }
  std::uint64_t product = 1;
  for (const auto& s : a_list) {
    if (product > kMaxTupleVisits / s.size()) {
      throw CapExceededError("count_realizations: product exceeds tuple cap");
    }
    product *= s.size();
  }

  std::vector<DotTable> edge_dot;
  edge_dot.reserve(g.edge_count());
  std::vector<std::uint32_t> alpha_idx(g.edge_count());
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges()[e];
    edge_dot.emplace_back(a_list[u - 1], a_list[v - 1]);
    alpha_idx[e] = static_cast<std::uint32_t>(f.index_of(alpha.label(e)));
  }

  const detail::GraphProblem pr = detail::make_problem(g, order_override);
  const std::uint32_t k = g.vertex_count();
  std::vector<std::uint32_t> choice(k, 0);
  std::uint64_t count = 0;

  // Recursive backtracking with per-vertex constraint filtering.
  auto rec = [&](auto&& self, std::uint32_t t) -> void {
    if (t == k) {
      ++count;
      return;
    }
    const PointSet& cand = a_list[pr.order[t] - 1];
    for (std::uint32_t i = 0; i < cand.size(); ++i) {
      choice[t] = i;
      bool ok = true;
      for (const auto e : pr.back_edges[t]) {
        const auto [u, v] = g.edges()[e];
        if (edge_dot[e].label(choice[pr.pos_of[u]], choice[pr.pos_of[v]]) !=
            alpha_idx[e]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, t + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace ffdot
