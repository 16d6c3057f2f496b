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
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ffdot/errors.hpp"
#include "ffdot/finite_field.hpp"

namespace ffdot {

/// Bit ceiling for label bitsets (q^arity bits).
inline constexpr std::uint64_t kMaxLabelBits = 1ull << 26;

/// A simple graph on vertices 1..k. Edges are stored in canonical order
/// (each pair as (min, max), the list sorted ascending); that order defines
/// the coordinate order of every edge labeling and label bitset.
class Graph {
 public:
  Graph(std::uint32_t vertex_count,
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
      : k_(vertex_count) {
    if (k_ < 1) throw ParseError("graph needs at least one vertex");
    for (auto& [a, b] : edges) {
      if (a == b) throw ParseError("loop edge");
      if (a < 1 || a > k_ || b < 1 || b > k_) throw ParseError("edge endpoint out of range");
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw ParseError("duplicate edge");
    }
    e_ = std::move(edges);
    connected_ = compute_connected();
  }

  static Graph path(std::uint32_t vertices) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t i = 1; i < vertices; ++i) e.push_back({i, i + 1});
    return Graph(vertices, std::move(e));
  }
  static Graph complete(std::uint32_t vertices) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t i = 1; i <= vertices; ++i) {
      for (std::uint32_t j = i + 1; j <= vertices; ++j) e.push_back({i, j});
    }
    return Graph(vertices, std::move(e));
  }
  /// K_{1,leaves}: vertex 1 is the center.
  static Graph star(std::uint32_t leaves) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t i = 0; i < leaves; ++i) e.push_back({1, 2 + i});
    return Graph(leaves + 1, std::move(e));
  }
  /// Triangle 1-2-3 with the pendant vertex 4 on vertex 3.
  static Graph paw() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

  std::uint32_t vertex_count() const { return k_; }
  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(e_.size()); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return e_; }

  bool is_connected() const { return connected_; }
  bool is_tree() const { return connected_ && e_.size() + 1 == k_; }

  /// Position of {a, b} in the canonical edge order.
  std::uint32_t edge_index(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    const auto it = std::lower_bound(e_.begin(), e_.end(), std::make_pair(a, b));
    if (it == e_.end() || *it != std::make_pair(a, b)) {
      throw ParseError("no such edge");
    }
    return static_cast<std::uint32_t>(it - e_.begin());
  }

  std::vector<std::uint32_t> neighbors(std::uint32_t v) const {
    std::vector<std::uint32_t> out;
    for (const auto& [a, b] : e_) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    return out;
  }

  /// A connectivity-respecting vertex order starting from vertex 1 (BFS):
  /// every vertex after the first is adjacent to an earlier one. Requires a
  /// connected graph.
  std::vector<std::uint32_t> default_order() const {
    if (!connected_) throw DisconnectedError("graph is not connected");
    std::vector<std::uint32_t> order{1};
    std::vector<bool> seen(k_ + 1, false);
    seen[1] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (auto w : neighbors(order[head])) {
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
    return order;
  }

  /// Validates that `order` is a permutation of 1..k in which each vertex
  /// after the first has an earlier neighbor.
  void check_processing_order(const std::vector<std::uint32_t>& order) const {
    if (order.size() != k_) throw ParseError("order must list every vertex once");
    std::vector<bool> seen(k_ + 1, false);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::uint32_t v = order[i];
      if (v < 1 || v > k_ || seen[v]) throw ParseError("order is not a permutation");
      if (i > 0) {
        bool linked = false;
        for (auto w : neighbors(v)) linked = linked || seen[w];
        if (!linked) {
          throw ParseError("order is not connectivity-respecting at vertex " +
                           std::to_string(v));
        }
      }
      seen[v] = true;
    }
  }

  bool operator==(const Graph& o) const { return k_ == o.k_ && e_ == o.e_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  /// Text format: first line the vertex count, then one "i j" line per edge.
  static Graph parse(std::istream& in) {
    std::uint32_t k = 0;
    if (!(in >> k)) throw ParseError("graph file: missing vertex count");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::uint32_t a, b;
    while (in >> a >> b) edges.push_back({a, b});
    return Graph(k, std::move(edges));
  }

  void serialize(std::ostream& out) const {
    out << k_ << "\n";
    for (const auto& [a, b] : e_) out << a << " " << b << "\n";
  }

  std::string describe() const {
    std::ostringstream os;
    os << "k=" << k_ << " edges=";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) os << ',';
      os << e_[i].first << '-' << e_[i].second;
    }
    return os.str();
  }

 private:
  bool compute_connected() const {
    std::vector<bool> seen(k_ + 1, false);
    std::vector<std::uint32_t> stack{1};
    seen[1] = true;
    std::uint32_t visited = 1;
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      for (auto w : neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          ++visited;
          stack.push_back(w);
        }
      }
    }
    return visited == k_;
  }

  std::uint32_t k_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e_;
  bool connected_;
};

/// alpha: E -> F_q, one label per edge in canonical edge order; a row vector
/// in (F_q)^E.
class EdgeLabeling {
 public:
  EdgeLabeling(Graph graph, std::vector<FieldElement> labels)
      : g_(std::move(graph)), labels_(std::move(labels)) {
    if (labels_.size() != g_.edge_count()) {
      throw DimensionMismatchError("one label per edge required");
    }
    for (const auto& l : labels_) {
      if (l.field() != labels_[0].field()) {
        throw FieldMismatchError("labels from different fields");
      }
    }
  }

  const Graph& graph() const { return g_; }
  const std::vector<FieldElement>& labels() const { return labels_; }
  const FieldElement& label(std::uint32_t edge) const { return labels_.at(edge); }
  const FiniteField& field() const { return labels_.at(0).field(); }

  bool all_nonzero() const {
    for (const auto& l : labels_) {
      if (l.is_zero()) return false;
    }
    return true;
  }

  /// Odometer code over the canonical edge order (edge 0 least significant).
  std::uint64_t code() const {
    const FiniteField& f = field();
    std::uint64_t c = 0;
    for (std::size_t e = labels_.size(); e-- > 0;) {
      c = c * f.size() + f.index_of(labels_[e]);
    }
    return c;
  }

  static EdgeLabeling from_code(const Graph& g, const FiniteField& f,
                                std::uint64_t code) {
    std::vector<FieldElement> labels;
    labels.reserve(g.edge_count());
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
      labels.push_back(f.element_at(code % f.size()));
      code /= f.size();
    }
    return EdgeLabeling(g, std::move(labels));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i) s += ' ';
      s += labels_[i].to_string();
    }
    return s;
  }

 private:
  Graph g_;
  std::vector<FieldElement> labels_;
};

/// A subset of (F_q)^E (or of F_q^l for a bare arity l) as a bitset over
/// canonically encoded labelings: bit i is labeling number i in odometer
/// order, coordinate 0 least significant.
class LabelSet {
 public:
  LabelSet(std::uint64_t q, std::uint32_t arity,
           std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_order = {})
      : q_(q), arity_(arity), edges_(std::move(edge_order)) {
    if (q_ < 2) throw ParseError("label alphabet needs q >= 2");
    if (!edges_.empty() && edges_.size() != arity_) {
      throw DimensionMismatchError("edge order length must equal arity");
    }
    bits_total_ = 1;
    for (std::uint32_t i = 0; i < arity_; ++i) {
      if (bits_total_ > kMaxLabelBits / q_) {
        throw CapExceededError("label bitset would exceed cap");
      }
      bits_total_ *= q_;
    }
    words_.assign((bits_total_ + 63) / 64, 0);
  }

  std::uint64_t q() const { return q_; }
  std::uint32_t arity() const { return arity_; }
  std::uint64_t bit_size() const { return bits_total_; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edge_order() const {
    return edges_;
  }

  void set(std::uint64_t i) {
    words_.at(i / 64) |= (1ull << (i % 64));
  }
  bool test(std::uint64_t i) const {
    return (words_.at(i / 64) >> (i % 64)) & 1;
  }

  std::uint64_t popcount() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  LabelSet& operator|=(const LabelSet& o) {
    check_shape(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  bool is_subset_of(const LabelSet& o) const {
    check_shape(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  bool operator==(const LabelSet& o) const {
    return q_ == o.q_ && arity_ == o.arity_ && words_ == o.words_;
  }
  bool operator!=(const LabelSet& o) const { return !(*this == o); }

  /// Hex serialization, bytes low-to-high, two lowercase digits per byte;
  /// bit i of the set is bit (i % 8) of byte (i / 8).
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    const std::uint64_t bytes = (bits_total_ + 7) / 8;
    std::string s;
    s.reserve(2 * bytes);
    for (std::uint64_t b = 0; b < bytes; ++b) {
      const std::uint8_t byte =
          static_cast<std::uint8_t>((words_[b / 8] >> ((b % 8) * 8)) & 0xff);
      s += digits[byte >> 4];
      s += digits[byte & 0xf];
    }
    return s;
  }

  /// One header line "labelset q=Q arity=L [edges=a-b,c-d,...]", then the hex
  /// line.
  void serialize(std::ostream& out) const {
    out << "labelset q=" << q_ << " arity=" << arity_;
    if (!edges_.empty()) {
      out << " edges=";
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i) out << ',';
        out << edges_[i].first << '-' << edges_[i].second;
      }
    }
    out << "\n" << to_hex() << "\n";
  }

  static LabelSet parse(std::istream& in) {
    std::string header, hex;
    if (!std::getline(in, header) || !std::getline(in, hex)) {
      throw ParseError("labelset: truncated input");
    }
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    if (tag != "labelset") throw ParseError("labelset: bad header");
    std::uint64_t q = 0;
    std::uint32_t arity = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::string field;
    while (hs >> field) {
      if (field.rfind("q=", 0) == 0) {
        q = std::stoull(field.substr(2));
      } else if (field.rfind("arity=", 0) == 0) {
        arity = static_cast<std::uint32_t>(std::stoul(field.substr(6)));
      } else if (field.rfind("edges=", 0) == 0) {
        std::istringstream es(field.substr(6));
        std::string item;
        while (std::getline(es, item, ',')) {
          const auto dash = item.find('-');
          if (dash == std::string::npos) throw ParseError("labelset: bad edge");
          edges.push_back(
              {static_cast<std::uint32_t>(std::stoul(item.substr(0, dash))),
               static_cast<std::uint32_t>(std::stoul(item.substr(dash + 1)))});
        }
      } else {
        throw ParseError("labelset: unknown header field " + field);
      }
    }
    if (q == 0) throw ParseError("labelset: missing q");
    LabelSet ls(q, arity, std::move(edges));
    const std::uint64_t bytes = (ls.bits_total_ + 7) / 8;
    if (hex.size() != 2 * bytes) throw ParseError("labelset: hex length mismatch");
    for (std::uint64_t b = 0; b < bytes; ++b) {
      const auto nibble = [&](char c) -> std::uint64_t {
        if (c >= '0' && c <= '9') return static_cast<std::uint64_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<std::uint64_t>(c - 'a' + 10);
        throw ParseError("labelset: bad hex digit");
      };
      const std::uint64_t byte = (nibble(hex[2 * b]) << 4) | nibble(hex[2 * b + 1]);
      ls.words_[b / 8] |= byte << ((b % 8) * 8);
    }
    // Reject stray bits beyond bit_size.
    for (std::uint64_t i = ls.bits_total_; i < 64 * ls.words_.size(); ++i) {
      if (ls.test(i)) throw ParseError("labelset: bits beyond q^arity");
    }
    return ls;
  }

 private:
  void check_shape(const LabelSet& o) const {
    if (q_ != o.q_ || arity_ != o.arity_) {
      throw DimensionMismatchError("label sets of different shape");
    }
  }

  std::uint64_t q_;
  std::uint32_t arity_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::uint64_t bits_total_;
  std::vector<std::uint64_t> words_;
};

}  // namespace ffdot
