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
// Text formats.
//
// Point set:
//   p n d                      header
//   mod c0 c1 ... cn           only when n > 1; optional (defaults to the
//                              lexicographically smallest irreducible)
//   e1 e2 ... ed               one point per line; each element a
//                              comma-joined coefficient list, a single
//                              residue for prime fields
// Duplicate point lines are rejected.
//
// Graph:
//   k                          vertex count (vertices 1..k)
//   i j                        one line per edge

#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ffdot/errors.hpp"
#include "ffdot/graph.hpp"
#include "ffdot/point_set.hpp"

namespace ffdot {

inline FieldElement parse_element(const FiniteField& field, const std::string& text) {
  std::vector<std::uint32_t> coeffs;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("empty coefficient in element: " + text);
    try {
      const unsigned long v = std::stoul(item);
      if (v >= field.characteristic()) {
        throw ParseError("coefficient " + item + " not a residue mod p");
      }
      coeffs.push_back(static_cast<std::uint32_t>(v));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad coefficient in element: " + text);
    }
  }
  return field.element(std::move(coeffs));
}

struct PointSetFile {
  FiniteField field;
  std::uint32_t d;
  PointSet set;
};

inline PointSetFile parse_point_set(std::istream& in) {
  std::string line;
  // Header: p n d (skip blank/comment lines starting with '#').
  std::uint64_t p = 0;
  std::uint32_t n = 0, d = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream hs(line);
    if (!(hs >> p >> n >> d)) throw ParseError("point set: bad header, want 'p n d'");
    std::string extra;
    if (hs >> extra) throw ParseError("point set: trailing tokens in header");
    break;
  }
  if (p == 0) throw ParseError("point set: missing header");

  // Optional modulus line.
  std::vector<std::string> point_lines;
  std::vector<std::uint32_t> modulus;
  bool saw_mod = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "mod") {
      if (saw_mod || !point_lines.empty()) {
        throw ParseError("point set: misplaced mod line");
      }
      if (n <= 1) throw ParseError("point set: mod line is only for n > 1");
      unsigned long c;
      while (ls >> c) modulus.push_back(static_cast<std::uint32_t>(c));
      if (modulus.size() != n + 1) {
        throw ParseError("point set: modulus needs n+1 coefficients");
      }
      saw_mod = true;
      continue;
    }
    point_lines.push_back(line);
  }

  FiniteField field = saw_mod ? FiniteField(p, n, modulus) : FiniteField(p, n);
  std::vector<FieldVector> points;
  points.reserve(point_lines.size());
  for (const auto& pl : point_lines) {
    std::istringstream ls(pl);
    std::vector<FieldElement> entries;
    std::string tok;
    while (ls >> tok) entries.push_back(parse_element(field, tok));
    if (entries.size() != d) {
      throw ParseError("point set: point has " + std::to_string(entries.size()) +
                       " entries, want " + std::to_string(d));
    }
    points.push_back(FieldVector(std::move(entries)));
  }
  // PointSet construction rejects duplicates.
  return PointSetFile{field, d, PointSet(field, d, std::move(points))};
}

inline void write_point_set(std::ostream& out, const PointSet& set) {
  const FiniteField& f = set.field();
  out << f.characteristic() << " " << f.degree() << " " << set.dim() << "\n";
  if (f.degree() > 1) {
    out << "mod";
    for (auto c : f.modulus()) out << " " << c;
    out << "\n";
  }
  for (const auto& v : set.points()) out << v.to_string() << "\n";
}

inline PointSetFile load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point set file: " + path);
  try {
    return parse_point_set(in);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  try {
    return Graph::parse(in);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// Accepts a preset name (K2, P3, P4, K3, K4, K13, paw, path:N, complete:N,
/// star:N) or a file path.
inline Graph resolve_graph_spec(const std::string& spec) {
  if (spec == "K2") return Graph::complete(2);
  if (spec == "K3") return Graph::complete(3);
  if (spec == "K4") return Graph::complete(4);
  if (spec == "P2") return Graph::path(2);
  if (spec == "P3") return Graph::path(3);
  if (spec == "P4") return Graph::path(4);
  if (spec == "K13") return Graph::star(3);
  if (spec == "paw") return Graph::paw();
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    try {
      const auto v = static_cast<std::uint32_t>(std::stoul(arg));
      if (kind == "path") return Graph::path(v);
      if (kind == "complete") return Graph::complete(v);
      if (kind == "star") return Graph::star(v);
    } catch (const std::exception&) {
      throw ParseError("bad graph spec: " + spec);
    }
    throw ParseError("unknown graph preset kind: " + kind);
  }
  return load_graph(spec);
}

}  // namespace ffdot
