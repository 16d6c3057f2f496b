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
// The lab layer: exact verification suites for the Fourier toolkit, the
// moment bound, the fiber transform identity, and the average-image bound;
// coverage experiments over graph images; and threshold sweeps. Everything
// is seed-deterministic: identical config and seed give identical reports
// (wall time aside) and byte-identical CSV.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ffdot/char_sums.hpp"
#include "ffdot/dot_graphs.hpp"
#include "ffdot/fourier.hpp"
#include "ffdot/io.hpp"
#include "ffdot/report.hpp"
#include "ffdot/rng.hpp"

namespace ffdot {

// ---------------------------------------------------------------------------
// Config plumbing

struct SetSpec {
  enum class Kind { kFull, kFile, kRandom };
  Kind kind = Kind::kFull;
  std::string path;
  std::uint64_t size = 0;

  /// "full" | "file:PATH" | "random:SIZE"
  static SetSpec parse(const std::string& text) {
    SetSpec s;
    if (text == "full") {
      s.kind = Kind::kFull;
      return s;
    }
    if (text.rfind("file:", 0) == 0) {
      s.kind = Kind::kFile;
      s.path = text.substr(5);
      if (s.path.empty()) throw ParseError("empty path in set spec");
      return s;
    }
    if (text.rfind("random:", 0) == 0) {
      s.kind = Kind::kRandom;
      try {
        s.size = std::stoull(text.substr(7));
      } catch (const std::exception&) {
        throw ParseError("bad size in set spec: " + text);
      }
      return s;
    }
    throw ParseError("bad set spec (want full | file:PATH | random:SIZE): " + text);
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::kFull: return "full";
      case Kind::kFile: return "file:" + path;
      case Kind::kRandom: return "random:" + std::to_string(size);
    }
    return "?";
  }
};

struct ExperimentConfig {
  std::uint64_t p = 3;
  std::uint32_t n = 1;
  std::uint32_t d = 1;
  std::string graph_spec;
  std::vector<SetSpec> sets;
  Rational density{1};
  std::uint64_t seed = 0;
  std::uint32_t trials = 1;
  unsigned precision_cap = 512;
  Rational c_constant{100};   // the reported C of the hypothesis rows
  Rational tau{1, 2};         // image-size threshold of the corollary stat
  bool count_check = false;

  Json echo() const {
    Json sets_json = Json::array();
    for (const auto& s : sets) sets_json.push_back(s.to_string());
    Json j{{"p", p},
           {"n", n},
           {"d", d},
           {"q", 0},  // filled by with_field
           {"graph", graph_spec},
           {"sets", sets_json},
           {"density", rational_to_string(density)},
           {"seed", seed},
           {"trials", trials},
           {"precision_cap", precision_cap},
           {"c_constant", rational_to_string(c_constant)},
           {"tau", rational_to_string(tau)},
           {"count_check", count_check}};
    return j;
  }
};

namespace detail {

inline Json field_echo(const FiniteField& f, std::uint32_t d) {
  Json j{{"p", f.characteristic()},
         {"n", f.degree()},
         {"d", d},
         {"q", f.size()}};
  Json mod = Json::array();
  for (auto c : f.modulus()) mod.push_back(c);
  j["modulus"] = mod;
  if (f.characteristic() == 2) {
    // Squares collapse in characteristic 2, so distance-set statements read
    // differently there; flag every such report.
    j["characteristic_two"] = true;
  }
  return j;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline Rational random_small_rational(SplitMix64& rng) {
  const std::int64_t num = static_cast<std::int64_t>(rng.next_below(19)) - 9;
  const std::uint64_t den = 1 + rng.next_below(9);
  return Rational(num, static_cast<std::int64_t>(den));
}

inline FieldElement random_element(const FiniteField& f, SplitMix64& rng) {
  return f.element_at(rng.next_below(f.size()));
}

inline FieldElement random_nonzero_element(const FiniteField& f, SplitMix64& rng) {
  return f.element_at(1 + rng.next_below(f.size() - 1));
}

inline FieldVector random_vector(const FiniteField& f, std::uint32_t d,
                                 SplitMix64& rng) {
  const std::uint64_t total = grid_size_checked(f, d, kMaxGridSize);
  return vector_at(f, d, rng.next_below(total));
}

inline GridFunction random_rational_function(const FiniteField& f, std::uint32_t d,
                                             SplitMix64& rng) {
  const std::uint64_t total = grid_size_checked(f, d, kMaxGridSize);
  const auto p = static_cast<std::uint32_t>(f.characteristic());
  std::vector<CycloNum> values;
  values.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    values.emplace_back(p, random_small_rational(rng));
  }
  return GridFunction(f, d, std::move(values));
}

inline PointSet random_subset_of_grid(const FiniteField& f, std::uint32_t d,
                                      std::uint64_t size, SplitMix64& rng) {
  return random_point_set(f, d, size, rng);
}

/// Fraction of (F_q^*)^arity covered by the set, as (covered, total).
inline std::pair<BigInt, BigInt> nonzero_coverage(const LabelSet& ls) {
  const std::uint64_t q = ls.q();
  const std::uint32_t arity = ls.arity();
  const BigInt total = pow_bigint(BigInt(q - 1), arity);
  if (arity == 0) return {ls.test(0) ? 1 : 0, 1};
  BigInt covered(0);
  std::vector<std::uint64_t> digits(arity, 1);
  while (true) {
    std::uint64_t code = 0;
    for (std::uint32_t i = arity; i-- > 0;) code = code * q + digits[i];
    if (ls.test(code)) ++covered;
    std::uint32_t pos = 0;
    while (pos < arity && digits[pos] + 1 == q) digits[pos++] = 1;
    if (pos == arity) break;
    ++digits[pos];
  }
  return {covered, total};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Verification operations

/// Exact check of
///   Sum_{x in prod A_i} Sum_t Pi^A_x(t)^2
///     <= |A|^2 prod|A_i| / q^l + q^d |A| prod|A_i| Sum_j 1/|A_j|.
/// An empty component makes the right side undefined; the check is then
/// reported SKIPPED.
inline Report verify_lemma_moment_bound(const std::vector<PointSet>& a_list,
                                        const PointSet& a) {
  if (a_list.empty()) throw EmptyQueryError("moment bound needs l >= 1");
  for (const auto& s : a_list) detail::check_set_pair(s, a, "moment bound");
  const FiniteField& f = a.field();
  const auto l = static_cast<std::uint32_t>(a_list.size());
  Report report("verify lemma31");
  report.config() = detail::field_echo(f, a.dim());
  report.config()["l"] = l;

  for (const auto& s : a_list) {
    if (s.size() == 0) {
      report.add_status("moment-bound", "exact-le", CheckStatus::kSkipped,
                        Json{{"reason", "empty component set"}});
      return report;
    }
  }

  const std::uint64_t fiber_space = grid_size_checked(f, l, kMaxGridSize);
  std::uint64_t tuple_count = 1;
  for (const auto& s : a_list) tuple_count *= s.size();
  if (tuple_count > kMaxTupleVisits / std::max<std::uint64_t>(a.size(), 1)) {
    throw CapExceededError("moment bound: instance too large");
  }

  // LHS by direct fiber counting per probe tuple.
  BigInt lhs(0);
  std::vector<std::uint64_t> counts(fiber_space, 0);
  std::vector<std::uint64_t> touched;
  std::vector<std::uint32_t> idx(l, 0);
  while (true) {
    touched.clear();
    for (const auto& y : a.points()) {
      std::uint64_t code = 0;
      for (std::uint32_t i = l; i-- > 0;) {
        code = code * f.size() + f.index_of(dot(a_list[i][idx[i]], y));
      }
      if (counts[code]++ == 0) touched.push_back(code);
    }
    for (const auto code : touched) {
      lhs += BigInt(counts[code]) * BigInt(counts[code]);
      counts[code] = 0;
    }
    std::uint32_t pos = 0;
    while (pos < l && idx[pos] + 1 == a_list[pos].size()) idx[pos++] = 0;
    if (pos == l) break;
    ++idx[pos];
  }

  BigInt prod(1);
  for (const auto& s : a_list) prod *= BigInt(s.size());
  Rational inv_sum(0);
  for (const auto& s : a_list) inv_sum += Rational(1, BigInt(s.size()));
  const Rational rhs =
      Rational(BigInt(a.size()) * BigInt(a.size()) * prod, pow_bigint(BigInt(f.size()), l)) +
      Rational(pow_bigint(BigInt(f.size()), a.dim()) * BigInt(a.size()) * prod) * inv_sum;

  const bool pass = Rational(lhs) <= rhs;
  report.add_status("moment-bound", "exact-le",
                    pass ? CheckStatus::kPass : CheckStatus::kFail,
                    Json{{"lhs", json_integer(lhs)},
                         {"rhs", json_rational(rhs)},
                         {"probe_tuples", tuple_count},
                         {"A_size", a.size()}});
  return report;
}

/// Exact check, exhaustive over all frequency tuples s, of
///   (fiber-count transform)(s) = q^(d-l) * Ahat(s_1 x_1 + ... + s_l x_l).
inline Report verify_fourier_fiber_identity(const PointSet& a,
                                            const std::vector<FieldVector>& xs) {
  if (xs.empty()) throw EmptyQueryError("fiber identity needs l >= 1");
  for (const auto& x : xs) {
    if (x.field() != a.field()) throw FieldMismatchError("probe over different field");
    if (x.dim() != a.dim()) throw DimensionMismatchError("probe of wrong dimension");
  }
  const FiniteField& f = a.field();
  const auto p = static_cast<std::uint32_t>(f.characteristic());
  const auto l = static_cast<std::uint32_t>(xs.size());
  const std::uint64_t fiber_space = grid_size_checked(f, l, kMaxGridSize);

  Report report("verify eq3");
  report.config() = detail::field_echo(f, a.dim());
  report.config()["l"] = l;
  report.config()["A_size"] = a.size();

  // The fiber-count function t -> Pi^A_x(t) as a grid over F_q^l.
  std::vector<CycloNum> fiber(fiber_space, CycloNum(p));
  const CycloNum one(p, Rational(1));
  for (const auto& y : a.points()) {
    std::uint64_t code = 0;
    for (std::uint32_t i = l; i-- > 0;) {
      code = code * f.size() + f.index_of(dot(xs[i], y));
    }
    fiber[code] += one;
  }
  const GridFunction fiber_hat = fast_transform(GridFunction(f, l, std::move(fiber)));
  const GridFunction a_hat = fast_transform(GridFunction::indicator(a));
  const Rational scale = pow_rational(Rational(BigInt(f.size())),
                                      static_cast<long>(a.dim()) - static_cast<long>(l));

  std::uint64_t mismatches = 0;
  for (std::uint64_t code = 0; code < fiber_space; ++code) {
    // Decode s and fold sum s_i x_i.
    std::uint64_t rest = code;
    FieldVector folded = vector_at(f, a.dim(), 0);
    for (std::uint32_t i = 0; i < l; ++i) {
      const FieldElement si = f.element_at(rest % f.size());
      rest /= f.size();
      folded = folded + xs[i].scaled(si);
    }
    const CycloNum rhs = a_hat[vector_index(folded)] * scale;
    if (fiber_hat[code] != rhs) ++mismatches;
  }
  report.add_status("fiber-transform-identity", "exact-equality",
                    mismatches == 0 ? CheckStatus::kPass : CheckStatus::kFail,
                    Json{{"frequency_tuples", fiber_space},
                         {"mismatches", mismatches}});
  return report;
}

/// Average image size over the prefix projection:
///   avg = |S'|^-1 Sum_{prefix in S'} |Pi_{x1..xl}(fiber)|, reported as
/// avg / q^l, plus the fraction of prefixes with image >= tau q^l and the
/// |A_i||A_{l+1}| >= C q^(d+l) hypothesis rows. Nothing is asserted; the
/// theorem's conclusion constant is unspecified.
inline Report verify_avg_image_bound(const ProductSubset& s, std::uint32_t l,
                                     const Rational& c_constant,
                                     const Rational& tau) {
  if (s.arity() != l + 1) throw ArityError("avg image bound needs arity l+1");
  const FiniteField& f = s.component(0).field();
  const std::uint32_t d = s.component(0).dim();
  const ProductSubset prefixes = project_prefix(s, l);
  if (prefixes.size() == 0) throw EmptyProjectionError("S' is empty");

  Report report("verify thm32");
  report.config() = detail::field_echo(f, d);
  report.config()["l"] = l;
  report.config()["S_size"] = s.size();
  report.config()["prefixes"] = prefixes.size();

  const std::uint64_t last_size = s.component(l).size();
  if (prefixes.size() > kMaxTupleVisits / std::max<std::uint64_t>(last_size, 1)) {
    throw CapExceededError("avg image bound: too many prefixes");
  }

  // For explicit S, group fiber point indices by prefix code.
  std::map<std::uint64_t, std::vector<std::uint32_t>> fibers;
  std::uint64_t prefix_radix = 1;
  for (std::uint32_t i = 0; i < l; ++i) prefix_radix *= s.component(i).size();
  if (!s.is_full()) {
    for (const auto code : s.codes()) {
      fibers[code % prefix_radix].push_back(
          static_cast<std::uint32_t>(code / prefix_radix));
    }
  }

  BigInt image_total(0);
  BigInt prefixes_above_tau(0);
  const Rational tau_threshold = tau * Rational(pow_bigint(BigInt(f.size()), l));
  prefixes.for_each_tuple([&](const std::vector<std::uint32_t>& prefix) {
    std::vector<FieldVector> probe;
    probe.reserve(l);
    for (std::uint32_t i = 0; i < l; ++i) probe.push_back(s.component(i)[prefix[i]]);
    PointSet fiber = [&]() {
      if (s.is_full()) return s.component(l);
      std::uint64_t code = 0;
      for (std::uint32_t i = l; i-- > 0;) {
        code = code * s.component(i).size() + prefix[i];
      }
      std::vector<FieldVector> pts;
      for (auto last : fibers.at(code)) pts.push_back(s.component(l)[last]);
      return PointSet(f, d, std::move(pts));
    }();
    const std::uint64_t pop = pi_image(fiber, probe).popcount();
    image_total += BigInt(pop);
    if (Rational(BigInt(pop)) >= tau_threshold) ++prefixes_above_tau;
  });

  const Rational avg = Rational(image_total, BigInt(prefixes.size()));
  const Rational avg_ratio = avg / Rational(pow_bigint(BigInt(f.size()), l));
  const Rational tau_fraction =
      Rational(prefixes_above_tau, BigInt(prefixes.size()));

  Json hyps = Json::array();
  const Rational threshold =
      c_constant * Rational(pow_bigint(BigInt(f.size()), d + l));
  for (std::uint32_t i = 0; i < l; ++i) {
    const BigInt lhs = BigInt(s.component(i).size()) * BigInt(last_size);
    hyps.push_back(Json{{"i", i + 1},
                        {"product", json_integer(lhs)},
                        {"threshold", json_rational(threshold)},
                        {"met", Rational(lhs) >= threshold}});
  }
  report.add_status("avg-image-ratio", "coverage", CheckStatus::kInfo,
                    Json{{"avg_image", json_rational(avg)},
                         {"avg_over_q_l", json_rational(avg_ratio)},
                         {"tau", rational_to_string(tau)},
                         {"fraction_above_tau", json_rational(tau_fraction)},
                         {"hypotheses", hyps}});
  return report;
}

// ---------------------------------------------------------------------------
// Coverage experiments

struct CoverageOptions {
  Rational c_constant{100};
  bool count_check = false;
};

/// Builds S (FULL at density 1, else seeded Bernoulli sampling), computes
/// Pi_G(S), and reports |Pi_G(S)|/q^|E| and the covered fraction of
/// (F_q^*)^|E| (exactly 1 is the tree-conclusion benchmark), plus
/// per-edge hypothesis rows at the configured constant and at (10 k!)^2.
inline Report coverage_experiment(const Graph& g, const std::vector<PointSet>& a_list,
                                  const Rational& density, std::uint64_t subset_seed,
                                  const CoverageOptions& opts = {}) {
  if (!g.is_connected()) throw DisconnectedError("coverage needs a connected graph");
  detail::check_components(g, a_list);
  const FiniteField& f = a_list[0].field();
  const std::uint64_t q = f.size();

  Report report("cover");
  report.config() = detail::field_echo(f, a_list[0].dim());
  report.config()["graph"] = g.describe();
  report.config()["density"] = rational_to_string(density);
  report.config()["subset_seed"] = subset_seed;
  Json sizes = Json::array();
  for (const auto& s : a_list) sizes.push_back(s.size());
  report.config()["set_sizes"] = sizes;

  const ProductSubset s = density == 1
                              ? ProductSubset::full(a_list)
                              : random_product_subset(a_list, density, subset_seed);
  const LabelSet image = graph_image(g, s);

  const BigInt label_space = pow_bigint(BigInt(q), g.edge_count());
  const Rational image_ratio = Rational(BigInt(image.popcount()), label_space);
  const auto [covered, unit_total] = detail::nonzero_coverage(image);
  const Rational unit_coverage = Rational(covered, unit_total);

  report.add_status("image-ratio", "coverage", CheckStatus::kInfo,
                    Json{{"S_size", s.size()},
                         {"image_size", image.popcount()},
                         {"label_space", json_integer(label_space)},
                         {"image_ratio", json_rational(image_ratio)}});
  report.add_status(
      "nonzero-label-coverage", "coverage", CheckStatus::kInfo,
      Json{{"covered", json_integer(covered)},
           {"total", json_integer(unit_total)},
           {"coverage", json_rational(unit_coverage)},
           {"is_tree", g.is_tree()}});

  // Hypothesis rows. The general-graph form uses q^(d + #V - 1); the tree
  // form uses q^(d + #E - 1) with the explicit constant (10 k!)^2 alongside
  // the configured one.
  const std::uint32_t d = a_list[0].dim();
  const Rational thr_general =
      opts.c_constant * Rational(pow_bigint(BigInt(q), d + g.vertex_count() - 1));
  BigInt kfact(1);
  for (std::uint32_t i = 2; i <= g.edge_count(); ++i) kfact *= i;
  const BigInt ck = BigInt(10) * kfact * BigInt(10) * kfact;
  const Rational thr_tree =
      Rational(ck) * Rational(pow_bigint(BigInt(q), d + g.edge_count() - 1));
  Json hyps = Json::array();
  bool all_general = true, all_tree = true;
  for (const auto& [u, v] : g.edges()) {
    const BigInt prod = BigInt(a_list[u - 1].size()) * BigInt(a_list[v - 1].size());
    const bool met_general = Rational(prod) >= thr_general;
    const bool met_tree = Rational(prod) >= thr_tree;
    all_general = all_general && met_general;
    all_tree = all_tree && met_tree;
    hyps.push_back(Json{{"edge", std::to_string(u) + "-" + std::to_string(v)},
                        {"product", json_integer(prod)},
                        {"met_at_C", met_general},
                        {"met_at_10kfact_sq", met_tree}});
  }
  report.add_status("hypothesis-status", "info", CheckStatus::kInfo,
                    Json{{"C", rational_to_string(opts.c_constant)},
                         {"threshold_general", json_rational(thr_general)},
                         {"threshold_tree_10kfact_sq", json_rational(thr_tree)},
                         {"all_edges_met_at_C", all_general},
                         {"all_edges_met_at_10kfact_sq", all_tree},
                         {"edges", hyps}});

  if (opts.count_check) {
    // Independent pass: histogram N_G(alpha) over all tuples of S and
    // cross-check both the total mass and the support against the image.
    std::vector<DotTable> edge_dot;
    edge_dot.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
      edge_dot.emplace_back(a_list[u - 1], a_list[v - 1]);
    }
    std::vector<std::uint64_t> hist(image.bit_size(), 0);
    s.for_each_tuple([&](const std::vector<std::uint32_t>& tuple) {
      std::uint64_t code = 0;
      for (std::uint32_t e = g.edge_count(); e-- > 0;) {
        const auto [u, v] = g.edges()[e];
        code = code * q + edge_dot[e].label(tuple[u - 1], tuple[v - 1]);
      }
      ++hist[code];
    });
    BigInt mass(0);
    bool support_matches = true;
    for (std::uint64_t c = 0; c < hist.size(); ++c) {
      mass += BigInt(hist[c]);
      support_matches = support_matches && ((hist[c] > 0) == image.test(c));
    }
    const bool mass_ok = mass == BigInt(s.size());
    report.add_status("realization-count-crosscheck", "exact-equality",
                      mass_ok && support_matches ? CheckStatus::kPass
                                                 : CheckStatus::kFail,
                      Json{{"sum_of_counts", json_integer(mass)},
                           {"S_size", s.size()},
                           {"support_matches_image", support_matches}});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Threshold sweep

struct SweepRow {
  std::uint64_t size = 0;
  std::uint32_t trials = 0;
  Rational mean_image_ratio;
  Rational min_image_ratio;
  Rational mean_unit_coverage;
  Rational min_unit_coverage;
};

inline constexpr const char* kSweepCsvHeader =
    "# ffdot-sweep-csv-v1\n"
    "size,trials,mean_image_ratio,min_image_ratio,mean_unit_coverage,min_unit_coverage\n";

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kSweepCsvHeader;
  for (const auto& r : rows) {
    os << r.size << ',' << r.trials << ',' << rational_to_string(r.mean_image_ratio)
       << ',' << rational_to_string(r.min_image_ratio) << ','
       << rational_to_string(r.mean_unit_coverage) << ','
       << rational_to_string(r.min_unit_coverage) << '\n';
  }
  return os.str();
}

struct SweepResult {
  Report report;
  std::vector<SweepRow> rows;
};

/// For each size in the grid, samples `trials` random set families (stream
/// t*(k+1)+c for component c of global trial t, grid-major), runs the
/// coverage computation at the given S-density, and aggregates mean/min of
/// the image ratio and of the (F_q^*)^|E| coverage. Monotonicity of the mean
/// in the size is reported, not asserted.
inline SweepResult threshold_sweep(const Graph& g, const FiniteField& field,
                                   std::uint32_t d,
                                   const std::vector<std::uint64_t>& size_grid,
                                   std::uint32_t trials, std::uint64_t seed,
                                   const Rational& density = Rational(1)) {
  if (!g.is_connected()) throw DisconnectedError("sweep needs a connected graph");
  if (size_grid.empty()) throw EmptyQueryError("sweep needs a nonempty size grid");
  if (trials < 1) throw EmptyQueryError("sweep needs trials >= 1");
  const std::uint32_t k = g.vertex_count();
  const std::uint64_t grid_points = grid_size_checked(field, d, kMaxGridSize);

  SweepResult result{Report("sweep"), {}};
  result.report.config() = detail::field_echo(field, d);
  result.report.config()["graph"] = g.describe();
  result.report.config()["density"] = rational_to_string(density);
  result.report.config()["seed"] = seed;
  result.report.config()["trials"] = trials;
  Json grid_json = Json::array();
  for (auto s : size_grid) grid_json.push_back(s);
  result.report.config()["size_grid"] = grid_json;

  const BigInt label_space = pow_bigint(BigInt(field.size()), g.edge_count());
  std::uint64_t global_trial = 0;
  for (const auto size : size_grid) {
    if (size > grid_points) throw CapExceededError("grid size exceeds q^d");
    SweepRow row;
    row.size = size;
    row.trials = trials;
    Rational sum_ratio(0), sum_unit(0);
    for (std::uint32_t t = 0; t < trials; ++t, ++global_trial) {
      std::vector<PointSet> family;
      family.reserve(k);
      for (std::uint32_t c = 0; c < k; ++c) {
        SplitMix64 stream =
            rng_stream(seed, global_trial * (k + 1ull) + c);
        family.push_back(random_point_set(field, d, size, stream));
      }
      const std::uint64_t subset_seed =
          seed + global_trial * (k + 1ull) + k;  // stream rule, S sampler slot
      const ProductSubset s =
          density == 1 ? ProductSubset::full(family)
                       : random_product_subset(family, density, subset_seed);
      const LabelSet image = graph_image(g, s);
      const Rational ratio = Rational(BigInt(image.popcount()), label_space);
      const auto [covered, unit_total] = detail::nonzero_coverage(image);
      const Rational unit = Rational(covered, unit_total);
      sum_ratio += ratio;
      sum_unit += unit;
      if (t == 0 || ratio < row.min_image_ratio) row.min_image_ratio = ratio;
      if (t == 0 || unit < row.min_unit_coverage) row.min_unit_coverage = unit;
    }
    row.mean_image_ratio = sum_ratio / Rational(trials);
    row.mean_unit_coverage = sum_unit / Rational(trials);
    result.rows.push_back(row);
  }

  bool monotone = true;
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    monotone =
        monotone && result.rows[i].mean_image_ratio >= result.rows[i - 1].mean_image_ratio;
  }
  Json rows_json = Json::array();
  for (const auto& r : result.rows) {
    rows_json.push_back(Json{{"size", r.size},
                             {"trials", r.trials},
                             {"mean_image_ratio", json_rational(r.mean_image_ratio)},
                             {"min_image_ratio", json_rational(r.min_image_ratio)},
                             {"mean_unit_coverage", json_rational(r.mean_unit_coverage)},
                             {"min_unit_coverage", json_rational(r.min_unit_coverage)}});
  }
  result.report.add_status("sweep-rows", "coverage", CheckStatus::kInfo,
                           Json{{"rows", rows_json},
                                {"mean_image_ratio_monotone", monotone}});
  return result;
}

// ---------------------------------------------------------------------------
// Randomized suites (shared by the CLI and the acceptance harness)

/// Inversion roundtrip, Plancherel, and fast==naive on `trials` random
/// functions (alternating random indicator / random rational values), plus
/// the translation-modulation law, plus the scalar-multiplication counters.
inline Report run_fourier_selftest(const FiniteField& field, std::uint32_t d,
                                   std::uint32_t trials, std::uint64_t seed) {
  Report report("fourier selftest");
  report.config() = detail::field_echo(field, d);
  report.config()["trials"] = trials;
  report.config()["seed"] = seed;

  SplitMix64 rng(seed);
  const auto p = static_cast<std::uint32_t>(field.characteristic());
  const std::uint64_t total = grid_size_checked(field, d, kMaxGridSize);
  std::uint64_t bad_roundtrip = 0, bad_plancherel = 0, bad_fast = 0,
                bad_translation = 0;
  TransformStats naive_stats, fast_stats;
  for (std::uint32_t t = 0; t < trials; ++t) {
    GridFunction f = [&]() {
      if (t % 2 == 0) {
        // Random indicator at density 1/2.
        std::vector<FieldVector> pts;
        for (std::uint64_t i = 0; i < total; ++i) {
          if (rng.bernoulli(Rational(1, 2))) pts.push_back(vector_at(field, d, i));
        }
        return GridFunction::indicator(PointSet(field, d, std::move(pts)));
      }
      return detail::random_rational_function(field, d, rng);
    }();
    const GridFunction fhat = fourier_transform(f, &naive_stats);
    const GridFunction fhat_fast = fast_transform(f, &fast_stats);
    if (fhat_fast != fhat) ++bad_fast;
    if (inverse_transform(fhat) != f) ++bad_roundtrip;
    if (!plancherel_check(f).pass) ++bad_plancherel;

    // f_a(x) = f(x+a)  =>  fhat_a(k) = chi(a.k) fhat(k).
    const FieldVector a = detail::random_vector(field, d, rng);
    std::vector<CycloNum> shifted;
    shifted.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) {
      shifted.push_back(f[vector_index(vector_at(field, d, i) + a)]);
    }
    const GridFunction fa_hat = fast_transform(GridFunction(field, d, std::move(shifted)));
    bool translation_ok = true;
    for (std::uint64_t k = 0; k < total && translation_ok; ++k) {
      const std::uint32_t e = detail::dot_trace(a, vector_at(field, d, k));
      translation_ok = fa_hat[k] == fhat[k].rotated(e % p);
    }
    if (!translation_ok) ++bad_translation;
  }

  const auto emit = [&](const char* name, std::uint64_t failures) {
    report.add_status(name, "exact-equality",
                      failures == 0 ? CheckStatus::kPass : CheckStatus::kFail,
                      Json{{"trials", trials}, {"failures", failures}});
  };
  emit("inversion-roundtrip", bad_roundtrip);
  emit("plancherel", bad_plancherel);
  emit("fast-equals-naive", bad_fast);
  emit("translation-modulation", bad_translation);
  report.add_status("scalar-mult-counters", "info", CheckStatus::kInfo,
                    Json{{"naive_mults", naive_stats.scalar_mults},
                         {"fast_mults", fast_stats.scalar_mults}});
  return report;
}

/// `trials` random instances of the fiber transform identity at arity l.
inline Report run_eq3_suite(const FiniteField& field, std::uint32_t d,
                            std::uint32_t l, std::uint32_t trials,
                            std::uint64_t seed) {
  Report report("verify eq3");
  report.config() = detail::field_echo(field, d);
  report.config()["l"] = l;
  report.config()["trials"] = trials;
  report.config()["seed"] = seed;
  SplitMix64 rng(seed);
  const std::uint64_t total = grid_size_checked(field, d, kMaxGridSize);
  std::uint64_t failures = 0;
  for (std::uint32_t t = 0; t < trials; ++t) {
    const std::uint64_t size = rng.next_below(total + 1);
    const PointSet a = detail::random_subset_of_grid(field, d, size, rng);
    std::vector<FieldVector> xs;
    for (std::uint32_t i = 0; i < l; ++i) xs.push_back(detail::random_vector(field, d, rng));
    const Report sub = verify_fourier_fiber_identity(a, xs);
    if (sub.count(CheckStatus::kFail) > 0) ++failures;
  }
  report.add_status("fiber-transform-identity-suite", "exact-equality",
                    failures == 0 ? CheckStatus::kPass : CheckStatus::kFail,
                    Json{{"trials", trials}, {"failures", failures}});
  return report;
}

/// `trials` random instances of the moment bound at arity l. Component sizes
/// are drawn in [1, min(max_component, q^d)], |A| in [0, q^d].
inline Report run_lemma31_suite(const FiniteField& field, std::uint32_t d,
                                std::uint32_t l, std::uint32_t trials,
                                std::uint64_t seed,
                                std::uint64_t max_component = 40) {
  Report report("verify lemma31");
  report.config() = detail::field_echo(field, d);
  report.config()["l"] = l;
  report.config()["trials"] = trials;
  report.config()["seed"] = seed;
  SplitMix64 rng(seed);
  const std::uint64_t total = grid_size_checked(field, d, kMaxGridSize);
  const std::uint64_t comp_cap = std::min<std::uint64_t>(max_component, total);
  std::uint64_t failures = 0, skipped = 0;
  for (std::uint32_t t = 0; t < trials; ++t) {
    std::vector<PointSet> a_list;
    for (std::uint32_t i = 0; i < l; ++i) {
      const std::uint64_t size = 1 + rng.next_below(comp_cap);
      a_list.push_back(detail::random_subset_of_grid(field, d, size, rng));
    }
    const PointSet a =
        detail::random_subset_of_grid(field, d, rng.next_below(total + 1), rng);
    const Report sub = verify_lemma_moment_bound(a_list, a);
    failures += sub.count(CheckStatus::kFail);
    skipped += sub.count(CheckStatus::kSkipped);
  }
  report.add_status("moment-bound-suite", "exact-le",
                    failures == 0 ? CheckStatus::kPass : CheckStatus::kFail,
                    Json{{"trials", trials},
                         {"failures", failures},
                         {"skipped", skipped}});
  return report;
}

}  // namespace ffdot
