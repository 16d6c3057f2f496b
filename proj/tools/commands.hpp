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

#include <memory>

#include "cli_common.hpp"

namespace ffdot::cli {

// ---------------------------------------------------------------------------
// fourier selftest / verify fourier

inline void register_fourier_selftest(CLI::App* cmd, int& rc) {
  auto ff = std::make_shared<FieldFlags>();
  auto trials = std::make_shared<std::uint32_t>(50);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto out = std::make_shared<std::string>();
  ff->attach(cmd);
  cmd->add_option("--trials", *trials, "number of random functions");
  cmd->add_option("--seed", *seed, "RNG seed");
  cmd->add_option("--out", *out, "output file (default stdout)");
  cmd->callback([=, &rc]() {
    detail::Stopwatch watch;
    Report report =
        run_fourier_selftest(FiniteField(ff->p, ff->n), ff->d, *trials, *seed);
    rc = emit_report(report, watch, *out);
  });
}

inline void register_verify(CLI::App* verify, int& rc) {
  {
    CLI::App* cmd = verify->add_subcommand("fourier",
                                           "transform roundtrip/Plancherel suite");
    register_fourier_selftest(cmd, rc);
  }
  {
    CLI::App* cmd = verify->add_subcommand(
        "lemma31", "second-moment bound on fiber counts, random instances");
    auto ff = std::make_shared<FieldFlags>();
    auto l = std::make_shared<std::uint32_t>(1);
    auto trials = std::make_shared<std::uint32_t>(100);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto max_size = std::make_shared<std::uint64_t>(40);
    auto out = std::make_shared<std::string>();
    ff->attach(cmd);
    cmd->add_option("--l", *l, "number of probe components");
    cmd->add_option("--trials", *trials, "random instances");
    cmd->add_option("--seed", *seed, "RNG seed");
    cmd->add_option("--max-size", *max_size, "cap on component sizes");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &rc]() {
      detail::Stopwatch watch;
      Report report = run_lemma31_suite(FiniteField(ff->p, ff->n), ff->d, *l,
                                        *trials, *seed, *max_size);
      rc = emit_report(report, watch, *out);
    });
  }
  {
    CLI::App* cmd = verify->add_subcommand(
        "eq3", "fiber-count transform identity, exhaustive frequencies");
    auto ff = std::make_shared<FieldFlags>();
    auto l = std::make_shared<std::uint32_t>(1);
    auto trials = std::make_shared<std::uint32_t>(50);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    ff->attach(cmd);
    cmd->add_option("--l", *l, "number of probe vectors");
    cmd->add_option("--trials", *trials, "random instances");
    cmd->add_option("--seed", *seed, "RNG seed");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &rc]() {
      detail::Stopwatch watch;
      Report report =
          run_eq3_suite(FiniteField(ff->p, ff->n), ff->d, *l, *trials, *seed);
      rc = emit_report(report, watch, *out);
    });
  }
  {
    CLI::App* cmd = verify->add_subcommand(
        "thm32", "average image size over prefix fibers of a product subset");
    auto ff = std::make_shared<FieldFlags>();
    auto sets = std::make_shared<SetFlags>();
    auto l = std::make_shared<std::uint32_t>(1);
    auto density = std::make_shared<std::string>("1");
    auto seed = std::make_shared<std::uint64_t>(0);
    auto c_const = std::make_shared<std::string>("100");
    auto tau = std::make_shared<std::string>("1/2");
    auto out = std::make_shared<std::string>();
    ff->attach(cmd);
    sets->attach(cmd);
    cmd->add_option("--l", *l, "prefix length (arity is l+1)");
    cmd->add_option("--density", *density, "S density in (0,1], rational");
    cmd->add_option("--seed", *seed, "RNG seed");
    cmd->add_option("--c-const", *c_const, "hypothesis constant C");
    cmd->add_option("--tau", *tau, "image threshold fraction");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &rc]() {
      detail::Stopwatch watch;
      ResolvedSets rs = resolve_sets(*ff, sets->specs, *l + 1, *seed);
      const Rational dens = rational_from_string(*density);
      const std::uint64_t subset_seed = *seed + rs.sets.size();  // S sampler slot
      const ProductSubset s =
          dens == 1 ? ProductSubset::full(rs.sets)
                    : random_product_subset(rs.sets, dens, subset_seed);
      Report report = verify_avg_image_bound(s, *l, rational_from_string(*c_const),
                                             rational_from_string(*tau));
      report.config()["density"] = rational_to_string(dens);
      report.config()["seed"] = *seed;
      rc = emit_report(report, watch, *out);
    });
  }
}

// ---------------------------------------------------------------------------
// cover / sweep

inline void register_cover(CLI::App* cmd, int& rc) {
  auto ff = std::make_shared<FieldFlags>();
  auto sets = std::make_shared<SetFlags>();
  auto graph = std::make_shared<std::string>("P3");
  auto density = std::make_shared<std::string>("1");
  auto seed = std::make_shared<std::uint64_t>(0);
  auto c_const = std::make_shared<std::string>("100");
  auto count = std::make_shared<bool>(false);
  auto out = std::make_shared<std::string>();
  ff->attach(cmd);
  sets->attach(cmd);
  cmd->add_option("--graph", *graph, "graph preset or file");
  cmd->add_option("--density", *density, "S density in (0,1], rational");
  cmd->add_option("--seed", *seed, "RNG seed");
  cmd->add_option("--c-const", *c_const, "hypothesis constant C");
  cmd->add_flag("--count", *count, "realization-count crosscheck");
  cmd->add_option("--out", *out, "output file (default stdout)");
  cmd->callback([=, &rc]() {
    detail::Stopwatch watch;
    const Graph g = resolve_graph_spec(*graph);
    ResolvedSets rs = resolve_sets(*ff, sets->specs, g.vertex_count(), *seed);
    CoverageOptions opts;
    opts.c_constant = rational_from_string(*c_const);
    opts.count_check = *count;
    const std::uint64_t subset_seed = *seed + g.vertex_count();
    Report report = coverage_experiment(g, rs.sets, rational_from_string(*density),
                                        subset_seed, opts);
    report.config()["seed"] = *seed;
    rc = emit_report(report, watch, *out);
  });
}

inline void register_sweep(CLI::App* cmd, int& rc) {
  auto ff = std::make_shared<FieldFlags>();
  auto graph = std::make_shared<std::string>("P3");
  auto grid = std::make_shared<std::vector<std::uint64_t>>();
  auto trials = std::make_shared<std::uint32_t>(10);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto density = std::make_shared<std::string>("1");
  auto out = std::make_shared<std::string>();
  ff->attach(cmd);
  cmd->add_option("--graph", *graph, "graph preset or file");
  cmd->add_option("--grid", *grid, "component sizes to sweep")->delimiter(',');
  cmd->add_option("--trials", *trials, "families per size");
  cmd->add_option("--seed", *seed, "RNG seed");
  cmd->add_option("--density", *density, "S density in (0,1], rational");
  cmd->add_option("--out", *out,
                  "output file; .csv emits the versioned CSV, else JSON");
  cmd->callback([=, &rc]() {
    detail::Stopwatch watch;
    const Graph g = resolve_graph_spec(*graph);
    const FiniteField field(ff->p, ff->n);
    std::vector<std::uint64_t> sizes = *grid;
    if (sizes.empty()) sizes = {1, 2, 4, 8};
    SweepResult res = threshold_sweep(g, field, ff->d, sizes, *trials, *seed,
                                      rational_from_string(*density));
    const bool csv = out->size() >= 4 && out->substr(out->size() - 4) == ".csv";
    if (csv) {
      write_text(*out, sweep_csv(res.rows));
      rc = res.report.any_violation() ? kExitViolated : kExitOk;
    } else {
      rc = emit_report(res.report, watch, *out);
    }
  });
}

// ---------------------------------------------------------------------------
// pidot image|count

inline void register_pidot(CLI::App* app, int& rc) {
  {
    CLI::App* cmd = app->add_subcommand("image", "labelings realized by S");
    auto ff = std::make_shared<FieldFlags>();
    auto graph = std::make_shared<std::string>();
    auto sets = std::make_shared<SetFlags>();
    auto density = std::make_shared<std::string>("1");
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    ff->attach(cmd);
    cmd->add_option("--graph", *graph, "graph preset or file")->required();
    sets->attach(cmd, "--sets");
    cmd->add_option("--density", *density, "S density in (0,1], rational");
    cmd->add_option("--seed", *seed, "RNG seed");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &rc]() {
      const Graph g = resolve_graph_spec(*graph);
      ResolvedSets rs = resolve_sets(*ff, sets->specs, g.vertex_count(), *seed);
      const Rational dens = rational_from_string(*density);
      const std::uint64_t subset_seed = *seed + g.vertex_count();
      const ProductSubset s = dens == 1
                                  ? ProductSubset::full(rs.sets)
                                  : random_product_subset(rs.sets, dens, subset_seed);
      const LabelSet image = graph_image(g, s);
      std::ostringstream os;
      image.serialize(os);
      write_text(*out, os.str());
      rc = kExitOk;
    });
  }
  {
    CLI::App* cmd = app->add_subcommand("count", "realization count of one labeling");
    auto ff = std::make_shared<FieldFlags>();
    auto graph = std::make_shared<std::string>();
    auto sets = std::make_shared<SetFlags>();
    auto alpha = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(0);
    ff->attach(cmd);
    cmd->add_option("--graph", *graph, "graph preset or file")->required();
    sets->attach(cmd, "--sets");
    cmd->add_option("--alpha", *alpha,
                    "edge labels in canonical edge order, space-separated")
        ->required();
    cmd->add_option("--seed", *seed, "RNG seed");
    cmd->callback([=, &rc]() {
      const Graph g = resolve_graph_spec(*graph);
      ResolvedSets rs = resolve_sets(*ff, sets->specs, g.vertex_count(), *seed);
      const EdgeLabeling labeling = parse_labeling(g, rs.field, *alpha);
      std::cout << count_realizations(g, rs.sets, labeling) << "\n";
      rc = kExitOk;
    });
  }
}

// ---------------------------------------------------------------------------
// charsum {ssum|vsum|energy|rdecomp|schur}

inline void register_charsum(CLI::App* app, int& rc) {
  {
    CLI::App* cmd = app->add_subcommand("ssum", "S_{A,alpha}(x), exact");
    auto ff = std::make_shared<FieldFlags>();
    auto sets = std::make_shared<SetFlags>();
    auto xtext = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    ff->attach(cmd);
    sets->attach(cmd);
    cmd->add_option("--x", *xtext, "probe vector, entries space-separated")->required();
    cmd->add_option("--alpha", *alpha, "target value")->required();
    cmd->add_option("--seed", *seed, "RNG seed");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &rc]() {
      detail::Stopwatch watch;
      ResolvedSets rs = resolve_sets(*ff, sets->specs, 1, *seed);
      const CycloNum value = s_sum(rs.sets[0], parse_element(rs.field, *alpha),
                                   parse_vector(rs.field, rs.d, *xtext));
      Report report("charsum ssum");
      report.config() = detail::field_echo(rs.field, rs.d);
      report.add_status("ssum", "info", CheckStatus::kInfo,
                        Json{{"value", json_cyclo(value)}});
      rc = emit_report(report, watch, *out);
    });
  }
  {
    CLI::App* cmd = app->add_subcommand(
        "vsum", "v(alpha) = sum over B of S_{A,alpha}, with its bound check");
    auto ff = std::make_shared<FieldFlags>();
    auto sets = std::make_shared<SetFlags>();
    auto alpha = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto cap = std::make_shared<unsigned>(512);
    auto out = std::make_shared<std::string>();
    ff->attach(cmd);
    sets->attach(cmd);
    cmd->add_option("--alpha", *alpha, "target value (nonzero)")->required();
    cmd->add_option("--seed", *seed, "RNG seed");
    cmd->add_option("--precision-cap", *cap, "interval precision cap (bits)");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &rc]() {
      detail::Stopwatch watch;
      ResolvedSets rs = resolve_sets(*ff, sets->specs, 2, *seed);
      const VSumResult res =
          v_sum(rs.sets[0], rs.sets[1], parse_element(rs.field, *alpha), true,
                CertifyOptions{64, *cap});
      Report report("charsum vsum");
      report.config() = detail::field_echo(rs.field, rs.d);
      report.add_status("vsum-value", "info", CheckStatus::kInfo,
                        Json{{"value", json_cyclo(res.value)}});
      report.add_bound("vsum-bound", res.bound);
      rc = emit_report(report, watch, *out);
    });
  }
  {
    CLI::App* cmd = app->add_subcommand("energy", "dilation energy with its bound");
    auto ff = std::make_shared<FieldFlags>();
    auto sets = std::make_shared<SetFlags>();
    auto alpha = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto cap = std::make_shared<unsigned>(512);
    auto out = std::make_shared<std::string>();
    ff->attach(cmd);
    sets->attach(cmd);
    cmd->add_option("--alpha", *alpha, "target value (nonzero)")->required();
    cmd->add_option("--seed", *seed, "RNG seed");
    cmd->add_option("--precision-cap", *cap, "interval precision cap (bits)");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &rc]() {
      detail::Stopwatch watch;
      ResolvedSets rs = resolve_sets(*ff, sets->specs, 1, *seed);
      const EnergyResult res =
          dilate_energy(rs.sets[0], parse_element(rs.field, *alpha), true,
                        CertifyOptions{64, *cap});
      Report report("charsum energy");
      report.config() = detail::field_echo(rs.field, rs.d);
      report.add_status("energy-value", "info", CheckStatus::kInfo,
                        Json{{"value", json_cyclo(res.value)}});
      report.add_bound("energy-bound", res.bound);
      rc = emit_report(report, watch, *out);
    });
  }
  {
    CLI::App* cmd = app->add_subcommand(
        "rdecomp", "R_0..R_k split of the realization count of a tree labeling");
    auto ff = std::make_shared<FieldFlags>();
    auto sets = std::make_shared<SetFlags>();
    auto graph = std::make_shared<std::string>("P3");
    auto alpha = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    ff->attach(cmd);
    sets->attach(cmd);
    cmd->add_option("--graph", *graph, "tree preset or file");
    cmd->add_option("--alpha", *alpha,
                    "edge labels in canonical edge order, space-separated")
        ->required();
    cmd->add_option("--seed", *seed, "RNG seed");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &rc]() {
      detail::Stopwatch watch;
      const Graph g = resolve_graph_spec(*graph);
      ResolvedSets rs = resolve_sets(*ff, sets->specs, g.vertex_count(), *seed);
      const EdgeLabeling labeling = parse_labeling(g, rs.field, *alpha);
      const RDecomposition dec = r_decomposition(g, rs.sets, labeling);
      Report report("charsum rdecomp");
      report.config() = detail::field_echo(rs.field, rs.d);
      report.config()["graph"] = g.describe();
      Json terms = Json::array();
      for (const auto& t : dec.terms) terms.push_back(json_cyclo(t));
      report.add_status("rdecomp", "info", CheckStatus::kInfo,
                        Json{{"terms", terms},
                             {"total", json_rational(dec.total)}});
      rc = emit_report(report, watch, *out);
    });
  }
  {
    CLI::App* cmd = app->add_subcommand(
        "schur", "row/column-sum bilinear bound on a random rational instance");
    auto rows = std::make_shared<std::uint32_t>(4);
    auto cols = std::make_shared<std::uint32_t>(4);
    auto order = std::make_shared<std::uint32_t>(3);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto cap = std::make_shared<unsigned>(512);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--rows", *rows, "matrix rows");
    cmd->add_option("--cols", *cols, "matrix columns");
    cmd->add_option("--order", *order, "cyclotomic order p");
    cmd->add_option("--seed", *seed, "RNG seed");
    cmd->add_option("--precision-cap", *cap, "interval precision cap (bits)");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &rc]() {
      detail::Stopwatch watch;
      SplitMix64 rng(*seed);
      const auto rnd = [&]() {
        return CycloNum(*order, detail::random_small_rational(rng));
      };
      std::vector<std::vector<CycloNum>> c;
      for (std::uint32_t j = 0; j < *rows; ++j) {
        std::vector<CycloNum> row;
        for (std::uint32_t l = 0; l < *cols; ++l) row.push_back(rnd());
        c.push_back(std::move(row));
      }
      std::vector<CycloNum> z, y;
      for (std::uint32_t j = 0; j < *rows; ++j) z.push_back(rnd());
      for (std::uint32_t l = 0; l < *cols; ++l) y.push_back(rnd());
      const BoundCheck b = schur_bound_check(c, z, y, CertifyOptions{64, *cap});
      Report report("charsum schur");
      report.config() = Json{{"rows", *rows}, {"cols", *cols},
                             {"order", *order}, {"seed", *seed}};
      report.add_bound("schur-bound", b);
      rc = emit_report(report, watch, *out);
    });
  }
}

}  // namespace ffdot::cli
