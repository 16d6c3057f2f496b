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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffdot/experiments.hpp"

namespace ffdot::cli {

// Exit codes: 0 clean, 1 a check VIOLATED/FAILed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitError = 2;

struct FieldFlags {
  std::uint64_t p = 3;
  std::uint32_t n = 1;
  std::uint32_t d = 1;
  CLI::Option* p_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* d_opt = nullptr;

  void attach(CLI::App* app) {
    p_opt = app->add_option("--p", p, "field characteristic (prime)");
    n_opt = app->add_option("--n", n, "extension degree");
    d_opt = app->add_option("--d", d, "ambient dimension");
  }
};

struct SetFlags {
  std::vector<std::string> specs;
  void attach(CLI::App* app, const char* name = "--set") {
    app->add_option(name, specs,
                    "point set spec: full | file:PATH | random:SIZE "
                    "(repeat per component, or give one for all)");
  }
};

struct ResolvedSets {
  FiniteField field;
  std::uint32_t d;
  std::vector<PointSet> sets;
};

/// Builds the component sets. Field and dimension come from the first
/// file-backed set if any (flags must agree when explicitly given),
/// otherwise from the flags. Random sets draw from stream seed + c for
/// component c (trial 0 of the documented stream rule).
inline ResolvedSets resolve_sets(const FieldFlags& ff,
                                 const std::vector<std::string>& specs_text,
                                 std::uint32_t components, std::uint64_t seed) {
  std::vector<SetSpec> specs;
  for (const auto& t : specs_text) specs.push_back(SetSpec::parse(t));
  if (specs.empty()) specs.push_back(SetSpec{});  // default: full
  if (specs.size() == 1 && components > 1) {
    specs.assign(components, specs[0]);
  }
  if (specs.size() != components) {
    throw ParseError("need " + std::to_string(components) +
                     " set specs (or one applied to all), got " +
                     std::to_string(specs.size()));
  }

  std::optional<PointSetFile> first_file;
  for (const auto& s : specs) {
    if (s.kind == SetSpec::Kind::kFile) {
      first_file = load_point_set(s.path);
      break;
    }
  }
  FiniteField field = first_file ? first_file->field : FiniteField(ff.p, ff.n);
  std::uint32_t d = first_file ? first_file->d : ff.d;
  if (first_file) {
    const bool p_given = ff.p_opt && ff.p_opt->count() > 0;
    const bool n_given = ff.n_opt && ff.n_opt->count() > 0;
    const bool d_given = ff.d_opt && ff.d_opt->count() > 0;
    if ((p_given && ff.p != field.characteristic()) ||
        (n_given && ff.n != field.degree()) || (d_given && ff.d != d)) {
      throw ParseError("--p/--n/--d conflict with the field of the set file");
    }
  }

  ResolvedSets out{field, d, {}};
  for (std::uint32_t c = 0; c < specs.size(); ++c) {
    const auto& s = specs[c];
    switch (s.kind) {
      case SetSpec::Kind::kFull:
        out.sets.push_back(PointSet::full_grid(field, d));
        break;
      case SetSpec::Kind::kFile: {
        PointSetFile pf = load_point_set(s.path);
        if (pf.field != field || pf.d != d) {
          throw ParseError(s.path + ": field/dimension mismatch between set files");
        }
        out.sets.push_back(std::move(pf.set));
        break;
      }
      case SetSpec::Kind::kRandom: {
        SplitMix64 stream = rng_stream(seed, c);
        out.sets.push_back(random_point_set(field, d, s.size, stream));
        break;
      }
    }
  }
  return out;
}

inline FieldVector parse_vector(const FiniteField& field, std::uint32_t d,
                                const std::string& text) {
  std::istringstream ss(text);
  std::vector<FieldElement> entries;
  std::string tok;
  while (ss >> tok) entries.push_back(parse_element(field, tok));
  if (entries.size() != d) {
    throw ParseError("vector needs " + std::to_string(d) + " entries: " + text);
  }
  return FieldVector(std::move(entries));
}

inline EdgeLabeling parse_labeling(const Graph& g, const FiniteField& field,
                                   const std::string& text) {
  std::istringstream ss(text);
  std::vector<FieldElement> labels;
  std::string tok;
  while (ss >> tok) labels.push_back(parse_element(field, tok));
  if (labels.size() != g.edge_count()) {
    throw ParseError("labeling needs one element per edge (" +
                     std::to_string(g.edge_count()) + "): " + text);
  }
  return EdgeLabeling(g, std::move(labels));
}

inline void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file: " + out_path);
  out << text;
}

/// Serializes the report (JSON) and returns the process exit code.
inline int emit_report(Report& report, const detail::Stopwatch& watch,
                       const std::string& out_path) {
  report.set_wall_ms(watch.ms());
  write_text(out_path, report.to_json().dump(2) + "\n");
  return report.any_violation() ? kExitViolated : kExitOk;
}

inline int run_app(CLI::App& app, int argc, char** argv) {
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}

}  // namespace ffdot::cli
