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

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ffdot: an exact lab for dot-product graphs over finite fields"};
  app.require_subcommand(1);
  int rc = ffdot::cli::kExitOk;

  CLI::App* fourier = app.add_subcommand("fourier", "Fourier toolkit");
  fourier->require_subcommand(1);
  ffdot::cli::register_fourier_selftest(
      fourier->add_subcommand("selftest", "roundtrip/Plancherel/fast-path suite"),
      rc);

  CLI::App* verify = app.add_subcommand("verify", "exact verification suites");
  verify->require_subcommand(1);
  ffdot::cli::register_verify(verify, rc);

  ffdot::cli::register_cover(
      app.add_subcommand("cover", "graph-image coverage experiment"), rc);
  ffdot::cli::register_sweep(
      app.add_subcommand("sweep", "coverage sweep over component sizes"), rc);

  CLI::App* pidot = app.add_subcommand("pidot", "graph image and counts");
  pidot->require_subcommand(1);
  ffdot::cli::register_pidot(pidot, rc);

  CLI::App* charsum = app.add_subcommand("charsum", "character sums and bounds");
  charsum->require_subcommand(1);
  ffdot::cli::register_charsum(charsum, rc);

  const int parse_rc = ffdot::cli::run_app(app, argc, argv);
  return parse_rc != 0 ? parse_rc : rc;
}
