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
  CLI::App app{"charsum: exact character sums over dot products"};
  app.require_subcommand(1);
  int rc = ffdot::cli::kExitOk;
  ffdot::cli::register_charsum(&app, rc);
  const int parse_rc = ffdot::cli::run_app(app, argc, argv);
  return parse_rc != 0 ? parse_rc : rc;
}
