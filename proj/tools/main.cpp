/*
   Copyright 2026 The polyshard-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyshard/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Polyshard coded-sharding lab: simulations, attacks and threshold analysis"};

  std::string config;
  polyshard::RunOverrides overrides;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string scenario;

  app.add_option("--config", config, "JSON experiment config")->required()->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed, "Run a single seed instead of config.seeds");
  auto* out_opt = app.add_option("--out", out_dir, "Output directory (overrides config)");
  auto* sc_opt = app.add_option("--scenario", scenario,
                                "honest_epoch | garbage_attack | discrepancy_attack | "
                                "threshold_sweep | bound_table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*seed_opt) overrides.seed = seed;
  if (*out_opt) overrides.out_dir = out_dir;
  if (*sc_opt) overrides.scenario = scenario;
  return polyshard::run(config, overrides, std::cerr);
}
