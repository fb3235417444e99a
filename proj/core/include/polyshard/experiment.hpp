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

#ifndef POLYSHARD_EXPERIMENT_HPP
#define POLYSHARD_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyshard/adversary.hpp"
#include "polyshard/simulation.hpp"

namespace polyshard {

enum class Scenario { kHonestEpoch, kGarbageAttack, kDiscrepancyAttack, kThresholdSweep, kBoundTable };

const char* to_string(Scenario s);
/// Throws ConfigError on an unknown name.
Scenario parse_scenario(const std::string& s);

/// Inclusive integer range.
using Range = std::pair<std::int64_t, std::int64_t>;

struct ExperimentConfig {
  Scenario scenario = Scenario::kHonestEpoch;

  std::size_t N = 20;
  std::size_t K = 5;
  std::size_t d = 2;
  std::size_t beta = 0;
  std::optional<std::size_t> beta_prime;
  std::uint32_t v = 1;
  std::optional<double> gamma;
  std::uint64_t p = Field::kMersenne31;
  std::uint64_t factor = 3;

  std::vector<std::uint64_t> seeds{1};
  std::size_t epochs = 1;

  ProposerKind proposer = ProposerKind::kValid;
  FailurePolicy on_failure = FailurePolicy::kStall;
  AssignmentStrategy assignment = AssignmentStrategy::kBalanced;
  BroadcastStrategy broadcast = BroadcastStrategy::kGarbage;
  ForgeMode forge = ForgeMode::kValidFirst;

  std::size_t sweep_min = 1;
  std::size_t sweep_max = 20;
  bool sweep_strict = false;

  Range grid_v{1, 3};
  Range grid_beta_prime{1, 3};
  Range grid_d{1, 3};
  Range grid_K{2, 6};
  Range grid_beta{0, 2};

  std::filesystem::path out_dir = ".";
  std::string epochs_file = "epochs.jsonl";
  std::string sweep_file = "sweep.csv";
  std::string bounds_file = "bounds.csv";

  /// beta' as configured, or derived from gamma via shard_capture, else 0.
  std::size_t effective_beta_prime() const;

  /// Canonical JSON echo of the resolved configuration.
  std::string echo() const;
};

/// Parses and validates JSON text. Unknown keys, wrong types and
/// inconsistent parameters raise ConfigError.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Builds the simulation a config describes for one seed.
Simulation make_simulation(const ExperimentConfig& cfg);

/// Runs the scenario and writes its output files; returns their paths.
/// Throws InfeasiblePartition for a strict sweep that hits one.
std::vector<std::filesystem::path> run_experiment(const ExperimentConfig& cfg);

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::string> scenario;
};

/// Process-level entry: 0 on completion, 2 on config error, 3 on an
/// infeasible scenario. Diagnostics go to `err`.
int run(const std::filesystem::path& config_path, const RunOverrides& overrides,
        std::ostream& err);

}  // namespace polyshard

#endif  // POLYSHARD_EXPERIMENT_HPP
