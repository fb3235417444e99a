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

#ifndef POLYSHARD_ADVERSARY_HPP
#define POLYSHARD_ADVERSARY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "polyshard/decoder.hpp"
#include "polyshard/field.hpp"
#include "polyshard/lcc.hpp"
#include "polyshard/verification.hpp"
#include "polyshard/versions.hpp"

namespace polyshard {

enum class AssignmentStrategy { kBalanced, kRandom, kTargeted };
enum class BroadcastStrategy { kSilent, kGarbage, kHonestLooking };
enum class ForgeMode { kValidFirst, kAllRandom };

const char* to_string(AssignmentStrategy s);
const char* to_string(BroadcastStrategy s);
AssignmentStrategy parse_assignment_strategy(const std::string& s);
BroadcastStrategy parse_broadcast_strategy(const std::string& s);

struct AdversaryConfig {
  /// Adversarial node set A, node indices.
  std::vector<std::size_t> adversarial_nodes;
  /// Adversarial producers A_K; node k produces shard k, so these are also
  /// shard indices. Empty means "derive": the lowest beta' members of A.
  std::vector<std::size_t> adversarial_producers;
  std::uint32_t v = 1;
  AssignmentStrategy assignment = AssignmentStrategy::kBalanced;
  BroadcastStrategy broadcast = BroadcastStrategy::kGarbage;
  ForgeMode forge = ForgeMode::kValidFirst;
  /// Explicit node -> tuple map for the targeted strategy.
  std::map<std::size_t, VersionTuple> targeted;

  /// Throws std::invalid_argument when producers are not a subset of A or
  /// v is zero.
  void validate(std::size_t K, std::size_t N) const;
};

/// The lowest `beta_prime` members of `adversarial_nodes`, which must all be
/// valid shard indices (< K).
std::vector<std::size_t> default_producers(std::span<const std::size_t> adversarial_nodes,
                                           std::size_t beta_prime, std::size_t K);

/// v pairwise-distinct candidate blocks for one epoch of a captured shard.
/// In kValidFirst mode version 0 is the block f accepts given `history`.
std::vector<Block> forge_versions(std::span<const Fp> history, std::uint32_t v, ForgeMode mode,
                                  const VerificationFn& f, Field field, std::mt19937_64& rng);

/// Version tuple for every node in `nodes`.
///
/// kBalanced deals the v^beta' tuples round-robin in lexicographic order and
/// throws InfeasiblePartition when |nodes| > v^beta' * cap. kRandom draws
/// each tuple uniformly. kTargeted copies config.targeted verbatim.
VersionAssignment assign_versions(std::span<const std::size_t> nodes,
                                  const std::vector<std::size_t>& producers,
                                  const AdversaryConfig& config, std::size_t cap,
                                  std::mt19937_64& rng);

/// Rewrites the broadcast entries of adversarial nodes. For kHonestLooking,
/// `honest_looking[i]` is the correctly computed value for entries[i].
void corrupt_results(std::span<BroadcastEntry> entries, BroadcastStrategy strategy,
                     std::span<const Fp> honest_looking, std::mt19937_64& rng);

/// Shards an adversary holding beta nodes can capture when a shard falls at
/// a gamma fraction of its N/K members: floor(beta K / (gamma N)), capped at K.
std::size_t shard_capture(std::size_t beta, double gamma, std::size_t N, std::size_t K);

}  // namespace polyshard

#endif  // POLYSHARD_ADVERSARY_HPP
