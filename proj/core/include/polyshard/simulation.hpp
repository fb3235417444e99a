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

#ifndef POLYSHARD_SIMULATION_HPP
#define POLYSHARD_SIMULATION_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "polyshard/adversary.hpp"
#include "polyshard/decoder.hpp"
#include "polyshard/lcc.hpp"
#include "polyshard/verification.hpp"

namespace polyshard {

enum class ProposerKind { kValid, kInvalid };
enum class FailurePolicy { kStall, kAppendOwnView };
enum class NodeStatus { kRecovered, kFailure, kAdversarial };

const char* to_string(NodeStatus s);

/// SplitMix64 finalizer over (seed, a, b); used to give every random stream
/// of an epoch its own independent seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

struct SimConfig {
  EncodingParams params;
  std::shared_ptr<const VerificationFn> f;
  AcceptSet accept = AcceptSet::zero();
  ProposerKind proposer = ProposerKind::kValid;
  FailurePolicy on_failure = FailurePolicy::kStall;
};

/// Accepted blocks of one shard; blocks[0] is the genesis constant and
/// blocks[m] is Y_k(m).
struct ShardChain {
  std::size_t shard;
  std::vector<Block> blocks;
};

struct NodeState {
  std::size_t node;
  Fp alpha;
  bool adversarial = false;
  /// coded_chain[m] = p_m(alpha) for the p_m this node believes in.
  std::vector<Fp> coded_chain;
  /// Per epoch, the shard values e_k * X_k the node folded into its chain.
  std::vector<std::vector<Fp>> implied_history;
};

struct MessageCounts {
  std::uint64_t unicast = 0;
  std::uint64_t broadcast = 0;
  std::uint64_t total() const noexcept { return unicast + broadcast; }
  friend bool operator==(const MessageCounts&, const MessageCounts&) = default;
};

struct EpochReport {
  std::size_t epoch = 0;
  std::uint64_t seed = 0;
  std::vector<NodeStatus> status;
  /// Per node e bits; empty for nodes that failed or are adversarial.
  std::vector<std::vector<std::uint8_t>> accepted;
  std::size_t chain_divergence = 0;
  MessageCounts messages;
  bool stalled = false;

  friend bool operator==(const EpochReport&, const EpochReport&) = default;
};

/// One JSON object, no trailing newline.
std::string to_json_line(const EpochReport& report);

/// Honest proposals for every shard. A valid proposer emits the block f
/// accepts against the shard's history; an invalid one emits a uniform block.
std::vector<Block> propose_blocks(std::span<const ShardChain> chains, ProposerKind kind,
                                  const VerificationFn& f, Field field, std::mt19937_64& rng);

/// Epoch-driven Polyshard over N nodes and K shards with an optional
/// adversary. The driver owns all state; run_epoch is deterministic in its
/// seed.
class Simulation {
 public:
  Simulation(SimConfig config, AdversaryConfig adversary);

  EpochReport run_epoch(std::uint64_t seed);

  const SimConfig& config() const noexcept { return config_; }
  const AdversaryConfig& adversary() const noexcept { return adversary_; }
  const std::vector<ShardChain>& chains() const noexcept { return chains_; }
  const std::vector<NodeState>& nodes() const noexcept { return nodes_; }
  std::size_t epoch() const noexcept { return epoch_; }

  /// Views delivered in the last epoch, indexed by node.
  const std::vector<ReceivedProposals>& last_views() const noexcept { return last_views_; }
  /// Broadcast results of the last epoch.
  const BroadcastSet& last_broadcasts() const noexcept { return last_broadcasts_; }

 private:
  SimConfig config_;
  AdversaryConfig adversary_;
  std::vector<ShardChain> chains_;
  std::vector<NodeState> nodes_;
  std::size_t epoch_ = 0;
  std::vector<ReceivedProposals> last_views_;
  BroadcastSet last_broadcasts_;
};

enum class Mitigation { kNone, kFullRebroadcast };

/// Analytic per-epoch delivery counts.
struct CommLoad {
  std::uint64_t proposals = 0;    // K * N
  std::uint64_t results = 0;      // N * N
  std::uint64_t rebroadcast = 0;  // N * K * N with full rebroadcast
  std::uint64_t total = 0;
};

CommLoad comm_load(std::uint64_t N, std::uint64_t K, Mitigation mitigation);

}  // namespace polyshard

#endif  // POLYSHARD_SIMULATION_HPP
