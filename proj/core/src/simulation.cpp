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

#include "polyshard/simulation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace polyshard {

namespace {

// Stream tags for derive_seed.
enum : std::uint64_t { kProposals = 1, kForge, kAssign, kBroadcast };

}  // namespace

const char* to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::kRecovered:
      return "Recovered";
    case NodeStatus::kFailure:
      return "Failure";
    case NodeStatus::kAdversarial:
      return "Adversarial";
  }
  return "?";
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = seed ^ (a * 0x9E3779B97F4A7C15ULL) ^ (b * 0xC2B2AE3D27D4EB4FULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string to_json_line(const EpochReport& r) {
  nlohmann::json j;
  j["epoch"] = r.epoch;
  j["seed"] = r.seed;
  auto& status = j["status"] = nlohmann::json::array();
  for (auto s : r.status) status.push_back(to_string(s));
  auto& accepted = j["accepted"] = nlohmann::json::array();
  for (const auto& bits : r.accepted) {
    if (bits.empty()) {
      accepted.push_back(nullptr);
    } else {
      accepted.push_back(bits);
    }
  }
  j["chain_divergence"] = r.chain_divergence;
  j["messages"] = {{"unicast", r.messages.unicast}, {"broadcast", r.messages.broadcast}};
  j["stalled"] = r.stalled;
  return j.dump();
}

std::vector<Block> propose_blocks(std::span<const ShardChain> chains, ProposerKind kind,
                                  const VerificationFn& f, Field field, std::mt19937_64& rng) {
  std::vector<Block> out;
  out.reserve(chains.size());
  for (const auto& chain : chains) {
    if (kind == ProposerKind::kValid) {
      const auto x = f.valid_proposal(chain.blocks);
      if (!x) throw std::invalid_argument("verification function cannot construct a valid block");
      out.push_back(*x);
    } else {
      out.push_back(field.random(rng));
    }
  }
  return out;
}

Simulation::Simulation(SimConfig config, AdversaryConfig adversary)
    : config_(std::move(config)), adversary_(std::move(adversary)) {
  const auto& params = config_.params;
  params.validate();
  if (!config_.f) throw std::invalid_argument("simulation needs a verification function");
  if (config_.f->degree() != params.d) {
    throw std::invalid_argument("verification function degree differs from d");
  }
  adversary_.validate(params.K, params.N);

  const Field f = params.field;
  for (std::size_t k = 0; k < params.K; ++k) chains_.push_back({k, {f(k + 1)}});

  std::vector<Fp> genesis;
  for (const auto& c : chains_) genesis.push_back(c.blocks.front());
  const std::set<std::size_t> bad(adversary_.adversarial_nodes.begin(),
                                  adversary_.adversarial_nodes.end());
  for (std::size_t n = 0; n < params.N; ++n) {
    NodeState s{n, params.alphas[n], bad.count(n) > 0, {}, {}};
    s.coded_chain.push_back(encode_at_node(genesis, params, n));
    s.implied_history.push_back(genesis);
    nodes_.push_back(std::move(s));
  }
}

EpochReport Simulation::run_epoch(std::uint64_t seed) {
  const auto& params = config_.params;
  const Field field = params.field;
  const std::size_t K = params.K;
  const std::size_t N = params.N;
  const std::size_t D = params.composed_degree();
  const VerificationFn& f = *config_.f;

  EpochReport report;
  report.epoch = epoch_ + 1;
  report.seed = seed;

  // (1) Proposals and their delivery.
  std::mt19937_64 rng_prop(derive_seed(seed, kProposals, report.epoch));
  const auto proposals = propose_blocks(chains_, config_.proposer, f, field, rng_prop);

  const auto& producers = adversary_.adversarial_producers;
  const bool discrepancy = adversary_.v >= 2 && !producers.empty();
  std::vector<ReceivedProposals> views(N, proposals);
  // What an adversarial node pretends to have received: version 0 of every
  // forged block.
  ReceivedProposals tuple0_view = proposals;
  if (discrepancy) {
    std::mt19937_64 rng_forge(derive_seed(seed, kForge, report.epoch));
    std::vector<std::vector<Block>> versions;
    for (auto k : producers) {
      versions.push_back(
          forge_versions(chains_[k].blocks, adversary_.v, adversary_.forge, f, field, rng_forge));
    }
    std::vector<std::size_t> all(N);
    for (std::size_t n = 0; n < N; ++n) all[n] = n;
    std::mt19937_64 rng_assign(derive_seed(seed, kAssign, report.epoch));
    const auto assignment = assign_versions(all, producers, adversary_, N, rng_assign);
    for (std::size_t r = 0; r < producers.size(); ++r) {
      tuple0_view[producers[r]] = versions[r][0];
      if (assignment.distinct_versions(r) > adversary_.v) {
        throw std::logic_error("producer injected more than v versions");
      }
    }
    for (std::size_t n = 0; n < N; ++n) {
      const auto& tuple = assignment.tuple_of(n);
      for (std::size_t r = 0; r < producers.size(); ++r) {
        views[n][producers[r]] = versions[r][tuple[r]];
      }
    }
    report.messages.unicast += producers.size() * N;
    report.messages.broadcast += (K - producers.size()) * N;
  } else {
    report.messages.broadcast += K * N;
  }

  // (2) Coded verification at every node.
  BroadcastSet broadcasts;
  std::vector<std::size_t> adv_idx;
  std::vector<Fp> honest_looking;
  for (std::size_t n = 0; n < N; ++n) {
    const auto& node = nodes_[n];
    const Fp coded = encode_at_node(views[n], params, n);
    broadcasts.push_back({n, node.alpha, f.evaluate(coded, node.coded_chain)});
    if (node.adversarial) {
      adv_idx.push_back(n);
      honest_looking.push_back(
          f.evaluate(encode_at_node(tuple0_view, params, n), node.coded_chain));
    }
  }

  // (3) Adversarial nodes rewrite their broadcasts.
  {
    std::vector<BroadcastEntry> adv_entries;
    for (auto n : adv_idx) adv_entries.push_back(broadcasts[n]);
    std::mt19937_64 rng_bcast(derive_seed(seed, kBroadcast, report.epoch));
    corrupt_results(adv_entries, adversary_.broadcast, honest_looking, rng_bcast);
    for (std::size_t i = 0; i < adv_idx.size(); ++i) broadcasts[adv_idx[i]] = adv_entries[i];
  }
  for (const auto& b : broadcasts) {
    if (b.value) report.messages.broadcast += N;
  }

  // (4) Decode at every honest node, (5) append.
  std::size_t present = 0;
  for (const auto& b : broadcasts) present += b.value.has_value();

  report.status.assign(N, NodeStatus::kAdversarial);
  report.accepted.assign(N, {});
  std::optional<std::vector<std::uint8_t>> reference_bits;
  std::optional<std::size_t> first_appender;
  std::vector<std::vector<std::uint8_t>> applied(N);

  for (std::size_t n = 0; n < N; ++n) {
    if (nodes_[n].adversarial) continue;
    DecodeOutcome outcome;
    if (present >= D + 1) {
      outcome = rs_decode(broadcasts, D, unique_decoding_radius(present, D));
    }
    if (outcome.recovered()) {
      report.status[n] = NodeStatus::kRecovered;
      const auto h = recover_outputs(*outcome.poly, params);
      report.accepted[n] = accept_bits(h, config_.accept);
      applied[n] = report.accepted[n];
      if (!reference_bits) reference_bits = report.accepted[n];
    } else {
      report.status[n] = NodeStatus::kFailure;
      if (config_.on_failure == FailurePolicy::kAppendOwnView) {
        applied[n].assign(K, 1);
      }
    }
  }

  // Adversarial nodes keep a plausible chain by mirroring honest e bits.
  for (std::size_t n = 0; n < N; ++n) {
    if (nodes_[n].adversarial && reference_bits) applied[n] = *reference_bits;
  }

  for (std::size_t n = 0; n < N; ++n) {
    if (applied[n].empty()) continue;
    std::vector<Fp> implied(K, field.zero());
    for (std::size_t k = 0; k < K; ++k) {
      if (applied[n][k]) implied[k] = views[n][k];
    }
    nodes_[n].coded_chain.push_back(encode_at_node(implied, params, n));
    nodes_[n].implied_history.push_back(implied);
    if (!nodes_[n].adversarial && !first_appender) first_appender = n;
  }

  if (first_appender) {
    const auto& implied = nodes_[*first_appender].implied_history.back();
    for (std::size_t k = 0; k < K; ++k) chains_[k].blocks.push_back(implied[k]);
  } else {
    report.stalled = true;
  }

  std::set<std::vector<std::vector<std::uint64_t>>> fingerprints;
  for (const auto& node : nodes_) {
    if (node.adversarial) continue;
    std::vector<std::vector<std::uint64_t>> fp;
    for (const auto& epoch : node.implied_history) {
      std::vector<std::uint64_t> row;
      for (const auto& x : epoch) row.push_back(x.value());
      fp.push_back(std::move(row));
    }
    fingerprints.insert(std::move(fp));
  }
  report.chain_divergence = fingerprints.size();

  last_views_ = std::move(views);
  last_broadcasts_ = std::move(broadcasts);
  ++epoch_;
  return report;
}

CommLoad comm_load(std::uint64_t N, std::uint64_t K, Mitigation mitigation) {
  CommLoad c;
  c.proposals = K * N;
  c.results = N * N;
  c.rebroadcast = mitigation == Mitigation::kFullRebroadcast ? N * K * N : 0;
  c.total = c.proposals + c.results + c.rebroadcast;
  return c;
}

}  // namespace polyshard
