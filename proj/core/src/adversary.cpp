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

#include "polyshard/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "polyshard/errors.hpp"

namespace polyshard {

const char* to_string(AssignmentStrategy s) {
  switch (s) {
    case AssignmentStrategy::kBalanced:
      return "balanced";
    case AssignmentStrategy::kRandom:
      return "random";
    case AssignmentStrategy::kTargeted:
      return "targeted";
  }
  return "?";
}

const char* to_string(BroadcastStrategy s) {
  switch (s) {
    case BroadcastStrategy::kSilent:
      return "silent";
    case BroadcastStrategy::kGarbage:
      return "garbage";
    case BroadcastStrategy::kHonestLooking:
      return "honest_looking";
  }
  return "?";
}

AssignmentStrategy parse_assignment_strategy(const std::string& s) {
  if (s == "balanced") return AssignmentStrategy::kBalanced;
  if (s == "random") return AssignmentStrategy::kRandom;
  if (s == "targeted") return AssignmentStrategy::kTargeted;
  throw std::invalid_argument("unknown assignment strategy '" + s + "'");
}

BroadcastStrategy parse_broadcast_strategy(const std::string& s) {
  if (s == "silent") return BroadcastStrategy::kSilent;
  if (s == "garbage") return BroadcastStrategy::kGarbage;
  if (s == "honest_looking") return BroadcastStrategy::kHonestLooking;
  throw std::invalid_argument("unknown broadcast strategy '" + s + "'");
}

void AdversaryConfig::validate(std::size_t K, std::size_t N) const {
  if (v == 0) throw std::invalid_argument("v must be at least 1");
  const std::set<std::size_t> nodes(adversarial_nodes.begin(), adversarial_nodes.end());
  if (nodes.size() != adversarial_nodes.size()) {
    throw std::invalid_argument("adversarial nodes must be distinct");
  }
  for (auto n : nodes) {
    if (n >= N) throw std::invalid_argument("adversarial node index out of range");
  }
  for (auto k : adversarial_producers) {
    if (k >= K) throw std::invalid_argument("adversarial producer is not a shard index");
    if (!nodes.count(k)) {
      throw std::invalid_argument("adversarial producers must be adversarial nodes");
    }
  }
}

std::vector<std::size_t> default_producers(std::span<const std::size_t> adversarial_nodes,
                                           std::size_t beta_prime, std::size_t K) {
  std::vector<std::size_t> sorted(adversarial_nodes.begin(), adversarial_nodes.end());
  std::sort(sorted.begin(), sorted.end());
  if (beta_prime > sorted.size()) {
    throw std::invalid_argument("beta' exceeds the number of adversarial nodes");
  }
  sorted.resize(beta_prime);
  for (auto k : sorted) {
    if (k >= K) throw std::invalid_argument("adversarial producer must be one of the first K nodes");
  }
  return sorted;
}

std::vector<Block> forge_versions(std::span<const Fp> history, std::uint32_t v, ForgeMode mode,
                                  const VerificationFn& f, Field field, std::mt19937_64& rng) {
  if (v == 0) throw std::invalid_argument("v must be at least 1");
  std::vector<Block> out;
  std::set<std::uint64_t> seen;
  if (mode == ForgeMode::kValidFirst) {
    const auto valid = f.valid_proposal(history);
    if (!valid) throw std::invalid_argument("verification function cannot construct a valid block");
    out.push_back(*valid);
    seen.insert(valid->value());
  }
  while (out.size() < v) {
    const Fp x = field.random(rng);
    if (seen.insert(x.value()).second) out.push_back(x);
  }
  return out;
}

VersionAssignment assign_versions(std::span<const std::size_t> nodes,
                                  const std::vector<std::size_t>& producers,
                                  const AdversaryConfig& config, std::size_t cap,
                                  std::mt19937_64& rng) {
  VersionAssignment out(producers, config.v);
  switch (config.assignment) {
    case AssignmentStrategy::kBalanced: {
      const auto tuples = enumerate_tuples(config.v, producers.size());
      if (nodes.size() > tuples.size() * cap) {
        throw InfeasiblePartition(std::to_string(nodes.size()) + " nodes cannot be split into " +
                                  std::to_string(tuples.size()) + " cells of at most " +
                                  std::to_string(cap));
      }
      for (std::size_t i = 0; i < nodes.size(); ++i) out.assign(nodes[i], tuples[i % tuples.size()]);
      break;
    }
    case AssignmentStrategy::kRandom: {
      for (auto n : nodes) {
        VersionTuple t(producers.size());
        for (auto& x : t) x = static_cast<std::uint32_t>(rng() % config.v);
        out.assign(n, std::move(t));
      }
      break;
    }
    case AssignmentStrategy::kTargeted: {
      for (auto n : nodes) {
        const auto it = config.targeted.find(n);
        if (it == config.targeted.end()) {
          throw std::invalid_argument("targeted assignment has no tuple for node " +
                                      std::to_string(n));
        }
        out.assign(n, it->second);
      }
      break;
    }
  }
  return out;
}

void corrupt_results(std::span<BroadcastEntry> entries, BroadcastStrategy strategy,
                     std::span<const Fp> honest_looking, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& e = entries[i];
    switch (strategy) {
      case BroadcastStrategy::kSilent:
        e.value.reset();
        break;
      case BroadcastStrategy::kGarbage:
        e.value = e.alpha.field().random(rng);
        break;
      case BroadcastStrategy::kHonestLooking:
        if (honest_looking.size() != entries.size()) {
          throw std::invalid_argument("honest-looking values must match the entries");
        }
        e.value = honest_looking[i];
        break;
    }
  }
}

std::size_t shard_capture(std::size_t beta, double gamma, std::size_t N, std::size_t K) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must lie in (0, 1]");
  if (N == 0) throw std::invalid_argument("N must be positive");
  const double raw = static_cast<double>(beta) * static_cast<double>(K) /
                     (gamma * static_cast<double>(N));
  // Nudge exact quotients such as 3.9999999 up before flooring.
  const auto captured = static_cast<std::size_t>(std::floor(raw + 1e-9));
  return std::min(captured, K);
}

}  // namespace polyshard
