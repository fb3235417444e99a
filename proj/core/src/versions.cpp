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

#include "polyshard/versions.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace polyshard {

std::vector<VersionTuple> enumerate_tuples(std::uint32_t v, std::size_t beta_prime) {
  if (v == 0) throw std::invalid_argument("v must be at least 1");
  std::vector<VersionTuple> out;
  VersionTuple cur(beta_prime, 0);
  while (true) {
    out.push_back(cur);
    std::size_t pos = beta_prime;
    while (pos > 0) {
      --pos;
      if (++cur[pos] < v) break;
      cur[pos] = 0;
      if (pos == 0) return out;
    }
    if (beta_prime == 0) return out;
  }
}

VersionAssignment::VersionAssignment(std::vector<std::size_t> producers, std::uint32_t v)
    : producers_(std::move(producers)), v_(v) {
  if (v == 0) throw std::invalid_argument("v must be at least 1");
}

void VersionAssignment::assign(std::size_t node, VersionTuple tuple) {
  if (tuple.size() != producers_.size()) {
    throw std::invalid_argument("version tuple length must equal the producer count");
  }
  for (auto x : tuple) {
    if (x >= v_) throw std::invalid_argument("version index out of range");
  }
  by_node_[node] = std::move(tuple);
}

std::vector<std::size_t> VersionAssignment::nodes() const {
  std::vector<std::size_t> out;
  out.reserve(by_node_.size());
  for (const auto& [n, t] : by_node_) out.push_back(n);
  return out;
}

std::map<VersionTuple, std::vector<std::size_t>> VersionAssignment::cells() const {
  std::map<VersionTuple, std::vector<std::size_t>> out;
  for (const auto& [n, t] : by_node_) out[t].push_back(n);
  return out;
}

std::size_t VersionAssignment::distinct_versions(std::size_t position) const {
  std::set<std::uint32_t> seen;
  for (const auto& [n, t] : by_node_) seen.insert(t.at(position));
  return seen.size();
}

}  // namespace polyshard
