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

#ifndef POLYSHARD_VERSIONS_HPP
#define POLYSHARD_VERSIONS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "polyshard/lcc.hpp"

namespace polyshard {

/// All v^beta' version tuples in lexicographic order; the first is all zeros.
std::vector<VersionTuple> enumerate_tuples(std::uint32_t v, std::size_t beta_prime);

/// Which version each node received from each adversarial producer.
///
/// Every tuple has one entry per producer (in `producers()` order) with
/// values in [0, v), so no producer can inject more than v versions.
class VersionAssignment {
 public:
  VersionAssignment(std::vector<std::size_t> producers, std::uint32_t v);

  const std::vector<std::size_t>& producers() const noexcept { return producers_; }
  std::uint32_t v() const noexcept { return v_; }

  /// Throws std::invalid_argument on a malformed tuple.
  void assign(std::size_t node, VersionTuple tuple);

  bool covers(std::size_t node) const { return by_node_.count(node) > 0; }
  /// Throws std::out_of_range for an unassigned node.
  const VersionTuple& tuple_of(std::size_t node) const { return by_node_.at(node); }
  std::vector<std::size_t> nodes() const;

  /// Nodes grouped by full version tuple; disjoint, covering, tuple-ordered.
  std::map<VersionTuple, std::vector<std::size_t>> cells() const;

  /// Number of distinct versions of producer `position` actually delivered.
  std::size_t distinct_versions(std::size_t position) const;

 private:
  std::vector<std::size_t> producers_;
  std::uint32_t v_;
  std::map<std::size_t, VersionTuple> by_node_;
};

}  // namespace polyshard

#endif  // POLYSHARD_VERSIONS_HPP
