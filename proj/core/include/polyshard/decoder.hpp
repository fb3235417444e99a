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

#ifndef POLYSHARD_DECODER_HPP
#define POLYSHARD_DECODER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyshard/field.hpp"
#include "polyshard/lcc.hpp"
#include "polyshard/polynomial.hpp"
#include "polyshard/verification.hpp"
#include "polyshard/versions.hpp"

namespace polyshard {

/// One node's broadcast verification result. An empty value models a node
/// that stayed silent.
struct BroadcastEntry {
  std::size_t node;
  Fp alpha;
  std::optional<Fp> value;
};

using BroadcastSet = std::vector<BroadcastEntry>;

enum class DecodeStatus { kRecovered, kFailure };

const char* to_string(DecodeStatus s);

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::kFailure;
  std::optional<Polynomial> poly;
  /// Nodes whose present value disagrees with `poly`.
  std::vector<std::size_t> error_positions;
  std::string diagnostics;

  bool recovered() const noexcept { return status == DecodeStatus::kRecovered; }
};

/// Berlekamp-Welch decoding of a polynomial of degree <= degree_bound from
/// the present entries of `b`, correcting up to max_errors wrong values.
///
/// Silent entries are dropped first. Failure means no polynomial of the
/// degree bound lies within max_errors of the data. Throws
/// InsufficientEvaluations when fewer than degree_bound + 1 + 2*max_errors
/// entries are present.
DecodeOutcome rs_decode(std::span<const BroadcastEntry> b, std::size_t degree_bound,
                        std::size_t max_errors);

/// Largest error count uniquely correctable from `present` evaluations of a
/// degree <= degree_bound polynomial; zero when present <= degree_bound.
std::size_t unique_decoding_radius(std::size_t present, std::size_t degree_bound);

/// (poly(omega_1), ..., poly(omega_K)).
std::vector<Fp> recover_outputs(const Polynomial& poly, const EncodingParams& params);

std::vector<std::uint8_t> accept_bits(std::span<const Fp> h, const AcceptSet& accept);

/// Decoding with knowledge of which version tuple each node evaluated.
///
/// Entries are grouped by tuple and each cell is decoded on its own at
/// radius min(max_errors, unique radius of the cell). A cell of exactly
/// degree_bound + 1 entries is used only when max_errors is zero, since it
/// carries no redundancy to expose a wrong value. Every recovered cell must
/// agree on the honest shards' outputs; a disagreement is a Failure. Throws
/// InsufficientEvaluations when no cell is large enough.
DecodeOutcome known_behavior_decode(std::span<const BroadcastEntry> b,
                                    const VersionAssignment& assignment,
                                    const EncodingParams& params, std::size_t degree_bound,
                                    std::size_t max_errors);

}  // namespace polyshard

#endif  // POLYSHARD_DECODER_HPP
