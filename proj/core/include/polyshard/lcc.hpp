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

#ifndef POLYSHARD_LCC_HPP
#define POLYSHARD_LCC_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polyshard/field.hpp"
#include "polyshard/polynomial.hpp"
#include "polyshard/verification.hpp"

namespace polyshard {

/// Blocks are modelled as single field elements; vector payloads would be
/// coded componentwise with no change to the algebra.
using Block = Fp;

/// One node's view of the K proposals of an epoch, indexed by shard.
using ReceivedProposals = std::vector<Block>;

/// Which version each adversarial producer delivered, ordered by producer.
/// Versions are 0-based here (the first version is 0).
using VersionTuple = std::vector<std::uint32_t>;

/// Public encoding constants. Shards and nodes are 0-based throughout.
struct EncodingParams {
  Field field;
  std::size_t K = 1;
  std::size_t N = 1;
  std::size_t d = 1;
  std::vector<Fp> omegas;  // K shard points
  std::vector<Fp> alphas;  // N node points

  /// omega_k = k + 1, alpha_n = K + n + 1.
  static EncodingParams defaults(Field field, std::size_t K, std::size_t N, std::size_t d);

  /// Throws std::invalid_argument on counts < 1, size mismatches or any
  /// coincidence among the K + N points.
  void validate() const;

  /// d(K-1): degree of the composed verification polynomial.
  std::size_t composed_degree() const noexcept { return d * (K - 1); }
};

/// l_k(z) = prod_{j != k} (z - omega_j) / (omega_k - omega_j).
Fp lagrange_basis(const EncodingParams& params, std::size_t k, const Fp& z);

/// l_k as an explicit polynomial.
Polynomial lagrange_basis_poly(const EncodingParams& params, std::size_t k);

/// Coded block sum_k received[k] * l_k(alpha_n) computed by node n.
Fp encode_at_node(std::span<const Block> received, const EncodingParams& params, std::size_t n);

/// The degree < K polynomial taking value view[k] at omega_k.
Polynomial build_coded_poly(std::span<const Block> view, const EncodingParams& params);

/// f(q(z), p_1(z), ..., p_{t-1}(z)) by exact polynomial arithmetic.
/// Throws DegreeOverflow if the result exceeds f.degree() * (K - 1).
Polynomial compose_verification(const Polynomial& q, std::span<const Polynomial> coded_history,
                                const VerificationFn& f, std::size_t K);

}  // namespace polyshard

#endif  // POLYSHARD_LCC_HPP
