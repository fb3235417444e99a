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

#include "polyshard/lcc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polyshard/errors.hpp"

namespace polyshard {

EncodingParams EncodingParams::defaults(Field field, std::size_t K, std::size_t N, std::size_t d) {
  EncodingParams p{field, K, N, d, {}, {}};
  for (std::size_t k = 0; k < K; ++k) p.omegas.push_back(field(k + 1));
  for (std::size_t n = 0; n < N; ++n) p.alphas.push_back(field(K + n + 1));
  p.validate();
  return p;
}

void EncodingParams::validate() const {
  if (K < 1 || N < 1 || d < 1) throw std::invalid_argument("K, N and d must all be at least 1");
  if (omegas.size() != K) throw std::invalid_argument("expected K shard points");
  if (alphas.size() != N) throw std::invalid_argument("expected N node points");
  std::vector<std::uint64_t> all;
  all.reserve(K + N);
  for (const auto& w : omegas) all.push_back(w.value());
  for (const auto& a : alphas) all.push_back(a.value());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("evaluation points must be pairwise distinct");
  }
}

Fp lagrange_basis(const EncodingParams& params, std::size_t k, const Fp& z) {
  if (k >= params.K) throw std::out_of_range("shard index " + std::to_string(k));
  Fp num = params.field.one();
  Fp den = params.field.one();
  for (std::size_t j = 0; j < params.K; ++j) {
    if (j == k) continue;
    num *= z - params.omegas[j];
    den *= params.omegas[k] - params.omegas[j];
  }
  return num / den;
}

Polynomial lagrange_basis_poly(const EncodingParams& params, std::size_t k) {
  if (k >= params.K) throw std::out_of_range("shard index " + std::to_string(k));
  std::vector<Fp> roots;
  Fp den = params.field.one();
  for (std::size_t j = 0; j < params.K; ++j) {
    if (j == k) continue;
    roots.push_back(params.omegas[j]);
    den *= params.omegas[k] - params.omegas[j];
  }
  return Polynomial::from_roots(params.field, roots) * den.inverse();
}

Fp encode_at_node(std::span<const Block> received, const EncodingParams& params, std::size_t n) {
  if (n >= params.N) throw std::out_of_range("node index " + std::to_string(n));
  if (received.size() != params.K) throw std::invalid_argument("view must hold K blocks");
  Fp acc = params.field.zero();
  for (std::size_t k = 0; k < params.K; ++k) {
    acc += received[k] * lagrange_basis(params, k, params.alphas[n]);
  }
  return acc;
}

Polynomial build_coded_poly(std::span<const Block> view, const EncodingParams& params) {
  if (view.size() != params.K) throw std::invalid_argument("view must hold K blocks");
  Polynomial q(params.field);
  for (std::size_t k = 0; k < params.K; ++k) {
    q += lagrange_basis_poly(params, k) * view[k];
  }
  return q;
}

Polynomial compose_verification(const Polynomial& q, std::span<const Polynomial> coded_history,
                                const VerificationFn& f, std::size_t K) {
  Polynomial out = f.compose(q, coded_history);
  const std::size_t bound = f.degree() * (K - 1);
  if (out.degree() && *out.degree() > bound) {
    throw DegreeOverflow("composed verification polynomial has degree " +
                         std::to_string(*out.degree()) + " > d(K-1) = " + std::to_string(bound));
  }
  return out;
}

}  // namespace polyshard
