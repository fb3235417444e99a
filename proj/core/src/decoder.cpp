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

#include "polyshard/decoder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "polyshard/errors.hpp"
#include "polyshard/matrix.hpp"

namespace polyshard {

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::kRecovered:
      return "Recovered";
    case DecodeStatus::kFailure:
      return "Failure";
  }
  return "?";
}

std::size_t unique_decoding_radius(std::size_t present, std::size_t degree_bound) {
  if (present <= degree_bound) return 0;
  return (present - degree_bound - 1) / 2;
}

DecodeOutcome rs_decode(std::span<const BroadcastEntry> b, std::size_t degree_bound,
                        std::size_t max_errors) {
  std::vector<const BroadcastEntry*> present;
  for (const auto& e : b) {
    if (e.value) present.push_back(&e);
  }
  const std::size_t need = degree_bound + 1 + 2 * max_errors;
  if (present.size() < need) {
    throw InsufficientEvaluations("have " + std::to_string(present.size()) +
                                  " evaluations, need " + std::to_string(need));
  }
  const Field f = present.front()->alpha.field();

  // Unknowns: E_0..E_{t-1} (E monic of degree t), then Q_0..Q_{D+t}.
  //   Q(a_i) - y_i * sum_j E_j a_i^j = y_i * a_i^t
  const std::size_t t = max_errors;
  const std::size_t q_len = degree_bound + t + 1;
  Matrix sys(f, present.size(), t + q_len);
  Vector rhs(present.size(), f.zero());
  for (std::size_t i = 0; i < present.size(); ++i) {
    const Fp a = present[i]->alpha;
    const Fp y = *present[i]->value;
    Fp power = f.one();
    for (std::size_t j = 0; j < q_len; ++j) {
      if (j < t) sys(i, j) = -(y * power);
      sys(i, t + j) = power;
      if (j == t) rhs[i] = y * power;  // q_len > t, so this always fires
      power *= a;
    }
  }

  DecodeOutcome out;
  const auto sol = solve_linear(sys, rhs);
  if (!sol) {
    out.diagnostics = "key equation inconsistent";
    return out;
  }
  std::vector<Fp> e_coeffs(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(t));
  e_coeffs.push_back(f.one());
  const Polynomial locator(f, std::move(e_coeffs));
  const Polynomial numer(f, std::vector<Fp>(sol->begin() + static_cast<std::ptrdiff_t>(t), sol->end()));

  auto [poly, rem] = numer.divmod(locator);
  if (!rem.is_zero()) {
    out.diagnostics = "error locator does not divide the numerator";
    return out;
  }

  for (const auto* e : present) {
    if (poly(e->alpha) != *e->value) out.error_positions.push_back(e->node);
  }
  if (out.error_positions.size() > max_errors) {
    // Unreachable by construction: Q = P E forces disagreements onto roots of E.
    throw std::logic_error("Berlekamp-Welch returned a polynomial outside the error radius");
  }
  out.status = DecodeStatus::kRecovered;
  out.poly = std::move(poly);
  return out;
}

std::vector<Fp> recover_outputs(const Polynomial& poly, const EncodingParams& params) {
  if (poly.degree() && *poly.degree() > params.composed_degree()) {
    throw std::invalid_argument("polynomial exceeds d(K-1)");
  }
  std::vector<Fp> out;
  out.reserve(params.K);
  for (const auto& w : params.omegas) out.push_back(poly(w));
  return out;
}

std::vector<std::uint8_t> accept_bits(std::span<const Fp> h, const AcceptSet& accept) {
  std::vector<std::uint8_t> bits;
  bits.reserve(h.size());
  for (const auto& x : h) bits.push_back(accept.contains(x) ? 1 : 0);
  return bits;
}

DecodeOutcome known_behavior_decode(std::span<const BroadcastEntry> b,
                                    const VersionAssignment& assignment,
                                    const EncodingParams& params, std::size_t degree_bound,
                                    std::size_t max_errors) {
  std::map<VersionTuple, BroadcastSet> cells;
  for (const auto& e : b) {
    if (!assignment.covers(e.node)) {
      throw std::invalid_argument("node " + std::to_string(e.node) + " has no version tuple");
    }
    cells[assignment.tuple_of(e.node)].push_back(e);
  }

  const std::set<std::size_t> adversarial(assignment.producers().begin(),
                                          assignment.producers().end());
  std::vector<std::size_t> honest;
  for (std::size_t k = 0; k < params.K; ++k) {
    if (!adversarial.count(k)) honest.push_back(k);
  }

  std::optional<DecodeOutcome> chosen;
  std::vector<Fp> reference;
  std::size_t usable = 0;
  std::ostringstream diag;
  for (const auto& [tuple, entries] : cells) {
    std::size_t m = 0;
    for (const auto& e : entries) m += e.value.has_value();
    if (m < degree_bound + 1) continue;
    if (m == degree_bound + 1 && max_errors > 0) continue;
    const std::size_t radius = std::min(max_errors, unique_decoding_radius(m, degree_bound));
    ++usable;

    DecodeOutcome cell = rs_decode(entries, degree_bound, radius);
    if (!cell.recovered()) continue;

    std::vector<Fp> honest_vals;
    for (auto k : honest) honest_vals.push_back((*cell.poly)(params.omegas[k]));
    if (!chosen) {
      reference = honest_vals;
      diag << "cell of " << m << " entries decoded at radius " << radius;
      cell.diagnostics = diag.str();
      chosen = std::move(cell);
    } else if (honest_vals != reference) {
      DecodeOutcome fail;
      fail.diagnostics = "recovered cells disagree on honest-shard outputs";
      return fail;
    }
  }
  if (usable == 0) throw InsufficientEvaluations("no version cell is large enough to decode");
  if (!chosen) {
    DecodeOutcome fail;
    fail.diagnostics = "no version cell decoded";
    return fail;
  }
  return *chosen;
}

}  // namespace polyshard
