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

#ifndef POLYSHARD_THRESHOLD_HPP
#define POLYSHARD_THRESHOLD_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polyshard/field.hpp"
#include "polyshard/lcc.hpp"
#include "polyshard/matrix.hpp"

namespace polyshard {

/// Setup of the linear-decoding system for Lagrange coding under a
/// discrepancy adversary.
///
/// Shards 0..beta'-1 are the adversarial producers; the remaining K - beta'
/// are honest. `tuples` lists all v^beta' version tuples (enumerate_tuples
/// order) and `partition_sizes[i]` counts the evaluation rows that saw
/// tuples[i]. `alphas` holds those rows' points cell by cell, after the 2*beta
/// erroneous rows have already been dropped.
struct AnalysisParams {
  Field field;
  std::size_t K = 1;
  std::size_t d = 1;
  std::size_t beta = 0;
  std::size_t beta_prime = 0;
  std::uint32_t v = 1;
  std::vector<std::size_t> partition_sizes;
  std::vector<VersionTuple> tuples;
  std::vector<Fp> omegas;
  std::vector<Fp> alphas;

  std::size_t degree() const noexcept { return d * (K - 1); }
  std::size_t honest_count() const noexcept { return K - beta_prime; }
  void validate() const;
};

/// Block matrices of the system D [X; Z] = [y; 0].
///
/// Unknown layout: v^beta' blocks of d(K-1)+1 coefficients (descending
/// degree, one block per version tuple), then the K - beta' honest outputs Z.
/// A, B and C span only the coefficient columns; D spans all of them.
struct SystemMatrices {
  Matrix A;
  Matrix B;
  Matrix C;
  Matrix D;
  std::size_t blocks = 0;
  std::size_t block_width = 0;
  std::size_t z_cols = 0;
};

/// How C ties coefficient blocks that share a version at some producer.
/// kStar links each group of tuples agreeing at producer r to the group's
/// first tuple; kAllPairs writes every pair. Both span the same row space.
enum class CStructure { kStar, kAllPairs };

/// Producer positions r with Vi[r] == Vj[r].
std::vector<std::size_t> versions_match_set(const VersionTuple& vi, const VersionTuple& vj);

SystemMatrices build_system(const AnalysisParams& params,
                            CStructure structure = CStructure::kStar);

struct RankReport {
  std::size_t rank_D = 0;
  std::size_t rank_D_reduced = 0;
  bool unique_Z = true;
  /// Kernel vector of D with a nonzero Z block; present iff !unique_Z.
  std::optional<Vector> witness;
};

/// Z is determined iff rank(D) = rank(D without Z columns) + (K - beta').
/// Throws std::logic_error if the rank test and the kernel search disagree.
RankReport unique_decodability(const SystemMatrices& sys);

/// v^beta' (d-1)(K-1) + v beta' + K - beta' + 2 beta.
std::int64_t theorem_bound(std::int64_t v, std::int64_t beta_prime, std::int64_t d,
                           std::int64_t K, std::int64_t beta);

/// v^beta' (d(K-1)+1) + 2 beta.
std::int64_t known_behavior_upper_bound(std::int64_t v, std::int64_t beta_prime, std::int64_t d,
                                        std::int64_t K, std::int64_t beta);

/// v^beta' (d(K-1)+1) - N', with N' the error-free evaluation count one
/// below the bound.
std::int64_t free_variable_count(std::int64_t v, std::int64_t beta_prime, std::int64_t d,
                                 std::int64_t K);

/// (v^beta' - 1)(K - beta') + (v^beta' - v) beta' + 1.
std::int64_t free_variable_count_closed(std::int64_t v, std::int64_t beta_prime,
                                        std::int64_t d, std::int64_t K);

std::int64_t ipow(std::int64_t base, std::int64_t exp);

struct SweepTemplate {
  Field field;
  std::size_t K = 3;
  std::size_t d = 2;
  std::size_t beta = 0;
  std::size_t beta_prime = 0;
  std::uint32_t v = 1;
  std::uint64_t seed = 1;
  /// Partitions examined per N when hunting for an ambiguous one.
  std::size_t search_budget = 2000;
};

struct SweepRow {
  std::size_t N = 0;
  std::vector<std::size_t> partition_sizes;
  std::size_t rank_D = 0;
  std::size_t rank_D_reduced = 0;
  bool unique_Z = true;
  /// False when no partition keeps every cell within d(K-1); the row then
  /// reports the round-robin partition, which the construction cannot use.
  bool feasible = true;
};

/// Random pairwise-distinct omegas and alphas, redrawn on any coincidence.
std::pair<std::vector<Fp>, std::vector<Fp>> draw_points(Field field, std::size_t K,
                                                        std::size_t count,
                                                        std::mt19937_64& rng);

/// The balanced (round-robin) partition of N - 2 beta rows for one N.
AnalysisParams balanced_analysis(const SweepTemplate& tmpl, std::size_t N);

/// For each N in [n_min, n_max], look for the worst admissible partition of
/// the N - 2 beta error-free rows: every cell at most d(K-1). The round-robin
/// partition is tried first; if it is decodable, other cell-size vectors are
/// enumerated (up to tmpl.search_budget) until one leaves Z ambiguous. When
/// no admissible partition exists the row is marked infeasible and reports
/// the round-robin partition; with `strict` that throws InfeasiblePartition.
std::vector<SweepRow> empirical_threshold(const SweepTemplate& tmpl, std::size_t n_min,
                                          std::size_t n_max, bool strict = false);

/// "N,partition_sizes,rank_D,rank_D_reduced,unique_Z"
const char* sweep_csv_header();
void write_sweep_csv_row(std::ostream& os, const SweepRow& row);

}  // namespace polyshard

#endif  // POLYSHARD_THRESHOLD_HPP
