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

#include "polyshard/threshold.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "polyshard/decoder.hpp"
#include "polyshard/errors.hpp"
#include "polyshard/verification.hpp"
#include "polyshard/versions.hpp"

namespace polyshard {
namespace {

AnalysisParams with_sizes(const SweepTemplate& t, std::vector<std::size_t> sizes) {
  std::size_t rows = 0;
  for (auto s : sizes) rows += s;
  AnalysisParams p = balanced_analysis(t, rows + 2 * t.beta);
  p.partition_sizes = std::move(sizes);
  return p;
}

bool zeta_nonzero(const RankReport& r, const SystemMatrices& sys) {
  const std::size_t x = sys.blocks * sys.block_width;
  for (std::size_t i = x; i < r.witness->size(); ++i) {
    if (!(*r.witness)[i].is_zero()) return true;
  }
  return false;
}

TEST(VersionsMatchSet, Examples) {
  EXPECT_EQ(versions_match_set({0, 1, 1}, {0, 1, 1}), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(versions_match_set({0, 0}, {1, 1}).empty());
  EXPECT_EQ(versions_match_set({0, 1}, {0, 0}), std::vector<std::size_t>{0});
  EXPECT_THROW(versions_match_set({0}, {0, 1}), std::invalid_argument);
}

TEST(BuildSystem, SingleVersionIsPlainLcc) {
  const SweepTemplate t{Field(), 3, 2, 0, 0, 1, 7};
  const AnalysisParams p = balanced_analysis(t, 5);
  const auto sys = build_system(p);
  EXPECT_EQ(sys.B.rows(), 0u);
  EXPECT_EQ(sys.C.rows(), 0u);
  EXPECT_EQ(sys.A.rows(), 5u);
  EXPECT_EQ(sys.D.rows(), 5u + 3u);
  EXPECT_EQ(sys.D.cols(), 5u + 3u);
  EXPECT_TRUE(unique_decodability(sys).unique_Z);
}

TEST(BuildSystem, ShapesForOneProducer) {
  const SweepTemplate t{Field(), 3, 2, 1, 1, 2, 7};
  const auto sys = build_system(balanced_analysis(t, 9));
  EXPECT_EQ(sys.blocks, 2u);
  EXPECT_EQ(sys.block_width, 5u);
  EXPECT_EQ(sys.z_cols, 2u);
  EXPECT_EQ(sys.A.cols(), 10u);
  EXPECT_EQ(sys.A.rows(), 7u);
  EXPECT_EQ(sys.B.rows(), 2u);  // (v^b' - 1)(K - b')
  EXPECT_EQ(sys.C.rows(), 0u);  // b'(v^b' - v)
  EXPECT_EQ(sys.D.cols(), 12u);
}

TEST(BuildSystem, CRowCountTwoProducers) {
  const SweepTemplate t{Field(), 3, 2, 0, 2, 2, 7};
  const auto sys = build_system(balanced_analysis(t, 8));
  EXPECT_EQ(sys.C.rows(), 4u);
}

TEST(BuildSystem, StarAndAllPairsSpanTheSameRows) {
  for (std::uint32_t v = 2; v <= 3; ++v)
    for (std::size_t bp = 1; bp <= 2; ++bp) {
      const SweepTemplate t{Field(), 4, 2, 0, bp, v, 3};
      const auto p = balanced_analysis(t, 10);
      const auto star = build_system(p, CStructure::kStar);
      const auto pairs = build_system(p, CStructure::kAllPairs);
      const std::size_t rs = matrix_rank(star.C), rp = matrix_rank(pairs.C);
      EXPECT_EQ(rs, rp);
      EXPECT_EQ(matrix_rank(Matrix::vstack(star.C, pairs.C)), rs);
      EXPECT_EQ(matrix_rank(star.D), matrix_rank(pairs.D));
    }
}

TEST(BuildSystem, RankOfABlockDiagonal) {
  const SweepTemplate t{Field(), 3, 1, 0, 1, 3, 2};
  for (const auto& sizes : std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 3, 1}, {5, 0, 2}}) {
    const auto sys = build_system(with_sizes(t, sizes));
    std::size_t expected = 0;
    for (auto n : sizes) expected += std::min<std::size_t>(n, 3);
    EXPECT_EQ(matrix_rank(sys.A), expected);
  }
}

TEST(AnalysisParams, Validation) {
  const SweepTemplate t{Field(), 3, 2, 0, 1, 2, 7};
  auto p = balanced_analysis(t, 6);
  p.partition_sizes[0] += 1;
  EXPECT_THROW(build_system(p), std::invalid_argument);
  p = balanced_analysis(t, 6);
  p.alphas[1] = p.omegas[0];
  EXPECT_THROW(build_system(p), std::invalid_argument);
  p = balanced_analysis(t, 6);
  std::swap(p.tuples[0], p.tuples[1]);
  EXPECT_THROW(build_system(p), std::invalid_argument);
}

TEST(UniqueDecodability, PlainLccAtThreshold) {
  for (std::size_t K = 2; K <= 5; ++K)
    for (std::size_t d = 1; d <= 3; ++d) {
      const SweepTemplate t{Field(), K, d, 0, 0, 1, K * 10 + d};
      EXPECT_TRUE(unique_decodability(build_system(balanced_analysis(t, d * (K - 1) + 1))).unique_Z);
      EXPECT_FALSE(unique_decodability(build_system(balanced_analysis(t, d * (K - 1)))).unique_Z);
    }
}

TEST(UniqueDecodability, OneBelowBoundHasWitness) {
  const SweepTemplate t{Field(), 3, 2, 1, 1, 2, 11};
  const auto sys = build_system(balanced_analysis(t, 9));
  const auto rep = unique_decodability(sys);
  ASSERT_FALSE(rep.unique_Z);
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_TRUE(zeta_nonzero(rep, sys));
  for (const auto& x : sys.D * *rep.witness) EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(rep.rank_D, rep.rank_D_reduced + sys.z_cols - 1);
}

TEST(UniqueDecodability, FullCellPinsItsBlock) {
  // A cell with d(K-1)+1 rows forces its lambda block to vanish.
  const SweepTemplate t{Field(), 3, 2, 0, 1, 3, 5};
  const auto sys = build_system(with_sizes(t, {5, 2, 1}));
  for (const auto& vec : nullspace_basis(sys.D))
    for (std::size_t c = 0; c < sys.block_width; ++c) EXPECT_TRUE(vec[c].is_zero());
}

TEST(UniqueDecodability, WitnessGivesIndistinguishableInstances) {
  // Two assignments of composed polynomials, one honest and one shifted by the
  // witness, that broadcast the same values but imply different honest outputs.
  const Field f;
  const SweepTemplate t{f, 3, 2, 1, 1, 2, 19};
  const AnalysisParams ap = balanced_analysis(t, 9);
  const auto sys = build_system(ap);
  const auto rep = unique_decodability(sys);
  ASSERT_FALSE(rep.unique_Z);

  EncodingParams ep{f, 3, ap.alphas.size(), 2, ap.omegas, ap.alphas};
  const Power sq(f, 2);
  std::mt19937_64 rng(23);
  const Fp versions[2] = {f.random(rng), f.random(rng)};
  const Fp x1 = f.random(rng), x2 = f.random(rng);

  const std::size_t W = sys.block_width;
  std::vector<Polynomial> honest, shifted;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::vector<Block> view{versions[i], x1, x2};
    honest.push_back(compose_verification(build_coded_poly(view, ep), {}, sq, 3));
    std::vector<Fp> lambda(W, f.zero());
    for (std::size_t c = 0; c < W; ++c) lambda[W - 1 - c] = (*rep.witness)[i * W + c];
    shifted.push_back(honest.back() + Polynomial(f, lambda));
  }

  VersionAssignment assignment({0}, 2);
  BroadcastSet b1, b2;
  std::size_t row = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < ap.partition_sizes[i]; ++j, ++row) {
      assignment.assign(row, {static_cast<std::uint32_t>(i)});
      b1.push_back({row, ap.alphas[row], honest[i](ap.alphas[row])});
      b2.push_back({row, ap.alphas[row], shifted[i](ap.alphas[row])});
    }
  for (std::size_t r = 0; r < b1.size(); ++r) EXPECT_EQ(b1[r].value, b2[r].value);

  // Both instances agree across versions at the honest shard points, yet
  // disagree with each other there.
  for (std::size_t k = 1; k < 3; ++k) {
    EXPECT_EQ(shifted[0](ap.omegas[k]), shifted[1](ap.omegas[k]));
    EXPECT_EQ(honest[0](ap.omegas[k]), honest[1](ap.omegas[k]));
  }
  EXPECT_TRUE(honest[0](ap.omegas[1]) != shifted[0](ap.omegas[1]) ||
              honest[0](ap.omegas[2]) != shifted[0](ap.omegas[2]));

  EXPECT_THROW(known_behavior_decode(b1, assignment, ep, 4, 0), InsufficientEvaluations);
}

TEST(ClosedForms, TheoremBound) {
  EXPECT_EQ(theorem_bound(2, 1, 2, 3, 1), 10);
  EXPECT_EQ(theorem_bound(2, 2, 2, 3, 2), 17);
  for (std::int64_t d = 1; d <= 4; ++d)
    for (std::int64_t K = 2; K <= 8; ++K)
      for (std::int64_t b = 0; b <= 4; ++b)
        for (std::int64_t bp = 0; bp <= 2; ++bp)
          EXPECT_EQ(theorem_bound(1, bp, d, K, b), d * (K - 1) + 1 + 2 * b);
}

TEST(ClosedForms, KnownBehaviorUpperBound) {
  EXPECT_EQ(known_behavior_upper_bound(2, 1, 2, 3, 1), 12);
  EXPECT_EQ(known_behavior_upper_bound(1, 0, 3, 4, 0), 10);
  std::size_t points = 0;
  for (std::int64_t v = 1; v <= 3; ++v)
    for (std::int64_t bp = 0; bp <= 3; ++bp)
      for (std::int64_t d = 1; d <= 3; ++d)
        for (std::int64_t K = std::max<std::int64_t>(bp, 2); K <= 6; ++K)
          for (std::int64_t b = 0; b <= 1; ++b, ++points)
            EXPECT_GE(known_behavior_upper_bound(v, bp, d, K, b), theorem_bound(v, bp, d, K, b));
  EXPECT_GE(points, 200u);
}

TEST(ClosedForms, TheoremBoundMonotone) {
  for (std::int64_t v = 1; v <= 3; ++v)
    for (std::int64_t bp = 0; bp <= 3; ++bp)
      for (std::int64_t d = 1; d <= 3; ++d)
        for (std::int64_t K = std::max<std::int64_t>(bp, 2); K <= 6; ++K)
          for (std::int64_t b = 0; b <= 2; ++b) {
            const auto x = theorem_bound(v, bp, d, K, b);
            EXPECT_LE(x, theorem_bound(v + 1, bp, d, K, b));
            if (bp < K) EXPECT_LE(x, theorem_bound(v, bp + 1, d, K, b));
            EXPECT_LE(x, theorem_bound(v, bp, d + 1, K, b));
            EXPECT_LE(x, theorem_bound(v, bp, d, K + 1, b));
            EXPECT_LE(x, theorem_bound(v, bp, d, K, b + 1));
          }
}

TEST(ClosedForms, FreeVariableCount) {
  EXPECT_EQ(free_variable_count(2, 1, 2, 3), 3);
  EXPECT_EQ(free_variable_count_closed(2, 1, 2, 3), 3);
  EXPECT_EQ(free_variable_count(1, 1, 2, 3), 1);
  EXPECT_EQ(ipow(3, 0), 1);
  EXPECT_EQ(ipow(2, 10), 1024);
  EXPECT_THROW(ipow(2, -1), std::invalid_argument);
}

TEST(EmpiricalThreshold, SingleVersionTransition) {
  for (std::size_t b = 0; b <= 1; ++b) {
    const SweepTemplate t{Field(), 4, 2, b, 0, 1, 5};
    const std::size_t star = 2 * 3 + 1 + 2 * b;
    for (const auto& row : empirical_threshold(t, star - 3, star + 2)) {
      EXPECT_EQ(row.unique_Z, row.N >= star) << "N = " << row.N;
      EXPECT_EQ(row.feasible, row.N < star);
    }
  }
}

TEST(EmpiricalThreshold, OneProducerTwoVersions) {
  const SweepTemplate t{Field(), 3, 2, 1, 1, 2, 5};
  for (const auto& row : empirical_threshold(t, 6, 14)) {
    EXPECT_EQ(row.unique_Z, row.N >= 10) << "N = " << row.N;
    EXPECT_EQ(row.feasible, row.N <= 10);
  }
}

TEST(EmpiricalThreshold, SearchesBeyondRoundRobin) {
  // Round-robin over nine cells is decodable at six rows, but another split
  // of the same rows is not; the transition still lands on the bound.
  const SweepTemplate t{Field(), 3, 1, 0, 2, 3, 5};
  const auto rr = balanced_analysis(t, 6);
  EXPECT_TRUE(unique_decodability(build_system(rr)).unique_Z);
  const auto rows = empirical_threshold(t, 5, 8);
  for (const auto& row : rows) {
    EXPECT_EQ(row.unique_Z, static_cast<std::int64_t>(row.N) >= theorem_bound(3, 2, 1, 3, 0));
  }
  EXPECT_NE(rows[1].partition_sizes, rr.partition_sizes);
}

TEST(EmpiricalThreshold, StrictInfeasible) {
  const SweepTemplate t{Field(), 3, 2, 0, 1, 2, 5};
  EXPECT_NO_THROW(empirical_threshold(t, 8, 9, false));
  EXPECT_THROW(empirical_threshold(t, 8, 9, true), InfeasiblePartition);
  EXPECT_THROW(empirical_threshold(t, 9, 8), std::invalid_argument);
}

TEST(SweepCsv, Format) {
  SweepRow row{9, {4, 3}, 16, 15, false, true};
  std::ostringstream os;
  write_sweep_csv_row(os, row);
  EXPECT_EQ(os.str(), "9,4;3,16,15,false\n");
  EXPECT_STREQ(sweep_csv_header(), "N,partition_sizes,rank_D,rank_D_reduced,unique_Z");
}

}  // namespace
}  // namespace polyshard
