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

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "polyshard/errors.hpp"
#include "polyshard/versions.hpp"

namespace polyshard {

void AnalysisParams::validate() const {
  if (K < 1 || d < 1 || v < 1) throw std::invalid_argument("K, d and v must be positive");
  if (beta_prime > K) throw std::invalid_argument("beta' cannot exceed K");
  if (omegas.size() != K) throw std::invalid_argument("expected K shard points");
  const auto expected = enumerate_tuples(v, beta_prime);
  if (tuples != expected) throw std::invalid_argument("tuples must enumerate [v]^beta' in order");
  if (partition_sizes.size() != tuples.size()) {
    throw std::invalid_argument("one partition size per version tuple");
  }
  std::size_t total = 0;
  for (auto n : partition_sizes) total += n;
  if (total != alphas.size()) throw std::invalid_argument("partition sizes must sum to |alphas|");

  std::vector<std::uint64_t> pts;
  for (const auto& w : omegas) pts.push_back(w.value());
  for (const auto& a : alphas) pts.push_back(a.value());
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    throw std::invalid_argument("evaluation points must be pairwise distinct");
  }
}

std::vector<std::size_t> versions_match_set(const VersionTuple& vi, const VersionTuple& vj) {
  if (vi.size() != vj.size()) throw std::invalid_argument("version tuples differ in length");
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < vi.size(); ++r) {
    if (vi[r] == vj[r]) out.push_back(r);
  }
  return out;
}

namespace {

// Rows tying block i to block j at the given shard points:
// Van(points) in block i, -Van(points) in block j.
void append_tie(std::vector<Matrix>& rows, const Matrix& van, std::size_t i, std::size_t j,
                std::size_t width, std::size_t total_cols) {
  Matrix tie(van.field(), van.rows(), total_cols);
  tie.set_block(0, i * width, van);
  tie.set_block(0, j * width, van, -van.field().one());
  rows.push_back(std::move(tie));
}

Matrix stack(Field field, const std::vector<Matrix>& parts, std::size_t cols) {
  Matrix out(field, 0, cols);
  for (const auto& p : parts) out = Matrix::vstack(out, p);
  return out;
}

}  // namespace

SystemMatrices build_system(const AnalysisParams& params, CStructure structure) {
  params.validate();
  const Field f = params.field;
  const std::size_t D = params.degree();
  const std::size_t W = D + 1;
  const std::size_t T = params.tuples.size();
  const std::size_t H = params.honest_count();
  const std::size_t X = T * W;

  const std::vector<Fp> honest(params.omegas.begin() + static_cast<std::ptrdiff_t>(params.beta_prime),
                               params.omegas.end());
  const Matrix van_honest = vandermonde(f, honest, D);

  // A: block-diagonal Vandermonde over each cell's alphas.
  Matrix A(f, params.alphas.size(), X);
  {
    std::size_t row = 0;
    for (std::size_t i = 0; i < T; ++i) {
      const std::span<const Fp> cell(params.alphas.data() + row, params.partition_sizes[i]);
      A.set_block(row, i * W, vandermonde(f, cell, D));
      row += params.partition_sizes[i];
    }
  }

  // B: tuple 0 against every other tuple at the honest shard points.
  std::vector<Matrix> b_parts;
  for (std::size_t i = 1; i < T; ++i) append_tie(b_parts, van_honest, 0, i, W, X);
  Matrix B = stack(f, b_parts, X);

  // C: tuples that agree at producer r must agree at omega_r.
  std::vector<Matrix> c_parts;
  if (structure == CStructure::kAllPairs) {
    for (std::size_t i = 0; i < T; ++i) {
      for (std::size_t j = i + 1; j < T; ++j) {
        const auto match = versions_match_set(params.tuples[i], params.tuples[j]);
        if (match.empty()) continue;
        std::vector<Fp> pts;
        for (auto r : match) pts.push_back(params.omegas[r]);
        append_tie(c_parts, vandermonde(f, pts, D), i, j, W, X);
      }
    }
  } else {
    for (std::size_t r = 0; r < params.beta_prime; ++r) {
      const std::vector<Fp> pt{params.omegas[r]};
      const Matrix van_r = vandermonde(f, pt, D);
      std::map<std::uint32_t, std::size_t> leader;
      for (std::size_t i = 0; i < T; ++i) {
        const auto [it, fresh] = leader.emplace(params.tuples[i][r], i);
        if (!fresh) append_tie(c_parts, van_r, it->second, i, W, X);
      }
    }
  }
  Matrix C = stack(f, c_parts, X);

  // D = [A 0; B 0; C 0; Van_honest 0 ... 0 -I].
  const std::size_t cols = X + H;
  Matrix Dm(f, A.rows() + B.rows() + C.rows() + H, cols);
  std::size_t row = 0;
  Dm.set_block(row, 0, A);
  row += A.rows();
  Dm.set_block(row, 0, B);
  row += B.rows();
  Dm.set_block(row, 0, C);
  row += C.rows();
  Dm.set_block(row, 0, van_honest);
  Dm.set_block(row, X, Matrix::identity(f, H), -f.one());

  return {std::move(A), std::move(B), std::move(C), std::move(Dm), T, W, H};
}

RankReport unique_decodability(const SystemMatrices& sys) {
  RankReport r;
  const std::size_t x_cols = sys.blocks * sys.block_width;
  r.rank_D = matrix_rank(sys.D);
  r.rank_D_reduced = matrix_rank(sys.D.column_range(0, x_cols));
  const bool by_rank = r.rank_D == r.rank_D_reduced + sys.z_cols;

  for (auto& vec : nullspace_basis(sys.D)) {
    const bool z_nonzero = std::any_of(vec.begin() + static_cast<std::ptrdiff_t>(x_cols),
                                       vec.end(), [](const Fp& x) { return !x.is_zero(); });
    if (z_nonzero) {
      r.witness = std::move(vec);
      break;
    }
  }
  r.unique_Z = !r.witness.has_value();
  if (r.unique_Z != by_rank) {
    throw std::logic_error("rank condition and kernel search disagree");
  }
  return r;
}

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t theorem_bound(std::int64_t v, std::int64_t beta_prime, std::int64_t d,
                           std::int64_t K, std::int64_t beta) {
  return ipow(v, beta_prime) * (d - 1) * (K - 1) + v * beta_prime + K - beta_prime + 2 * beta;
}

std::int64_t known_behavior_upper_bound(std::int64_t v, std::int64_t beta_prime, std::int64_t d,
                                        std::int64_t K, std::int64_t beta) {
  return ipow(v, beta_prime) * (d * (K - 1) + 1) + 2 * beta;
}

std::int64_t free_variable_count(std::int64_t v, std::int64_t beta_prime, std::int64_t d,
                                 std::int64_t K) {
  const std::int64_t n_hat = theorem_bound(v, beta_prime, d, K, 0) - 1;
  return ipow(v, beta_prime) * (d * (K - 1) + 1) - n_hat;
}

std::int64_t free_variable_count_closed(std::int64_t v, std::int64_t beta_prime, std::int64_t,
                                        std::int64_t K) {
  const std::int64_t T = ipow(v, beta_prime);
  return (T - 1) * (K - beta_prime) + (T - v) * beta_prime + 1;
}

std::pair<std::vector<Fp>, std::vector<Fp>> draw_points(Field field, std::size_t K,
                                                        std::size_t count,
                                                        std::mt19937_64& rng) {
  std::set<std::uint64_t> used;
  auto draw = [&] {
    while (true) {
      const Fp x = field.random(rng);
      if (used.insert(x.value()).second) return x;
    }
  };
  std::vector<Fp> omegas, alphas;
  for (std::size_t k = 0; k < K; ++k) omegas.push_back(draw());
  for (std::size_t n = 0; n < count; ++n) alphas.push_back(draw());
  return {std::move(omegas), std::move(alphas)};
}

AnalysisParams balanced_analysis(const SweepTemplate& tmpl, std::size_t N) {
  AnalysisParams p{tmpl.field, tmpl.K, tmpl.d, tmpl.beta, tmpl.beta_prime, tmpl.v, {}, {}, {}, {}};
  p.tuples = enumerate_tuples(tmpl.v, tmpl.beta_prime);
  const std::size_t rows = N > 2 * tmpl.beta ? N - 2 * tmpl.beta : 0;
  const std::size_t T = p.tuples.size();
  p.partition_sizes.assign(T, rows / T);
  for (std::size_t i = 0; i < rows % T; ++i) ++p.partition_sizes[i];

  std::mt19937_64 rng(tmpl.seed ^ (N * 0x9E3779B97F4A7C15ULL));
  auto [omegas, alphas] = draw_points(tmpl.field, tmpl.K, rows, rng);
  p.omegas = std::move(omegas);
  p.alphas = std::move(alphas);
  return p;
}

namespace {

// Calls visit(sizes) for every vector of `cells` sizes in [0, cap] summing to
// `total`, in lexicographic order, until visit returns true or the budget
// runs out.
template <typename Visit>
void for_each_composition(std::size_t cells, std::size_t total, std::size_t cap,
                          std::size_t& budget, Visit&& visit) {
  std::vector<std::size_t> sizes(cells, 0);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (stop || budget == 0) return;
    if (i + 1 == cells) {
      if (left > cap) return;
      sizes[i] = left;
      --budget;
      stop = visit(sizes);
      return;
    }
    // Remaining cells must be able to absorb what is left.
    const std::size_t rest = (cells - i - 1) * cap;
    const std::size_t lo = left > rest ? left - rest : 0;
    for (std::size_t s = lo; s <= std::min(cap, left) && !stop; ++s) {
      sizes[i] = s;
      self(self, i + 1, left - s);
    }
  };
  if (cells > 0) rec(rec, 0, total);
}

}  // namespace

std::vector<SweepRow> empirical_threshold(const SweepTemplate& tmpl, std::size_t n_min,
                                          std::size_t n_max, bool strict) {
  if (n_min > n_max) throw std::invalid_argument("empty N range");
  const std::size_t cap = tmpl.d * (tmpl.K - 1);
  std::vector<SweepRow> out;
  for (std::size_t N = n_min; N <= n_max; ++N) {
    AnalysisParams p = balanced_analysis(tmpl, N);
    SweepRow row;
    row.N = N;
    row.feasible = std::all_of(p.partition_sizes.begin(), p.partition_sizes.end(),
                               [cap](std::size_t n) { return n <= cap; });
    if (!row.feasible && strict) {
      throw InfeasiblePartition("N = " + std::to_string(N) +
                                ": balanced partition exceeds the cell cap " + std::to_string(cap));
    }

    auto record = [&row](const AnalysisParams& q, const RankReport& rep) {
      row.partition_sizes = q.partition_sizes;
      row.rank_D = rep.rank_D;
      row.rank_D_reduced = rep.rank_D_reduced;
      row.unique_Z = rep.unique_Z;
    };
    record(p, unique_decodability(build_system(p)));

    if (row.feasible && row.unique_Z) {
      std::size_t budget = tmpl.search_budget;
      for_each_composition(p.tuples.size(), p.alphas.size(), cap, budget,
                           [&](const std::vector<std::size_t>& sizes) {
                             p.partition_sizes = sizes;
                             const RankReport rep = unique_decodability(build_system(p));
                             if (rep.unique_Z) return false;
                             record(p, rep);
                             return true;
                           });
    }
    out.push_back(std::move(row));
  }
  return out;
}

const char* sweep_csv_header() { return "N,partition_sizes,rank_D,rank_D_reduced,unique_Z"; }

void write_sweep_csv_row(std::ostream& os, const SweepRow& row) {
  os << row.N << ',';
  for (std::size_t i = 0; i < row.partition_sizes.size(); ++i) {
    if (i) os << ';';
    os << row.partition_sizes[i];
  }
  os << ',' << row.rank_D << ',' << row.rank_D_reduced << ',';
  // Beyond the cap the construction cannot hide every cell; say so instead
  // of reporting the (trivially true) rank verdict.
  if (!row.feasible) {
    os << "infeasible";
  } else {
    os << (row.unique_Z ? "true" : "false");
  }
  os << '\n';
}

}  // namespace polyshard
