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

#include <gtest/gtest.h>

#include <random>

#include "polyshard/errors.hpp"
#include "polyshard/lcc.hpp"
#include "polyshard/verification.hpp"

namespace polyshard {
namespace {

BroadcastSet codeword(const Polynomial& poly, std::span<const Fp> alphas) {
  BroadcastSet b;
  for (std::size_t n = 0; n < alphas.size(); ++n) b.push_back({n, alphas[n], poly(alphas[n])});
  return b;
}

Polynomial random_poly(Field f, std::size_t degree, std::mt19937_64& rng) {
  std::vector<Fp> c;
  for (std::size_t i = 0; i <= degree; ++i) c.push_back(f.random(rng));
  return Polynomial(f, c);
}

TEST(RsDecode, CleanCodeword) {
  const Field f(7);
  const Polynomial z1(f, {f(1), f(1)});
  const std::vector<Fp> alphas{f(1), f(2), f(3), f(4), f(5)};
  const auto out = rs_decode(codeword(z1, alphas), 1, 1);
  ASSERT_TRUE(out.recovered());
  EXPECT_EQ(*out.poly, z1);
  EXPECT_TRUE(out.error_positions.empty());
}

TEST(RsDecode, CorrectsOneError) {
  const Field f(7);
  const Polynomial z1(f, {f(1), f(1)});
  const std::vector<Fp> alphas{f(1), f(2), f(3), f(4), f(5)};
  auto b = codeword(z1, alphas);
  b[2].value = f(0);  // alpha = 3
  const auto out = rs_decode(b, 1, 1);
  ASSERT_TRUE(out.recovered());
  EXPECT_EQ(*out.poly, z1);
  EXPECT_EQ(out.error_positions, std::vector<std::size_t>{2});
}

TEST(RsDecode, SingleErrorIsUniqueExplanation) {
  // Brute force: every line over GF(7) within one error of the data is z + 1.
  const Field f(7);
  const std::vector<Fp> alphas{f(1), f(2), f(3), f(4), f(5)};
  std::vector<Fp> y{f(2), f(3), f(0), f(5), f(6)};
  int fits = 0;
  for (std::uint64_t a = 0; a < 7; ++a)
    for (std::uint64_t c = 0; c < 7; ++c) {
      int bad = 0;
      for (std::size_t i = 0; i < 5; ++i) bad += (f(a) * alphas[i] + f(c)) != y[i];
      if (bad <= 1) {
        ++fits;
        EXPECT_EQ(a, 1u);
        EXPECT_EQ(c, 1u);
      }
    }
  EXPECT_EQ(fits, 1);
}

TEST(RsDecode, InterleavedVersionsFail) {
  const Field f;
  std::mt19937_64 rng(31);
  const auto p = EncodingParams::defaults(f, 3, 12, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial q0 = random_poly(f, 4, rng), q1 = random_poly(f, 4, rng);
    BroadcastSet b;
    for (std::size_t n = 0; n < 12; ++n) {
      const Polynomial& q = n % 2 ? q1 : q0;
      b.push_back({n, p.alphas[n], q(p.alphas[n])});
    }
    EXPECT_FALSE(rs_decode(b, 4, 1).recovered());
  }
}

TEST(RsDecode, SilentEntriesAreDropped) {
  const Field f;
  std::mt19937_64 rng(32);
  const auto p = EncodingParams::defaults(f, 3, 9, 2);
  const Polynomial q = random_poly(f, 4, rng);
  auto b = codeword(q, p.alphas);
  b[0].value.reset();
  b[4].value.reset();
  b[1].value = f(0);
  const auto out = rs_decode(b, 4, 1);
  ASSERT_TRUE(out.recovered());
  EXPECT_EQ(*out.poly, q);
  EXPECT_EQ(out.error_positions, std::vector<std::size_t>{1});
}

TEST(RsDecode, InsufficientEvaluations) {
  const Field f;
  const auto p = EncodingParams::defaults(f, 3, 6, 2);
  const auto b = codeword(Polynomial::constant(f(1)), p.alphas);
  EXPECT_THROW(rs_decode(b, 4, 1), InsufficientEvaluations);
  EXPECT_NO_THROW(rs_decode(b, 4, 0));
}

TEST(RsDecode, RandomErrorsUpToRadius) {
  const Field f;
  std::mt19937_64 rng(33);
  const auto p = EncodingParams::defaults(f, 5, 20, 2);
  const std::size_t D = 8, t = unique_decoding_radius(20, D);
  ASSERT_EQ(t, 5u);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial q = random_poly(f, D, rng);
    auto b = codeword(q, p.alphas);
    std::vector<std::size_t> idx(20);
    for (std::size_t i = 0; i < 20; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t i = 0; i < t; ++i) b[idx[i]].value = *b[idx[i]].value + f.random_nonzero(rng);
    const auto out = rs_decode(b, D, t);
    ASSERT_TRUE(out.recovered());
    EXPECT_EQ(*out.poly, q);
    EXPECT_EQ(out.error_positions.size(), t);
  }
}

TEST(UniqueDecodingRadius, Values) {
  EXPECT_EQ(unique_decoding_radius(20, 8), 5u);
  EXPECT_EQ(unique_decoding_radius(9, 8), 0u);
  EXPECT_EQ(unique_decoding_radius(8, 8), 0u);
  EXPECT_EQ(unique_decoding_radius(12, 4), 3u);
}

TEST(RecoverOutputs, ZeroPolynomial) {
  const Field f;
  const auto p = EncodingParams::defaults(f, 4, 10, 2);
  EXPECT_EQ(recover_outputs(Polynomial(f), p), std::vector<Fp>(4, f.zero()));
}

TEST(RecoverOutputs, MatchesDirectEvaluation) {
  const Field f;
  const auto p = EncodingParams::defaults(f, 3, 10, 2);
  const Power sq(f, 2);
  std::mt19937_64 rng(40);
  const std::vector<Block> view{f.random(rng), f.random(rng), f.random(rng)};
  const Polynomial h = compose_verification(build_coded_poly(view, p), {}, sq, 3);
  const auto out = recover_outputs(h, p);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(out[k], view[k] * view[k]);
  EXPECT_THROW(recover_outputs(Polynomial::monomial(f.one(), 5), p), std::invalid_argument);
}

TEST(AcceptBits, Examples) {
  const Field f;
  const std::vector<Fp> h{f(0), f(5), f(0)};
  EXPECT_EQ(accept_bits(h, AcceptSet::zero()), (std::vector<std::uint8_t>{1, 0, 1}));
  EXPECT_EQ(accept_bits(h, AcceptSet::everything()), (std::vector<std::uint8_t>{1, 1, 1}));
  EXPECT_EQ(accept_bits(h, AcceptSet::of({5})), (std::vector<std::uint8_t>{0, 1, 0}));
}

class KnownBehaviorDecode : public ::testing::Test {
 protected:
  const Field f;
  const EncodingParams p = EncodingParams::defaults(f, 3, 12, 2);
  const Power sq{f, 2};
  std::mt19937_64 rng{50};

  // f(q^(V)) for the view where shard 0 delivered `x0`.
  Polynomial composed(const Fp& x0, const Fp& x1, const Fp& x2) const {
    const std::vector<Block> view{x0, x1, x2};
    return compose_verification(build_coded_poly(view, p), {}, sq, 3);
  }
};

TEST_F(KnownBehaviorDecode, SingleTupleMatchesRsDecode) {
  const Polynomial h = composed(f(3), f(4), f(5));
  auto b = codeword(h, p.alphas);
  b[7].value = f(1);
  VersionAssignment none({}, 1);
  for (std::size_t n = 0; n < 12; ++n) none.assign(n, {});
  const auto kb = known_behavior_decode(b, none, p, 4, 1);
  const auto rs = rs_decode(b, 4, 1);
  ASSERT_TRUE(kb.recovered());
  ASSERT_TRUE(rs.recovered());
  EXPECT_EQ(*kb.poly, *rs.poly);
  EXPECT_EQ(kb.error_positions, rs.error_positions);
}

TEST_F(KnownBehaviorDecode, BalancedSplitWithCorruption) {
  // N = 2(d(K-1)+1) + 2 beta = 12 with beta = 1.
  for (int trial = 0; trial < 20; ++trial) {
    const Fp v0 = f.random(rng), v1 = f.random(rng), x1 = f.random(rng), x2 = f.random(rng);
    const Polynomial h0 = composed(v0, x1, x2), h1 = composed(v1, x1, x2);
    VersionAssignment a({0}, 2);
    BroadcastSet b;
    for (std::size_t n = 0; n < 12; ++n) {
      const std::uint32_t ver = n % 2;
      a.assign(n, {ver});
      b.push_back({n, p.alphas[n], (ver ? h1 : h0)(p.alphas[n])});
    }
    const std::size_t bad = rng() % 12;
    b[bad].value = *b[bad].value + f.one();
    const auto out = known_behavior_decode(b, a, p, 4, 1);
    ASSERT_TRUE(out.recovered());
    const auto z = recover_outputs(*out.poly, p);
    EXPECT_EQ(z[1], x1 * x1);
    EXPECT_EQ(z[2], x2 * x2);
  }
}

TEST_F(KnownBehaviorDecode, AllCellsTooSmall) {
  const Polynomial h = composed(f(1), f(2), f(3));
  VersionAssignment a({0}, 2);
  BroadcastSet b;
  for (std::size_t n = 0; n < 8; ++n) {
    a.assign(n, {static_cast<std::uint32_t>(n % 2)});
    b.push_back({n, p.alphas[n], h(p.alphas[n])});
  }
  EXPECT_THROW(known_behavior_decode(b, a, p, 4, 1), InsufficientEvaluations);
}

}  // namespace
}  // namespace polyshard
