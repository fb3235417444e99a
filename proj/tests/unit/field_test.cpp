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

#include "polyshard/field.hpp"

#include <gtest/gtest.h>

#include <random>

namespace polyshard {
namespace {

TEST(IsPrime, SmallValues) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(9));
  EXPECT_TRUE(is_prime(97));
}

TEST(IsPrime, LargeValues) {
  EXPECT_TRUE(is_prime(Field::kMersenne31));
  EXPECT_TRUE(is_prime((std::uint64_t{1} << 61) - 1));
  // Strong pseudoprime to bases 2, 3, 5 and 7.
  EXPECT_FALSE(is_prime(3215031751ULL));
  EXPECT_FALSE(is_prime(std::uint64_t{65537} * 65537));
}

TEST(Field, RejectsBadModulus) {
  EXPECT_THROW(Field(15), std::invalid_argument);
  EXPECT_THROW(Field(1), std::invalid_argument);
  EXPECT_THROW(Field(std::uint64_t{1} << 62), std::invalid_argument);
  EXPECT_NO_THROW(Field(7));
}

TEST(Field, ReducesAndNegates) {
  const Field f(7);
  EXPECT_EQ(f(9).value(), 2u);
  EXPECT_EQ(f.from_signed(-1).value(), 6u);
  EXPECT_EQ(f.from_signed(-14).value(), 0u);
  EXPECT_EQ((-f(3)).value(), 4u);
  EXPECT_EQ((-f(0)).value(), 0u);
}

TEST(Fp, Arithmetic) {
  const Field f(7);
  EXPECT_EQ(f(5) + f(4), f(2));
  EXPECT_EQ(f(2) - f(5), f(4));
  EXPECT_EQ(f(3) * f(5), f(1));
  EXPECT_EQ(f(1) / f(2), f(4));
  EXPECT_EQ(f(3).pow(6), f.one());
  EXPECT_EQ(f(3).pow(0), f.one());
  EXPECT_THROW(f.zero().inverse(), std::domain_error);
}

TEST(Fp, InverseRoundTripLargeField) {
  const Field f;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Fp x = f.random_nonzero(rng);
    EXPECT_EQ(x * x.inverse(), f.one());
  }
}

TEST(Fp, FermatOnNearMaxModulus) {
  // Largest prime below 2^62 exercises the 128-bit product path.
  std::uint64_t p = (std::uint64_t{1} << 62) - 1;
  while (!is_prime(p)) p -= 2;
  const Field f(p);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Fp x = f.random_nonzero(rng);
    EXPECT_EQ(x.pow(p - 1), f.one());
  }
}

TEST(Field, RandomIsDeterministicInSeed) {
  const Field f;
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(f.random(a), f.random(b));
}

}  // namespace
}  // namespace polyshard
