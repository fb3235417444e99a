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

#include <cassert>
#include <ostream>

namespace polyshard {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 3.3e24.
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field::Field(std::uint64_t modulus) : p_(modulus) {
  if (modulus >= kMaxModulus) {
    throw std::invalid_argument("field modulus must be below 2^62");
  }
  if (!is_prime(modulus)) {
    throw std::invalid_argument("field modulus " + std::to_string(modulus) + " is not prime");
  }
}

Fp Field::operator()(std::uint64_t value) const { return Fp(value % p_, p_); }

Fp Field::from_signed(std::int64_t value) const {
  auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return Fp(static_cast<std::uint64_t>(r), p_);
}

Fp Field::zero() const { return Fp(0, p_); }
Fp Field::one() const { return Fp(1 % p_, p_); }

Fp Field::random(std::mt19937_64& rng) const {
  // Largest multiple of p that fits in 64 bits bounds the accepted range.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % p_);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return Fp(x % p_, p_);
}

Fp Field::random_nonzero(std::mt19937_64& rng) const {
  Fp x = random(rng);
  while (x.is_zero()) x = random(rng);
  return x;
}

Fp& Fp::operator+=(const Fp& o) noexcept {
  assert(p_ == o.p_);
  v_ += o.v_;
  if (v_ >= p_) v_ -= p_;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) noexcept {
  assert(p_ == o.p_);
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) noexcept {
  assert(p_ == o.p_);
  v_ = mulmod(v_, o.v_, p_);
  return *this;
}

Fp& Fp::operator/=(const Fp& o) { return *this *= o.inverse(); }

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero field element");
  return Fp(powmod(v_, p_ - 2, p_), p_);
}

Fp Fp::pow(std::uint64_t e) const noexcept { return Fp(powmod(v_, e, p_), p_); }

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

}  // namespace polyshard
