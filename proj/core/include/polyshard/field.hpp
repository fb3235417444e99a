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

#ifndef POLYSHARD_FIELD_HPP
#define POLYSHARD_FIELD_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>

namespace polyshard {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

class Fp;

/// A prime field GF(p). Cheap to copy; carries only the modulus.
///
/// The modulus must be prime and below 2^62 so that products fit in
/// unsigned __int128 and sums never wrap.
class Field {
 public:
  static constexpr std::uint64_t kMersenne31 = (std::uint64_t{1} << 31) - 1;

  explicit Field(std::uint64_t modulus = kMersenne31);

  std::uint64_t modulus() const noexcept { return p_; }

  Fp operator()(std::uint64_t value) const;
  Fp from_signed(std::int64_t value) const;
  Fp zero() const;
  Fp one() const;

  /// Uniform element by rejection sampling on the raw 64-bit stream, so the
  /// draw sequence is identical across standard library implementations.
  Fp random(std::mt19937_64& rng) const;
  Fp random_nonzero(std::mt19937_64& rng) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t p_;
};

/// An element of a prime field. Binary operators require both operands to
/// come from the same field.
class Fp {
 public:
  Fp(std::uint64_t value, std::uint64_t modulus) noexcept : v_(value), p_(modulus) {}

  std::uint64_t value() const noexcept { return v_; }
  std::uint64_t modulus() const noexcept { return p_; }
  Field field() const { return Field(p_); }
  bool is_zero() const noexcept { return v_ == 0; }

  Fp operator-() const noexcept { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp& operator+=(const Fp& o) noexcept;
  Fp& operator-=(const Fp& o) noexcept;
  Fp& operator*=(const Fp& o) noexcept;
  Fp& operator/=(const Fp& o);

  friend Fp operator+(Fp a, const Fp& b) noexcept { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) noexcept { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) noexcept { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  /// Throws std::domain_error on zero.
  Fp inverse() const;
  Fp pow(std::uint64_t e) const noexcept;

  friend bool operator==(const Fp& a, const Fp& b) noexcept {
    return a.v_ == b.v_ && a.p_ == b.p_;
  }
  friend auto operator<=>(const Fp& a, const Fp& b) noexcept { return a.v_ <=> b.v_; }

 private:
  std::uint64_t v_;
  std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

}  // namespace polyshard

#endif  // POLYSHARD_FIELD_HPP
