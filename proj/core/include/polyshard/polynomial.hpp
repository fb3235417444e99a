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

#ifndef POLYSHARD_POLYNOMIAL_HPP
#define POLYSHARD_POLYNOMIAL_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polyshard/field.hpp"

namespace polyshard {

/// Univariate polynomial over a prime field, coefficients in ascending
/// degree. Trailing zeros are never stored, so the zero polynomial has an
/// empty coefficient vector and no degree.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(field) {}
  Polynomial(Field field, std::vector<Fp> coeffs);

  static Polynomial constant(const Fp& c);
  static Polynomial monomial(const Fp& c, std::size_t degree);
  /// Monic polynomial prod (z - r).
  static Polynomial from_roots(Field field, std::span<const Fp> roots);

  const Field& field() const noexcept { return field_; }
  std::optional<std::size_t> degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of z^i; zero beyond the stored range.
  Fp coeff(std::size_t i) const;
  const std::vector<Fp>& coefficients() const noexcept { return coeffs_; }

  /// Horner evaluation.
  Fp operator()(const Fp& point) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Fp& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Fp& s) { return a *= s; }
  friend Polynomial operator*(const Fp& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial pow(std::size_t e) const;

  /// Quotient and remainder; throws std::domain_error on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  Field field_;
  std::vector<Fp> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

inline Fp poly_eval(const Polynomial& poly, const Fp& point) { return poly(point); }

/// The unique polynomial of degree < points.size() through all points.
/// Throws DuplicateAbscissa on repeated x, std::invalid_argument when empty.
Polynomial lagrange_interpolate(std::span<const std::pair<Fp, Fp>> points);

}  // namespace polyshard

#endif  // POLYSHARD_POLYNOMIAL_HPP
