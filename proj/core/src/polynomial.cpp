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

#include "polyshard/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

#include "polyshard/errors.hpp"

namespace polyshard {

Polynomial::Polynomial(Field field, std::vector<Fp> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.modulus() != field_.modulus()) {
      throw std::invalid_argument("coefficient from a different field");
    }
  }
  trim();
}

Polynomial Polynomial::constant(const Fp& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const Fp& c, std::size_t degree) {
  const Field f = c.field();
  std::vector<Fp> coeffs(degree + 1, f.zero());
  coeffs[degree] = c;
  return Polynomial(f, std::move(coeffs));
}

Polynomial Polynomial::from_roots(Field field, std::span<const Fp> roots) {
  std::vector<Fp> c{field.one()};
  for (const auto& r : roots) {
    c.push_back(field.zero());
    for (std::size_t i = c.size() - 1; i > 0; --i) {
      c[i] = c[i - 1] - r * c[i];
    }
    c[0] = -r * c[0];
  }
  return Polynomial(field, std::move(c));
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Fp Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

Fp Polynomial::operator()(const Fp& point) const {
  Fp acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * point + *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  assert(field_ == o.field_);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  assert(field_ == o.field_);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Fp& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  assert(a.field_ == b.field_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Fp> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial Polynomial::pow(std::size_t e) const {
  Polynomial result = constant(field_.one());
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = *this;
  const std::size_t dd = *divisor.degree();
  if (rem.coeffs_.size() <= dd) return {Polynomial(field_), rem};

  std::vector<Fp> quot(rem.coeffs_.size() - dd, field_.zero());
  const Fp lead_inv = divisor.coeffs_.back().inverse();
  for (std::size_t i = rem.coeffs_.size(); i-- > dd;) {
    const Fp q = rem.coeffs_[i] * lead_inv;
    quot[i - dd] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem.coeffs_[i - dd + j] -= q * divisor.coeffs_[j];
  }
  rem.trim();
  return {Polynomial(field_, std::move(quot)), rem};
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    const Fp& c = p.coefficients()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c;
    if (i > 0) os << "*z";
    if (i > 1) os << "^" << i;
  }
  return os;
}

Polynomial lagrange_interpolate(std::span<const std::pair<Fp, Fp>> points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  const Field f = points.front().first.field();

  std::vector<std::uint64_t> xs;
  xs.reserve(points.size());
  for (const auto& [x, y] : points) xs.push_back(x.value());
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
    throw DuplicateAbscissa("interpolation points share an x coordinate");
  }

  std::vector<Fp> roots;
  roots.reserve(points.size());
  for (const auto& pt : points) roots.push_back(pt.first);
  const Polynomial master = Polynomial::from_roots(f, roots);

  const std::size_t n = points.size();
  std::vector<Fp> acc(n, f.zero());
  for (const auto& [xi, yi] : points) {
    // master / (z - xi) by synthetic division; the remainder is zero.
    std::vector<Fp> basis(n, f.zero());
    Fp carry = f.zero();
    for (std::size_t k = n; k-- > 0;) {
      carry = master.coeff(k + 1) + carry * xi;
      basis[k] = carry;
    }
    Fp denom = f.zero();
    for (std::size_t k = n; k-- > 0;) denom = denom * xi + basis[k];
    const Fp w = yi / denom;
    for (std::size_t k = 0; k < n; ++k) acc[k] += w * basis[k];
  }
  return Polynomial(f, std::move(acc));
}

}  // namespace polyshard
