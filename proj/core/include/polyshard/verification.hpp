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

#ifndef POLYSHARD_VERIFICATION_HPP
#define POLYSHARD_VERIFICATION_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "polyshard/field.hpp"
#include "polyshard/polynomial.hpp"

namespace polyshard {

/// A block-verification function f(proposal, history) of total degree d.
///
/// Implementations provide both a pointwise evaluator, used by nodes on
/// their coded data, and a symbolic composer that substitutes polynomials
/// for every argument. The two must agree pointwise.
class VerificationFn {
 public:
  virtual ~VerificationFn() = default;

  virtual std::size_t degree() const = 0;
  virtual std::string name() const = 0;

  virtual Fp evaluate(const Fp& proposal, std::span<const Fp> history) const = 0;
  virtual Polynomial compose(const Polynomial& proposal,
                             std::span<const Polynomial> history) const = 0;

  /// A proposal that f accepts (maps to zero) given the history, if the
  /// function admits constructing one.
  virtual std::optional<Fp> valid_proposal(std::span<const Fp> history) const = 0;
};

/// f(x, y) = (x - a * y_last)^d. Zero iff x = a * y_last, so with the accept
/// set {0} validity means "extends the previous block by the factor a".
class ShiftedPower final : public VerificationFn {
 public:
  ShiftedPower(std::size_t degree, Fp factor);

  std::size_t degree() const override { return degree_; }
  std::string name() const override { return "shifted_power"; }
  Fp evaluate(const Fp& proposal, std::span<const Fp> history) const override;
  Polynomial compose(const Polynomial& proposal,
                     std::span<const Polynomial> history) const override;
  std::optional<Fp> valid_proposal(std::span<const Fp> history) const override;

  const Fp& factor() const noexcept { return factor_; }

 private:
  std::size_t degree_;
  Fp factor_;
};

/// f(x) = x^d, ignoring history.
class Power final : public VerificationFn {
 public:
  Power(Field field, std::size_t degree);

  std::size_t degree() const override { return degree_; }
  std::string name() const override { return "power"; }
  Fp evaluate(const Fp& proposal, std::span<const Fp> history) const override;
  Polynomial compose(const Polynomial& proposal,
                     std::span<const Polynomial> history) const override;
  std::optional<Fp> valid_proposal(std::span<const Fp> history) const override;

 private:
  Field field_;
  std::size_t degree_;
};

/// The accept set W: outputs of f that affirm a proposal.
class AcceptSet {
 public:
  /// W = {0}.
  static AcceptSet zero();
  /// W = F.
  static AcceptSet everything();
  static AcceptSet of(std::set<std::uint64_t> values);

  bool contains(const Fp& h) const;

 private:
  bool all_ = false;
  std::set<std::uint64_t> values_;
};

}  // namespace polyshard

#endif  // POLYSHARD_VERIFICATION_HPP
