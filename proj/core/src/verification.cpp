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

#include "polyshard/verification.hpp"

#include <stdexcept>
#include <utility>

namespace polyshard {

ShiftedPower::ShiftedPower(std::size_t degree, Fp factor) : degree_(degree), factor_(factor) {
  if (degree == 0) throw std::invalid_argument("verification degree must be at least 1");
}

Fp ShiftedPower::evaluate(const Fp& proposal, std::span<const Fp> history) const {
  const Fp last = history.empty() ? factor_.field().zero() : history.back();
  return (proposal - factor_ * last).pow(degree_);
}

Polynomial ShiftedPower::compose(const Polynomial& proposal,
                                 std::span<const Polynomial> history) const {
  Polynomial base = proposal;
  if (!history.empty()) base -= history.back() * factor_;
  return base.pow(degree_);
}

std::optional<Fp> ShiftedPower::valid_proposal(std::span<const Fp> history) const {
  const Fp last = history.empty() ? factor_.field().zero() : history.back();
  return factor_ * last;
}

Power::Power(Field field, std::size_t degree) : field_(field), degree_(degree) {
  if (degree == 0) throw std::invalid_argument("verification degree must be at least 1");
}

Fp Power::evaluate(const Fp& proposal, std::span<const Fp>) const {
  return proposal.pow(degree_);
}

Polynomial Power::compose(const Polynomial& proposal, std::span<const Polynomial>) const {
  return proposal.pow(degree_);
}

std::optional<Fp> Power::valid_proposal(std::span<const Fp>) const { return field_.zero(); }

AcceptSet AcceptSet::zero() { return of({0}); }

AcceptSet AcceptSet::everything() {
  AcceptSet s;
  s.all_ = true;
  return s;
}

AcceptSet AcceptSet::of(std::set<std::uint64_t> values) {
  AcceptSet s;
  s.values_ = std::move(values);
  return s;
}

bool AcceptSet::contains(const Fp& h) const { return all_ || values_.count(h.value()) > 0; }

}  // namespace polyshard
