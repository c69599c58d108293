// Copyright 2026 The Volterra Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VOLTERRA_VERDICT_HPP_
#define VOLTERRA_VERDICT_HPP_

#include <cstddef>
#include <functional>
#include <string_view>

#include "volterra/interval.hpp"
#include "volterra/rational.hpp"

namespace volterra {

enum class Verdict { kFalse, kTrue, kUndecided };

std::string_view verdict_name(Verdict v);

inline Verdict to_verdict(bool b) { return b ? Verdict::kTrue : Verdict::kFalse; }

// Three-valued connectives (Kleene logic).
Verdict verdict_and(Verdict a, Verdict b);
Verdict verdict_or(Verdict a, Verdict b);
Verdict verdict_not(Verdict a);

enum class Cmp { kLt, kLe, kGt, kGe };

// Exact comparisons are always decided.
Verdict compare(const Rational& value, Cmp op, const Rational& threshold);

// True when every point of the interval satisfies the comparison, False when
// none does, Undecided otherwise.
Verdict compare(const Interval& value, Cmp op, const Rational& threshold);
Verdict compare(const Interval& value, Cmp op, const BigFloat& threshold);

struct EscalationPolicy {
  std::size_t start_bits = 128;
  std::size_t factor = 2;
  std::size_t cap_bits = std::size_t{1} << 20;

  // Throws Error(kPrecondition) for start < 2, factor < 2 or cap < start.
  void validate() const;
  // Next precision, or 0 once the cap has been used.
  std::size_t next(std::size_t bits) const;
};

struct Decision {
  Verdict verdict = Verdict::kUndecided;
  std::size_t bits = 0;  // precision of the last evaluation
  int rounds = 0;
};

// Evaluates `enclosure` at start_bits, start_bits * factor, ... up to and
// including the cap, stopping at the first decided comparison.
Decision decide(const std::function<Interval(std::size_t bits)>& enclosure, Cmp op,
                const Rational& threshold, const EscalationPolicy& policy = {});

}  // namespace volterra

#endif  // VOLTERRA_VERDICT_HPP_
