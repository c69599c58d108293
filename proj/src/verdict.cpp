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

#include "volterra/verdict.hpp"

#include "volterra/error.hpp"

namespace volterra {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kFalse: return "false";
    case Verdict::kTrue: return "true";
    case Verdict::kUndecided: return "undecided";
  }
  return "undecided";
}

Verdict verdict_and(Verdict a, Verdict b) {
  if (a == Verdict::kFalse || b == Verdict::kFalse) return Verdict::kFalse;
  if (a == Verdict::kTrue && b == Verdict::kTrue) return Verdict::kTrue;
  return Verdict::kUndecided;
}

Verdict verdict_or(Verdict a, Verdict b) {
  if (a == Verdict::kTrue || b == Verdict::kTrue) return Verdict::kTrue;
  if (a == Verdict::kFalse && b == Verdict::kFalse) return Verdict::kFalse;
  return Verdict::kUndecided;
}

Verdict verdict_not(Verdict a) {
  if (a == Verdict::kTrue) return Verdict::kFalse;
  if (a == Verdict::kFalse) return Verdict::kTrue;
  return Verdict::kUndecided;
}

namespace {

bool holds(int c, Cmp op) {
  switch (op) {
    case Cmp::kLt: return c < 0;
    case Cmp::kLe: return c <= 0;
    case Cmp::kGt: return c > 0;
    case Cmp::kGe: return c >= 0;
  }
  return false;
}

// c_lo = cmp(lo, t), c_hi = cmp(hi, t).
Verdict from_ends(int c_lo, int c_hi, Cmp op) {
  bool at_lo = holds(c_lo, op);
  bool at_hi = holds(c_hi, op);
  // Each comparison is monotone in the value, so agreement at both ends
  // settles the whole interval.
  if (at_lo && at_hi) return Verdict::kTrue;
  if (!at_lo && !at_hi) return Verdict::kFalse;
  return Verdict::kUndecided;
}

}  // namespace

Verdict compare(const Rational& value, Cmp op, const Rational& threshold) {
  return to_verdict(holds(cmp(value, threshold), op));
}

Verdict compare(const Interval& value, Cmp op, const Rational& threshold) {
  return from_ends(cmp(value.lo(), threshold), cmp(value.hi(), threshold), op);
}

Verdict compare(const Interval& value, Cmp op, const BigFloat& threshold) {
  return from_ends(cmp(value.lo(), threshold), cmp(value.hi(), threshold), op);
}

void EscalationPolicy::validate() const {
  if (start_bits < 2 || factor < 2 || cap_bits < start_bits) {
    throw Error(ErrorCode::kPrecondition, "invalid escalation policy");
  }
}

std::size_t EscalationPolicy::next(std::size_t bits) const {
  if (bits >= cap_bits) return 0;
  std::size_t n = bits * factor;
  return n > cap_bits ? cap_bits : n;
}

Decision decide(const std::function<Interval(std::size_t bits)>& enclosure, Cmp op,
                const Rational& threshold, const EscalationPolicy& policy) {
  policy.validate();
  Decision d;
  for (std::size_t bits = policy.start_bits; bits != 0; bits = policy.next(bits)) {
    d.bits = bits;
    ++d.rounds;
    d.verdict = compare(enclosure(bits), op, threshold);
    if (d.verdict != Verdict::kUndecided) break;
  }
  return d;
}

}  // namespace volterra
