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

#include "volterra/orbit.hpp"

#include <algorithm>

#include "volterra/error.hpp"
#include "volterra/spiral.hpp"

namespace volterra {

namespace {

ScaledVector spiral_step(const ScaledVector& s) {
  const mpz_class &x = s.num[0], &y = s.num[1], &z = s.num[2];
  ScaledVector out;
  out.num = {x * (x + 2 * y), y * (y + 2 * z), z * (z + 2 * x)};
  out.den = s.den * s.den;
  return out;
}

}  // namespace

OrbitTracker::OrbitTracker(const OrbitRef& start, TrackerOptions options)
    : options_(options), base_(start.steps) {
  options_.policy.validate();
  if (start.source.dim() != 3) {
    throw Error(ErrorCode::kDimensionMismatch, "orbit tracker needs a 3-dimensional point");
  }
  scaled_ = ScaledVector::from_point(start.source);
  for (std::uint64_t k = 0; k < start.steps; ++k) step_once();
}

void OrbitTracker::step_once() {
  ++abs_pos_;
  if (exact_) {
    scaled_ = spiral_step(scaled_);
    if (scaled_.den_bits() > options_.exact_bits) {
      // Fixed and periodic rationals keep a small reduced form.
      mpz_class g = scaled_.den;
      for (const mpz_class& n : scaled_.num) g = gcd(g, n);
      if (g > 1) {
        for (mpz_class& n : scaled_.num) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(scaled_.den.get_mpz_t(), scaled_.den.get_mpz_t(), g.get_mpz_t());
      }
    }
    if (scaled_.den_bits() > options_.exact_bits) {
      exact_ = false;
      handoff_pos_ = abs_pos_;
      bits_ = options_.policy.start_bits;
      max_bits_ = std::max(max_bits_, bits_);
      interval_ = enclose(scaled_.to_point(), bits_);
    }
    return;
  }
  interval_ = v_step(interval_);
}

void OrbitTracker::advance(std::uint64_t k) {
  for (std::uint64_t i = 0; i < k; ++i) step_once();
}

IntervalPoint OrbitTracker::enclosure() const {
  if (exact_) return enclose(scaled_.to_point(), options_.policy.start_bits);
  return interval_;
}

bool OrbitTracker::escalate() {
  std::size_t next = options_.policy.next(bits_);
  if (next == 0) return false;
  bits_ = next;
  max_bits_ = std::max(max_bits_, bits_);
  ++escalations_;
  IntervalPoint p = enclose(scaled_.to_point(), bits_);
  std::uint64_t steps = abs_pos_ - handoff_pos_;
  for (std::uint64_t i = 0; i < steps; ++i) p = v_step(p);
  interval_ = p;
  return true;
}

Verdict OrbitTracker::evaluate(const std::function<Verdict(const ExactPoint&)>& exact_pred,
                               const std::function<Verdict(const IntervalPoint&)>& interval_pred) {
  if (exact_) return exact_pred(exact_point());
  for (;;) {
    Verdict v = interval_pred(interval_);
    if (v != Verdict::kUndecided) return v;
    if (!escalate()) return Verdict::kUndecided;
  }
}

}  // namespace volterra
