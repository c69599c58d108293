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

#ifndef VOLTERRA_ORBIT_HPP_
#define VOLTERRA_ORBIT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>

#include "volterra/qso.hpp"
#include "volterra/simplex.hpp"
#include "volterra/verdict.hpp"

namespace volterra {

// The exact point V^steps(source). Far along an orbit the rational itself
// has astronomically many digits, so points are kept in this form and only
// materialized when small.
struct OrbitRef {
  ExactPoint source;
  std::uint64_t steps = 0;

  OrbitRef advanced(std::uint64_t k) const { return {source, steps + k}; }
};

struct TrackerOptions {
  EscalationPolicy policy;
  // Exact iteration continues while the shared denominator has at most this
  // many bits; after that the orbit is followed with intervals.
  std::size_t exact_bits = std::size_t{1} << 16;
};

// Follows a spiral orbit step by step. Early steps are exact; once the
// denominators grow past options.exact_bits the tracker switches to interval
// iteration from that exact hand-off point. When a predicate comes out
// undecided the interval phase is recomputed from the hand-off point at the
// next precision of the policy.
class OrbitTracker {
 public:
  explicit OrbitTracker(const OrbitRef& start, TrackerOptions options = {});

  // Steps taken since the referenced start point.
  std::uint64_t position() const { return abs_pos_ - base_; }
  void advance(std::uint64_t k = 1);

  bool exact() const { return exact_; }
  // Valid only while exact().
  ExactPoint exact_point() const { return scaled_.to_point(); }
  IntervalPoint enclosure() const;

  std::size_t bits() const { return exact_ ? 0 : bits_; }
  std::size_t max_bits() const { return max_bits_; }
  std::uint64_t escalations() const { return escalations_; }

  // Evaluates a predicate on the current point: exactly while in the exact
  // phase, otherwise on the enclosure with escalation. Returns kUndecided
  // only once the precision cap has been tried.
  Verdict evaluate(const std::function<Verdict(const ExactPoint&)>& exact_pred,
                   const std::function<Verdict(const IntervalPoint&)>& interval_pred);

 private:
  void step_once();
  bool escalate();

  TrackerOptions options_;
  std::uint64_t base_ = 0;     // steps from source to the start point
  std::uint64_t abs_pos_ = 0;  // steps from source to the current point
  bool exact_ = true;
  ScaledVector scaled_;  // current point while exact, hand-off point after
  std::uint64_t handoff_pos_ = 0;
  IntervalPoint interval_;
  std::size_t bits_ = 0;
  std::size_t max_bits_ = 0;
  std::uint64_t escalations_ = 0;
};

}  // namespace volterra

#endif  // VOLTERRA_ORBIT_HPP_
