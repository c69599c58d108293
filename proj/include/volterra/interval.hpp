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

#ifndef VOLTERRA_INTERVAL_HPP_
#define VOLTERRA_INTERVAL_HPP_

#include <gmpxx.h>

#include <cstddef>

#include "volterra/bigfloat.hpp"

namespace volterra {

// Closed interval [lo, hi] of big-floats carrying a working precision.
// Every operation rounds lo down and hi up, so the exact result of the
// operation applied to any reals in the operands is contained in the output.
// Binary operations work at the larger of the two operand precisions.
class Interval {
 public:
  Interval() : prec_(128) {}
  // Throws std::invalid_argument if lo > hi.
  Interval(BigFloat lo, BigFloat hi, std::size_t prec);

  // Tightest enclosure of q at `prec` bits (degenerate when q is dyadic and
  // short enough).
  static Interval point(const mpq_class& q, std::size_t prec);
  static Interval exact(const BigFloat& v, std::size_t prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  std::size_t prec() const { return prec_; }

  bool contains(const mpq_class& q) const;
  bool contains(const Interval& other) const;
  bool is_point() const { return lo_ == hi_; }

  // hi - lo rounded up.
  BigFloat width() const;

  Interval operator-() const { return Interval(-hi_, -lo_, prec_); }

 private:
  BigFloat lo_;
  BigFloat hi_;
  std::size_t prec_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Throws std::domain_error when b contains zero.
Interval operator/(const Interval& a, const Interval& b);

Interval sqr(const Interval& a);
Interval pow(const Interval& a, unsigned long n);
Interval abs(const Interval& a);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

// Intersection; throws std::domain_error if the intervals are disjoint
// (which means an enclosure invariant was broken upstream).
Interval intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

// Same bounds, new working precision for subsequent operations.
Interval with_prec(const Interval& a, std::size_t prec);

}  // namespace volterra

#endif  // VOLTERRA_INTERVAL_HPP_
