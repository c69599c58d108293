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

#ifndef VOLTERRA_SIMPLEX_HPP_
#define VOLTERRA_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

#include "volterra/interval.hpp"
#include "volterra/rational.hpp"

namespace volterra {

// A probability vector over n candidates, with Rational or Interval entries.
// Instances are only produced by make_simplex (validated) or by the dynamics
// in this library, which preserve the simplex.
template <typename S>
class SimplexPoint {
 public:
  SimplexPoint() = default;

  std::size_t dim() const { return coords_.size(); }
  const S& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<S>& coords() const { return coords_; }

  // Skips validation. Callers must guarantee the invariants.
  static SimplexPoint unchecked(std::vector<S> coords) {
    SimplexPoint p;
    p.coords_ = std::move(coords);
    return p;
  }

  friend bool operator==(const SimplexPoint& a, const SimplexPoint& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<S> coords_;
};

using ExactPoint = SimplexPoint<Rational>;
using IntervalPoint = SimplexPoint<Interval>;

// Throws Error(kNotOnSimplex) for an empty vector, a negative coordinate or
// a sum other than 1.
ExactPoint make_simplex(std::vector<Rational> coords);
// Interval form: each coordinate must meet [0, 1] and the interval sum must
// contain 1.
IntervalPoint make_simplex(std::vector<Interval> coords);

ExactPoint uniform_point(std::size_t n);
ExactPoint vertex_point(std::size_t n, std::size_t i);

IntervalPoint enclose(const ExactPoint& p, std::size_t prec);

// Sup-norm distance over all coordinates. Throws Error(kDimensionMismatch).
Rational inf_dist(const ExactPoint& a, const ExactPoint& b);
Interval inf_dist(const IntervalPoint& a, const IntervalPoint& b);

Rational coordinate_sum(const ExactPoint& p);

}  // namespace volterra

#endif  // VOLTERRA_SIMPLEX_HPP_
