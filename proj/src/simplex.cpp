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

#include "volterra/simplex.hpp"

#include "volterra/error.hpp"

namespace volterra {

ExactPoint make_simplex(std::vector<Rational> coords) {
  if (coords.empty()) throw Error(ErrorCode::kNotOnSimplex, "empty coordinate vector");
  Rational sum = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i].canonicalize();
    if (sgn(coords[i]) < 0) {
      throw Error(ErrorCode::kNotOnSimplex,
                  "coordinate " + std::to_string(i + 1) + " is negative");
    }
    sum += coords[i];
  }
  if (sum != 1) {
    throw Error(ErrorCode::kNotOnSimplex, "coordinates sum to " + to_string(sum));
  }
  return ExactPoint::unchecked(std::move(coords));
}

IntervalPoint make_simplex(std::vector<Interval> coords) {
  if (coords.empty()) throw Error(ErrorCode::kNotOnSimplex, "empty coordinate vector");
  Interval sum = Interval::point(0, coords[0].prec());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Interval& c = coords[i];
    if (c.hi().sign() < 0 || cmp(c.lo(), Rational(1)) > 0) {
      throw Error(ErrorCode::kNotOnSimplex,
                  "coordinate " + std::to_string(i + 1) + " misses [0, 1]");
    }
    sum = sum + c;
  }
  if (!sum.contains(Rational(1))) {
    throw Error(ErrorCode::kNotOnSimplex, "interval sum excludes 1");
  }
  return IntervalPoint::unchecked(std::move(coords));
}

ExactPoint uniform_point(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kNotOnSimplex, "empty coordinate vector");
  return ExactPoint::unchecked(
      std::vector<Rational>(n, make_rational(1, static_cast<unsigned long>(n))));
}

ExactPoint vertex_point(std::size_t n, std::size_t i) {
  if (i >= n) throw Error(ErrorCode::kIndexOutOfRange, "vertex index");
  std::vector<Rational> c(n, Rational(0));
  c[i] = 1;
  return ExactPoint::unchecked(std::move(c));
}

IntervalPoint enclose(const ExactPoint& p, std::size_t prec) {
  std::vector<Interval> c;
  c.reserve(p.dim());
  for (const Rational& q : p.coords()) c.push_back(Interval::point(q, prec));
  return IntervalPoint::unchecked(std::move(c));
}

Rational inf_dist(const ExactPoint& a, const ExactPoint& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "inf_dist");
  Rational best = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Rational d = abs(Rational(a[i] - b[i]));
    if (d > best) best = d;
  }
  return best;
}

Interval inf_dist(const IntervalPoint& a, const IntervalPoint& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "inf_dist");
  Interval best = abs(a[0] - b[0]);
  for (std::size_t i = 1; i < a.dim(); ++i) best = max(best, abs(a[i] - b[i]));
  return best;
}

Rational coordinate_sum(const ExactPoint& p) {
  Rational s = 0;
  for (const Rational& q : p.coords()) s += q;
  return s;
}

}  // namespace volterra
