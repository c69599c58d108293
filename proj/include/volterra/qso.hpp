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

#ifndef VOLTERRA_QSO_HPP_
#define VOLTERRA_QSO_HPP_

#include <cstddef>
#include <ostream>
#include <vector>

#include "volterra/simplex.hpp"
#include "volterra/tournament.hpp"

namespace volterra {

// x_i -> x_i (1 - sum_{j in A_i} x_j + sum_{j in B_i} x_j), where A_i are the
// candidates beating i and B_i those beaten by i.
class VolterraOperator {
 public:
  VolterraOperator() = default;
  VolterraOperator(std::vector<std::vector<std::size_t>> beaters,
                   std::vector<std::vector<std::size_t>> beaten);

  std::size_t n() const { return beaters_.size(); }
  const std::vector<std::size_t>& beaters(std::size_t i) const { return beaters_[i]; }
  const std::vector<std::size_t>& beaten(std::size_t i) const { return beaten_[i]; }

 private:
  std::vector<std::vector<std::size_t>> beaters_;
  std::vector<std::vector<std::size_t>> beaten_;
};

VolterraOperator operator_of(const Tournament& t);

// Rational vector with a shared denominator: coords[i] = num[i] / den.
// Iterating in this form avoids a gcd per step; on the simplex the
// numerators sum to den and one step squares den.
struct ScaledVector {
  std::vector<mpz_class> num;
  mpz_class den;

  static ScaledVector from_point(const ExactPoint& p);
  ExactPoint to_point() const;
  std::size_t den_bits() const { return mpz_sizeinbase(den.get_mpz_t(), 2); }
};

inline constexpr std::size_t kDefaultExactStepCap = 24;

// Throws Error(kDimensionMismatch).
ExactPoint apply(const VolterraOperator& v, const ExactPoint& x);
IntervalPoint apply(const VolterraOperator& v, const IntervalPoint& x);
ScaledVector apply(const VolterraOperator& v, const ScaledVector& x);

// t-fold application. The exact form throws Error(kExactBlowup) when
// t > exact_cap.
ExactPoint iterate(const VolterraOperator& v, const ExactPoint& x0, std::size_t t,
                   std::size_t exact_cap = kDefaultExactStepCap);
IntervalPoint iterate(const VolterraOperator& v, const IntervalPoint& x0, std::size_t t);

// Label distribution at the root of a height-d random perfect tree:
// V_T^d(uniform).
ExactPoint root_distribution(const Tournament& t, std::size_t d,
                             std::size_t exact_cap = kDefaultExactStepCap);

// (sum over A, sum over B, sum over C). Throws Error(kBadPartition).
ExactPoint aggregate(const ExactPoint& x, const TripartitePartition& p);
IntervalPoint aggregate(const IntervalPoint& x, const TripartitePartition& p);
// Aggregated numerators over the shared denominator.
ScaledVector aggregate(const ScaledVector& x, const TripartitePartition& p);

// CSV with columns step, x_1..x_n and, for n = 3, phi. Values are decimal
// strings with `digits` significant digits, truncated toward zero; interval
// entries print their lower endpoint.
void write_trajectory_csv(std::ostream& out, const std::vector<ExactPoint>& traj, int digits);
void write_trajectory_csv(std::ostream& out, const std::vector<IntervalPoint>& traj,
                          int digits);

}  // namespace volterra

#endif  // VOLTERRA_QSO_HPP_
