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

#ifndef VOLTERRA_BOUNDS_HPP_
#define VOLTERRA_BOUNDS_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <variant>

#include <json.hpp>

#include "volterra/rational.hpp"

namespace volterra {

// base^(2^exponent_log2). Used when the exact rational is too large to
// write down; the exponent itself may be a big integer.
struct SymbolicPower {
  Rational base;
  mpz_class exponent_log2;
};

// Explicit constants of the orbit bounds.
// Fields that a given bound does not use stay zero.
struct BoundReport {
  std::string name;
  Rational eps;
  mpz_class D;
  mpz_class C;
  mpz_class n1;
  mpz_class n2;
  mpz_class n3;
  std::variant<Rational, SymbolicPower> value;
  // eps outside the range the proof assumes.
  bool heuristic_range = false;
  // D is only known from below (see full_parameter_chain).
  bool lower_bound = false;
  std::string note;

  bool symbolic() const { return std::holds_alternative<SymbolicPower>(value); }
};

inline constexpr std::size_t kDefaultBoundBitCap = std::size_t{1} << 16;

// (eps/2)^(2^D). Exact when 2^D * log2(2/eps) fits in bit_cap bits,
// symbolic otherwise. Requires 0 < eps <= 1/10 and D >= 0.
BoundReport skipcorner_eps(const Rational& eps, const mpz_class& D,
                           std::size_t bit_cap = kDefaultBoundBitCap);

// eps / 2^(2D), always exact. Requires 0 < eps <= 1/10 and 0 <= D < 2^32.
BoundReport skipcorner2_eps(const Rational& eps, const mpz_class& D);

// D = ceil(eps^-15) + 2 ceil(10 ln(1/eps)) + 100 with the intermediate
// constants. Accepts 0 < eps < 1; eps >= 2^-100 is flagged heuristic.
BoundReport epsclose_D_bound(const Rational& eps);

// ceil(10 ln(1/eps)) for 0 < eps < 1, computed from the binary exponents
// of numerator and denominator so huge denominators are fine.
mpz_class ten_log_ceil(const Rational& eps);

nlohmann::ordered_json bound_to_json(const BoundReport& r);

}  // namespace volterra

#endif  // VOLTERRA_BOUNDS_HPP_
