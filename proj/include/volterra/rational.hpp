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

#ifndef VOLTERRA_RATIONAL_HPP_
#define VOLTERRA_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace volterra {

// Exact rationals are GMP rationals kept in canonical form.
using Rational = mpq_class;

// Throws Error(kPrecondition) on a zero denominator.
Rational make_rational(const mpz_class& num, const mpz_class& den);

// Accepts "p/q", integers and plain decimals such as "0.15" or "-2.5e-3".
// Throws Error(kParse) otherwise.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Scientific notation with `digits` significant digits, truncated toward
// zero: "1.2500e-1". Zero prints as "0".
std::string to_decimal(const Rational& q, int digits);

// Bits of numerator plus bits of denominator.
std::size_t bit_size(const Rational& q);

}  // namespace volterra

#endif  // VOLTERRA_RATIONAL_HPP_
