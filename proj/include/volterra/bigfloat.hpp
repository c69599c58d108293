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

#ifndef VOLTERRA_BIGFLOAT_HPP_
#define VOLTERRA_BIGFLOAT_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace volterra {

// Directed rounding modes. kDown rounds toward -infinity, kUp toward
// +infinity; there is no round-to-nearest because every caller needs a
// guaranteed side.
enum class Round { kDown, kUp };

// Binary floating-point number mant * 2^exp with an arbitrary-size integer
// exponent. Values are kept canonical: the mantissa is odd (or the value is
// zero with exponent zero), so structural equality is value equality.
//
// Arithmetic takes a target precision in bits and a rounding direction; the
// result is the exact real result rounded in that direction to at most
// `prec` significant bits.
class BigFloat {
 public:
  BigFloat() = default;
  BigFloat(mpz_class mant, mpz_class exp);

  static BigFloat from_integer(const mpz_class& value);
  static BigFloat from_rational(const mpq_class& value, std::size_t prec,
                                Round dir);
  static BigFloat pow2(const mpz_class& exponent);

  // Parses the format produced by to_hex().
  static BigFloat from_hex(std::string_view text);

  const mpz_class& mantissa() const { return mant_; }
  const mpz_class& exponent() const { return exp_; }

  int sign() const { return sgn(mant_); }
  bool is_zero() const { return sgn(mant_) == 0; }

  // floor(log2 |x|); undefined for zero.
  mpz_class top_exponent() const;
  std::size_t mantissa_bits() const;

  BigFloat operator-() const { return BigFloat(-mant_, exp_); }

  // Exact value as a rational. Only sensible for moderate exponents.
  mpq_class to_rational() const;

  // Hexadecimal scientific notation, e.g. "0x1.8p-3", "-0x1p+0", "0x0p+0".
  // The exponent is printed in decimal and may have any number of digits.
  std::string to_hex() const;

  // Decimal scientific notation with `digits` significant digits, rounded
  // toward zero. Exact for |exponent| below 2^20, approximate beyond.
  std::string to_decimal(int digits) const;

  // Nearest-ish double; underflows to 0 and overflows to +-inf.
  double to_double() const;

  // Approximate log2 |x| (for diagnostics and bracketing only).
  long double log2_abs() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return a.mant_ == b.mant_ && a.exp_ == b.exp_;
  }

 private:
  void canonicalize();

  mpz_class mant_{0};
  mpz_class exp_{0};
};

// Rounds the exact value mant * 2^exp to `prec` bits.
BigFloat round_to(const mpz_class& mant, const mpz_class& exp, std::size_t prec,
                  Round dir);

BigFloat add(const BigFloat& a, const BigFloat& b, std::size_t prec, Round dir);
BigFloat sub(const BigFloat& a, const BigFloat& b, std::size_t prec, Round dir);
BigFloat mul(const BigFloat& a, const BigFloat& b, std::size_t prec, Round dir);
// Throws std::domain_error on division by zero.
BigFloat div(const BigFloat& a, const BigFloat& b, std::size_t prec, Round dir);

// Exact product and power (no rounding). Used where the size is known to be
// bounded by the caller.
BigFloat mul_exact(const BigFloat& a, const BigFloat& b);
BigFloat pow_exact(const BigFloat& a, unsigned long power);

// Three-way exact comparisons: negative, zero or positive.
int cmp(const BigFloat& a, const BigFloat& b);
int cmp(const BigFloat& a, const mpq_class& b);

inline bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }

const BigFloat& min(const BigFloat& a, const BigFloat& b);
const BigFloat& max(const BigFloat& a, const BigFloat& b);

}  // namespace volterra

#endif  // VOLTERRA_BIGFLOAT_HPP_
