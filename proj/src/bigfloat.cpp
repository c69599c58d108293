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

#include "volterra/bigfloat.hpp"

#include "volterra/rational.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace volterra {
namespace {

std::size_t bitlen(const mpz_class& m) {
  return mpz_sizeinbase(m.get_mpz_t(), 2);
}

// Exponent differences that reach shift operations are bounded by mantissa
// sizes and the working precision, so they always fit.
unsigned long small_shift(const mpz_class& diff) {
  if (sgn(diff) < 0 || !diff.fits_ulong_p()) {
    throw std::overflow_error("BigFloat: shift amount out of range");
  }
  return diff.get_ui();
}

mpz_class shl(const mpz_class& m, unsigned long s) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), s);
  return r;
}

}  // namespace

BigFloat::BigFloat(mpz_class mant, mpz_class exp)
    : mant_(std::move(mant)), exp_(std::move(exp)) {
  canonicalize();
}

void BigFloat::canonicalize() {
  if (sgn(mant_) == 0) {
    exp_ = 0;
    return;
  }
  mp_bitcnt_t tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
    exp_ += static_cast<unsigned long>(tz);
  }
}

BigFloat BigFloat::from_integer(const mpz_class& value) {
  return BigFloat(value, 0);
}

BigFloat BigFloat::pow2(const mpz_class& exponent) {
  return BigFloat(1, exponent);
}

BigFloat BigFloat::from_rational(const mpq_class& value, std::size_t prec,
                                 Round dir) {
  return div(from_integer(value.get_num()), from_integer(value.get_den()), prec,
             dir);
}

mpz_class BigFloat::top_exponent() const {
  return exp_ + static_cast<unsigned long>(bitlen(mant_)) - 1;
}

std::size_t BigFloat::mantissa_bits() const {
  return is_zero() ? 0 : bitlen(mant_);
}

mpq_class BigFloat::to_rational() const {
  if (sgn(exp_) >= 0) {
    return mpq_class(shl(mant_, small_shift(exp_)));
  }
  mpq_class r(mant_, shl(mpz_class(1), small_shift(-exp_)));
  r.canonicalize();
  return r;
}

std::string BigFloat::to_hex() const {
  if (is_zero()) return "0x0p+0";
  mpz_class m = abs(mant_);
  std::size_t bl = bitlen(m);
  mpz_class e = exp_ + static_cast<unsigned long>(bl) - 1;
  std::string out = sign() < 0 ? "-0x1" : "0x1";
  std::size_t frac_bits = bl - 1;
  if (frac_bits > 0) {
    std::size_t nhex = (frac_bits + 3) / 4;
    mpz_class frac = m - shl(mpz_class(1), frac_bits);
    frac = shl(frac, 4 * nhex - frac_bits);
    std::string digits = frac.get_str(16);
    out += '.';
    out += std::string(nhex - digits.size(), '0');
    out += digits;
  }
  out += 'p';
  if (sgn(e) >= 0) out += '+';
  out += e.get_str();
  return out;
}

BigFloat BigFloat::from_hex(std::string_view text) {
  auto fail = [&]() -> BigFloat {
    throw std::invalid_argument("malformed hex float: " + std::string(text));
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (text.substr(i, 2) != "0x" && text.substr(i, 2) != "0X") return fail();
  i += 2;
  if (i >= text.size() || (text[i] != '0' && text[i] != '1')) return fail();
  bool lead_one = text[i] == '1';
  ++i;
  std::string frac;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isxdigit(static_cast<unsigned char>(text[i]))) {
      frac += text[i++];
    }
  }
  if (i >= text.size() || (text[i] != 'p' && text[i] != 'P')) return fail();
  ++i;
  std::string exp_text(text.substr(i));
  if (!exp_text.empty() && exp_text[0] == '+') exp_text.erase(0, 1);
  mpz_class e;
  if (exp_text.empty() || e.set_str(exp_text, 10) != 0) return fail();
  if (!lead_one) {
    if (!frac.empty() && frac.find_first_not_of('0') != std::string::npos) {
      return fail();
    }
    return BigFloat();
  }
  mpz_class mant = shl(mpz_class(1), 4 * frac.size());
  if (!frac.empty()) {
    mpz_class f;
    if (f.set_str(frac, 16) != 0) return fail();
    mant += f;
  }
  e -= static_cast<unsigned long>(4 * frac.size());
  return BigFloat(negative ? mpz_class(-mant) : mant, e);
}

double BigFloat::to_double() const {
  if (is_zero()) return 0.0;
  long mexp = 0;
  double m = mpz_get_d_2exp(&mexp, mant_.get_mpz_t());
  mpz_class e = exp_ + mexp;
  if (e > 4096) return m > 0 ? INFINITY : -INFINITY;
  if (e < -4096) return 0.0;
  return std::ldexp(m, static_cast<int>(e.get_si()));
}

long double BigFloat::log2_abs() const {
  if (is_zero()) return -INFINITY;
  mpz_class m = abs(mant_);
  std::size_t bl = bitlen(m);
  long double lead;
  long double shift = 0;
  if (bl > 64) {
    mpz_class top;
    mpz_tdiv_q_2exp(top.get_mpz_t(), m.get_mpz_t(), bl - 64);
    lead = static_cast<long double>(top.get_d());
    shift = static_cast<long double>(bl - 64);
  } else {
    lead = static_cast<long double>(m.get_d());
  }
  return std::log2(lead) + shift + static_cast<long double>(exp_.get_d());
}

std::string BigFloat::to_decimal(int digits) const {
  if (is_zero()) return "0";
  digits = std::max(digits, 1);
  std::string sign_str = sign() < 0 ? "-" : "";
  mpz_class top = top_exponent();
  if (abs(top) < (1 << 20) && abs(exp_) < (1 << 21)) {
    return volterra::to_decimal(to_rational(), digits);
  }
  long double l10 = log2_abs() * std::log10(2.0L);
  long double k = std::floor(l10);
  long double lead = std::pow(10.0L, l10 - k);
  char buf[64];
  // Truncate, matching the exact branch.
  int shown = std::min(digits - 1, 15);
  lead = std::floor(lead * std::pow(10.0L, shown)) / std::pow(10.0L, shown);
  std::snprintf(buf, sizeof(buf), "%.*Lf", shown, lead);
  return sign_str + buf + "e" + std::to_string(static_cast<long long>(k));
}

BigFloat round_to(const mpz_class& mant, const mpz_class& exp, std::size_t prec,
                  Round dir) {
  if (prec < 2) throw std::invalid_argument("BigFloat precision below 2 bits");
  if (sgn(mant) == 0) return BigFloat();
  std::size_t bl = bitlen(mant);
  if (bl <= prec) return BigFloat(mant, exp);
  std::size_t s = bl - prec;
  mpz_class r;
  if (dir == Round::kDown) {
    mpz_fdiv_q_2exp(r.get_mpz_t(), mant.get_mpz_t(), s);
  } else {
    mpz_cdiv_q_2exp(r.get_mpz_t(), mant.get_mpz_t(), s);
  }
  return BigFloat(std::move(r), exp + static_cast<unsigned long>(s));
}

BigFloat add(const BigFloat& a, const BigFloat& b, std::size_t prec, Round dir) {
  if (b.is_zero()) return round_to(a.mantissa(), a.exponent(), prec, dir);
  if (a.is_zero()) return round_to(b.mantissa(), b.exponent(), prec, dir);

  const BigFloat* big = &a;
  const BigFloat* small = &b;
  mpz_class tbig = a.top_exponent();
  mpz_class tsmall = b.top_exponent();
  if (tsmall > tbig) {
    std::swap(big, small);
    std::swap(tbig, tsmall);
  }
  // An operand far below the last bit that can influence rounding only acts
  // as a sticky bit: replace it by a single bit at position low - 2, where
  // low is at or below both the last kept bit and big's own last bit. Both
  // sums then lie strictly inside the same gap between representable values.
  mpz_class low = tbig - static_cast<unsigned long>(prec) - 3;
  if (big->exponent() < low) low = big->exponent();
  BigFloat sticky;
  if (tsmall <= low - 2) {
    sticky = BigFloat(small->sign() < 0 ? -1 : 1, low - 2);
    small = &sticky;
  }
  const mpz_class& ea = big->exponent();
  const mpz_class& eb = small->exponent();
  mpz_class emin = ea < eb ? ea : eb;
  mpz_class sum = shl(big->mantissa(), small_shift(ea - emin)) +
                  shl(small->mantissa(), small_shift(eb - emin));
  return round_to(sum, emin, prec, dir);
}

BigFloat sub(const BigFloat& a, const BigFloat& b, std::size_t prec, Round dir) {
  return add(a, -b, prec, dir);
}

BigFloat mul(const BigFloat& a, const BigFloat& b, std::size_t prec, Round dir) {
  return round_to(a.mantissa() * b.mantissa(), a.exponent() + b.exponent(), prec,
                  dir);
}

BigFloat mul_exact(const BigFloat& a, const BigFloat& b) {
  return BigFloat(a.mantissa() * b.mantissa(), a.exponent() + b.exponent());
}

BigFloat pow_exact(const BigFloat& a, unsigned long power) {
  mpz_class m;
  mpz_pow_ui(m.get_mpz_t(), a.mantissa().get_mpz_t(), power);
  return BigFloat(m, a.exponent() * power);
}

BigFloat div(const BigFloat& a, const BigFloat& b, std::size_t prec, Round dir) {
  if (b.is_zero()) throw std::domain_error("BigFloat division by zero");
  if (a.is_zero()) return BigFloat();
  long k = static_cast<long>(prec) + static_cast<long>(bitlen(b.mantissa())) -
           static_cast<long>(bitlen(a.mantissa())) + 2;
  if (k < 0) k = 0;
  mpz_class num = shl(a.mantissa(), static_cast<unsigned long>(k));
  mpz_class q;
  if (dir == Round::kDown) {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
  }
  return round_to(q, a.exponent() - b.exponent() - k, prec, dir);
}

int cmp(const BigFloat& a, const BigFloat& b) {
  int sa = a.sign();
  int sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  int c = cmp(a.top_exponent(), b.top_exponent());
  if (c != 0) return c * sa;
  const mpz_class& ea = a.exponent();
  const mpz_class& eb = b.exponent();
  mpz_class emin = ea < eb ? ea : eb;
  mpz_class ma = shl(a.mantissa(), small_shift(ea - emin));
  mpz_class mb = shl(b.mantissa(), small_shift(eb - emin));
  int r = cmp(ma, mb);
  return r < 0 ? -1 : (r > 0 ? 1 : 0);
}

int cmp(const BigFloat& a, const mpq_class& b) {
  int sa = a.sign();
  int sb = sgn(b);
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  mpz_class p = abs(b.get_num());
  const mpz_class& d = b.get_den();
  long blp = static_cast<long>(bitlen(p));
  long bld = static_cast<long>(bitlen(d));
  // floor(log2 |b|) is blp - bld - 1 or blp - bld.
  mpz_class ta = a.top_exponent();
  if (ta <= blp - bld - 2) return -sa;
  if (ta >= blp - bld + 1) return sa;
  mpz_class lhs = abs(a.mantissa()) * d;
  mpz_class rhs = p;
  const mpz_class& e = a.exponent();
  if (sgn(e) >= 0) {
    lhs = shl(lhs, small_shift(e));
  } else {
    rhs = shl(rhs, small_shift(-e));
  }
  int r = cmp(lhs, rhs);
  r = r < 0 ? -1 : (r > 0 ? 1 : 0);
  return r * sa;
}

const BigFloat& min(const BigFloat& a, const BigFloat& b) {
  return cmp(b, a) < 0 ? b : a;
}

const BigFloat& max(const BigFloat& a, const BigFloat& b) {
  return cmp(b, a) > 0 ? b : a;
}

}  // namespace volterra
