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

#include "volterra/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "volterra/error.hpp"

namespace volterra {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::kPrecondition, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw Error(ErrorCode::kParse, "not a rational: '" + std::string(whole) + "'");
  }
  std::string buf(s);
  if (buf[0] == '+') buf.erase(0, 1);
  return mpz_class(buf, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Error(ErrorCode::kParse, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw Error(ErrorCode::kParse, "bad denominator in '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (sgn(den) == 0) throw Error(ErrorCode::kParse, "zero denominator");
    return make_rational(num, den);
  }

  std::string_view mant = text;
  long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    std::string_view es = text.substr(e + 1);
    mpz_class ev = parse_integer(es, text);
    if (!ev.fits_slong_p() || abs(ev) > 100000) {
      throw Error(ErrorCode::kParse, "exponent out of range in '" + std::string(text) + "'");
    }
    exp10 = ev.get_si();
  }
  bool negative = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    negative = mant[0] == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot);
    std::string_view fp = mant.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty())) {
      throw Error(ErrorCode::kParse, "not a rational: '" + std::string(text) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) {
      throw Error(ErrorCode::kParse, "not a rational: '" + std::string(text) + "'");
    }
    digits = std::string(mant);
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  long shift = exp10 - frac_len;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) return Rational(num * p10);
  return make_rational(num, p10);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  if (sgn(q) == 0) return "0";
  if (digits < 1) digits = 1;
  Rational v = abs(q);
  // Estimate floor(log10 v) from bit lengths, then correct exactly.
  long bits = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 2)) -
              static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 2));
  long k = static_cast<long>(std::floor(static_cast<double>(bits) * 0.30102999566398120));
  mpz_class lo_bound, hi_bound, scaled;
  mpz_ui_pow_ui(lo_bound.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
  hi_bound = lo_bound * 10;
  for (;;) {
    long shift = digits - 1 - k;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational s = shift >= 0 ? Rational(v * p10) : Rational(v / p10);
    mpz_fdiv_q(scaled.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    if (scaled >= hi_bound) {
      ++k;
    } else if (scaled < lo_bound) {
      --k;
    } else {
      break;
    }
  }
  std::string ds = scaled.get_str();
  std::string out = sgn(q) < 0 ? "-" : "";
  out += ds.substr(0, 1);
  if (ds.size() > 1) out += "." + ds.substr(1);
  return out + "e" + std::to_string(k);
}

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace volterra
