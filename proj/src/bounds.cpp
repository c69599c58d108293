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

#include "volterra/bounds.hpp"

#include <cmath>

#include "volterra/error.hpp"

namespace volterra {

namespace {

void check_small_eps(const Rational& eps) {
  if (sgn(eps) <= 0 || eps > Rational(1, 10)) {
    throw Error(ErrorCode::kPrecondition, "eps must lie in (0, 1/10], got " + to_string(eps));
  }
}

void check_D(const mpz_class& D) {
  if (sgn(D) < 0) throw Error(ErrorCode::kPrecondition, "D must be nonnegative");
}

long double log_abs(const mpz_class& v) {
  long exp = 0;
  double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(static_cast<long double>(std::fabs(m))) +
         static_cast<long double>(exp) * std::log(2.0L);
}

mpz_class ceil_q(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

mpz_class ten_log_ceil(const Rational& eps) {
  if (sgn(eps) <= 0 || eps >= 1) {
    throw Error(ErrorCode::kPrecondition, "eps must lie in (0, 1)");
  }
  long double v = 10.0L * (log_abs(eps.get_den()) - log_abs(eps.get_num()));
  long double c = std::ceil(v);
  if (c < 1e18L) return mpz_class(static_cast<unsigned long>(c));
  // Beyond 64 bits a relative error of 1e-18 is far below one unit anyway.
  mpz_class out;
  mpz_set_d(out.get_mpz_t(), static_cast<double>(c));
  return out + 1;
}

BoundReport skipcorner_eps(const Rational& eps, const mpz_class& D, std::size_t bit_cap) {
  check_small_eps(eps);
  check_D(D);
  BoundReport r;
  r.name = "skipcorner";
  r.eps = eps;
  r.D = D;
  Rational base = eps / 2;
  base.canonicalize();
  // 2^D * log2(2/eps) > bit_cap decides the representation.
  long double l2 = (log_abs(base.get_den()) - log_abs(base.get_num())) / std::log(2.0L);
  bool symbolic = D > 62 || std::ldexp(l2, static_cast<int>(D.get_si())) > bit_cap;
  if (symbolic) {
    r.value = SymbolicPower{base, D};
  } else {
    Rational v;
    unsigned long e = 1UL << D.get_ui();
    mpz_pow_ui(v.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(v.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.value = v;
  }
  return r;
}

BoundReport skipcorner2_eps(const Rational& eps, const mpz_class& D) {
  check_small_eps(eps);
  check_D(D);
  if (D >= mpz_class(1UL << 32)) {
    throw Error(ErrorCode::kTooLarge, "D too large for an exact skipcorner2 value");
  }
  BoundReport r;
  r.name = "skipcorner2";
  r.eps = eps;
  r.D = D;
  Rational v = eps;
  mpz_mul_2exp(v.get_den_mpz_t(), v.get_den_mpz_t(), 2 * D.get_ui());
  v.canonicalize();
  r.value = v;
  return r;
}

BoundReport epsclose_D_bound(const Rational& eps) {
  if (sgn(eps) <= 0 || eps >= 1) {
    throw Error(ErrorCode::kPrecondition, "eps must lie in (0, 1), got " + to_string(eps));
  }
  BoundReport r;
  r.name = "epsclosecompact";
  r.eps = eps;
  Rational inv = 1 / eps;
  Rational c15;
  mpz_pow_ui(c15.get_num_mpz_t(), inv.get_num_mpz_t(), 15);
  mpz_pow_ui(c15.get_den_mpz_t(), inv.get_den_mpz_t(), 15);
  r.C = ceil_q(c15);
  mpz_class l = ten_log_ceil(eps);
  r.n1 = l;
  r.n2 = l + 100;
  r.n3 = r.n2 + l;
  r.D = r.C + r.n3;
  r.value = Rational(r.D);
  Rational limit;
  mpz_set_ui(limit.get_num_mpz_t(), 1);
  mpz_ui_pow_ui(limit.get_den_mpz_t(), 2, 100);
  r.heuristic_range = eps >= limit;
  r.note = "log base e, rounded up";
  return r;
}

nlohmann::ordered_json bound_to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["eps"] = to_string(r.eps);
  j["D"] = r.D.get_str();
  if (sgn(r.C) != 0 || r.name == "epsclosecompact") {
    j["C"] = r.C.get_str();
    j["N1"] = r.n1.get_str();
    j["N2"] = r.n2.get_str();
    j["N3"] = r.n3.get_str();
  }
  if (const auto* s = std::get_if<SymbolicPower>(&r.value)) {
    j["value"] = {{"base", to_string(s->base)}, {"exponent", "2^" + s->exponent_log2.get_str()}};
  } else {
    j["value"] = to_string(std::get<Rational>(r.value));
  }
  j["heuristic_range"] = r.heuristic_range;
  j["lower_bound"] = r.lower_bound;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace volterra
