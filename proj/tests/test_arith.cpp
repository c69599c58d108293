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

#include <random>
#include <string>

#include "doctest.h"
#include "volterra/bigfloat.hpp"
#include "volterra/error.hpp"
#include "volterra/interval.hpp"
#include "volterra/json_scalar.hpp"
#include "volterra/rational.hpp"
#include "volterra/simplex.hpp"
#include "volterra/verdict.hpp"

using namespace volterra;

namespace {

Rational q(const char* s) { return parse_rational(s); }

Rational random_rational(std::mt19937_64& rng, bool allow_negative) {
  std::uniform_int_distribution<long> num(allow_negative ? -1000000 : 0, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  return make_rational(num(rng), den(rng));
}

// Independent oracle: the correctly rounded value of x at `prec` bits.
Rational correct_round(const Rational& x, std::size_t prec, Round dir) {
  if (x == 0) return 0;
  Rational ax = abs(x);
  long k = static_cast<long>(mpz_sizeinbase(ax.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(ax.get_den_mpz_t(), 2));
  auto pow2 = [](long e) {
    Rational r = 1;
    if (e >= 0) r = mpz_class(1) << e; else r = Rational(1, mpz_class(1) << -e);
    return r;
  };
  while (pow2(k) > ax) --k;
  while (pow2(k + 1) <= ax) ++k;
  Rational scale = pow2(static_cast<long>(prec) - 1 - k);
  Rational scaled = x * scale;
  mpz_class m;
  if (dir == Round::kDown) {
    mpz_fdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  } else {
    mpz_cdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  }
  return Rational(m) / scale;
}

void check_rounding(const BigFloat& r, const Rational& x, std::size_t prec, Round dir) {
  REQUIRE(r.mantissa_bits() <= prec);
  CHECK(r.to_rational() == correct_round(x, prec, dir));
}

struct Expr {
  Rational exact;
  Interval enclosure;
};

// Random expression over + - * / of depth `depth`, evaluated both ways.
Expr random_expr(std::mt19937_64& rng, int depth, std::size_t prec) {
  if (depth == 0) {
    Rational v = random_rational(rng, true);
    return {v, Interval::point(v, prec)};
  }
  Expr a = random_expr(rng, depth - 1, prec);
  Expr b = random_expr(rng, depth - 1, prec);
  switch (rng() % 4) {
    case 0: return {a.exact + b.exact, a.enclosure + b.enclosure};
    case 1: return {a.exact - b.exact, a.enclosure - b.enclosure};
    case 2: return {a.exact * b.exact, a.enclosure * b.enclosure};
    default: {
      bool zero_inside =
          b.enclosure.lo().sign() <= 0 && b.enclosure.hi().sign() >= 0;
      if (zero_inside) return {a.exact * b.exact, a.enclosure * b.enclosure};
      return {a.exact / b.exact, a.enclosure / b.enclosure};
    }
  }
}

}  // namespace

TEST_CASE("rationals canonicalize and parse") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(2, 4).get_den() == 2);
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK_THROWS_AS(make_rational(1, 0), Error);
  CHECK(q("3/20") == make_rational(3, 20));
  CHECK(q("0.15") == make_rational(3, 20));
  CHECK(q("-2.5e-3") == make_rational(-1, 400));
  CHECK(q("7") == 7);
  CHECK(q(" 1e2 ") == 100);
  CHECK_THROWS_AS(q("abc"), Error);
  CHECK_THROWS_AS(q("1/0"), Error);
  CHECK_THROWS_AS(q(""), Error);
  CHECK(to_string(q("0.15")) == "3/20");
  CHECK(to_string(q("4/2")) == "2");
}

TEST_CASE("bigfloat canonical form and hex round trip") {
  BigFloat a(12, 0);  // 12 = 3 * 2^2
  CHECK(a.mantissa() == 3);
  CHECK(a.exponent() == 2);
  CHECK(a == BigFloat(3, 2));
  CHECK(BigFloat(0, 77).exponent() == 0);
  CHECK(BigFloat(3, -4).to_hex() == "0x1.8p-3");
  CHECK(BigFloat(-1, 0).to_hex() == "-0x1p+0");
  CHECK(BigFloat().to_hex() == "0x0p+0");
  CHECK(BigFloat::from_hex("0x1.8p-3") == BigFloat(3, -4));
  CHECK(BigFloat::from_hex("0x0p+0").is_zero());
  mpz_class huge_exp("-9223372036854775809000", 10);
  BigFloat tiny(5, huge_exp);
  CHECK(BigFloat::from_hex(tiny.to_hex()) == tiny);
  CHECK(tiny.sign() > 0);
  CHECK(cmp(tiny, Rational(0)) > 0);
  CHECK(cmp(tiny, BigFloat(1, -1000)) < 0);
  CHECK_THROWS(BigFloat::from_hex("1.5"));
}

TEST_CASE("bigfloat decimal rendering") {
  CHECK(BigFloat(1, 0).to_decimal(5) == "1.0000e0");
  CHECK(BigFloat(3, -4).to_decimal(3) == "1.87e-1");  // 0.1875 toward zero
  CHECK(BigFloat(-5, 1).to_decimal(2) == "-1.0e1");
  CHECK(BigFloat().to_decimal(4) == "0");
}

TEST_CASE("bigfloat operations round in the requested direction") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 3000; ++iter) {
    std::size_t prec = 2 + rng() % 90;
    Rational x = random_rational(rng, true);
    Rational y = random_rational(rng, true);
    BigFloat bx = BigFloat::from_rational(x, 200, Round::kDown);
    BigFloat by = BigFloat::from_rational(y, 200, Round::kUp);
    Rational ex = bx.to_rational();
    Rational ey = by.to_rational();
    for (Round dir : {Round::kDown, Round::kUp}) {
      check_rounding(BigFloat::from_rational(x, prec, dir), x, prec, dir);
      check_rounding(add(bx, by, prec, dir), ex + ey, prec, dir);
      check_rounding(sub(bx, by, prec, dir), ex - ey, prec, dir);
      check_rounding(mul(bx, by, prec, dir), ex * ey, prec, dir);
      if (!by.is_zero()) check_rounding(div(bx, by, prec, dir), ex / ey, prec, dir);
    }
    CHECK(cmp(bx, x) <= 0);
    CHECK(cmp(by, y) >= 0);
    CHECK((cmp(bx, by) < 0) == (ex < ey));
  }
}

TEST_CASE("bigfloat add with a far smaller operand stays correctly rounded") {
  BigFloat one(1, 0);
  BigFloat eps(1, mpz_class("-100000000000000000000"));
  CHECK(add(one, eps, 64, Round::kDown) == one);
  BigFloat up = add(one, eps, 64, Round::kUp);
  CHECK(up > one);
  CHECK(up.to_rational() == 1 + BigFloat(1, -63).to_rational());
  BigFloat down = sub(one, eps, 64, Round::kDown);
  CHECK(down < one);
  CHECK(down.to_rational() == 1 - BigFloat(1, -64).to_rational());
  CHECK(sub(one, eps, 64, Round::kUp) == one);
}

TEST_CASE("interval containment on random expressions") {
  std::mt19937_64 rng(2026);
  int checked = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t prec = 2 + rng() % 126;
    Expr e = random_expr(rng, 1 + static_cast<int>(rng() % 4), prec);
    REQUIRE(e.enclosure.contains(e.exact));
    ++checked;
  }
  CHECK(checked == 10000);
}

TEST_CASE("raising precision never widens a result") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 2000; ++iter) {
    std::uint64_t seed = rng();
    int depth = 1 + static_cast<int>(rng() % 4);
    std::size_t prec = 8 + rng() % 60;
    std::mt19937_64 r1(seed), r2(seed);
    Expr coarse = random_expr(r1, depth, prec);
    Expr fine = random_expr(r2, depth, prec * 2);
    REQUIRE(coarse.exact == fine.exact);
    REQUIRE(coarse.enclosure.contains(fine.enclosure));
  }
}

TEST_CASE("interval helpers") {
  Interval a = Interval::point(q("-1/3"), 64);
  Interval b = Interval::point(q("1/5"), 64);
  CHECK(abs(a).contains(q("1/3")));
  CHECK(sqr(a).contains(q("1/9")));
  CHECK(pow(a, 3).contains(q("-1/27")));
  CHECK(pow(b, 0).contains(Rational(1)));
  CHECK(max(a, b).contains(q("1/5")));
  CHECK(hull(a, b).contains(Rational(0)));
  CHECK_THROWS_AS(intersect(a, b), std::domain_error);
  CHECK_THROWS_AS(b / (a - a), std::domain_error);
  CHECK(Interval::point(q("3/8"), 10).is_point());
  CHECK_FALSE(Interval::point(q("1/3"), 10).is_point());
}

TEST_CASE("decide: the three verdicts") {
  auto fixed = [](const char* lo, const char* hi) {
    return [lo, hi](std::size_t bits) {
      return Interval(BigFloat::from_rational(q(lo), bits, Round::kDown),
                      BigFloat::from_rational(q(hi), bits, Round::kUp), bits);
    };
  };
  EscalationPolicy policy{16, 2, 256};
  Decision d1 = decide(fixed("0.2", "0.3"), Cmp::kLe, q("0.5"), policy);
  CHECK(d1.verdict == Verdict::kTrue);
  CHECK(d1.rounds == 1);
  Decision d2 = decide(fixed("0.4", "0.6"), Cmp::kLe, q("0.5"), policy);
  CHECK(d2.verdict == Verdict::kUndecided);
  CHECK(d2.bits == 256);
  CHECK(d2.rounds == 5);
  Decision d3 = decide(fixed("0.6", "0.7"), Cmp::kLe, q("0.5"), policy);
  CHECK(d3.verdict == Verdict::kFalse);
  // Shrinking enclosure of 1/3: decided once the width is below the gap.
  auto third = [](std::size_t bits) { return Interval::point(q("1/3"), bits); };
  Decision d4 = decide(third, Cmp::kLt, q("1/3") + BigFloat(1, -100).to_rational(), policy);
  CHECK(d4.verdict == Verdict::kTrue);
  CHECK(d4.bits == 128);
  CHECK(compare(q("1/2"), Cmp::kLe, q("1/2")) == Verdict::kTrue);
  CHECK(compare(q("1/2"), Cmp::kLt, q("1/2")) == Verdict::kFalse);
  CHECK_THROWS_AS(decide(third, Cmp::kLt, q("1"), EscalationPolicy{64, 1, 128}), Error);
}

TEST_CASE("exact comparisons never come out undecided") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    Rational a = random_rational(rng, true), b = random_rational(rng, true);
    for (Cmp op : {Cmp::kLt, Cmp::kLe, Cmp::kGt, Cmp::kGe}) {
      CHECK(compare(a, op, b) != Verdict::kUndecided);
    }
  }
}

TEST_CASE("verdict connectives") {
  CHECK(verdict_and(Verdict::kTrue, Verdict::kUndecided) == Verdict::kUndecided);
  CHECK(verdict_and(Verdict::kFalse, Verdict::kUndecided) == Verdict::kFalse);
  CHECK(verdict_or(Verdict::kTrue, Verdict::kUndecided) == Verdict::kTrue);
  CHECK(verdict_not(Verdict::kUndecided) == Verdict::kUndecided);
}

TEST_CASE("make_simplex") {
  auto third = q("1/3");
  CHECK_NOTHROW(make_simplex({third, third, third}));
  CHECK_THROWS_AS(make_simplex({q("1/2"), q("1/2"), q("1/2")}), Error);
  CHECK_NOTHROW(make_simplex({q("1/2"), q("1/4"), q("1/4")}));
  CHECK_THROWS_AS(make_simplex({q("3/2"), q("-1/2")}), Error);
  CHECK_THROWS_AS(make_simplex(std::vector<Rational>{}), Error);
  try {
    make_simplex({q("1/2"), q("1/2"), q("1/2")});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotOnSimplex);
  }
  IntervalPoint ip = enclose(make_simplex({third, third, third}), 64);
  CHECK_NOTHROW(make_simplex(ip.coords()));
  std::vector<Interval> off = {Interval::point(q("1/2"), 64), Interval::point(q("1/4"), 64),
                               Interval::point(q("1/8"), 64)};
  CHECK_THROWS_AS(make_simplex(off), Error);
}

TEST_CASE("inf_dist") {
  ExactPoint e = make_simplex({1, 0, 0});
  ExactPoint near = make_simplex({q("9/10"), q("1/20"), q("1/20")});
  ExactPoint c = uniform_point(3);
  CHECK(inf_dist(c, c) == 0);
  CHECK(inf_dist(e, near) == q("1/10"));
  CHECK(inf_dist(c, e) == q("2/3"));
  CHECK_THROWS_AS(inf_dist(c, uniform_point(4)), Error);
  Interval d = inf_dist(enclose(e, 64), enclose(near, 64));
  CHECK(d.contains(q("1/10")));
}

TEST_CASE("scalar JSON round trip") {
  Rational r = q("-3/20");
  nlohmann::json j = scalar_to_json(r);
  CHECK(j["num"] == "-3");
  CHECK(j["den"] == "20");
  CHECK(rational_from_json(j) == r);
  Interval v = Interval::point(q("1/3"), 100);
  nlohmann::json k = scalar_to_json(v);
  CHECK(k["prec"] == 100);
  Interval back = interval_from_json(k);
  CHECK(back.lo() == v.lo());
  CHECK(back.hi() == v.hi());
  CHECK_THROWS_AS(rational_from_json(nlohmann::json{{"num", "x"}, {"den", "1"}}), Error);
}
