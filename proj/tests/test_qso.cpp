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

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "volterra/error.hpp"
#include "volterra/qso.hpp"
#include "volterra/votetree.hpp"

using namespace volterra;

namespace {

Rational q(const char* s) { return parse_rational(s); }

ExactPoint pt(std::initializer_list<const char*> cs) {
  std::vector<Rational> v;
  for (const char* c : cs) v.push_back(q(c));
  return make_simplex(v);
}

Tournament prose_cycle() { return Tournament::build(3, {{1, 0}, {2, 1}, {0, 2}}); }

// Literal three-coordinate map (x(1+y-z), y(1+z-x), z(1+x-y)).
std::vector<Rational> spiral_oracle(const std::vector<Rational>& p) {
  const Rational &x = p[0], &y = p[1], &z = p[2];
  return {x * (1 + y - z), y * (1 + z - x), z * (1 + x - y)};
}

Tournament random_tournament(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) es.push_back(rng() & 1 ? Edge{i, j} : Edge{j, i});
  }
  return Tournament::build(n, es);
}

ExactPoint random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<mpz_class> w(n);
  mpz_class total = 0;
  for (auto& x : w) {
    x = static_cast<unsigned long>(rng() % 1000);
    total += x;
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  std::vector<Rational> c;
  for (auto& x : w) c.push_back(make_rational(x, total));
  return make_simplex(c);
}

}  // namespace

TEST_CASE("operator_of") {
  VolterraOperator v = operator_of(prose_cycle());
  CHECK(v.beaters(0) == std::vector<std::size_t>{1});
  CHECK(v.beaten(0) == std::vector<std::size_t>{2});
  CHECK(v.beaters(1) == std::vector<std::size_t>{2});
  CHECK(v.beaten(1) == std::vector<std::size_t>{0});
  VolterraOperator tr = operator_of(Tournament::transitive(3));
  CHECK(tr.beaters(0).empty());
  CHECK(tr.beaten(0) == std::vector<std::size_t>{1, 2});
  VolterraOperator one = operator_of(Tournament::build(1, {}));
  CHECK(one.beaters(0).empty());
  CHECK(one.beaten(0).empty());
}

TEST_CASE("operator sets are consistent on random tournaments") {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t n = 1 + rng() % 9;
    VolterraOperator v = operator_of(random_tournament(rng, n));
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(v.beaters(i).size() + v.beaten(i).size() == n - 1);
      for (std::size_t j : v.beaten(i)) {
        REQUIRE(std::find(v.beaters(j).begin(), v.beaters(j).end(), i) != v.beaters(j).end());
      }
    }
  }
}

TEST_CASE("apply examples") {
  VolterraOperator cyc = operator_of(prose_cycle());
  CHECK(apply(cyc, uniform_point(3)) == uniform_point(3));
  for (std::size_t i = 0; i < 3; ++i) CHECK(apply(cyc, vertex_point(3, i)) == vertex_point(3, i));
  ExactPoint x = pt({"1/2", "1/4", "1/4"});
  // x1(1 - x2 + x3), x2(1 - x3 + x1), x3(1 - x1 + x2)
  Rational x1 = x[0] * (1 - x[1] + x[2]);
  Rational x2 = x[1] * (1 - x[2] + x[0]);
  Rational x3 = x[2] * (1 - x[0] + x[1]);
  ExactPoint y = apply(cyc, x);
  CHECK(y == pt({"1/2", "5/16", "3/16"}));
  CHECK(y[0] == x1);
  CHECK(y[1] == x2);
  CHECK(y[2] == x3);
  CHECK_THROWS_AS(apply(cyc, uniform_point(4)), Error);
}

TEST_CASE("iterate") {
  VolterraOperator cyc = operator_of(prose_cycle());
  ExactPoint x = pt({"1/2", "1/4", "1/4"});
  CHECK(iterate(cyc, x, 0) == x);
  CHECK(iterate(cyc, x, 2) == apply(cyc, apply(cyc, x)));
  // Second hand step from (1/2, 5/16, 3/16).
  Rational a = q("1/2"), b = q("5/16"), c = q("3/16");
  ExactPoint two = make_simplex({a * (1 - b + c), b * (1 - c + a), c * (1 - a + b)});
  CHECK(iterate(cyc, x, 2) == two);
  CHECK(two == pt({"7/16", "105/256", "39/256"}));
  try {
    iterate(cyc, x, 25);
    FAIL("expected ExactBlowup");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kExactBlowup);
  }
  CHECK_THROWS_AS(iterate(cyc, x, 3, 2), Error);
  CHECK_NOTHROW(iterate(cyc, x, 3, 3));
}

TEST_CASE("root_distribution") {
  std::mt19937_64 rng(6);
  Tournament t = random_tournament(rng, 5);
  CHECK(root_distribution(t, 0) == uniform_point(5));
  for (std::size_t d = 0; d <= 10; ++d) CHECK(root_distribution(prose_cycle(), d) == uniform_point(3));
  Tournament n2 = Tournament::build(2, {{0, 1}});
  CHECK(root_distribution(n2, 1) == pt({"3/4", "1/4"}));
  // Recursion for n = 2: p' = p (p + 2 (1 - p)) = p (2 - p).
  Rational p = q("1/2");
  for (int d = 0; d < 3; ++d) p = p * (2 - p);
  CHECK(root_distribution(n2, 3)[0] == p);
  CHECK(p == q("255/256"));
}

TEST_CASE("aggregate") {
  TripartiteTournament t = build_tripartite({1, 1, 2}, {{2, 3}});
  CHECK(aggregate(uniform_point(4), t.partition) == pt({"1/4", "1/4", "1/2"}));
  CHECK(aggregate(vertex_point(4, 0), t.partition) == pt({"1", "0", "0"}));
  ExactPoint one = apply(operator_of(t.tournament), uniform_point(4));
  CHECK(aggregate(one, t.partition) == pt({"3/16", "5/16", "1/2"}));
  CHECK(aggregate(one, t.partition).coords() == spiral_oracle({q("1/4"), q("1/4"), q("1/2")}));
  TripartitePartition bad{{std::vector<std::size_t>{0}, {1}, {2}}};
  CHECK_THROWS_AS(aggregate(uniform_point(4), bad), Error);
}

TEST_CASE("apply preserves the simplex exactly") {
  std::mt19937_64 rng(10);
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t n = 1 + rng() % 8;
    VolterraOperator v = operator_of(random_tournament(rng, n));
    ExactPoint y = apply(v, random_point(rng, n));
    REQUIRE(coordinate_sum(y) == 1);
    for (const Rational& c : y.coords()) REQUIRE(sgn(c) >= 0);
  }
}

TEST_CASE("aggregation commutes with the dynamics on tripartite tournaments") {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 1000; ++iter) {
    std::array<std::size_t, 3> sizes = {1 + rng() % 4, 1 + rng() % 4, 1 + rng() % 4};
    std::vector<Edge> intra;
    std::size_t start = 0;
    for (std::size_t s : sizes) {
      for (std::size_t i = start; i < start + s; ++i) {
        for (std::size_t j = i + 1; j < start + s; ++j) intra.push_back(rng() & 1 ? Edge{i, j} : Edge{j, i});
      }
      start += s;
    }
    TripartiteTournament t = build_tripartite(sizes, intra);
    ExactPoint x = random_point(rng, t.tournament.n());
    ExactPoint lhs = aggregate(apply(operator_of(t.tournament), x), t.partition);
    REQUIRE(lhs.coords() == spiral_oracle(aggregate(x, t.partition).coords()));
  }
}

TEST_CASE("scaled iteration matches rational iteration") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t n = 1 + rng() % 6;
    VolterraOperator v = operator_of(random_tournament(rng, n));
    ExactPoint x = random_point(rng, n);
    ExactPoint slow = x;
    for (int k = 0; k < 4; ++k) slow = apply(v, slow);
    REQUIRE(iterate(v, x, 4) == slow);
  }
}

TEST_CASE("interval iteration encloses the exact orbit") {
  std::mt19937_64 rng(14);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t n = 2 + rng() % 4;
    VolterraOperator v = operator_of(random_tournament(rng, n));
    ExactPoint x = random_point(rng, n);
    ScaledVector s = ScaledVector::from_point(x);
    IntervalPoint ix = enclose(x, 64);
    // Exact denominators double in bits per step; 14 steps keeps them small.
    for (int t = 1; t <= 14; ++t) {
      s = apply(v, s);
      ix = apply(v, ix);
      for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(ix[i].contains(make_rational(s.num[i], s.den)));
      }
    }
  }
}

TEST_CASE("root distribution agrees with Monte Carlo") {
  std::mt19937_64 rng(15);
  for (int iter = 0; iter < 4; ++iter) {
    std::size_t n = 2 + iter % 3;
    Tournament t = random_tournament(rng, n);
    for (unsigned d : {1U, 3U, 8U}) {
      ExactPoint exact = root_distribution(t, d);
      std::vector<std::uint64_t> counts = mc_winner_counts(d, t, 100000, rng());
      for (std::size_t i = 0; i < n; ++i) {
        double p = exact[i].get_d();
        double f = static_cast<double>(counts[i]) / 100000.0;
        double sigma = std::sqrt(p * (1 - p) / 100000.0);
        REQUIRE(std::fabs(f - p) <= 3 * sigma + 1e-12);
      }
    }
  }
}

TEST_CASE("trajectory CSV") {
  VolterraOperator cyc = operator_of(Tournament::cycle3());
  std::vector<ExactPoint> traj = {pt({"1/2", "1/4", "1/4"})};
  traj.push_back(apply(cyc, traj[0]));
  std::ostringstream out;
  write_trajectory_csv(out, traj, 4);
  CHECK(out.str() ==
        "step,x_1,x_2,x_3,phi\n"
        "0,5.000e-1,2.500e-1,2.500e-1,3.125e-2\n"
        "1,5.000e-1,1.875e-1,3.125e-1,2.929e-2\n");
  std::vector<IntervalPoint> itraj = {enclose(traj[0], 64)};
  std::ostringstream iout;
  write_trajectory_csv(iout, itraj, 3);
  CHECK(iout.str() == "step,x_1,x_2,x_3,phi\n0,5.00e-1,2.50e-1,2.50e-1,3.12e-2\n");
}
