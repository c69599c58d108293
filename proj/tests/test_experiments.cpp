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

#include <sstream>
#include <tuple>

#include "doctest.h"
#include "volterra/error.hpp"
#include "volterra/experiments.hpp"
#include "volterra/spiral.hpp"

using namespace volterra;

namespace {

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

// "d.ddd...e-k" as (exponent, mantissa digits) so tiny values compare
// without floating point.
std::tuple<long, std::string> sci_key(const std::string& s) {
  if (s == "0") return {-(1L << 40), ""};
  std::size_t e = s.find('e');
  std::string mant = s.substr(0, e);
  mant.erase(std::remove(mant.begin(), mant.end(), '.'), mant.end());
  return {std::stol(s.substr(e + 1)), mant};
}

RunConfig cfg(const std::string& text) { return parse_config(text); }

std::string file(const CommandResult& r, const std::string& name) {
  for (const OutputFile& f : r.files) {
    if (f.name == name) return f.content;
  }
  return "";
}

}  // namespace

TEST_CASE("config parsing") {
  RunConfig c = cfg("# comment\neps = 1/5  # trailing\n\nwindow=7\nseed = 9\nbackend = exact\n");
  CHECK(c.rational("eps", 0) == Rational(1, 5));
  CHECK(c.u64("window", 0) == 7);
  CHECK(c.seed == 9);
  CHECK(c.backend == Backend::kExact);
  CHECK(c.u64("missing", 42) == 42);
  CHECK_THROWS_AS(cfg("no equals sign"), Error);
  CHECK_THROWS_AS(cfg("a = 1\na = 2"), Error);
  CHECK_THROWS_AS(cfg("backend = fast"), Error);
  CHECK_THROWS_AS(cfg("precision_start = 4096\nprecision_cap = 128"), Error);
  CHECK_THROWS_AS(cfg("n = -3").u64("n", 0), Error);
  CHECK_THROWS_AS(cfg("bogus = 1").check_keys({"eps"}), Error);
  CHECK(cfg("start = 1/2, 1/4, 1/4").point("start", uniform_point(3)) ==
        make_simplex({Rational(1, 2), Rational(1, 4), Rational(1, 4)}));
  CHECK(cfg("points = 1/4,1/4,1/2; 1/3,1/3,1/3").points("points").size() == 2);
  CHECK_THROWS_AS(cfg("start = 1/2, 1/2").point("start", uniform_point(3)), Error);
}

TEST_CASE("orbit command") {
  CommandResult r = run_command("orbit", cfg("start = 1/3, 1/3, 1/3\nsteps = 100"));
  CHECK(r.exit_code == kExitPass);
  auto rows = csv_rows(file(r, "orbit.csv"));
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == std::vector<std::string>{"step", "x", "y", "z", "phi"});
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(std::vector<std::string>(rows[i].begin() + 1, rows[i].end()) ==
          std::vector<std::string>(rows[1].begin() + 1, rows[1].end()));
  }

  r = run_command("orbit", cfg("start = 1, 0, 0\nsteps = 30"));
  rows = csv_rows(file(r, "orbit.csv"));
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(rows[i][1] == rows[1][1]);

  r = run_command("orbit", cfg("start = 0.4, 0.35, 0.25\nsteps = 200\nbackend = interval"));
  CHECK(r.exit_code == kExitPass);
  CHECK(r.report["phi_monotone_certified"] == true);
  rows = csv_rows(file(r, "orbit.csv"));
  REQUIRE(rows.size() == 202);
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(sci_key(rows[i][4]) <= sci_key(rows[i - 1][4]));
  CHECK(file(r, "orbit.svg").find("<polyline") != std::string::npos);

  r = run_command("orbit", cfg("steps = 10\nbackend = exact"));
  CHECK(r.exit_code == kExitPass);
  r = run_command("orbit", cfg("steps = 40\nbackend = exact"));
  CHECK(r.exit_code == kExitUsage);
  CHECK(r.report.contains("error"));
  CHECK(run_command("orbit", cfg("colour = red")).exit_code == kExitUsage);
  CHECK(run_command("nonsense", cfg("")).exit_code == kExitUsage);
}

TEST_CASE("exact and interval traces agree") {
  ExactPoint p = make_simplex({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  OrbitTrace e = trace_orbit(p, 8, Backend::kExact, EscalationPolicy{});
  OrbitTrace i = trace_orbit(p, 8, Backend::kInterval, EscalationPolicy{});
  REQUIRE(e.rows.size() == i.rows.size());
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    for (int c = 0; c < 3; ++c) CHECK(std::abs(e.rows[k].approx[c] - i.rows[k].approx[c]) < 1e-15);
  }
}

TEST_CASE("rpt") {
  RptParams P;
  P.tournament = Tournament::cycle3();
  P.d = 5;
  P.samples = 20000;
  RptReport r = run_rpt(P);
  CHECK(r.exact == uniform_point(3));
  // Three standard deviations of a single frequency.
  for (std::uint64_t c : r.counts) CHECK(std::abs(static_cast<double>(c) / 20000 - 1.0 / 3) < 0.01);

  P.tournament = parse_tournament_spec("pair");
  P.d = 3;
  r = run_rpt(P);
  // p -> 1 - (1-p)^2 three times from 1/2.
  CHECK(r.exact[0] == Rational(255, 256));
  CHECK(r.pass);

  P.d = 0;
  r = run_rpt(P);
  CHECK(r.exact == uniform_point(2));
  CHECK(r.tv <= Rational(1, 100));

  CHECK(parse_tournament_spec("transitive:4").n() == 4);
  CHECK(parse_tournament_spec("code:3:5").n() == 3);
  CHECK_THROWS_AS(parse_tournament_spec("wheel"), Error);

  CommandResult c = run_command("rpt", cfg("tournament = pair\nd = 3\nsamples = 5000"));
  CHECK(c.exit_code == kExitPass);
  CHECK(file(c, "distribution.csv").rfind("candidate,exact,monte_carlo\n", 0) == 0);
}

TEST_CASE("sixpoints command") {
  CommandResult r = run_command("sixpoints", cfg("eps = 1/5\nwindow = 0"));
  CHECK(r.exit_code == kExitPass);
  CHECK(r.report["total"] == 1);
  r = run_command("sixpoints", cfg("eps = 0.33\nwindow = 20"));
  CHECK(r.report["seed_point"][0] == "33/200");
  CHECK(r.report["seed_point"][2] == "67/100");
  CHECK(r.report["all_certified"] == true);
  CHECK(r.exit_code != kExitUsage);
}

TEST_CASE("theorem demo with explicit points") {
  DemoParams P;
  P.delta = Rational(1, 2);
  P.q = 4;
  P.points = {make_simplex({Rational(1, 4), Rational(1, 4), Rational(1, 2)})};
  P.window = 10;
  P.cross_d = 10;
  TheoremDemoReport r = theorem_demo(P);
  REQUIRE(r.tournaments.size() == 1);
  CHECK(r.tournaments[0].sizes == std::array<std::size_t, 3>{1, 1, 2});
  CHECK(r.sizes_ok);
  // |A| - 1 + |B| <= 2 delta n.
  CHECK(r.tournaments[0].a_outdeg_max == 1);
  ExactPoint p = P.points[0];
  for (const DemoEntry& e : r.entries) {
    ExactPoint v = v_iterate(p, e.d);
    CHECK(e.best.contains(v[0]));
    CHECK(e.meets == (v[0] >= Rational(1, 2)));
  }
  REQUIRE(r.cross.size() == 1);
  CHECK(r.cross[0].agree);
}

TEST_CASE("theorem demo greedy cover") {
  DemoParams P;
  P.cross_d = 8;
  TheoremDemoReport r = theorem_demo(P);
  CHECK(r.tournaments.size() == 6);
  CHECK(r.tournaments[0].sizes == std::array<std::size_t, 3>{75, 75, 850});
  CHECK(r.sizes_ok);
  CHECK(r.entries.size() == 101);
  CHECK(r.fraction() >= 0.99);
  for (const CrossCheck& c : r.cross) CHECK(c.agree);
  for (const DemoTournament& t : r.tournaments) CHECK(t.a_outdeg_max <= 600);
}

TEST_CASE("cross check catches a mismatch") {
  TripartiteTournament t = build_tripartite_transitive({2, 3, 4});
  CHECK(cross_check_aggregation(t, 6));
  // Flip one cross edge so the tournament is no longer tripartite.
  std::vector<Edge> es = t.tournament.edges();
  for (Edge& e : es) {
    if (e.winner == 0 && e.loser == 2) std::swap(e.winner, e.loser);
  }
  TripartiteTournament broken{Tournament::build(9, es), t.partition};
  CHECK_FALSE(cross_check_aggregation(broken, 6));
}

TEST_CASE("outputs are reproducible and worker independent") {
  RunConfig c = cfg("samples = 300\nlarge_samples = 300\nfvh_samples = 30\nskip_samples = 50\nseed = 4");
  CHECK(run_command("verify-props", c).report.dump() == run_command("verify-props", c).report.dump());
  PropsParams a, b;
  a.samples = b.samples = 500;
  a.large_samples = b.large_samples = 500;
  a.fvh_samples = b.fvh_samples = 20;
  a.skip_samples = b.skip_samples = 20;
  a.workers = 1;
  b.workers = 3;
  std::vector<SweepResult> ra = verify_props(a), rb = verify_props(b);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) CHECK(sweep_to_json(ra[i]).dump() == sweep_to_json(rb[i]).dump());

  RunConfig o = cfg("steps = 60");
  CHECK(file(run_command("orbit", o), "orbit.csv") == file(run_command("orbit", o), "orbit.csv"));
  CHECK(file(run_command("orbit", o), "orbit.svg") == file(run_command("orbit", o), "orbit.svg"));
  RunConfig s = cfg("window = 10");
  CHECK(file(run_command("sixpoints", s), "certificate.json") ==
        file(run_command("sixpoints", s), "certificate.json"));
}
