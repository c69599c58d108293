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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed below and not configurable.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "volterra/experiments.hpp"
#include "volterra/qso.hpp"
#include "volterra/sixpoints.hpp"
#include "volterra/spiral.hpp"
#include "volterra/votetree.hpp"

using namespace volterra;

namespace {

// Pinned tolerances.
const Rational kTvTolerance(1, 100);
const Rational kMinCoverage(99, 100);
const Rational kMinDemoFraction(99, 100);
constexpr std::uint64_t kExactViolations = 0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Command reports reused by the reproducibility rerun.
struct Run {
  std::string name;
  std::string config;
  CommandResult result;
};
std::vector<Run> g_runs;

const CommandResult& run(const std::string& name, const std::string& config) {
  g_runs.push_back({name, config, run_command(name, parse_config(config))});
  return g_runs.back().result;
}

const nlohmann::ordered_json* sweep(const CommandResult& r, const std::string& name,
                                    const std::string& eps = "") {
  for (const auto& s : r.report["sweeps"]) {
    if (s["name"] == name && (eps.empty() || s.value("eps", "") == eps)) return &s;
  }
  return nullptr;
}

bool sweeps_clean(const CommandResult& r, const std::vector<std::pair<std::string, std::string>>& names,
                  std::string& detail) {
  bool ok = true;
  for (const auto& [name, eps] : names) {
    const auto* s = sweep(r, name, eps);
    if (s == nullptr) {
      detail += name + " missing; ";
      ok = false;
      continue;
    }
    std::uint64_t v = (*s)["violations"];
    std::uint64_t u = (*s)["undecided"];
    std::uint64_t n = (*s)["samples"];
    detail += name + (eps.empty() ? "" : "@" + eps) + " " + std::to_string(n) + "/" +
              std::to_string(v) + "v; ";
    ok = ok && v == kExactViolations && u == 0;
  }
  return ok;
}

ExactPoint random_start(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> c(n);
  unsigned long total = 0;
  std::vector<unsigned long> w(n);
  for (auto& x : w) total += x = 1 + rng() % 997;
  for (std::size_t i = 0; i < n; ++i) c[i] = make_rational(w[i], total);
  return make_simplex(c);
}

CommandResult g_props;

Outcome criterion1() {
  g_props = run("verify-props", "seed = 1\n");
  Outcome o;
  o.pass = sweeps_clean(g_props,
                        {{"simplex_preservation", ""},
                         {"rotation_equivariance", ""},
                         {"phi_monotone", ""},
                         {"easybounds", ""},
                         {"decay", "1/20"},
                         {"decay", "1/10"}},
                        o.detail);
  return o;
}

Outcome criterion2() {
  std::mt19937_64 rng(2);
  std::size_t bad = 0;
  const std::size_t trials = 1000;
  for (std::size_t k = 0; k < trials; ++k) {
    std::array<std::size_t, 3> sizes = {1 + rng() % 4, 1 + rng() % 4, 1 + rng() % 4};
    std::vector<Edge> intra;
    std::size_t start = 0;
    for (std::size_t s : sizes) {
      for (std::size_t i = start; i < start + s; ++i) {
        for (std::size_t j = i + 1; j < start + s; ++j) {
          intra.push_back(rng() & 1 ? Edge{i, j} : Edge{j, i});
        }
      }
      start += s;
    }
    TripartiteTournament t = build_tripartite(sizes, intra);
    ExactPoint x = random_start(rng, t.tournament.n());
    ExactPoint lhs = aggregate(apply(operator_of(t.tournament), x), t.partition);
    ExactPoint rhs = v_step(aggregate(x, t.partition));
    if (!(lhs == rhs)) ++bad;
  }
  return {bad == 0, std::to_string(trials) + " tournaments, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion3() {
  GuaranteeReport g = guarantee(VotingTree::from_labels(2, 4, {0, 1, 2, 3}));
  return {g.value == 2, "guarantee " + std::to_string(g.value) + " over 64 tournaments"};
}

Outcome criterion4() {
  Outcome o{true, ""};
  Rational worst = 0;
  Rational worst_shifted = 0;
  for (const char* spec : {"cycle3", "pair"}) {
    for (unsigned d = 0; d <= 8; ++d) {
      RptParams p;
      p.tournament = parse_tournament_spec(spec);
      p.d = d;
      p.samples = 100000;
      p.seed = 4;
      p.tolerance = kTvTolerance;
      RptReport r = run_rpt(p);
      if (r.tv > worst) worst = r.tv;
      if (r.tv_shifted > worst_shifted) worst_shifted = r.tv_shifted;
      if (!(r.tv <= kTvTolerance)) {
        o.pass = false;
        o.detail += std::string(spec) + " d=" + std::to_string(d) + " tv " + to_decimal(r.tv, 4) + "; ";
      }
    }
  }
  // The pair separates V^d from V^(d-1) indexing: the loser keeps root
  // mass 2^-(2^d), so small d tell the two apart.
  o.detail += "max tv " + to_decimal(worst, 4) + " (tolerance 1/100), worst tv against V^(d-1) " +
              to_decimal(worst_shifted, 4);
  run("rpt", "tournament = cycle3\nd = 8\nseed = 4\n");
  return o;
}

Outcome criterion5() {
  Outcome o;
  o.pass = sweeps_clean(g_props, {{"skipcorner", "1/10"}, {"skipcorner2", "1/10"}}, o.detail);
  const auto* s1 = sweep(g_props, "skipcorner", "1/10");
  const auto* s2 = sweep(g_props, "skipcorner2", "1/10");
  if (s1 && s2) {
    o.detail += (*s1)["detail"].get<std::string>() + "; " + (*s2)["detail"].get<std::string>();
    o.pass = o.pass && (*s1)["detail"] == "eps' = 1/25600000000, D = 3" &&
             (*s2)["detail"] == "eps' = 1/640, D = 3";
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  o.pass = sweeps_clean(g_props, {{"first_vertex_hit", "3/10"}}, o.detail);
  if (const auto* s = sweep(g_props, "first_vertex_hit", "3/10")) {
    o.detail += (*s)["detail"].get<std::string>();
  }
  return o;
}

Outcome criterion7() {
  const Rational eps(1, 5);
  TrackerOptions opts;
  opts.policy.cap_bits = std::size_t{1} << 20;
  SeedTriple s = seed_triple(eps, 100000, opts);
  std::uint64_t d2 = empirical_d2(s.points, eps / 10, 100000, opts);
  AmplifiedTriple am = amplify_triple(s.points, d2, eps, 100000, opts);
  std::vector<OrbitRef> six(s.points.begin(), s.points.end());
  six.insert(six.end(), am.points.begin(), am.points.end());
  std::size_t close = 0;
  for (const OrbitRef& p : six) {
    OrbitTracker tr(p, opts);
    Verdict v = tr.evaluate([&](const ExactPoint& q) { return close_corner(q, eps, Corner::kX); },
                            [&](const IntervalPoint& q) { return close_corner(q, eps, Corner::kX); });
    if (v == Verdict::kTrue) ++close;
  }
  const CommandResult& r = run("sixpoints", "eps = 1/5\nwindow = 100\nprecision_cap = 1048576\n");
  std::uint64_t covered = r.report["covered"];
  std::uint64_t total = r.report["total"];
  bool certified = r.report["all_certified"];
  std::uint64_t rechecks = r.report["recheck_failures"];
  Outcome o;
  o.pass = close == 6 && certified && rechecks == 0 && total == 101 &&
           make_rational(mpz_class(static_cast<unsigned long>(covered)), mpz_class(static_cast<unsigned long>(total))) >= kMinCoverage;
  o.detail = std::to_string(close) + "/6 points x-close, coverage " + std::to_string(covered) + "/" +
             std::to_string(total) + " over d in [" + r.report["window"]["d_lo"].dump() + ", " +
             r.report["window"]["d_hi"].dump() + "], all certified " + (certified ? "yes" : "no");
  return o;
}

Outcome criterion8() {
  const CommandResult& r = run("theorem-demo", "delta = 3/10\nq = 1000\nwindow = 100\ncross_n = 30\ncross_d = 24\n");
  std::uint64_t meeting = r.report["meeting"];
  std::uint64_t total = r.report["total"];
  bool sizes = r.report["sizes_within_delta_n"];
  bool cross = true;
  for (const auto& c : r.report["cross_check"]) {
    cross = cross && c["agree"].get<bool>() && c["max_d"] == 24;
  }
  bool outdeg = true;
  for (const auto& t : r.report["tournaments"]) outdeg = outdeg && t["a_outdeg_within_bound"].get<bool>();
  Outcome o;
  o.pass = r.report["tournaments"].size() == 6 && sizes && cross && outdeg && total == 101 &&
           make_rational(mpz_class(static_cast<unsigned long>(meeting)), mpz_class(static_cast<unsigned long>(total))) >= kMinDemoFraction;
  o.detail = std::to_string(meeting) + "/" + std::to_string(total) + " d meet 1-delta, d0 " +
             r.report["d0"].dump() + ", sizes within delta n " + (sizes ? "yes" : "no") +
             ", cross-check n=30 d<=24 " + (cross ? "agrees" : "DISAGREES");
  return o;
}

std::string serialize(const CommandResult& r) {
  std::string s = r.report.dump(2);
  for (const OutputFile& f : r.files) s += "\n--" + f.name + "\n" + f.content;
  return s;
}

Outcome criterion9() {
  run("orbit", "start = 2/5, 7/20, 1/4\nsteps = 200\n");
  std::vector<Run> first = g_runs;
  Outcome o{true, ""};
  for (const Run& a : first) {
    CommandResult b = run_command(a.name, parse_config(a.config));
    bool same = serialize(a.result) == serialize(b);
    o.pass = o.pass && same;
    o.detail += a.name + (same ? " identical; " : " DIFFERS; ");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    std::function<Outcome()> fn;
  };
  std::vector<Criterion> all = {
      {1, "exact invariants", criterion1},
      {2, "aggregation commutes with the dynamics", criterion2},
      {3, "balanced tree guarantee on n = 4", criterion3},
      {4, "root distribution versus Monte Carlo", criterion4},
      {5, "skipcorner sweeps", criterion5},
      {6, "first vertex hit within the bound", criterion6},
      {7, "six-point certificate at eps = 1/5", criterion7},
      {8, "desk demo at delta = 3/10, q = 1000", criterion8},
      {9, "reproducible reports", criterion9},
  };
  int failures = 0;
  for (const Criterion& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("criterion %d %s: %s (%.1fs) %s\n", c.id, o.pass ? "PASS" : "FAIL", c.what, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
