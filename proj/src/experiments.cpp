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

#include "volterra/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "volterra/bounds.hpp"
#include "volterra/error.hpp"
#include "volterra/orbit.hpp"
#include "volterra/qso.hpp"
#include "volterra/spiral.hpp"
#include "volterra/votetree.hpp"

namespace volterra {

namespace {

constexpr int kCsvDigits = 17;

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

TrackerOptions tracker_options(const RunConfig& c) {
  TrackerOptions o;
  o.policy = c.policy;
  return o;
}

// mpq_class(a, b) is not reduced, and gmp arithmetic expects reduced input.
Rational frac(unsigned long a, unsigned long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t tag, std::uint64_t i) {
  return std::mt19937_64(mix64(mix64(seed, tag), i));
}

ExactPoint random_point(std::mt19937_64& rng, bool interior) {
  constexpr unsigned long kDen = 1000000;
  for (;;) {
    unsigned long a = rng() % (kDen + 1);
    unsigned long b = rng() % (kDen + 1 - a);
    unsigned long w[3] = {a, b, kDen - a - b};
    std::shuffle(w, w + 3, rng);
    if (interior && (w[0] == 0 || w[1] == 0 || w[2] == 0)) continue;
    return make_simplex({frac(w[0], kDen), frac(w[1], kDen), frac(w[2], kDen)});
  }
}

Tournament random_tournament(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) es.push_back(rng() & 1 ? Edge{i, j} : Edge{j, i});
  }
  return Tournament::build(n, es);
}

ExactPoint random_nd_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<unsigned long> w(n);
  unsigned long total = 0;
  for (auto& x : w) total += (x = rng() % 1000);
  if (total == 0) total = w[0] = 1;
  std::vector<Rational> c;
  for (unsigned long x : w) c.push_back(frac(x, total));
  return make_simplex(c);
}

// Runs check(rng, i) for samples indices in parallel; each index has its
// own generator so results do not depend on the worker count.
template <typename Check>
SweepResult sweep(const std::string& name, const std::string& eps, std::uint64_t samples,
                  std::uint64_t seed, std::uint64_t tag, std::size_t workers, Check check) {
  SweepResult r;
  r.name = name;
  r.eps = eps;
  r.samples = samples;
  std::vector<std::uint64_t> bad(workers, 0), und(workers, 0);
  parallel_ranges(samples, workers, [&](std::uint64_t b, std::uint64_t e, std::size_t slot) {
    for (std::uint64_t i = b; i < e; ++i) {
      std::mt19937_64 rng = sample_rng(seed, tag, i);
      Verdict v = check(rng);
      if (v == Verdict::kFalse) ++bad[slot];
      if (v == Verdict::kUndecided) ++und[slot];
    }
  });
  for (std::size_t s = 0; s < workers; ++s) {
    r.violations += bad[s];
    r.undecided += und[s];
  }
  return r;
}

std::string interval_decimal(const BigFloat& v) { return v.to_decimal(kCsvDigits); }

}  // namespace

// ---- orbit traces -------------------------------------------------------

OrbitTrace trace_orbit(const ExactPoint& start, std::uint64_t steps, Backend backend,
                       const EscalationPolicy& policy) {
  if (start.dim() != 3) throw Error(ErrorCode::kDimensionMismatch, "orbit start needs 3 coordinates");
  policy.validate();
  OrbitTrace t;
  t.backend = backend;
  if (backend == Backend::kExact) {
    if (steps > kDefaultExactStepCap) {
      throw Error(ErrorCode::kExactBlowup, std::to_string(steps) + " exact steps exceed the cap of " +
                                               std::to_string(kDefaultExactStepCap));
    }
    ExactPoint p = start;
    t.phi_monotone = true;
    for (std::uint64_t s = 0; s <= steps; ++s) {
      OrbitRow row;
      row.step = s;
      for (std::size_t i = 0; i < 3; ++i) {
        row.coords[i] = to_decimal(p[i], kCsvDigits);
        row.approx[i] = p[i].get_d();
      }
      row.phi = to_decimal(phi(p), kCsvDigits);
      t.rows.push_back(row);
      if (s == steps) break;
      if (phi_step_nonincreasing(p) != Verdict::kTrue) t.phi_monotone = false;
      p = v_step(p);
    }
    return t;
  }
  // Exact while denominators stay small (so fixed points print constant
  // rows), then intervals from the hand-off point.
  TrackerOptions opts;
  opts.policy = policy;
  OrbitTracker tr(OrbitRef{start, 0}, opts);
  bool monotone = true;
  for (std::uint64_t s = 0; s <= steps; ++s) {
    OrbitRow row;
    row.step = s;
    if (tr.exact()) {
      ExactPoint p = tr.exact_point();
      for (std::size_t i = 0; i < 3; ++i) {
        row.coords[i] = to_decimal(p[i], kCsvDigits);
        row.approx[i] = p[i].get_d();
      }
      row.phi = to_decimal(phi(p), kCsvDigits);
    } else {
      IntervalPoint p = tr.enclosure();
      for (std::size_t i = 0; i < 3; ++i) {
        row.coords[i] = interval_decimal(p[i].lo());
        row.approx[i] = p[i].lo().to_double();
      }
      row.phi = interval_decimal(phi(p).lo());
    }
    t.rows.push_back(row);
    if (s == steps) break;
    Verdict v = tr.evaluate([](const ExactPoint& q) { return phi_step_nonincreasing(q); },
                            [](const IntervalPoint& q) { return phi_step_nonincreasing(q); });
    if (v == Verdict::kUndecided) {
      throw Error(ErrorCode::kUndecidedAtCap, "potential monotonicity undecided at the precision cap");
    }
    monotone = monotone && v == Verdict::kTrue;
    tr.advance();
  }
  t.bits = tr.max_bits();
  t.phi_monotone = monotone;
  return t;
}

std::string orbit_csv(const OrbitTrace& trace) {
  std::string out = "step,x,y,z,phi\n";
  for (const OrbitRow& r : trace.rows) {
    out += std::to_string(r.step) + "," + r.coords[0] + "," + r.coords[1] + "," + r.coords[2] +
           "," + r.phi + "\n";
  }
  return out;
}

std::string orbit_svg(const OrbitTrace& trace) {
  const double vx[3] = {260.0, 30.0, 490.0};
  const double vy[3] = {30.0, 450.0, 450.0};
  auto project = [&](const std::array<double, 3>& c) {
    double s = c[0] + c[1] + c[2];
    if (s <= 0) s = 1;
    double px = 0, py = 0;
    for (int i = 0; i < 3; ++i) {
      px += c[i] / s * vx[i];
      py += c[i] / s * vy[i];
    }
    return fmt3(px) + "," + fmt3(py);
  };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"480\" "
       "viewBox=\"0 0 520 480\">\n";
  o << "<rect width=\"520\" height=\"480\" fill=\"white\"/>\n";
  o << "<polygon points=\"" << fmt3(vx[0]) << "," << fmt3(vy[0]) << " " << fmt3(vx[1]) << ","
    << fmt3(vy[1]) << " " << fmt3(vx[2]) << "," << fmt3(vy[2])
    << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  o << "<text x=\"254\" y=\"22\" font-size=\"14\">x</text>\n";
  o << "<text x=\"14\" y=\"466\" font-size=\"14\">y</text>\n";
  o << "<text x=\"496\" y=\"466\" font-size=\"14\">z</text>\n";
  o << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.8\" points=\"";
  for (std::size_t i = 0; i < trace.rows.size(); ++i) {
    if (i) o << " ";
    o << project(trace.rows[i].approx);
  }
  o << "\"/>\n";
  if (!trace.rows.empty()) {
    std::string p = project(trace.rows.front().approx);
    std::size_t comma = p.find(',');
    o << "<circle cx=\"" << p.substr(0, comma) << "\" cy=\"" << p.substr(comma + 1)
      << "\" r=\"3\" fill=\"#c0392b\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

// ---- property sweeps ----------------------------------------------------

std::vector<SweepResult> verify_props(const PropsParams& P) {
  std::vector<SweepResult> out;
  std::size_t w = std::max<std::size_t>(1, P.workers);

  out.push_back(sweep("simplex_preservation", "", P.samples, P.seed, 1, w, [](std::mt19937_64& rng) {
    std::size_t n = 2 + rng() % 7;
    Tournament t = random_tournament(rng, n);
    ExactPoint x = random_nd_point(rng, n);
    ExactPoint y = apply(operator_of(t), x);
    bool ok = coordinate_sum(y) == 1;
    for (const Rational& c : y.coords()) ok = ok && sgn(c) >= 0;
    return to_verdict(ok);
  }));
  out.push_back(sweep("rotation_equivariance", "", P.samples, P.seed, 2, w, [](std::mt19937_64& rng) {
    ExactPoint p = random_point(rng, false);
    return to_verdict(v_step(rotate(p)) == rotate(v_step(p)));
  }));
  out.push_back(sweep("phi_monotone", "", P.large_samples, P.seed, 3, w, [](std::mt19937_64& rng) {
    ExactPoint p = random_point(rng, false);
    return to_verdict(phi(v_step(p)) <= phi(p));
  }));
  out.push_back(sweep("easybounds", "", P.large_samples, P.seed, 4, w, [](std::mt19937_64& rng) {
    return to_verdict(easybounds_check(random_point(rng, true)));
  }));
  std::uint64_t tag = 10;
  for (const Rational& eps : P.eps) {
    auto in_m = [eps](std::mt19937_64& rng) {
      for (;;) {
        ExactPoint p = random_point(rng, false);
        if (in_M(p, eps) == Verdict::kTrue) return p;
      }
    };
    out.push_back(sweep("decay", to_string(eps), P.samples, P.seed, tag++, w,
                        [&](std::mt19937_64& rng) { return to_verdict(decay_check(in_m(rng), eps)); }));
    out.push_back(sweep("decay_secondary", to_string(eps), P.samples, P.seed, tag++, w,
                        [&](std::mt19937_64& rng) {
                          return to_verdict(decay_check(in_m(rng), eps, true));
                        }));
  }

  {
    BoundReport b = epsclose_D_bound(P.fvh_eps);
    std::vector<std::uint64_t> worst(w, 0);
    SweepResult r = sweep("first_vertex_hit", to_string(P.fvh_eps), P.fvh_samples, P.seed, 5, w,
                          [&](std::mt19937_64& rng) {
                            ExactPoint p;
                            do {
                              p = random_point(rng, true);
                            } while (in_M(p, P.fvh_eps) != Verdict::kTrue);
                            try {
                              VertexHit h = first_vertex_hit(p, P.fvh_eps, P.fvh_cap, P.options);
                              return to_verdict(mpz_class(static_cast<unsigned long>(h.step)) <= b.D);
                            } catch (const Error& e) {
                              if (e.code() == ErrorCode::kUndecidedAtCap) return Verdict::kUndecided;
                              if (e.code() == ErrorCode::kCapExceeded) return Verdict::kFalse;
                              throw;
                            }
                          });
    r.detail = "D bound " + b.D.get_str() + (b.heuristic_range ? " (heuristic range)" : "") +
               ", cap " + std::to_string(P.fvh_cap);
    out.push_back(r);
  }

  {
    BoundReport b = skipcorner_eps(P.skip_eps, P.skip_D);
    if (b.symbolic()) {
      throw Error(ErrorCode::kTooLarge, "skipcorner eps' is symbolic at D=" + b.D.get_str());
    }
    Rational ep = std::get<Rational>(b.value);
    Rational eps = P.skip_eps;
    std::uint64_t D = P.skip_D;
    SweepResult r = sweep("skipcorner", to_string(eps), P.skip_samples, P.seed, 6, w,
                          [&](std::mt19937_64& rng) {
                            // z <= eps' and 1 - x > eps; no V^d with 1 <= d < D may have y <= eps'.
                            constexpr unsigned long kGrid = 1UL << 20;
                            Rational z = ep * frac(rng() % (kGrid + 1), kGrid);
                            Rational x = (1 - eps) * frac(rng() % kGrid, kGrid);
                            ExactPoint p = make_simplex({x, Rational(1 - x - z), z});
                            for (std::uint64_t d = 1; d < D; ++d) {
                              p = v_step(p);
                              if (p[1] <= ep) return Verdict::kFalse;
                            }
                            return Verdict::kTrue;
                          });
    r.detail = "eps' = " + to_string(ep) + ", D = " + std::to_string(D);
    out.push_back(r);

    BoundReport b2 = skipcorner2_eps(P.skip_eps, P.skip_D);
    Rational ep2 = std::get<Rational>(b2.value);
    SweepResult r2 = sweep("skipcorner2", to_string(eps), P.skip_samples, P.seed, 7, w,
                           [&](std::mt19937_64& rng) {
                             // y + z <= eps'; V^i stays eps-close to x for i = 0..D.
                             constexpr unsigned long kGrid = 1UL << 20;
                             Rational s = ep2 * frac(rng() % (kGrid + 1), kGrid);
                             Rational y = s * frac(rng() % (kGrid + 1), kGrid);
                             ExactPoint p = make_simplex({Rational(1 - s), y, Rational(s - y)});
                             for (std::uint64_t i = 0; i <= D; ++i) {
                               if (close_corner(p, eps, Corner::kX) != Verdict::kTrue) {
                                 return Verdict::kFalse;
                               }
                               if (i < D) p = v_step(p);
                             }
                             return Verdict::kTrue;
                           });
    r2.detail = "eps' = " + to_string(ep2) + ", D = " + std::to_string(D);
    out.push_back(r2);
  }
  return out;
}

nlohmann::ordered_json sweep_to_json(const SweepResult& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  if (!s.eps.empty()) j["eps"] = s.eps;
  j["samples"] = s.samples;
  j["violations"] = s.violations;
  j["undecided"] = s.undecided;
  if (!s.detail.empty()) j["detail"] = s.detail;
  j["pass"] = s.violations == 0 && s.undecided == 0;
  return j;
}

// ---- root distribution versus sampling ----------------------------------

Tournament parse_tournament_spec(const std::string& spec) {
  if (spec == "cycle3") return Tournament::cycle3();
  if (spec == "pair") return Tournament::build(2, {{0, 1}});
  auto num = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::kParse, "bad tournament spec '" + spec + "'");
    }
    return std::stoull(s);
  };
  if (spec.rfind("transitive:", 0) == 0) return Tournament::transitive(num(spec.substr(11)));
  if (spec.rfind("code:", 0) == 0) {
    std::string rest = spec.substr(5);
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::kParse, "bad tournament spec '" + spec + "'");
    return Tournament::from_code(num(rest.substr(0, colon)), num(rest.substr(colon + 1)));
  }
  throw Error(ErrorCode::kParse, "bad tournament spec '" + spec + "'");
}

RptReport run_rpt(const RptParams& P) {
  RptReport r;
  std::size_t n = P.tournament.n();
  r.exact = root_distribution(P.tournament, P.d);
  r.shifted = P.d == 0 ? r.exact : root_distribution(P.tournament, P.d - 1);
  r.counts = mc_winner_counts(P.d, P.tournament, P.samples, P.seed, kDefaultLeafBudget, P.workers);
  r.tv = 0;
  r.tv_shifted = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational f = frac(static_cast<unsigned long>(r.counts[i]), static_cast<unsigned long>(P.samples));
    r.tv += abs(r.exact[i] - f);
    r.tv_shifted += abs(r.shifted[i] - f);
  }
  r.tv /= 2;
  r.tv_shifted /= 2;
  r.pass = r.tv <= P.tolerance;
  return r;
}

// ---- theorem demo -------------------------------------------------------

bool cross_check_aggregation(const TripartiteTournament& t, std::uint64_t max_d) {
  std::size_t n = t.tournament.n();
  VolterraOperator full = operator_of(t.tournament);
  VolterraOperator spiral = operator_of(Tournament::cycle3());
  ScaledVector s = ScaledVector::from_point(uniform_point(n));
  ScaledVector a = aggregate(s, t.partition);
  for (std::uint64_t d = 0;; ++d) {
    ScaledVector g = aggregate(s, t.partition);
    if (g.den != a.den || g.num != a.num) return false;
    if (d == max_d) return true;
    s = apply(full, s);
    a = apply(spiral, a);
  }
}

namespace {

ExactPoint grid_point(const std::array<std::size_t, 3>& sizes, std::size_t q) {
  return make_simplex({frac(sizes[0], q), frac(sizes[1], q), frac(sizes[2], q)});
}

// Certified verdicts x >= threshold along the orbit for d in [d_lo, d_hi].
std::vector<Verdict> x_at_least(const ExactPoint& p, const Rational& thr, std::uint64_t d_lo,
                                std::uint64_t d_hi, const TrackerOptions& o,
                                std::vector<Interval>* enclosures) {
  std::vector<Verdict> out;
  OrbitTracker t(OrbitRef{p, d_lo}, o);
  for (std::uint64_t d = d_lo; d <= d_hi; ++d) {
    if (d > d_lo) t.advance();
    out.push_back(t.evaluate([&](const ExactPoint& e) { return compare(e[0], Cmp::kGe, thr); },
                             [&](const IntervalPoint& e) { return compare(e[0], Cmp::kGe, thr); }));
    if (enclosures) enclosures->push_back(t.enclosure()[0]);
  }
  return out;
}

}  // namespace

TheoremDemoReport theorem_demo(const DemoParams& P) {
  if (sgn(P.delta) <= 0 || P.delta >= 1) {
    throw Error(ErrorCode::kPrecondition, "delta must lie in (0, 1)");
  }
  if (P.q < 3) throw Error(ErrorCode::kPrecondition, "grid q must be at least 3");
  TheoremDemoReport r;
  r.n = P.q;
  r.delta = P.delta;
  Rational thr = 1 - P.delta;
  std::vector<ExactPoint> chosen;

  if (!P.points.empty()) {
    for (const ExactPoint& p : P.points) {
      std::array<std::size_t, 3> s = grid_round({p[0], p[1], p[2]}, P.q);
      for (std::size_t v : s) {
        if (v == 0) throw Error(ErrorCode::kEmptyPart, "a coordinate rounds to zero");
      }
      chosen.push_back(grid_point(s, P.q));
    }
    r.d0 = P.d_lo;
  } else {
    Rational e = P.delta / 2;
    std::array<std::size_t, 3> seed =
        grid_round({Rational(e / 2), Rational(e / 2), Rational(1 - e)}, P.q);
    std::size_t kmax = 0;
    {
      mpz_class f;
      Rational dq = P.delta * static_cast<unsigned long>(P.q);
      mpz_fdiv_q(f.get_mpz_t(), dq.get_num_mpz_t(), dq.get_den_mpz_t());
      kmax = std::min<std::size_t>(f.get_ui(), (P.q - 1) / 2);
    }
    std::size_t kseed = std::max<std::size_t>(1, std::min(seed[0], kmax));
    auto pool_point = [&](std::size_t k) { return grid_point({k, k, P.q - 2 * k}, P.q); };
    Rational e10 = e / 10;
    r.d0 = d0_search(OrbitRef{pool_point(kseed), 0}, e10 * e10 * e10, P.cap, P.options);
    std::uint64_t d_lo = r.d0, d_hi = r.d0 + P.window;
    std::vector<std::vector<Verdict>> cover(kmax + 1);
    parallel_ranges(kmax, P.workers, [&](std::uint64_t b, std::uint64_t en, std::size_t) {
      for (std::uint64_t i = b; i < en; ++i) {
        cover[i + 1] = x_at_least(pool_point(i + 1), thr, d_lo, d_hi, P.options, nullptr);
      }
    });
    std::vector<bool> covered(d_hi - d_lo + 1, false);
    std::vector<bool> used(kmax + 1, false);
    auto take = [&](std::size_t k) {
      used[k] = true;
      chosen.push_back(pool_point(k));
      for (std::size_t j = 0; j < covered.size(); ++j) {
        if (cover[k][j] == Verdict::kTrue) covered[j] = true;
      }
    };
    take(kseed);
    while (chosen.size() < std::min(P.picks, kmax)) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t k = 1; k <= kmax; ++k) {
        if (used[k]) continue;
        std::size_t gain = 0;
        for (std::size_t j = 0; j < covered.size(); ++j) {
          if (!covered[j] && cover[k][j] == Verdict::kTrue) ++gain;
        }
        if (best == 0 || gain > best_gain) {
          best = k;
          best_gain = gain;
        }
      }
      take(best);
    }
  }
  r.d_lo = r.d0;
  r.d_hi = r.d0 + P.window;

  r.sizes_ok = true;
  Rational limit = P.delta * static_cast<unsigned long>(P.q);
  for (const ExactPoint& p : chosen) {
    DemoTournament dt;
    dt.point = p;
    dt.sizes = grid_round({p[0], p[1], p[2]}, P.q);
    TripartiteTournament t = build_tripartite_transitive(dt.sizes);
    for (std::size_t v : t.partition.a()) dt.a_outdeg_max = std::max(dt.a_outdeg_max, t.tournament.outdeg(v));
    if (Rational(dt.sizes[0]) > limit || Rational(dt.sizes[1]) > limit) r.sizes_ok = false;
    r.tournaments.push_back(dt);
  }

  std::size_t m = chosen.size();
  std::vector<std::vector<Verdict>> verdicts(m);
  std::vector<std::vector<Interval>> encl(m);
  parallel_ranges(m, P.workers, [&](std::uint64_t b, std::uint64_t en, std::size_t) {
    for (std::uint64_t i = b; i < en; ++i) {
      verdicts[i] = x_at_least(chosen[i], thr, r.d_lo, r.d_hi, P.options, &encl[i]);
    }
  });
  bool undecided_any = false;
  for (std::uint64_t j = 0; j + r.d_lo <= r.d_hi; ++j) {
    DemoEntry e;
    e.d = r.d_lo + j;
    bool undecided = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!e.witness || encl[i][j].lo() > e.best.lo()) {
        e.witness = i;
        e.best = encl[i][j];
      }
      if (verdicts[i][j] == Verdict::kTrue) e.meets = true;
      undecided = undecided || verdicts[i][j] == Verdict::kUndecided;
    }
    if (!e.meets && undecided) undecided_any = true;
    if (e.meets) ++r.meeting;
    r.entries.push_back(e);
  }

  for (const DemoTournament& dt : r.tournaments) {
    CrossCheck c;
    if (P.q <= P.cross_n) {
      c.sizes = dt.sizes;
    } else {
      c.sizes = grid_round({dt.point[0], dt.point[1], dt.point[2]}, P.cross_n);
      // Keep parts nonempty at the small size; the check compares the two
      // dynamics on whatever grid point results.
      for (std::size_t i = 0; i < 3; ++i) {
        if (c.sizes[i] == 0) {
          ++c.sizes[i];
          --*std::max_element(c.sizes.begin(), c.sizes.end());
        }
      }
    }
    c.max_d = P.cross_d;
    auto same = std::find_if(r.cross.begin(), r.cross.end(),
                             [&](const CrossCheck& x) { return x.sizes == c.sizes; });
    c.agree = same != r.cross.end()
                  ? same->agree
                  : cross_check_aggregation(build_tripartite_transitive(c.sizes), P.cross_d);
    r.cross.push_back(c);
  }
  if (undecided_any) {
    throw Error(ErrorCode::kUndecidedAtCap, "a window entry stayed undecided at the precision cap");
  }
  return r;
}

nlohmann::ordered_json demo_to_json(const TheoremDemoReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["delta"] = to_string(r.delta);
  j["threshold"] = to_string(Rational(1 - r.delta));
  Rational two_dn = 2 * r.delta * static_cast<unsigned long>(r.n);
  j["outdeg_bound_2_delta_n"] = to_string(two_dn);
  nlohmann::ordered_json ts = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.tournaments.size(); ++i) {
    const DemoTournament& t = r.tournaments[i];
    nlohmann::ordered_json x;
    x["index"] = i;
    x["sizes"] = t.sizes;
    x["a_outdeg_max"] = t.a_outdeg_max;
    x["a_outdeg_within_bound"] = Rational(t.a_outdeg_max) <= two_dn;
    ts.push_back(x);
  }
  j["tournaments"] = ts;
  j["sizes_within_delta_n"] = r.sizes_ok;
  j["d0"] = r.d0;
  j["window"] = {{"d_lo", r.d_lo}, {"d_hi", r.d_hi}};
  nlohmann::ordered_json es = nlohmann::ordered_json::array();
  for (const DemoEntry& e : r.entries) {
    nlohmann::ordered_json x;
    x["d"] = e.d;
    x["witness"] = e.witness ? nlohmann::ordered_json(*e.witness) : nlohmann::ordered_json(nullptr);
    x["p_lo"] = e.best.lo().to_decimal(15);
    x["p_hi"] = e.best.hi().to_decimal(15);
    x["meets"] = e.meets;
    es.push_back(x);
  }
  j["entries"] = es;
  j["meeting"] = r.meeting;
  j["total"] = r.entries.size();
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const CrossCheck& c : r.cross) {
    cs.push_back({{"sizes", c.sizes}, {"max_d", c.max_d}, {"agree", c.agree}});
  }
  j["cross_check"] = cs;
  return j;
}

// ---- commands -----------------------------------------------------------

namespace {

ExactPoint default_orbit_start() {
  return make_simplex({Rational(2, 5), Rational(7, 20), Rational(1, 4)});
}

}  // namespace

CommandResult cmd_orbit(const RunConfig& c) {
  c.check_keys({"start", "steps", "svg"});
  ExactPoint start = c.point("start", default_orbit_start());
  std::uint64_t steps = c.u64("steps", 200);
  OrbitTrace t = trace_orbit(start, steps, c.backend, c.policy);
  CommandResult r;
  r.files.push_back({"orbit.csv", orbit_csv(t)});
  if (c.flag("svg", true)) r.files.push_back({"orbit.svg", orbit_svg(t)});
  r.report["command"] = "orbit";
  r.report["backend"] = backend_name(c.backend);
  r.report["steps"] = steps;
  r.report["bits"] = t.bits;
  r.report["phi_monotone_certified"] = t.phi_monotone;
  r.exit_code = t.phi_monotone ? kExitPass : kExitViolation;
  return r;
}

CommandResult cmd_plot(const RunConfig& c) {
  c.check_keys({"start", "steps"});
  ExactPoint start = c.point("start", default_orbit_start());
  std::uint64_t steps = c.u64("steps", 200);
  OrbitTrace t = trace_orbit(start, steps, c.backend, c.policy);
  CommandResult r;
  r.files.push_back({"orbit.svg", orbit_svg(t)});
  r.report["command"] = "plot";
  r.report["steps"] = steps;
  r.report["phi_monotone_certified"] = t.phi_monotone;
  r.exit_code = t.phi_monotone ? kExitPass : kExitViolation;
  return r;
}

CommandResult cmd_verify_props(const RunConfig& c) {
  c.check_keys({"eps", "samples", "large_samples", "fvh_samples", "fvh_eps", "fvh_cap",
                "skip_samples", "skip_eps", "skip_D"});
  PropsParams P;
  if (c.has("eps")) P.eps = c.rationals("eps");
  P.samples = c.u64("samples", P.samples);
  P.large_samples = c.u64("large_samples", P.large_samples);
  P.fvh_samples = c.u64("fvh_samples", P.fvh_samples);
  P.fvh_eps = c.rational("fvh_eps", P.fvh_eps);
  P.fvh_cap = c.u64("fvh_cap", P.fvh_cap);
  P.skip_samples = c.u64("skip_samples", P.skip_samples);
  P.skip_eps = c.rational("skip_eps", P.skip_eps);
  P.skip_D = c.u64("skip_D", P.skip_D);
  P.seed = c.seed;
  P.options = tracker_options(c);
  std::vector<SweepResult> res = verify_props(P);
  CommandResult r;
  r.report["command"] = "verify-props";
  r.report["seed"] = c.seed;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  bool violation = false, undecided = false;
  for (const SweepResult& s : res) {
    arr.push_back(sweep_to_json(s));
    violation = violation || s.violations > 0;
    undecided = undecided || s.undecided > 0;
  }
  r.report["sweeps"] = arr;
  r.exit_code = violation ? kExitViolation : undecided ? kExitUndecided : kExitPass;
  return r;
}

CommandResult cmd_rpt(const RunConfig& c) {
  c.check_keys({"tournament", "d", "samples", "tolerance"});
  RptParams P;
  P.tournament = parse_tournament_spec(c.str("tournament", "cycle3"));
  P.d = static_cast<unsigned>(c.u64("d", 5));
  P.samples = c.u64("samples", P.samples);
  P.tolerance = c.rational("tolerance", P.tolerance);
  P.seed = c.seed;
  if (P.samples == 0) throw Error(ErrorCode::kParse, "samples must be positive");
  RptReport rep = run_rpt(P);
  CommandResult r;
  std::string csv = "candidate,exact,monte_carlo\n";
  nlohmann::ordered_json ex = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rep.exact.dim(); ++i) {
    Rational f = frac(static_cast<unsigned long>(rep.counts[i]), static_cast<unsigned long>(P.samples));
    csv += std::to_string(i + 1) + "," + to_decimal(rep.exact[i], kCsvDigits) + "," +
           to_decimal(f, kCsvDigits) + "\n";
    ex.push_back(to_string(rep.exact[i]));
  }
  r.files.push_back({"distribution.csv", csv});
  r.report["command"] = "rpt";
  r.report["n"] = P.tournament.n();
  r.report["d"] = P.d;
  r.report["samples"] = P.samples;
  r.report["seed"] = P.seed;
  r.report["exact"] = ex;
  r.report["counts"] = rep.counts;
  r.report["tv"] = to_decimal(rep.tv, 6);
  r.report["tv_shifted_d_minus_1"] = to_decimal(rep.tv_shifted, 6);
  r.report["tolerance"] = to_string(P.tolerance);
  r.report["pass"] = rep.pass;
  r.exit_code = rep.pass ? kExitPass : kExitViolation;
  return r;
}

CommandResult cmd_sixpoints(const RunConfig& c) {
  c.check_keys({"eps", "window", "eps1_divisor", "cap", "d_lo", "min_coverage", "chain"});
  Rational eps = c.rational("eps", Rational(1, 5));
  std::uint64_t window = c.u64("window", 100);
  std::uint64_t div = c.u64("eps1_divisor", 10);
  std::uint64_t cap = c.u64("cap", 100000);
  Rational min_cov = c.rational("min_coverage", Rational(99, 100));
  if (div == 0) throw Error(ErrorCode::kParse, "eps1_divisor must be positive");
  TrackerOptions o = tracker_options(c);

  SeedTriple s = seed_triple(eps, cap, o);
  Rational eps1 = eps / static_cast<unsigned long>(div);
  std::uint64_t d2 = empirical_d2(s.points, eps1, cap, o);
  AmplifiedTriple am = amplify_triple(s.points, d2, eps, cap, o);
  std::vector<OrbitRef> six(s.points.begin(), s.points.end());
  six.insert(six.end(), am.points.begin(), am.points.end());
  std::uint64_t d0 = d0_search(s.points[0], eps1 * eps1 * eps1, cap, o);
  std::uint64_t d_lo = c.u64("d_lo", d0);
  SixPointCertificate cert = coverage_scan(six, eps, d_lo, d_lo + window, o);
  cert.d0_used = d0;
  std::size_t failed = recheck_certificate(cert, o);

  CommandResult r;
  nlohmann::ordered_json cj = certificate_to_json(cert);
  r.files.push_back({"certificate.json", cj.dump(2) + "\n"});
  r.report["command"] = "sixpoints";
  r.report["eps"] = to_string(eps);
  r.report["seed_point"] = {to_string(s.a0[0]), to_string(s.a0[1]), to_string(s.a0[2])};
  r.report["seed_hits"] = s.hits;
  r.report["eps1"] = to_string(eps1);
  r.report["D2"] = d2;
  r.report["amplify_hits"] = am.hits;
  r.report["d0"] = d0;
  r.report["window"] = {{"d_lo", cert.d_lo}, {"d_hi", cert.d_hi}};
  r.report["covered"] = cert.coverage.size() - cert.violations.size();
  r.report["total"] = cert.coverage.size();
  r.report["all_certified"] = cert.all_certified();
  r.report["recheck_failures"] = failed;
  bool chain = c.flag("chain", eps < Rational(1, 10));
  if (chain) r.report["parameter_chain"] = chain_to_json(full_parameter_chain(eps, cap));
  Rational cov = frac(cert.coverage.size() - cert.violations.size(), cert.coverage.size());
  bool pass = cov >= min_cov && failed == 0;
  r.report["pass"] = pass && cert.all_certified();
  r.exit_code = !cert.all_certified() ? kExitUndecided : pass ? kExitPass : kExitViolation;
  return r;
}

CommandResult cmd_theorem_demo(const RunConfig& c) {
  c.check_keys({"delta", "q", "window", "picks", "points", "d_lo", "cross_n", "cross_d", "cap",
                "min_fraction"});
  DemoParams P;
  P.delta = c.rational("delta", P.delta);
  P.q = c.u64("q", P.q);
  P.window = c.u64("window", P.window);
  P.picks = c.u64("picks", P.picks);
  P.points = c.points("points");
  P.d_lo = c.u64("d_lo", 0);
  P.cross_n = c.u64("cross_n", P.cross_n);
  P.cross_d = c.u64("cross_d", P.cross_d);
  P.cap = c.u64("cap", P.cap);
  P.options = tracker_options(c);
  Rational min_frac = c.rational("min_fraction", Rational(99, 100));
  TheoremDemoReport rep = theorem_demo(P);
  CommandResult r;
  r.report = demo_to_json(rep);
  r.report["command"] = "theorem-demo";
  Rational fraction = frac(rep.meeting, rep.entries.size());
  bool cross = std::all_of(rep.cross.begin(), rep.cross.end(), [](const CrossCheck& x) { return x.agree; });
  bool pass = fraction >= min_frac && rep.sizes_ok && cross;
  r.report["pass"] = pass;
  r.exit_code = pass ? kExitPass : kExitViolation;
  return r;
}

CommandResult run_command(const std::string& name, const RunConfig& config) {
  try {
    if (name == "orbit") return cmd_orbit(config);
    if (name == "plot") return cmd_plot(config);
    if (name == "verify-props") return cmd_verify_props(config);
    if (name == "rpt") return cmd_rpt(config);
    if (name == "sixpoints") return cmd_sixpoints(config);
    if (name == "theorem-demo") return cmd_theorem_demo(config);
    throw Error(ErrorCode::kParse, "unknown subcommand '" + name + "'");
  } catch (const Error& e) {
    CommandResult r;
    r.report["command"] = name;
    r.report["error"] = e.what();
    switch (e.code()) {
      case ErrorCode::kUndecidedAtCap: r.exit_code = kExitUndecided; break;
      case ErrorCode::kCapExceeded: r.exit_code = kExitViolation; break;
      default: r.exit_code = kExitUsage; break;
    }
    return r;
  }
}

void write_outputs(const CommandResult& result, const std::string& name, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir + ": " + ec.message());
  auto put = [&](const std::string& file, const std::string& content) {
    std::ofstream out(fs::path(dir) / file, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + file);
    out << content;
    if (!out) throw Error(ErrorCode::kIo, "write failed for " + file);
  };
  for (const OutputFile& f : result.files) put(f.name, f.content);
  std::string base = name;
  std::replace(base.begin(), base.end(), '-', '_');
  put(base + "_report.json", result.report.dump(2) + "\n");
}

}  // namespace volterra
