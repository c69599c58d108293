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

#include "volterra/sixpoints.hpp"

#include <algorithm>
#include <numeric>

#include "volterra/error.hpp"

namespace volterra {

namespace {

ExactPoint seed_point(const Rational& eps) {
  Rational h = eps / 2;
  return make_simplex({h, h, Rational(1 - eps)});
}

Verdict x_close(OrbitTracker& t, const Rational& eps) {
  return t.evaluate([&](const ExactPoint& q) { return close_corner(q, eps, Corner::kX); },
                    [&](const IntervalPoint& q) { return close_corner(q, eps, Corner::kX); });
}

// Tracker options for the independent recheck: a different hand-off point
// and starting precision, so no intermediate value is shared.
TrackerOptions recheck_options(TrackerOptions o) {
  o.exact_bits = std::max<std::size_t>(64, o.exact_bits / 4);
  o.policy.start_bits = std::min(o.policy.cap_bits, o.policy.start_bits * 2);
  return o;
}

}  // namespace

ExactPoint materialize(const OrbitRef& p, std::size_t exact_cap) {
  return v_iterate(p.source, p.steps, exact_cap);
}

std::array<Rational, 3> approximate(const OrbitRef& p, const TrackerOptions& options) {
  OrbitTracker t(p, options);
  if (t.exact()) {
    ExactPoint e = t.exact_point();
    return {e[0], e[1], e[2]};
  }
  IntervalPoint ip = t.enclosure();
  return {ip[0].lo().to_rational(), ip[1].lo().to_rational(), ip[2].lo().to_rational()};
}

SeedTriple seed_triple(const Rational& eps, std::uint64_t cap, const TrackerOptions& options) {
  if (sgn(eps) <= 0 || eps >= Rational(1, 2)) {
    throw Error(ErrorCode::kPrecondition, "seed eps must lie in (0, 1/2), got " + to_string(eps));
  }
  SeedTriple s;
  s.eps = eps;
  s.a0 = seed_point(eps);
  ExactPoint start = s.a0;
  for (std::size_t k = 0; k < 3; ++k) {
    s.hits[k] = hit_corner(start, eps, Corner::kX, cap, options);
    s.points[k] = OrbitRef{start, s.hits[k]};
    start = rotate(start);
  }
  return s;
}

AmplifiedTriple amplify_triple(const std::array<OrbitRef, 3>& abc, std::uint64_t d2,
                               const Rational& eps, std::uint64_t cap,
                               const TrackerOptions& options) {
  AmplifiedTriple out;
  out.d2 = d2;
  for (std::size_t k = 0; k < 3; ++k) {
    out.hits[k] = hit_corner(abc[k].advanced(d2), eps, Corner::kX, cap, options);
    out.points[k] = abc[k].advanced(d2 + out.hits[k]);
  }
  return out;
}

std::uint64_t empirical_d2(const std::array<OrbitRef, 3>& abc, const Rational& eps1,
                           std::uint64_t cap, const TrackerOptions& options) {
  std::uint64_t d2 = 0;
  for (const OrbitRef& p : abc) d2 = std::max(d2, first_vertex_hit(p, eps1, cap, options).step);
  return d2;
}

ParameterChain full_parameter_chain(const Rational& eps, std::uint64_t cap) {
  if (sgn(eps) <= 0 || eps >= Rational(1, 10)) {
    throw Error(ErrorCode::kPrecondition, "chain eps must lie in (0, 1/10)");
  }
  ParameterChain c;
  c.eps = eps;
  SeedTriple s = seed_triple(eps, cap);
  c.d1 = static_cast<unsigned long>(*std::max_element(s.hits.begin(), s.hits.end()));
  c.eps1 = skipcorner2_eps(eps, c.d1);
  c.eps1.note = "skipcorner2 with (eps, D1)";
  c.d2 = epsclose_D_bound(std::get<Rational>(c.eps1.value));
  c.d2.note = "epsclosecompact with eps1; log base e, rounded up";
  c.d3.name = "D3";
  c.d3.eps = eps;
  c.d3.D = c.d2.D + 3;
  c.d3.value = Rational(c.d3.D);
  c.d3.lower_bound = true;
  c.d3.note = "D2 plus three hitting times, each at least 1";
  // A larger D3 only shrinks eps2, so this is an upper bound on eps2.
  c.eps2 = skipcorner_eps(std::get<Rational>(c.eps1.value), c.d3.D);
  c.eps2.lower_bound = true;
  c.eps2.note = "skipcorner with (eps1, D3); upper bound since D3 is a lower bound";
  c.d0_condition = "least d0 > 0 with phi(V^d0(a)) < eps2^3 (not executed)";
  return c;
}

double SixPointCertificate::coverage_fraction() const {
  if (coverage.empty()) return 0.0;
  std::size_t hit = std::count_if(coverage.begin(), coverage.end(),
                                  [](const CoverageEntry& e) { return e.witness.has_value(); });
  return static_cast<double>(hit) / static_cast<double>(coverage.size());
}

bool SixPointCertificate::all_certified() const {
  return std::none_of(coverage.begin(), coverage.end(),
                      [](const CoverageEntry& e) { return e.verdict == Verdict::kUndecided; });
}

SixPointCertificate coverage_scan(const std::vector<OrbitRef>& points, const Rational& eps,
                                  std::uint64_t d_lo, std::uint64_t d_hi,
                                  const TrackerOptions& options, std::size_t workers) {
  if (d_hi < d_lo) throw Error(ErrorCode::kPrecondition, "window needs d_hi >= d_lo");
  if (sgn(eps) <= 0 || eps >= 1) throw Error(ErrorCode::kPrecondition, "eps must lie in (0, 1)");
  SixPointCertificate cert;
  cert.eps = eps;
  cert.points = points;
  cert.d_lo = d_lo;
  cert.d_hi = d_hi;
  std::uint64_t len = d_hi - d_lo + 1;
  std::size_t m = points.size();
  std::vector<std::vector<Verdict>> verdicts(m, std::vector<Verdict>(len));
  cert.max_bits.assign(m, 0);
  cert.escalations.assign(m, 0);
  parallel_ranges(m, workers, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    for (std::uint64_t i = begin; i < end; ++i) {
      OrbitTracker t(points[i].advanced(d_lo), options);
      for (std::uint64_t k = 0; k < len; ++k) {
        if (k > 0) t.advance();
        verdicts[i][k] = x_close(t, eps);
      }
      cert.max_bits[i] = t.max_bits();
      cert.escalations[i] = t.escalations();
    }
  });
  for (std::uint64_t k = 0; k < len; ++k) {
    CoverageEntry e;
    e.d = d_lo + k;
    bool undecided = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (verdicts[i][k] == Verdict::kTrue) {
        e.witness = i;
        break;
      }
      undecided = undecided || verdicts[i][k] == Verdict::kUndecided;
    }
    e.verdict = e.witness ? Verdict::kTrue : undecided ? Verdict::kUndecided : Verdict::kFalse;
    if (!e.witness) cert.violations.push_back(e.d);
    cert.coverage.push_back(e);
  }
  return cert;
}

std::size_t recheck_certificate(const SixPointCertificate& cert, const TrackerOptions& options) {
  TrackerOptions o = recheck_options(options);
  std::size_t failed = 0;
  for (const OrbitRef& p : cert.points) {
    OrbitTracker t(p, o);
    if (x_close(t, cert.eps) != Verdict::kTrue) ++failed;
  }
  for (std::size_t i = 0; i < cert.points.size(); ++i) {
    OrbitTracker t(cert.points[i], o);
    for (const CoverageEntry& e : cert.coverage) {
      if (!e.witness || *e.witness != i) continue;
      t.advance(e.d - t.position());
      if (x_close(t, cert.eps) != Verdict::kTrue) ++failed;
    }
  }
  return failed;
}

std::uint64_t d0_search(const OrbitRef& p, long log2_threshold, std::uint64_t cap,
                        const TrackerOptions& options) {
  Rational thr = 1;
  if (log2_threshold >= 0) {
    mpz_mul_2exp(thr.get_num_mpz_t(), thr.get_num_mpz_t(), log2_threshold);
  } else {
    mpz_mul_2exp(thr.get_den_mpz_t(), thr.get_den_mpz_t(), -log2_threshold);
  }
  return d0_search(p, thr, cap, options);
}

std::uint64_t d0_search(const OrbitRef& p, const Rational& threshold, std::uint64_t cap,
                        const TrackerOptions& options) {
  if (p.source.dim() != 3) throw Error(ErrorCode::kDimensionMismatch, "d0_search needs 3 coordinates");
  OrbitTracker t(p, options);
  if (t.exact()) {
    ExactPoint e = t.exact_point();
    if (sgn(e[0]) <= 0 || sgn(e[1]) <= 0 || sgn(e[2]) <= 0 || e == uniform_point(3)) {
      throw Error(ErrorCode::kPrecondition, "point must be interior and not the barycenter");
    }
  }
  for (std::uint64_t d = 1; d <= cap; ++d) {
    t.advance();
    Verdict v = t.evaluate([&](const ExactPoint& q) { return compare(phi(q), Cmp::kLt, threshold); },
                           [&](const IntervalPoint& q) { return compare(phi(q), Cmp::kLt, threshold); });
    if (v == Verdict::kTrue) return d;
    if (v == Verdict::kUndecided) {
      throw Error(ErrorCode::kUndecidedAtCap, "potential test at step " + std::to_string(d));
    }
  }
  throw Error(ErrorCode::kCapExceeded, "potential stays above the threshold for " +
                                           std::to_string(cap) + " steps");
}

std::array<std::size_t, 3> grid_round(const std::array<Rational, 3>& p, std::size_t q) {
  if (q == 0) throw Error(ErrorCode::kPrecondition, "grid denominator must be positive");
  std::array<std::size_t, 3> sizes{};
  std::array<Rational, 3> rem;
  std::size_t used = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational s = p[i] * static_cast<unsigned long>(q);
    if (sgn(s) < 0) s = 0;
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    if (f > static_cast<unsigned long>(q)) f = static_cast<unsigned long>(q);
    sizes[i] = f.get_ui();
    rem[i] = s - f;
    used += sizes[i];
  }
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
  for (std::size_t k = 0; used < q; ++k, ++used) ++sizes[order[k % 3]];
  while (used > q) {
    // Only reachable when the inputs overshoot the simplex.
    std::size_t big = std::max_element(sizes.begin(), sizes.end()) - sizes.begin();
    --sizes[big];
    --used;
  }
  return sizes;
}

std::vector<TripartiteTournament> points_to_tournaments(const std::vector<OrbitRef>& points,
                                                        std::size_t q,
                                                        const TrackerOptions& options) {
  std::vector<TripartiteTournament> out;
  for (const OrbitRef& p : points) {
    std::array<std::size_t, 3> sizes = grid_round(approximate(p, options), q);
    for (std::size_t s : sizes) {
      if (s == 0) throw Error(ErrorCode::kEmptyPart, "a coordinate rounds to zero at q=" + std::to_string(q));
    }
    out.push_back(build_tripartite_transitive(sizes));
  }
  return out;
}

nlohmann::ordered_json orbit_ref_to_json(const OrbitRef& p) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json src = nlohmann::ordered_json::array();
  for (const Rational& c : p.source.coords()) src.push_back(to_string(c));
  j["source"] = src;
  j["steps"] = p.steps;
  return j;
}

OrbitRef orbit_ref_from_json(const nlohmann::json& j) {
  try {
    std::vector<Rational> c;
    for (const auto& s : j.at("source")) c.push_back(parse_rational(s.get<std::string>()));
    return OrbitRef{make_simplex(c), j.at("steps").get<std::uint64_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("orbit reference: ") + e.what());
  }
}

nlohmann::ordered_json certificate_to_json(const SixPointCertificate& cert) {
  nlohmann::ordered_json j;
  j["eps"] = to_string(cert.eps);
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cert.points.size(); ++i) {
    nlohmann::ordered_json p;
    p["name"] = i < kSixPointNames.size() ? kSixPointNames[i] : std::to_string(i);
    nlohmann::ordered_json r = orbit_ref_to_json(cert.points[i]);
    p["source"] = r["source"];
    p["steps"] = r["steps"];
    pts.push_back(p);
  }
  j["points"] = pts;
  j["window"] = {{"d_lo", cert.d_lo}, {"d_hi", cert.d_hi}};
  j["d0_used"] = cert.d0_used;
  std::size_t covered = cert.coverage.size() - cert.violations.size();
  j["covered"] = covered;
  j["total"] = cert.coverage.size();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const CoverageEntry& e : cert.coverage) {
    nlohmann::ordered_json x;
    x["d"] = e.d;
    if (e.witness) {
      x["witness_point"] = *e.witness < kSixPointNames.size() ? kSixPointNames[*e.witness]
                                                             : std::to_string(*e.witness);
    } else {
      x["witness_point"] = nullptr;
    }
    x["verdict"] = verdict_name(e.verdict);
    entries.push_back(x);
  }
  j["coverage"] = entries;
  j["violations"] = cert.violations;
  j["precision"] = {{"max_bits", cert.max_bits}, {"escalations", cert.escalations}};
  return j;
}

nlohmann::ordered_json chain_to_json(const ParameterChain& c) {
  nlohmann::ordered_json j;
  j["eps"] = to_string(c.eps);
  j["D1"] = {{"value", c.d1.get_str()}, {"note", "max of the seed hitting times"}};
  j["eps1"] = bound_to_json(c.eps1);
  j["D2"] = bound_to_json(c.d2);
  j["D3"] = bound_to_json(c.d3);
  j["eps2"] = bound_to_json(c.eps2);
  j["d0"] = c.d0_condition;
  return j;
}

}  // namespace volterra
