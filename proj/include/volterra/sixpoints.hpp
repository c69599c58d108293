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

#ifndef VOLTERRA_SIXPOINTS_HPP_
#define VOLTERRA_SIXPOINTS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "volterra/bounds.hpp"
#include "volterra/orbit.hpp"
#include "volterra/parallel.hpp"
#include "volterra/spiral.hpp"
#include "volterra/tournament.hpp"

namespace volterra {

// Points are carried as orbit references: the exact rational point reached
// after `steps` iterations from an exact source. Long orbits are never
// materialized; materialize() does it when the step count is small.
ExactPoint materialize(const OrbitRef& p, std::size_t exact_cap = kDefaultExactStepCap);

// Rational approximations of the coordinates (exact while the orbit is in
// its exact phase, lower interval endpoints after).
std::array<Rational, 3> approximate(const OrbitRef& p, const TrackerOptions& options = {});

struct SeedTriple {
  Rational eps;
  ExactPoint a0;
  // Hitting times of the x corner from a0, R(a0), R^2(a0).
  std::array<std::uint64_t, 3> hits{};
  std::array<OrbitRef, 3> points;
};

// a0 = (eps/2, eps/2, 1 - eps); each of a0, R(a0), R^2(a0) is advanced to
// its first x-corner visit. Requires 0 < eps < 1/2.
SeedTriple seed_triple(const Rational& eps, std::uint64_t cap,
                       const TrackerOptions& options = {});

struct AmplifiedTriple {
  std::uint64_t d2 = 0;
  // d_x(V^D2(p), eps) for each source point.
  std::array<std::uint64_t, 3> hits{};
  std::array<OrbitRef, 3> points;
};

// A = V^(D2 + d_x(V^D2(a), eps))(a), likewise for b and c.
AmplifiedTriple amplify_triple(const std::array<OrbitRef, 3>& abc, std::uint64_t d2,
                               const Rational& eps, std::uint64_t cap,
                               const TrackerOptions& options = {});

// Largest first-vertex-hit time over the three points at eps1.
std::uint64_t empirical_d2(const std::array<OrbitRef, 3>& abc, const Rational& eps1,
                           std::uint64_t cap, const TrackerOptions& options = {});

struct ParameterChain {
  Rational eps;
  mpz_class d1;
  BoundReport eps1;
  BoundReport d2;
  BoundReport d3;
  BoundReport eps2;
  std::string d0_condition;
};

// The proof's constants, reported symbolically. D3 depends on hitting times
// at the unreachable scale D2, so it is reported as the lower bound D2 + 3.
// Requires 0 < eps < 1/10.
ParameterChain full_parameter_chain(const Rational& eps, std::uint64_t cap = 100000);

struct CoverageEntry {
  std::uint64_t d = 0;
  // Index of the first point certified eps-close to the x corner.
  std::optional<std::size_t> witness;
  Verdict verdict = Verdict::kFalse;
};

struct SixPointCertificate {
  Rational eps;
  std::vector<OrbitRef> points;
  std::uint64_t d_lo = 0;
  std::uint64_t d_hi = 0;
  std::uint64_t d0_used = 0;
  std::vector<CoverageEntry> coverage;
  std::vector<std::uint64_t> violations;
  std::vector<std::size_t> max_bits;
  std::vector<std::uint64_t> escalations;

  double coverage_fraction() const;
  bool all_certified() const;
};

inline const std::array<const char*, 6> kSixPointNames = {"a", "b", "c", "A", "B", "C"};

// For every d in [d_lo, d_hi] records which point, if any, has V^d certified
// eps-close to the x corner. Undecided and uncovered d are violations.
SixPointCertificate coverage_scan(const std::vector<OrbitRef>& points, const Rational& eps,
                                  std::uint64_t d_lo, std::uint64_t d_hi,
                                  const TrackerOptions& options = {},
                                  std::size_t workers = default_workers());

// Independent recheck: every point is x-close at step 0 and every claimed
// witness holds. Returns the number of failed claims.
std::size_t recheck_certificate(const SixPointCertificate& cert,
                                const TrackerOptions& options = {});

// Least d >= 1 with phi(V^d(p)) certified below 2^log2_threshold.
std::uint64_t d0_search(const OrbitRef& p, long log2_threshold, std::uint64_t cap,
                        const TrackerOptions& options = {});
// Same with a rational threshold.
std::uint64_t d0_search(const OrbitRef& p, const Rational& threshold, std::uint64_t cap,
                        const TrackerOptions& options = {});

// Largest-remainder rounding of a point to (1/q)Z^3 on the simplex; ties go
// to the lower index. Returns the part sizes.
std::array<std::size_t, 3> grid_round(const std::array<Rational, 3>& p, std::size_t q);

// One tripartite tournament on q vertices per point, parts sized by
// grid_round and intra-part edges transitive by index. Throws kEmptyPart.
std::vector<TripartiteTournament> points_to_tournaments(const std::vector<OrbitRef>& points,
                                                        std::size_t q,
                                                        const TrackerOptions& options = {});

nlohmann::ordered_json orbit_ref_to_json(const OrbitRef& p);
OrbitRef orbit_ref_from_json(const nlohmann::json& j);
nlohmann::ordered_json certificate_to_json(const SixPointCertificate& cert);
nlohmann::ordered_json chain_to_json(const ParameterChain& chain);

}  // namespace volterra

#endif  // VOLTERRA_SIXPOINTS_HPP_
