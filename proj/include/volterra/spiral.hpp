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

#ifndef VOLTERRA_SPIRAL_HPP_
#define VOLTERRA_SPIRAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "volterra/orbit.hpp"
#include "volterra/qso.hpp"
#include "volterra/simplex.hpp"
#include "volterra/verdict.hpp"

namespace volterra {

// The Stein-Ulam spiral (x, y, z) -> (x(1+y-z), y(1+z-x), z(1+x-y)) on the
// 2-simplex: x beats y, y beats z, z beats x. All functions here expect
// three-dimensional points and throw Error(kDimensionMismatch) otherwise.

enum class Corner { kX = 0, kY = 1, kZ = 2 };
enum class Side { kXY, kYZ, kXZ };

std::string_view corner_name(Corner c);
std::string_view side_name(Side s);

ExactPoint v_step(const ExactPoint& p);
IntervalPoint v_step(const IntervalPoint& p);

// Exact form throws Error(kExactBlowup) beyond exact_cap steps.
ExactPoint v_iterate(const ExactPoint& p, std::size_t t,
                     std::size_t exact_cap = kDefaultExactStepCap);
IntervalPoint v_iterate(const IntervalPoint& p, std::size_t t);

// R(x, y, z) = (y, z, x).
ExactPoint rotate(const ExactPoint& p);
IntervalPoint rotate(const IntervalPoint& p);

// xyz.
Rational phi(const ExactPoint& p);
Interval phi(const IntervalPoint& p);

// Predicates take 0 < eps < 1 and throw Error(kPrecondition) otherwise.
// Sup-norm distance from the barycenter is at least eps.
// phi(V(p)) <= phi(p), i.e. (1+y-z)(1+z-x)(1+x-y) <= 1. On intervals the
// direct product is tried first; near the fixed points it cannot separate
// from 1, so the fallback certifies the lower bound
// 1 - product >= ((|u|-|v|)^2 + w^2)/2 + |u||v|(1-|w|) >= 0,
// u = y-z, v = z-x, w = x-y, which holds whenever u+v+w = 0.
Verdict phi_step_nonincreasing(const ExactPoint& p);
Verdict phi_step_nonincreasing(const IntervalPoint& p);

Verdict in_M(const ExactPoint& p, const Rational& eps);
Verdict in_M(const IntervalPoint& p, const Rational& eps);
// Sup-norm distance to the corner is at most eps. On the simplex that
// distance is one minus the corner's coordinate.
Verdict close_corner(const ExactPoint& p, const Rational& eps, Corner c);
Verdict close_corner(const IntervalPoint& p, const Rational& eps, Corner c);
// The coordinate opposite the side is at most eps.
Verdict close_side(const ExactPoint& p, const Rational& eps, Side s);
Verdict close_side(const IntervalPoint& p, const Rational& eps, Side s);

// Least i >= 1 with V^i(p) eps-close to corner c, certified. p must lie in
// the open simplex and differ from the barycenter (Error(kPrecondition)).
// Throws Error(kCapExceeded) after `cap` steps and Error(kUndecidedAtCap)
// if some step stays undecided at the precision cap.
std::uint64_t hit_corner(const ExactPoint& p, const Rational& eps, Corner c, std::uint64_t cap,
                         const TrackerOptions& options = {});
// Same, for an orbit point given by reference.
std::uint64_t hit_corner(const OrbitRef& p, const Rational& eps, Corner c, std::uint64_t cap,
                         const TrackerOptions& options = {});

// x' <= 2x and (1-x)^2 <= 1-x' for every coordinate, evaluated exactly.
// Requires the open simplex (Error(kPrecondition)).
bool easybounds_check(const ExactPoint& p);

// phi(V(p)) <= (1 - eps^3) phi(p), exact. Requires 0 < eps < 1
// (Error(kPrecondition)) and p in M(eps) (Error(kNotInM)). The inequality is
// only expected to hold for small eps; the sweeps use eps <= 1/10. With `secondary`
// set, also requires (1+y-z)(1+z-x)(1+x-y) <= (1 - (eps/5)^2/27)^3, the
// stronger per-step factor bound.
bool decay_check(const ExactPoint& p, const Rational& eps, bool secondary = false);

struct VertexHit {
  std::uint64_t step;
  Corner corner;
};

// Least f >= 0 such that V^f(p) is eps-close to some corner, certified.
// Requires in_M(p, eps) (Error(kNotInM)); otherwise as hit_corner.
VertexHit first_vertex_hit(const ExactPoint& p, const Rational& eps, std::uint64_t cap,
                           const TrackerOptions& options = {});
VertexHit first_vertex_hit(const OrbitRef& p, const Rational& eps, std::uint64_t cap,
                           const TrackerOptions& options = {});

// Minimal |i| <= window such that V^i(a) and b are rotated (R of one equals
// the other). Negative i is handled by iterating b forward instead. Exact;
// throws Error(kExactBlowup) if window exceeds exact_cap.
std::optional<std::uint64_t> rotation_distance(const ExactPoint& a, const ExactPoint& b,
                                               std::uint64_t window,
                                               std::size_t exact_cap = kDefaultExactStepCap);

}  // namespace volterra

#endif  // VOLTERRA_SPIRAL_HPP_
