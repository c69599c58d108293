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

#include "volterra/spiral.hpp"

#include <string>

#include "volterra/error.hpp"

namespace volterra {

std::string_view corner_name(Corner c) {
  switch (c) {
    case Corner::kX: return "x";
    case Corner::kY: return "y";
    case Corner::kZ: return "z";
  }
  return "?";
}

std::string_view side_name(Side s) {
  switch (s) {
    case Side::kXY: return "xy";
    case Side::kYZ: return "yz";
    case Side::kXZ: return "xz";
  }
  return "?";
}

namespace {

template <typename P>
void check3(const P& p) {
  if (p.dim() != 3) {
    throw Error(ErrorCode::kDimensionMismatch,
                "spiral point needs 3 coordinates, got " + std::to_string(p.dim()));
  }
}

void check_eps(const Rational& eps) {
  if (sgn(eps) <= 0 || eps >= 1) {
    throw Error(ErrorCode::kPrecondition, "eps must lie in (0, 1), got " + to_string(eps));
  }
}

std::size_t opposite(Side s) {
  switch (s) {
    case Side::kXY: return 2;
    case Side::kYZ: return 0;
    case Side::kXZ: return 1;
  }
  return 0;
}

bool in_open_simplex(const ExactPoint& p) {
  for (const Rational& c : p.coords()) {
    if (sgn(c) <= 0) return false;
  }
  return true;
}

void check_orbit_start(const ExactPoint& p) {
  check3(p);
  if (!in_open_simplex(p)) {
    throw Error(ErrorCode::kPrecondition, "point must lie in the open simplex");
  }
  if (p == uniform_point(3)) {
    throw Error(ErrorCode::kPrecondition, "the barycenter is fixed and never nears a corner");
  }
}

}  // namespace

ExactPoint v_step(const ExactPoint& p) {
  check3(p);
  const Rational &x = p[0], &y = p[1], &z = p[2];
  return ExactPoint::unchecked({x * (1 + y - z), y * (1 + z - x), z * (1 + x - y)});
}

IntervalPoint v_step(const IntervalPoint& p) {
  check3(p);
  std::size_t prec = p[0].prec();
  Interval unit(BigFloat(), BigFloat(1, 0), prec);
  Interval x = intersect(p[0], unit), y = intersect(p[1], unit), z = intersect(p[2], unit);
  // On the simplex 1 + y - z = x + 2y, so every factor is a sum of
  // nonnegative terms and no cancellation occurs.
  Interval two = Interval::point(2, prec);
  Interval nx = x * (x + two * y);
  Interval ny = y * (y + two * z);
  Interval nz = z * (z + two * x);
  Interval one = Interval::point(1, prec);
  // Each coordinate is also one minus the other two; intersecting keeps a
  // coordinate near 1 as tight as the two small ones.
  Interval rx = intersect(intersect(nx, one - (ny + nz)), unit);
  Interval ry = intersect(intersect(ny, one - (nx + nz)), unit);
  Interval rz = intersect(intersect(nz, one - (nx + ny)), unit);
  return IntervalPoint::unchecked({rx, ry, rz});
}

ExactPoint v_iterate(const ExactPoint& p, std::size_t t, std::size_t exact_cap) {
  check3(p);
  return iterate(operator_of(Tournament::cycle3()), p, t, exact_cap);
}

IntervalPoint v_iterate(const IntervalPoint& p, std::size_t t) {
  IntervalPoint q = p;
  for (std::size_t k = 0; k < t; ++k) q = v_step(q);
  return q;
}

ExactPoint rotate(const ExactPoint& p) {
  check3(p);
  return ExactPoint::unchecked({p[1], p[2], p[0]});
}

IntervalPoint rotate(const IntervalPoint& p) {
  check3(p);
  return IntervalPoint::unchecked({p[1], p[2], p[0]});
}

Rational phi(const ExactPoint& p) {
  check3(p);
  return p[0] * p[1] * p[2];
}

Interval phi(const IntervalPoint& p) {
  check3(p);
  return p[0] * p[1] * p[2];
}

Verdict phi_step_nonincreasing(const ExactPoint& p) {
  check3(p);
  const Rational &x = p[0], &y = p[1], &z = p[2];
  return to_verdict((1 + y - z) * (1 + z - x) * (1 + x - y) <= 1);
}

Verdict phi_step_nonincreasing(const IntervalPoint& p) {
  check3(p);
  std::size_t prec = p[0].prec();
  Interval one = Interval::point(1, prec);
  Interval u = p[1] - p[2], v = p[2] - p[0], w = p[0] - p[1];
  Verdict direct = compare((one + u) * (one + v) * (one + w), Cmp::kLe, Rational(1));
  if (direct != Verdict::kUndecided) return direct;
  Interval half = Interval::point(Rational(1, 2), prec);
  Interval bound = half * (sqr(abs(u) - abs(v)) + sqr(w)) + abs(u) * abs(v) * (one - abs(w));
  return compare(bound, Cmp::kGe, Rational(0));
}

Verdict in_M(const ExactPoint& p, const Rational& eps) {
  check3(p);
  check_eps(eps);
  return compare(inf_dist(p, uniform_point(3)), Cmp::kGe, eps);
}

Verdict in_M(const IntervalPoint& p, const Rational& eps) {
  check3(p);
  check_eps(eps);
  return compare(inf_dist(p, enclose(uniform_point(3), p[0].prec())), Cmp::kGe, eps);
}

Verdict close_corner(const ExactPoint& p, const Rational& eps, Corner c) {
  check3(p);
  check_eps(eps);
  return compare(Rational(1 - p[static_cast<std::size_t>(c)]), Cmp::kLe, eps);
}

Verdict close_corner(const IntervalPoint& p, const Rational& eps, Corner c) {
  check3(p);
  check_eps(eps);
  std::size_t k = static_cast<std::size_t>(c);
  Interval one = Interval::point(1, p[0].prec());
  Interval dist = intersect(one - p[k], p[(k + 1) % 3] + p[(k + 2) % 3]);
  return compare(dist, Cmp::kLe, eps);
}

Verdict close_side(const ExactPoint& p, const Rational& eps, Side s) {
  check3(p);
  check_eps(eps);
  return compare(p[opposite(s)], Cmp::kLe, eps);
}

Verdict close_side(const IntervalPoint& p, const Rational& eps, Side s) {
  check3(p);
  check_eps(eps);
  return compare(p[opposite(s)], Cmp::kLe, eps);
}

std::uint64_t hit_corner(const ExactPoint& p, const Rational& eps, Corner c, std::uint64_t cap,
                         const TrackerOptions& options) {
  return hit_corner(OrbitRef{p, 0}, eps, c, cap, options);
}

std::uint64_t hit_corner(const OrbitRef& p, const Rational& eps, Corner c, std::uint64_t cap,
                         const TrackerOptions& options) {
  check_orbit_start(p.source);
  check_eps(eps);
  if (cap < 1) throw Error(ErrorCode::kPrecondition, "cap must be at least 1");
  OrbitTracker tracker(p, options);
  for (std::uint64_t i = 1; i <= cap; ++i) {
    tracker.advance();
    Verdict v = tracker.evaluate(
        [&](const ExactPoint& q) { return close_corner(q, eps, c); },
        [&](const IntervalPoint& q) { return close_corner(q, eps, c); });
    if (v == Verdict::kTrue) return i;
    if (v == Verdict::kUndecided) {
      throw Error(ErrorCode::kUndecidedAtCap,
                  "corner test at step " + std::to_string(i) + " undecided at " +
                      std::to_string(tracker.bits()) + " bits");
    }
  }
  throw Error(ErrorCode::kCapExceeded, "no " + std::string(corner_name(c)) +
                                           "-corner visit within " + std::to_string(cap) +
                                           " steps");
}

bool easybounds_check(const ExactPoint& p) {
  check3(p);
  if (!in_open_simplex(p)) throw Error(ErrorCode::kPrecondition, "point must lie in the open simplex");
  ExactPoint q = v_step(p);
  for (std::size_t i = 0; i < 3; ++i) {
    if (q[i] > 2 * p[i]) return false;
    Rational a = 1 - p[i];
    if (a * a > 1 - q[i]) return false;
  }
  return true;
}

bool decay_check(const ExactPoint& p, const Rational& eps, bool secondary) {
  check3(p);
  if (in_M(p, eps) != Verdict::kTrue) {
    throw Error(ErrorCode::kNotInM, "point is closer than " + to_string(eps) + " to the barycenter");
  }
  Rational e3 = eps * eps * eps;
  if (phi(v_step(p)) > (1 - e3) * phi(p)) return false;
  if (secondary) {
    const Rational &x = p[0], &y = p[1], &z = p[2];
    Rational factor = (1 + y - z) * (1 + z - x) * (1 + x - y);
    Rational k = 1 - eps * eps / 25 / 27;
    if (factor > k * k * k) return false;
  }
  return true;
}

VertexHit first_vertex_hit(const ExactPoint& p, const Rational& eps, std::uint64_t cap,
                           const TrackerOptions& options) {
  check3(p);
  if (in_M(p, eps) != Verdict::kTrue) {
    throw Error(ErrorCode::kNotInM, "point is closer than " + to_string(eps) + " to the barycenter");
  }
  return first_vertex_hit(OrbitRef{p, 0}, eps, cap, options);
}

VertexHit first_vertex_hit(const OrbitRef& p, const Rational& eps, std::uint64_t cap,
                           const TrackerOptions& options) {
  check3(p.source);
  check_eps(eps);
  OrbitTracker tracker(p, options);
  for (std::uint64_t f = 0; f <= cap; ++f) {
    if (f > 0) tracker.advance();
    Verdict undecided = Verdict::kFalse;
    for (Corner c : {Corner::kX, Corner::kY, Corner::kZ}) {
      Verdict v = tracker.evaluate(
          [&](const ExactPoint& q) { return close_corner(q, eps, c); },
          [&](const IntervalPoint& q) { return close_corner(q, eps, c); });
      if (v == Verdict::kTrue) return {f, c};
      if (v == Verdict::kUndecided) undecided = v;
    }
    if (undecided == Verdict::kUndecided) {
      throw Error(ErrorCode::kUndecidedAtCap,
                  "vertex test at step " + std::to_string(f) + " undecided at the cap");
    }
  }
  throw Error(ErrorCode::kCapExceeded,
              "no vertex visit within " + std::to_string(cap) + " steps");
}

std::optional<std::uint64_t> rotation_distance(const ExactPoint& a, const ExactPoint& b,
                                               std::uint64_t window, std::size_t exact_cap) {
  check3(a);
  check3(b);
  if (window > exact_cap) {
    throw Error(ErrorCode::kExactBlowup, "window " + std::to_string(window) +
                                             " exceeds exact cap " + std::to_string(exact_cap));
  }
  auto rotated = [](const ExactPoint& u, const ExactPoint& v) {
    return rotate(u) == v || rotate(v) == u;
  };
  ScaledVector fa = ScaledVector::from_point(a);
  ScaledVector fb = ScaledVector::from_point(b);
  VolterraOperator cyc = operator_of(Tournament::cycle3());
  for (std::uint64_t i = 0; i <= window; ++i) {
    if (i > 0) {
      fa = apply(cyc, fa);
      fb = apply(cyc, fb);
    }
    ExactPoint va = fa.to_point();
    ExactPoint vb = fb.to_point();
    // V^i(a) vs b covers i >= 0; a vs V^i(b) covers -i by equivariance.
    if (rotated(va, b) || rotated(a, vb)) return i;
  }
  return std::nullopt;
}

}  // namespace volterra
