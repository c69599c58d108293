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

#include "volterra/qso.hpp"

#include <string>

#include "volterra/error.hpp"

namespace volterra {

VolterraOperator::VolterraOperator(std::vector<std::vector<std::size_t>> beaters,
                                   std::vector<std::vector<std::size_t>> beaten)
    : beaters_(std::move(beaters)), beaten_(std::move(beaten)) {}

VolterraOperator operator_of(const Tournament& t) {
  std::vector<std::vector<std::size_t>> beaters(t.n()), beaten(t.n());
  for (std::size_t i = 0; i < t.n(); ++i) {
    beaters[i] = t.beaters_of(i);
    beaten[i] = t.beaten_by(i);
  }
  return VolterraOperator(std::move(beaters), std::move(beaten));
}

ScaledVector ScaledVector::from_point(const ExactPoint& p) {
  ScaledVector s;
  s.den = 1;
  for (const Rational& q : p.coords()) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), q.get_den_mpz_t());
  s.num.reserve(p.dim());
  for (const Rational& q : p.coords()) s.num.push_back(q.get_num() * (s.den / q.get_den()));
  return s;
}

ExactPoint ScaledVector::to_point() const {
  std::vector<Rational> c;
  c.reserve(num.size());
  for (const mpz_class& v : num) c.push_back(make_rational(v, den));
  return ExactPoint::unchecked(std::move(c));
}

namespace {

void check_dim(const VolterraOperator& v, std::size_t dim) {
  if (v.n() != dim) {
    throw Error(ErrorCode::kDimensionMismatch, "operator on " + std::to_string(v.n()) +
                                                   " candidates, point of dimension " +
                                                   std::to_string(dim));
  }
}

}  // namespace

ExactPoint apply(const VolterraOperator& v, const ExactPoint& x) {
  check_dim(v, x.dim());
  std::vector<Rational> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Rational f = 1;
    for (std::size_t j : v.beaters(i)) f -= x[j];
    for (std::size_t j : v.beaten(i)) f += x[j];
    out[i] = x[i] * f;
  }
  return ExactPoint::unchecked(std::move(out));
}

ScaledVector apply(const VolterraOperator& v, const ScaledVector& x) {
  check_dim(v, x.num.size());
  // On the simplex 1 - sum_A + sum_B = x_i + 2 sum_B, so with a shared
  // denominator D the new numerators are X_i (X_i + 2 S_i) over D^2.
  ScaledVector out;
  out.num.resize(x.num.size());
  mpz_class s;
  for (std::size_t i = 0; i < x.num.size(); ++i) {
    s = 0;
    for (std::size_t j : v.beaten(i)) s += x.num[j];
    s *= 2;
    s += x.num[i];
    out.num[i] = x.num[i] * s;
  }
  out.den = x.den * x.den;
  return out;
}

IntervalPoint apply(const VolterraOperator& v, const IntervalPoint& x) {
  check_dim(v, x.dim());
  std::size_t n = x.dim();
  std::size_t prec = x[0].prec();
  Interval unit(BigFloat(), BigFloat(1, 0), prec);
  std::vector<Interval> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = intersect(x[i], unit);
  Interval two = Interval::point(2, prec);
  std::vector<Interval> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Interval s = Interval::point(0, prec);
    for (std::size_t j : v.beaten(i)) s = s + c[j];
    out[i] = c[i] * (c[i] + two * s);
  }
  // Each coordinate also equals 1 minus the others; intersecting keeps the
  // dominant coordinate's width tied to the small ones.
  std::vector<Interval> prefix(n + 1, Interval::point(0, prec));
  std::vector<Interval> suffix(n + 1, Interval::point(0, prec));
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + out[i];
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + out[i];
  Interval one = Interval::point(1, prec);
  std::vector<Interval> result(n);
  for (std::size_t i = 0; i < n; ++i) {
    Interval rest = one - (prefix[i] + suffix[i + 1]);
    result[i] = intersect(intersect(out[i], rest), unit);
  }
  return IntervalPoint::unchecked(std::move(result));
}

ExactPoint iterate(const VolterraOperator& v, const ExactPoint& x0, std::size_t t,
                   std::size_t exact_cap) {
  if (t > exact_cap) {
    throw Error(ErrorCode::kExactBlowup, std::to_string(t) + " exact steps exceed cap " +
                                             std::to_string(exact_cap));
  }
  check_dim(v, x0.dim());
  if (t == 0) return x0;
  ScaledVector s = ScaledVector::from_point(x0);
  for (std::size_t k = 0; k < t; ++k) s = apply(v, s);
  return s.to_point();
}

IntervalPoint iterate(const VolterraOperator& v, const IntervalPoint& x0, std::size_t t) {
  IntervalPoint x = x0;
  for (std::size_t k = 0; k < t; ++k) x = apply(v, x);
  return x;
}

ExactPoint root_distribution(const Tournament& t, std::size_t d, std::size_t exact_cap) {
  return iterate(operator_of(t), uniform_point(t.n()), d, exact_cap);
}

ExactPoint aggregate(const ExactPoint& x, const TripartitePartition& p) {
  check_partition(p, x.dim());
  std::vector<Rational> out(3, Rational(0));
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i : p.parts[k]) out[k] += x[i];
  }
  return ExactPoint::unchecked(std::move(out));
}

IntervalPoint aggregate(const IntervalPoint& x, const TripartitePartition& p) {
  check_partition(p, x.dim());
  std::vector<Interval> out(3, Interval::point(0, x[0].prec()));
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i : p.parts[k]) out[k] = out[k] + x[i];
  }
  return IntervalPoint::unchecked(std::move(out));
}

ScaledVector aggregate(const ScaledVector& x, const TripartitePartition& p) {
  check_partition(p, x.num.size());
  ScaledVector out;
  out.num.assign(3, mpz_class(0));
  out.den = x.den;
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i : p.parts[k]) out.num[k] += x.num[i];
  }
  return out;
}

namespace {

void write_header(std::ostream& out, std::size_t n) {
  out << "step";
  for (std::size_t i = 1; i <= n; ++i) out << ",x_" << i;
  if (n == 3) out << ",phi";
  out << '\n';
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const std::vector<ExactPoint>& traj, int digits) {
  if (traj.empty()) return;
  write_header(out, traj[0].dim());
  for (std::size_t t = 0; t < traj.size(); ++t) {
    out << t;
    for (const Rational& q : traj[t].coords()) out << ',' << to_decimal(q, digits);
    if (traj[t].dim() == 3) {
      out << ',' << to_decimal(Rational(traj[t][0] * traj[t][1] * traj[t][2]), digits);
    }
    out << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const std::vector<IntervalPoint>& traj,
                          int digits) {
  if (traj.empty()) return;
  write_header(out, traj[0].dim());
  for (std::size_t t = 0; t < traj.size(); ++t) {
    out << t;
    for (const Interval& v : traj[t].coords()) out << ',' << v.lo().to_decimal(digits);
    if (traj[t].dim() == 3) {
      Interval phi = traj[t][0] * traj[t][1] * traj[t][2];
      out << ',' << phi.lo().to_decimal(digits);
    }
    out << '\n';
  }
}

}  // namespace volterra
