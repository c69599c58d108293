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

#include "volterra/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace volterra {

Interval::Interval(BigFloat lo, BigFloat hi, std::size_t prec)
    : lo_(std::move(lo)), hi_(std::move(hi)), prec_(prec) {
  if (cmp(lo_, hi_) > 0) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::point(const mpq_class& q, std::size_t prec) {
  return Interval(BigFloat::from_rational(q, prec, Round::kDown),
                  BigFloat::from_rational(q, prec, Round::kUp), prec);
}

Interval Interval::exact(const BigFloat& v, std::size_t prec) {
  return Interval(v, v, prec);
}

bool Interval::contains(const mpq_class& q) const {
  return cmp(lo_, q) <= 0 && cmp(hi_, q) >= 0;
}

bool Interval::contains(const Interval& other) const {
  return cmp(lo_, other.lo_) <= 0 && cmp(hi_, other.hi_) >= 0;
}

BigFloat Interval::width() const { return sub(hi_, lo_, prec_, Round::kUp); }

namespace {

std::size_t joint(const Interval& a, const Interval& b) {
  return std::max(a.prec(), b.prec());
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  std::size_t p = joint(a, b);
  return Interval(add(a.lo(), b.lo(), p, Round::kDown),
                  add(a.hi(), b.hi(), p, Round::kUp), p);
}

Interval operator-(const Interval& a, const Interval& b) {
  std::size_t p = joint(a, b);
  return Interval(sub(a.lo(), b.hi(), p, Round::kDown),
                  sub(a.hi(), b.lo(), p, Round::kUp), p);
}

Interval operator*(const Interval& a, const Interval& b) {
  std::size_t p = joint(a, b);
  // Fast path for the common nonnegative case.
  if (a.lo().sign() >= 0 && b.lo().sign() >= 0) {
    return Interval(mul(a.lo(), b.lo(), p, Round::kDown),
                    mul(a.hi(), b.hi(), p, Round::kUp), p);
  }
  const BigFloat* ends_a[2] = {&a.lo(), &a.hi()};
  const BigFloat* ends_b[2] = {&b.lo(), &b.hi()};
  BigFloat lo, hi;
  bool first = true;
  for (const BigFloat* x : ends_a) {
    for (const BigFloat* y : ends_b) {
      BigFloat l = mul(*x, *y, p, Round::kDown);
      BigFloat h = mul(*x, *y, p, Round::kUp);
      if (first) {
        lo = l;
        hi = h;
        first = false;
      } else {
        if (l < lo) lo = l;
        if (h > hi) hi = h;
      }
    }
  }
  return Interval(lo, hi, p);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo().sign() <= 0 && b.hi().sign() >= 0) {
    throw std::domain_error("Interval division by an interval containing 0");
  }
  std::size_t p = joint(a, b);
  const BigFloat* ends_a[2] = {&a.lo(), &a.hi()};
  const BigFloat* ends_b[2] = {&b.lo(), &b.hi()};
  BigFloat lo, hi;
  bool first = true;
  for (const BigFloat* x : ends_a) {
    for (const BigFloat* y : ends_b) {
      BigFloat l = div(*x, *y, p, Round::kDown);
      BigFloat h = div(*x, *y, p, Round::kUp);
      if (first) {
        lo = l;
        hi = h;
        first = false;
      } else {
        if (l < lo) lo = l;
        if (h > hi) hi = h;
      }
    }
  }
  return Interval(lo, hi, p);
}

Interval abs(const Interval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  BigFloat neg_lo = -a.lo();
  BigFloat top = max(neg_lo, a.hi());
  return Interval(BigFloat(), top, a.prec());
}

Interval sqr(const Interval& a) {
  Interval m = abs(a);
  std::size_t p = a.prec();
  return Interval(mul(m.lo(), m.lo(), p, Round::kDown),
                  mul(m.hi(), m.hi(), p, Round::kUp), p);
}

Interval pow(const Interval& a, unsigned long n) {
  Interval result = Interval::point(1, a.prec());
  Interval base = a;
  bool even = n % 2 == 0;
  if (even) base = abs(a);
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = even ? sqr(base) : base * base;
  }
  return result;
}

Interval max(const Interval& a, const Interval& b) {
  return Interval(max(a.lo(), b.lo()), max(a.hi(), b.hi()), joint(a, b));
}

Interval min(const Interval& a, const Interval& b) {
  return Interval(min(a.lo(), b.lo()), min(a.hi(), b.hi()), joint(a, b));
}

Interval intersect(const Interval& a, const Interval& b) {
  const BigFloat& lo = max(a.lo(), b.lo());
  const BigFloat& hi = min(a.hi(), b.hi());
  if (lo > hi) throw std::domain_error("Interval intersection is empty");
  return Interval(lo, hi, joint(a, b));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo(), b.lo()), max(a.hi(), b.hi()), joint(a, b));
}

Interval with_prec(const Interval& a, std::size_t prec) {
  return Interval(a.lo(), a.hi(), prec);
}

}  // namespace volterra
