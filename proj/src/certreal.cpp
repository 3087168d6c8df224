// Copyright 2026 The pslin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pslin/certreal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "pslin/errors.hpp"

namespace pslin {

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(long precision) {
  mpfr_init2(value_, std::max<long>(precision, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Rational BigFloat::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

// ---------------------------------------------------------------------------
// Interval helpers. All ball arithmetic goes through explicit endpoints so
// that each bound is produced by a single directed rounding.

namespace {

constexpr long kRadiusBits = 64;

struct Bounds {
  BigFloat lo;
  BigFloat hi;
};

Bounds bounds_of(const CertifiedReal& x, long precision) {
  long p = std::max(precision, x.mid().precision());
  Bounds b{BigFloat(p), BigFloat(p)};
  mpfr_sub(b.lo.get(), x.mid().get(), x.rad().get(), MPFR_RNDD);
  mpfr_add(b.hi.get(), x.mid().get(), x.rad().get(), MPFR_RNDU);
  return b;
}

template <typename Op>
Bounds combine(const Bounds& a, const Bounds& b, long precision, Op op) {
  const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> pairs = {{
      {a.lo.get(), b.lo.get()},
      {a.lo.get(), b.hi.get()},
      {a.hi.get(), b.lo.get()},
      {a.hi.get(), b.hi.get()},
  }};
  Bounds out{BigFloat(precision), BigFloat(precision)};
  BigFloat t(precision);
  bool first = true;
  for (const auto& [x, y] : pairs) {
    op(t.get(), x, y, MPFR_RNDD);
    if (first || mpfr_less_p(t.get(), out.lo.get())) mpfr_set(out.lo.get(), t.get(), MPFR_RNDD);
    op(t.get(), x, y, MPFR_RNDU);
    if (first || mpfr_greater_p(t.get(), out.hi.get())) mpfr_set(out.hi.get(), t.get(), MPFR_RNDU);
    first = false;
  }
  return out;
}

long result_precision(const CertifiedReal& a, const CertifiedReal& b) {
  return std::max(a.precision(), b.precision());
}

void require_finite(const Bounds& b) {
  if (!mpfr_number_p(b.lo.get()) || !mpfr_number_p(b.hi.get())) {
    throw Error("non-finite enclosure");
  }
}

Integer floor_of(mpfr_srcptr x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x, MPFR_RNDD);
  return z;
}

// Ball containing exactly the rational r at working precision p.
Bounds rational_bounds(const Rational& r, long p) {
  Bounds b{BigFloat(p), BigFloat(p)};
  mpfr_set_q(b.lo.get(), r.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(b.hi.get(), r.get_mpq_t(), MPFR_RNDU);
  return b;
}

}  // namespace

// ---------------------------------------------------------------------------
// CertifiedReal

CertifiedReal::CertifiedReal()
    : mid_(kDefaultStartPrecision), rad_(kRadiusBits), precision_(kDefaultStartPrecision) {}

CertifiedReal::CertifiedReal(BigFloat mid, BigFloat rad, long precision)
    : mid_(std::move(mid)), rad_(std::move(rad)), precision_(precision) {}

CertifiedReal CertifiedReal::exact(const Integer& z) {
  long p = std::max<long>(kDefaultStartPrecision, static_cast<long>(bit_length(z)) + 1);
  BigFloat mid(p);
  mpfr_set_z(mid.get(), z.get_mpz_t(), MPFR_RNDN);
  return CertifiedReal(std::move(mid), BigFloat(kRadiusBits), p);
}

CertifiedReal CertifiedReal::from_rational(const Rational& r, long precision) {
  if (r.get_den() == 1 && static_cast<long>(bit_length(r.get_num())) < precision) {
    CertifiedReal out = exact(r.get_num());
    out.precision_ = precision;
    return out;
  }
  Bounds b = rational_bounds(r, precision);
  return from_bounds(b.lo, b.hi, precision);
}

CertifiedReal CertifiedReal::from_bounds(const BigFloat& lo, const BigFloat& hi,
                                         long precision) {
  if (mpfr_greater_p(lo.get(), hi.get())) throw Error("inverted enclosure");
  if (mpfr_equal_p(lo.get(), hi.get())) {
    return CertifiedReal(lo, BigFloat(kRadiusBits), precision);
  }
  BigFloat mid(std::max(precision, lo.precision()));
  mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  BigFloat up(kRadiusBits), down(kRadiusBits);
  mpfr_sub(up.get(), hi.get(), mid.get(), MPFR_RNDU);
  mpfr_sub(down.get(), mid.get(), lo.get(), MPFR_RNDU);
  BigFloat rad(kRadiusBits);
  mpfr_max(rad.get(), up.get(), down.get(), MPFR_RNDU);
  return CertifiedReal(std::move(mid), std::move(rad), precision);
}

BigFloat CertifiedReal::lower() const {
  BigFloat out(mid_.precision());
  mpfr_sub(out.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return out;
}

BigFloat CertifiedReal::upper() const {
  BigFloat out(mid_.precision());
  mpfr_add(out.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return out;
}

bool CertifiedReal::contains(const Rational& r) const {
  return mpfr_cmp_q(lower().get(), r.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(upper().get(), r.get_mpq_t()) >= 0;
}

double CertifiedReal::width() const {
  return 2.0 * mpfr_get_d(rad_.get(), MPFR_RNDU);
}

std::optional<bool> CertifiedReal::less_than(const Rational& r) const {
  if (mpfr_cmp_q(upper().get(), r.get_mpq_t()) < 0) return true;
  if (mpfr_cmp_q(lower().get(), r.get_mpq_t()) >= 0) return false;
  return std::nullopt;
}

std::optional<bool> CertifiedReal::less_equal(const Rational& r) const {
  if (mpfr_cmp_q(upper().get(), r.get_mpq_t()) <= 0) return true;
  if (mpfr_cmp_q(lower().get(), r.get_mpq_t()) > 0) return false;
  return std::nullopt;
}

std::string CertifiedReal::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  int n = mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, mid_.get());
  return std::string(buf.data(), static_cast<std::size_t>(std::max(n, 0)));
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  long p = result_precision(a, b);
  Bounds x = bounds_of(a, p), y = bounds_of(b, p);
  long wp = std::max({p, x.lo.precision(), y.lo.precision()});
  Bounds out{BigFloat(wp), BigFloat(wp)};
  mpfr_add(out.lo.get(), x.lo.get(), y.lo.get(), MPFR_RNDD);
  mpfr_add(out.hi.get(), x.hi.get(), y.hi.get(), MPFR_RNDU);
  return CertifiedReal::from_bounds(out.lo, out.hi, p);
}

CertifiedReal operator-(const CertifiedReal& a) {
  CertifiedReal out = a;
  mpfr_neg(out.mid_.get(), out.mid_.get(), MPFR_RNDN);
  return out;
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
  return a + (-b);
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  long p = result_precision(a, b);
  Bounds x = bounds_of(a, p), y = bounds_of(b, p);
  Bounds out = combine(x, y, p, mpfr_mul);
  return CertifiedReal::from_bounds(out.lo, out.hi, p);
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  long p = result_precision(a, b);
  Bounds x = bounds_of(a, p), y = bounds_of(b, p);
  if (mpfr_sgn(y.lo.get()) <= 0 && mpfr_sgn(y.hi.get()) >= 0) {
    throw Error("division by an enclosure containing zero");
  }
  Bounds out = combine(x, y, p, mpfr_div);
  return CertifiedReal::from_bounds(out.lo, out.hi, p);
}

CertifiedReal log(const CertifiedReal& x) {
  long p = x.precision();
  Bounds b = bounds_of(x, p);
  if (mpfr_sgn(b.lo.get()) <= 0) throw Error("log of an enclosure reaching zero");
  Bounds out{BigFloat(p), BigFloat(p)};
  mpfr_log(out.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_log(out.hi.get(), b.hi.get(), MPFR_RNDU);
  require_finite(out);
  return CertifiedReal::from_bounds(out.lo, out.hi, p);
}

CertifiedReal exp(const CertifiedReal& x) {
  long p = x.precision();
  Bounds b = bounds_of(x, p);
  Bounds out{BigFloat(p), BigFloat(p)};
  mpfr_exp(out.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_exp(out.hi.get(), b.hi.get(), MPFR_RNDU);
  require_finite(out);
  return CertifiedReal::from_bounds(out.lo, out.hi, p);
}

CertifiedReal sqrt(const CertifiedReal& x) {
  long p = x.precision();
  Bounds b = bounds_of(x, p);
  if (mpfr_sgn(b.lo.get()) < 0) throw Error("sqrt of an enclosure reaching below zero");
  Bounds out{BigFloat(p), BigFloat(p)};
  mpfr_sqrt(out.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_sqrt(out.hi.get(), b.hi.get(), MPFR_RNDU);
  return CertifiedReal::from_bounds(out.lo, out.hi, p);
}

CertifiedReal abs(const CertifiedReal& x) {
  long p = x.precision();
  Bounds b = bounds_of(x, p);
  if (mpfr_sgn(b.lo.get()) >= 0) return x;
  if (mpfr_sgn(b.hi.get()) <= 0) return -x;
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_neg(b.lo.get(), b.lo.get(), MPFR_RNDU);
  mpfr_max(hi.get(), b.lo.get(), b.hi.get(), MPFR_RNDU);
  return CertifiedReal::from_bounds(lo, hi, p);
}

CertifiedReal pi(long precision) {
  Bounds out{BigFloat(precision), BigFloat(precision)};
  mpfr_const_pi(out.lo.get(), MPFR_RNDD);
  mpfr_const_pi(out.hi.get(), MPFR_RNDU);
  return CertifiedReal::from_bounds(out.lo, out.hi, precision);
}

CertifiedReal log_rational(const Rational& r, long precision) {
  if (r <= 0) throw InvalidParams("log of a non-positive rational");
  if (r == 1) return CertifiedReal::from_rational(0, precision);
  // log1p of the exact offset keeps full relative accuracy near 1.
  Rational offset = r - 1;
  Bounds b = rational_bounds(offset, precision);
  Bounds out{BigFloat(precision), BigFloat(precision)};
  mpfr_log1p(out.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_log1p(out.hi.get(), b.hi.get(), MPFR_RNDU);
  return CertifiedReal::from_bounds(out.lo, out.hi, precision);
}

// ---------------------------------------------------------------------------
// Floors and comparisons

namespace {

struct Decided {
  FloorResult floor;
  CertifiedReal ball;
};

std::optional<Integer> decide_floor(const CertifiedReal& x) {
  Integer lo = floor_of(x.lower().get());
  Integer hi = floor_of(x.upper().get());
  if (lo == hi) return lo;
  return std::nullopt;
}

Decided floor_with_ball(const CertifiedReal* first, const RealExpr& expr,
                        const PrecisionPolicy& policy) {
  if (expr.exact) {
    if (auto r = expr.exact()) {
      Integer f = floor(*r);
      return {FloorResult{f, r->get_den() == 1, 0},
              CertifiedReal::from_rational(*r, policy.start_bits)};
    }
  }
  long p = policy.start_bits;
  if (first != nullptr) {
    if (auto f = decide_floor(*first)) {
      return {FloorResult{*f, false, first->precision()}, *first};
    }
    p = std::max(p, first->precision() * 2);
  }
  for (; p <= policy.cap_bits; p *= 2) {
    CertifiedReal x = expr.eval(p);
    if (auto f = decide_floor(x)) return {FloorResult{*f, false, p}, std::move(x)};
  }
  throw PrecisionOverflow("floor undecided at the precision cap", policy.cap_bits);
}

}  // namespace

FloorResult certified_floor(const RealExpr& expr, const PrecisionPolicy& policy) {
  return floor_with_ball(nullptr, expr, policy).floor;
}

FloorResult certified_floor(const CertifiedReal& first, const RealExpr& expr,
                            const PrecisionPolicy& policy) {
  return floor_with_ball(&first, expr, policy).floor;
}

FracResult frac(const RealExpr& expr, const PrecisionPolicy& policy) {
  Decided d = floor_with_ball(nullptr, expr, policy);
  if (expr.exact) {
    if (auto r = expr.exact()) {
      Rational f = *r - Rational(d.floor.value);
      return {CertifiedReal::from_rational(f, policy.start_bits), d.floor.value, f == 0};
    }
  }
  CertifiedReal f = d.ball - CertifiedReal::exact(d.floor.value);
  return {std::move(f), d.floor.value, false};
}

bool certified_less(const RealExpr& expr, const Rational& r, const PrecisionPolicy& policy) {
  if (expr.exact) {
    if (auto v = expr.exact()) return *v < r;
  }
  for (long p = policy.start_bits; p <= policy.cap_bits; p *= 2) {
    if (auto answer = expr.eval(p).less_than(r)) return *answer;
  }
  throw PrecisionOverflow("comparison undecided at the precision cap", policy.cap_bits);
}

}  // namespace pslin
