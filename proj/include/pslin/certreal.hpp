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

// Certified real arithmetic on top of MPFR.
//
// A CertifiedReal is a ball [mid - rad, mid + rad] that is guaranteed to
// contain the real it stands for. Every operation rounds outward, so the
// guarantee survives composition. Floors of real expressions are decided by
// re-evaluating the expression at doubling precision until the ball no
// longer straddles an integer, or by an exact rational shortcut when one is
// available (rational exponents applied to perfect powers).

#pragma once

#include <mpfr.h>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pslin/numeric.hpp"

namespace pslin {

inline constexpr long kDefaultStartPrecision = 64;
inline constexpr long kDefaultPrecisionCap = 4096;

struct PrecisionPolicy {
  long start_bits = kDefaultStartPrecision;
  long cap_bits = kDefaultPrecisionCap;
};

// Owning wrapper around mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(long precision = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  long precision() const { return mpfr_get_prec(value_); }

  // Exact dyadic value as a rational; the value must be finite.
  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

class CertifiedReal {
 public:
  // Exact zero.
  CertifiedReal();

  static CertifiedReal exact(const Integer& z);
  static CertifiedReal from_rational(const Rational& r, long precision);
  // Ball covering [lo, hi]; lo <= hi required.
  static CertifiedReal from_bounds(const BigFloat& lo, const BigFloat& hi,
                                   long precision);

  const BigFloat& mid() const { return mid_; }
  const BigFloat& rad() const { return rad_; }
  long precision() const { return precision_; }

  // Outward-rounded endpoints.
  BigFloat lower() const;
  BigFloat upper() const;
  Rational lower_q() const { return lower().to_rational(); }
  Rational upper_q() const { return upper().to_rational(); }

  bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }
  bool contains(const Rational& r) const;
  // Width of the ball, rounded up, as a double.
  double width() const;
  double approx() const { return mid_.to_double(); }

  // Certified comparisons against an exact rational: true/false when the ball
  // decides the question, nullopt when it straddles r.
  std::optional<bool> less_than(const Rational& r) const;
  std::optional<bool> less_equal(const Rational& r) const;

  // Decimal rendering of the midpoint with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a);

 private:
  CertifiedReal(BigFloat mid, BigFloat rad, long precision);

  BigFloat mid_;
  BigFloat rad_;
  long precision_;
};

// Elementary functions with outward rounding. log requires a ball that lies
// strictly inside (0, inf); sqrt requires lower() >= 0.
CertifiedReal log(const CertifiedReal& x);
CertifiedReal exp(const CertifiedReal& x);
CertifiedReal sqrt(const CertifiedReal& x);
CertifiedReal abs(const CertifiedReal& x);
CertifiedReal pi(long precision);

// Natural log of a positive rational, certified.
CertifiedReal log_rational(const Rational& r, long precision);

// Exponent alpha > 1, non-integral, held exactly.
//
//   decimal   "1.5"              the exact rational it denotes
//   rational  "rat:3/2" or "3/2"
//   logquot   "logquot:A:P:Q"    ln A / ln(P/Q), A a positive rational
//   surd      "surd:R:S:T"       R + S*sqrt(T), R and S rational, T > 0
class AlphaSpec {
 public:
  enum class Form { kDecimal, kRational, kLogQuot, kSurd };

  struct LogQuot {
    Rational base;
    Integer num;
    Integer den;
  };
  struct Surd {
    Rational offset;
    Rational coeff;
    Integer radicand;
  };

  static AlphaSpec parse(std::string_view text);
  static AlphaSpec from_rational(const Rational& value);
  static AlphaSpec from_logquot(const Rational& base, const Integer& num,
                                const Integer& den);
  static AlphaSpec from_surd(const Rational& offset, const Rational& coeff,
                             const Integer& radicand);

  Form form() const { return form_; }
  // Present for decimal and rational forms.
  const std::optional<Rational>& rational_value() const { return rational_; }
  const std::optional<LogQuot>& logquot() const { return logquot_; }
  const std::optional<Surd>& surd() const { return surd_; }

  CertifiedReal enclosure(long precision) const;
  // 128-bit enclosure computed once at construction.
  const CertifiedReal& cached() const { return cached_; }
  double approx() const { return cached_.approx(); }

  // Round-trippable textual form, e.g. "rat:3/2", "logquot:2:4:3".
  std::string canonical() const;

 private:
  AlphaSpec() = default;
  void validate_and_cache();

  Form form_ = Form::kRational;
  std::string literal_;
  std::optional<Rational> rational_;
  std::optional<LogQuot> logquot_;
  std::optional<Surd> surd_;
  CertifiedReal cached_;
};

// A real expression that can be re-evaluated at any precision, optionally
// with an exact rational value when one is known.
struct RealExpr {
  std::function<CertifiedReal(long)> eval;
  std::function<std::optional<Rational>()> exact;
};

// scale * n^alpha for an integer n >= 1.
class PowerTerm {
 public:
  PowerTerm(Integer n, const AlphaSpec& alpha, Rational scale = 1);

  CertifiedReal eval(long precision) const;
  // Exact value when n^alpha is rational: alpha = P/Q and n a perfect Q-th
  // power (or n == 1).
  std::optional<Rational> exact() const;
  RealExpr expr() const;

 private:
  Integer n_;
  const AlphaSpec* alpha_;
  Rational scale_;
};

// n^alpha with rad <= 2^(-precision + 4) * n^alpha. Throws PrecisionOverflow
// when precision exceeds cap.
CertifiedReal eval_pow(const Integer& n, const AlphaSpec& alpha, long precision,
                       long cap = kDefaultPrecisionCap);

// x^(1/alpha) for a positive rational x.
CertifiedReal eval_root(const Rational& x, const AlphaSpec& alpha, long precision);

struct FloorResult {
  Integer value;
  // The expression is proven to equal `value` exactly.
  bool exact_integer = false;
  // Precision at which the decision was made (0 for the exact shortcut).
  long precision = 0;
};

// Decides floor(x). `first` is tried before refinement starts; refinement
// doubles the precision up to policy.cap_bits and throws PrecisionOverflow
// if still undecided.
FloorResult certified_floor(const RealExpr& expr, const PrecisionPolicy& policy = {});
FloorResult certified_floor(const CertifiedReal& first, const RealExpr& expr,
                            const PrecisionPolicy& policy = {});

struct FracResult {
  CertifiedReal value;  // enclosure inside [0, 1)
  Integer floor;
  // Fractional part is exactly zero.
  bool exact_zero = false;
};

FracResult frac(const RealExpr& expr, const PrecisionPolicy& policy = {});

// floor(n^alpha), the workhorse of the sequence layer.
FloorResult floor_pow(const Integer& n, const AlphaSpec& alpha,
                      const PrecisionPolicy& policy = {});

// Decides expr < r (strict) by refinement; exact shortcut when available.
bool certified_less(const RealExpr& expr, const Rational& r,
                    const PrecisionPolicy& policy = {});

}  // namespace pslin
