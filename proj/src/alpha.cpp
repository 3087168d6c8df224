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

#include <cmath>
#include <string>
#include <vector>

#include "pslin/certreal.hpp"
#include "pslin/errors.hpp"

namespace pslin {
namespace {

constexpr long kCachedBits = 128;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Integer parse_positive_integer(std::string_view text) {
  Rational r = parse_rational(text);
  if (r.get_den() != 1 || r <= 0) {
    throw InvalidParams("expected a positive integer, got '" + std::string(text) + "'");
  }
  return r.get_num();
}

// Guard bits for exp(t): absolute error in t becomes relative error in e^t.
long exp_guard_bits(double t_estimate) {
  double mag = std::fabs(t_estimate) + 1.0;
  return 24 + static_cast<long>(std::ceil(std::log2(mag)));
}

}  // namespace

// ---------------------------------------------------------------------------
// AlphaSpec

AlphaSpec AlphaSpec::parse(std::string_view text) {
  if (text.starts_with("rat:")) {
    AlphaSpec a = from_rational(parse_rational(text.substr(4)));
    return a;
  }
  if (text.starts_with("logquot:")) {
    auto parts = split(text.substr(8), ':');
    if (parts.size() != 3) throw InvalidParams("logquot form is logquot:A:P:Q");
    return from_logquot(parse_rational(parts[0]), parse_positive_integer(parts[1]),
                        parse_positive_integer(parts[2]));
  }
  if (text.starts_with("surd:")) {
    auto parts = split(text.substr(5), ':');
    if (parts.size() != 3) throw InvalidParams("surd form is surd:R:S:T");
    return from_surd(parse_rational(parts[0]), parse_rational(parts[1]),
                     parse_positive_integer(parts[2]));
  }
  if (text.find('/') != std::string_view::npos) return from_rational(parse_rational(text));
  AlphaSpec a;
  a.form_ = Form::kDecimal;
  a.literal_ = std::string(text);
  a.rational_ = parse_rational(text);
  a.validate_and_cache();
  return a;
}

AlphaSpec AlphaSpec::from_rational(const Rational& value) {
  AlphaSpec a;
  a.form_ = Form::kRational;
  a.rational_ = value;
  a.validate_and_cache();
  return a;
}

AlphaSpec AlphaSpec::from_logquot(const Rational& base, const Integer& num,
                                  const Integer& den) {
  if (base <= 0) throw InvalidParams("logquot base must be positive");
  if (num <= 0 || den <= 0) throw InvalidParams("logquot ratio must be positive");
  Rational ratio(num, den);
  ratio.canonicalize();
  if (ratio == 1) throw InvalidParams("logquot ratio P/Q must differ from 1");
  if (base == 1) throw InvalidParams("logquot base must differ from 1");
  AlphaSpec a;
  a.form_ = Form::kLogQuot;
  a.logquot_ = LogQuot{base, num, den};
  a.validate_and_cache();
  return a;
}

AlphaSpec AlphaSpec::from_surd(const Rational& offset, const Rational& coeff,
                               const Integer& radicand) {
  if (radicand <= 0) throw InvalidParams("surd radicand must be positive");
  if (coeff == 0) return from_rational(offset);
  if (auto root = exact_root(radicand, 2)) {
    return from_rational(offset + coeff * Rational(*root));
  }
  AlphaSpec a;
  a.form_ = Form::kSurd;
  a.surd_ = Surd{offset, coeff, radicand};
  a.validate_and_cache();
  return a;
}

void AlphaSpec::validate_and_cache() {
  if (rational_) {
    if (*rational_ <= 1) throw InvalidParams("alpha must exceed 1");
    if (rational_->get_den() == 1) throw InvalidParams("alpha must be non-integral");
    cached_ = enclosure(kCachedBits);
    return;
  }
  if (logquot_) {
    // ln A / ln(P/Q) == k  <=>  A == (P/Q)^k, an exact rational test.
    Rational ratio(logquot_->num, logquot_->den);
    ratio.canonicalize();
    CertifiedReal enc = enclosure(kCachedBits);
    Integer lo = floor(enc.lower_q());
    Integer hi = ceil(enc.upper_q());
    for (Integer k = lo; k <= hi; ++k) {
      if (k < 1 || !k.fits_ulong_p()) continue;
      if (pow(ratio, k.get_ui()) == logquot_->base) {
        if (k == 1) throw InvalidParams("alpha must exceed 1 (logquot equals 1)");
        throw InvalidParams("alpha is the integer " + k.get_str());
      }
    }
  }
  // Irrational or provably non-integral from here; decide alpha > 1.
  for (long p = kCachedBits; p <= kDefaultPrecisionCap; p *= 2) {
    CertifiedReal enc = enclosure(p);
    if (auto le = enc.less_equal(1)) {
      if (*le) throw InvalidParams("alpha must exceed 1");
      cached_ = enclosure(kCachedBits);
      return;
    }
  }
  throw PrecisionOverflow("cannot decide alpha > 1", kDefaultPrecisionCap);
}

CertifiedReal AlphaSpec::enclosure(long precision) const {
  if (rational_) return CertifiedReal::from_rational(*rational_, precision);
  // Widen the working precision until the relative radius meets 2^-precision.
  for (long w = precision + 16;; w *= 2) {
    CertifiedReal out;
    if (logquot_) {
      Rational ratio(logquot_->num, logquot_->den);
      ratio.canonicalize();
      out = log_rational(logquot_->base, w) / log_rational(ratio, w);
    } else {
      CertifiedReal root = sqrt(CertifiedReal::from_rational(Rational(surd_->radicand), w));
      out = CertifiedReal::from_rational(surd_->offset, w) +
            CertifiedReal::from_rational(surd_->coeff, w) * root;
    }
    BigFloat scaled(64);
    mpfr_mul_2si(scaled.get(), out.rad().get(), precision, MPFR_RNDU);
    if (mpfr_cmpabs(scaled.get(), out.mid().get()) <= 0 || w > 64 * precision) {
      return CertifiedReal::from_bounds(out.lower(), out.upper(), precision);
    }
  }
}

std::string AlphaSpec::canonical() const {
  switch (form_) {
    case Form::kDecimal:
      return literal_;
    case Form::kRational:
      return "rat:" + to_string(*rational_);
    case Form::kLogQuot:
      return "logquot:" + to_string(logquot_->base) + ":" + logquot_->num.get_str() + ":" +
             logquot_->den.get_str();
    case Form::kSurd:
      return "surd:" + to_string(surd_->offset) + ":" + to_string(surd_->coeff) + ":" +
             surd_->radicand.get_str();
  }
  return {};
}

// ---------------------------------------------------------------------------
// Powers

PowerTerm::PowerTerm(Integer n, const AlphaSpec& alpha, Rational scale)
    : n_(std::move(n)), alpha_(&alpha), scale_(std::move(scale)) {
  if (n_ < 1) throw InvalidParams("power base must be >= 1");
}

std::optional<Rational> PowerTerm::exact() const {
  if (n_ == 1) return scale_;
  const auto& r = alpha_->rational_value();
  if (!r) return std::nullopt;
  const Integer& p = r->get_num();
  const Integer& q = r->get_den();
  if (!q.fits_ulong_p() || !p.fits_ulong_p()) return std::nullopt;
  // gcd(p, q) = 1, so n^(p/q) is rational iff n is a perfect q-th power.
  auto root = exact_root(n_, q.get_ui());
  if (!root) return std::nullopt;
  Integer value;
  mpz_pow_ui(value.get_mpz_t(), root->get_mpz_t(), p.get_ui());
  return scale_ * Rational(value);
}

CertifiedReal PowerTerm::eval(long precision) const {
  if (auto r = exact()) return CertifiedReal::from_rational(*r, precision);
  double t = alpha_->approx() * static_cast<double>(bit_length(n_)) * std::log(2.0);
  long w = precision + exp_guard_bits(t);
  CertifiedReal ln_n = log(CertifiedReal::from_rational(Rational(n_), w));
  CertifiedReal value = exp(alpha_->enclosure(w) * ln_n);
  if (scale_ != 1) value = CertifiedReal::from_rational(scale_, w) * value;
  return value;
}

RealExpr PowerTerm::expr() const {
  return RealExpr{[self = *this](long p) { return self.eval(p); },
                  [self = *this]() { return self.exact(); }};
}

CertifiedReal eval_pow(const Integer& n, const AlphaSpec& alpha, long precision, long cap) {
  if (precision > cap) {
    throw PrecisionOverflow("requested precision exceeds the cap", cap);
  }
  return PowerTerm(n, alpha).eval(precision);
}

CertifiedReal eval_root(const Rational& x, const AlphaSpec& alpha, long precision) {
  if (x <= 0) throw InvalidParams("root of a non-positive value");
  if (x == 1) return CertifiedReal::from_rational(1, precision);
  double log2_x = static_cast<double>(bit_length(x.get_num())) -
                  static_cast<double>(bit_length(x.get_den()));
  double t = (std::fabs(log2_x) + 1.0) * std::log(2.0) / alpha.approx();
  long w = precision + exp_guard_bits(t);
  return exp(log_rational(x, w) / alpha.enclosure(w));
}

FloorResult floor_pow(const Integer& n, const AlphaSpec& alpha, const PrecisionPolicy& policy) {
  return certified_floor(PowerTerm(n, alpha).expr(), policy);
}

}  // namespace pslin
