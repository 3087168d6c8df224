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

#include "pslin/dioph.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "pslin/errors.hpp"
#include "pslin/pscore.hpp"

namespace pslin {
namespace {

constexpr unsigned long kMaxRelationDenominator = 64;
constexpr long kMaxRelationNumerator = 4096;

// r^k for any integer k; r != 0 when k < 0.
Rational pow_signed(const Rational& r, long k) {
  Rational out = pow(r, static_cast<unsigned long>(std::labs(k)));
  return k < 0 ? Rational(1 / out) : out;
}

// Rational root r^(1/k) when it exists.
std::optional<Rational> rational_root(const Rational& r, unsigned long k) {
  auto num = exact_root(r.get_num(), k);
  auto den = exact_root(r.get_den(), k);
  if (!num || !den) return std::nullopt;
  Rational out(*num, *den);
  out.canonicalize();
  return out;
}

// Finite continued fraction of a rational.
std::vector<Integer> rational_quotients(Rational r) {
  std::vector<Integer> out;
  while (true) {
    Integer a = floor(r);
    out.push_back(a);
    Rational rest = r - Rational(a);
    if (rest == 0) break;
    r = 1 / rest;
  }
  return out;
}

// Partial quotients shared by every real in [lo, hi].
std::vector<Integer> interval_quotients(Rational lo, Rational hi, std::size_t limit) {
  std::vector<Integer> out;
  while (out.size() < limit) {
    Integer a = floor(lo);
    if (floor(hi) != a) break;
    out.push_back(a);
    if (lo == Rational(a)) break;
    Rational next_lo = 1 / (hi - Rational(a));
    Rational next_hi = 1 / (lo - Rational(a));
    lo = std::move(next_lo);
    hi = std::move(next_hi);
  }
  return out;
}

// Certified decision of value <= bound, both evaluated at doubling precision.
bool certified_le(const std::function<CertifiedReal(long)>& value,
                  const std::function<CertifiedReal(long)>& bound, long start,
                  const PrecisionPolicy& policy) {
  for (long p = std::max(start, policy.start_bits); p <= policy.cap_bits; p *= 2) {
    CertifiedReal diff = bound(p) - value(p);
    if (auto neg = diff.less_than(0)) return !*neg;
  }
  throw PrecisionOverflow("comparison undecided at the precision cap", policy.cap_bits);
}

CertifiedReal power_of_q(const Integer& q, const Rational& exponent, long p) {
  return exp(CertifiedReal::from_rational(exponent, p) * log_rational(Rational(q), p));
}

// Sign of (alpha - r) for logquot alpha; exact equality is decided by the
// rational identity base^den(r) == (P/Q)^num(r).
int compare_alpha(const AlphaSpec& alpha, const Rational& r) {
  const auto& lq = alpha.logquot();
  if (lq && r > 0 && r.get_num().fits_ulong_p() && r.get_den().fits_ulong_p()) {
    Rational ratio(lq->num, lq->den);
    ratio.canonicalize();
    if (pow(lq->base, r.get_den().get_ui()) == pow(ratio, r.get_num().get_ui())) return 0;
  }
  if (const auto& v = alpha.rational_value()) return *v < r ? -1 : (*v > r ? 1 : 0);
  for (long p = 128; p <= kDefaultPrecisionCap; p *= 2) {
    CertifiedReal enc = alpha.enclosure(p);
    if (auto lt = enc.less_than(r)) {
      if (*lt) return -1;
      if (enc.less_equal(r) == std::optional<bool>(false)) return 1;
    }
  }
  throw PrecisionOverflow("cannot compare alpha with a rational", kDefaultPrecisionCap);
}

}  // namespace

std::optional<Rational> exact_base_root(const Rational& a, const AlphaSpec& alpha) {
  if (a <= 0) return std::nullopt;
  if (a == 1) return Rational(1);
  if (const auto& r = alpha.rational_value()) {
    // a^(Q/P) with gcd(P, Q) = 1 is rational iff a is a perfect P-th power.
    if (!r->get_num().fits_ulong_p() || !r->get_den().fits_ulong_p()) return std::nullopt;
    auto root = rational_root(a, r->get_num().get_ui());
    if (!root) return std::nullopt;
    return pow(*root, r->get_den().get_ui());
  }
  if (const auto& lq = alpha.logquot()) {
    // a^(1/alpha) = (P/Q)^(ln a / ln A); rational when a^j == A^i for small
    // i, j and P/Q has a rational j-th root.
    double ratio_estimate = std::log(a.get_d()) / std::log(lq->base.get_d());
    for (unsigned long j = 1; j <= kMaxRelationDenominator; ++j) {
      double i_estimate = std::round(ratio_estimate * static_cast<double>(j));
      if (!std::isfinite(i_estimate) || std::fabs(i_estimate) > kMaxRelationNumerator) continue;
      long i = static_cast<long>(i_estimate);
      if (i == 0) continue;
      if (pow(a, j) != pow_signed(lq->base, i)) continue;
      unsigned long g = std::gcd(static_cast<unsigned long>(std::labs(i)), j);
      Rational ratio(lq->num, lq->den);
      ratio.canonicalize();
      auto root = rational_root(ratio, j / g);
      if (!root) return std::nullopt;
      return pow_signed(*root, i / static_cast<long>(g));
    }
    return std::nullopt;
  }
  // a^(1/alpha) for irrational algebraic alpha is transcendental.
  return std::nullopt;
}

CertifiedReal base_root(const Rational& a, const AlphaSpec& alpha, long precision) {
  if (auto r = exact_base_root(a, alpha)) return CertifiedReal::from_rational(*r, precision);
  return eval_root(a, alpha, precision);
}

// ---------------------------------------------------------------------------
// ConvergentGenerator

ConvergentGenerator::ConvergentGenerator(Rational a, AlphaSpec alpha, PrecisionPolicy policy)
    : a_(std::move(a)), alpha_(std::move(alpha)), policy_(policy) {
  if (a_ <= 0 || a_ == 1) throw InvalidParams("convergents need a > 0 and a != 1");
  exact_ = exact_base_root(a_, alpha_);
  if (exact_) {
    quotients_ = rational_quotients(*exact_);
    quotients_complete_ = true;
  }
}

void ConvergentGenerator::extend() {
  long p = precision_ == 0 ? std::max<long>(policy_.start_bits, 128) : precision_ * 2;
  for (; p <= policy_.cap_bits; p *= 2) {
    CertifiedReal target = eval_root(a_, alpha_, p);
    std::vector<Integer> qs =
        interval_quotients(target.lower_q(), target.upper_q(), static_cast<std::size_t>(p));
    if (qs.size() > quotients_.size()) {
      for (std::size_t i = 0; i < quotients_.size(); ++i) {
        if (qs[i] != quotients_[i]) throw Error("inconsistent partial quotients across precisions");
      }
      quotients_ = std::move(qs);
      precision_ = p;
      return;
    }
  }
  throw PrecisionOverflow("partial quotient " + std::to_string(index_) +
                              " not certified at the precision cap",
                          policy_.cap_bits, index_);
}

CertifiedReal ConvergentGenerator::error_of(const Integer& p, const Integer& q) const {
  Rational pq(p, q);
  pq.canonicalize();
  if (exact_) return CertifiedReal::from_rational(abs(*exact_ - pq), 128);
  long bits = std::max<long>(precision_, 4 * static_cast<long>(bit_length(q)) + 64);
  return abs(eval_root(a_, alpha_, bits) - CertifiedReal::from_rational(pq, bits));
}

Convergent ConvergentGenerator::next() {
  if (index_ >= quotients_.size()) {
    if (quotients_complete_) {
      ++multiple_;
      Convergent c;
      c.index = index_++;
      c.p = p_ * multiple_;
      c.q = q_ * multiple_;
      c.error = CertifiedReal::from_rational(0, 128);
      c.exact = true;
      c.multiple = multiple_;
      return c;
    }
    extend();
  }
  const Integer& a = quotients_[index_];
  Integer p = a * p_ + p_prev_;
  Integer q = a * q_ + q_prev_;
  p_prev_ = std::exchange(p_, p);
  q_prev_ = std::exchange(q_, q);

  Convergent c;
  c.index = index_++;
  c.p = p;
  c.q = q;
  c.error = error_of(p, q);
  c.exact = exact_ && *exact_ == Rational(p, q);
  return c;
}

std::vector<Convergent> convergents(const Rational& a, const AlphaSpec& alpha, std::size_t count,
                                    const PrecisionPolicy& policy) {
  ConvergentGenerator gen(a, alpha, policy);
  std::vector<Convergent> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

// ---------------------------------------------------------------------------
// Witnesses

bool is_gamma_witness(const Rational& a, const AlphaSpec& alpha, const Integer& p,
                      const Integer& q, const Rational& gamma, const PrecisionPolicy& policy) {
  if (q < 1) throw InvalidParams("witness denominator must be positive");
  Rational pq(p, q);
  pq.canonicalize();
  auto bound = [&](long bits) { return power_of_q(q, -gamma, bits); };
  std::function<CertifiedReal(long)> value;
  if (auto r = exact_base_root(a, alpha)) {
    Rational diff = abs(*r - pq);
    if (diff == 0) return true;
    value = [diff](long bits) { return CertifiedReal::from_rational(diff, bits); };
  } else {
    value = [&](long bits) {
      return abs(eval_root(a, alpha, bits) - CertifiedReal::from_rational(pq, bits));
    };
  }
  long start = 4 * static_cast<long>(bit_length(q)) + 64;
  return certified_le(value, bound, start, policy);
}

std::vector<Witness> gamma_witnesses(const WitnessQuery& query, const PrecisionPolicy& policy) {
  if (query.gamma <= 1) throw InvalidParams("gamma must exceed 1");
  if (query.a <= 0 || query.a == 1) throw InvalidParams("witness search needs a > 0, a != 1");
  if (query.q_max < 1) throw InvalidParams("q_max must be positive");
  ConvergentGenerator gen(query.a, query.alpha, policy);
  std::vector<Witness> out;
  while (true) {
    Convergent c = gen.next();
    if (c.multiple > 1 || c.q > query.q_max) break;
    if (c.q >= 2 && is_gamma_witness(query.a, query.alpha, c.p, c.q, query.gamma, policy)) {
      out.push_back({c.p, c.q, c.error, c.exact});
    }
    if (c.exact) break;
  }
  return out;
}

WitnessCheck solution_to_witness(const Integer& x, const Integer& y, const LinearEquation& eq,
                                 const AlphaSpec& alpha, const Rational& beta,
                                 const PrecisionPolicy& policy) {
  if (x < 1 || y < 1 || !eq.satisfied_by(x, y)) {
    throw InvalidParams("(" + x.get_str() + ", " + y.get_str() + ") does not solve y = " +
                        to_string(eq.a) + " x + " + to_string(eq.b));
  }
  auto q = member(x, alpha, policy);
  if (!q) throw NotMember(x.get_str() + " is not a sequence term");
  auto p = member(y, alpha, policy);
  if (!p) throw NotMember(y.get_str() + " is not a sequence term");

  WitnessCheck out;
  out.p = *p;
  out.q = *q;
  Rational pq(*p, *q);
  pq.canonicalize();
  if (auto r = exact_base_root(eq.a, alpha)) {
    Rational diff = abs(*r - pq);
    out.exact = diff == 0;
    out.error = CertifiedReal::from_rational(diff, 128);
  } else {
    long bits = 4 * static_cast<long>(bit_length(*q)) + 64;
    out.error = abs(eval_root(eq.a, alpha, bits) - CertifiedReal::from_rational(pq, bits));
  }
  out.holds = out.exact || is_gamma_witness(eq.a, alpha, *p, *q, beta, policy);
  return out;
}

ConstructedAlpha construct_solvable_alpha(const Rational& a, const Integer& p, const Integer& q,
                                          const Rational& s, const Rational& t) {
  if (p <= 0 || q <= 0) throw InvalidParams("p and q must be positive");
  Rational ratio(p, q);
  ratio.canonicalize();
  if (ratio == 1) throw InvalidParams("degenerate: p/q == 1");
  if (a <= 0 || a == 1) throw InvalidParams("a must be positive and != 1");
  if ((a > 1) != (ratio > 1)) throw InvalidParams("a and p/q lie on opposite sides of 1");
  if (s >= t) throw InvalidParams("empty range");

  ConstructedAlpha out;
  try {
    out.alpha = AlphaSpec::from_logquot(a, p, q);
  } catch (const InvalidParams& e) {
    out.reason = e.what();
    return out;
  }
  if (compare_alpha(*out.alpha, s) <= 0 || compare_alpha(*out.alpha, t) >= 0) {
    out.reason = "alpha ~ " + out.alpha->cached().to_string(12) + " outside (" + to_string(s) +
                 ", " + to_string(t) + ")";
    out.alpha.reset();
  }
  return out;
}

}  // namespace pslin
