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


#include "pslin/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "pslin/errors.hpp"
#include "pslin/parallel.hpp"
#include "pslin/pscore.hpp"

namespace pslin {
namespace {

constexpr std::size_t kScanBlock = 256;

using Clock = std::chrono::steady_clock;

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Natural log of a positive integer as a long double, good for any size.
long double log_integer(const Integer& z) {
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(static_cast<long double>(mant)) +
         static_cast<long double>(exp2) * std::numbers::ln2_v<long double>;
}

Integer floor_ld(long double x) {
  Integer out;
  if (x < 1e18L) {
    out = static_cast<unsigned long>(std::floor(x));
    return out;
  }
  int e = 0;
  long double m = std::frexp(x, &e);
  // m in [0.5, 1): take 64 significant bits and shift.
  auto bits = static_cast<unsigned long>(std::ldexp(m, 64));
  out = bits;
  if (e >= 64) {
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(e - 64));
  } else {
    mpz_fdiv_q_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(64 - e));
  }
  return out;
}

// Decides lo <= frac < hi for frac = term - floor, refining as needed. An
// undecided answer at the precision cap counts as outside.
bool frac_in(const PowerTerm& term, const FracResult& f, const Rational& lo, const Rational& hi,
             const PrecisionPolicy& policy) {
  if (hi <= 0 || lo >= 1) return false;
  if (auto r = term.exact()) {
    Rational v = *r - Rational(f.floor);
    return lo <= v && v < hi;
  }
  CertifiedReal ball = f.value;
  long precision = std::max(ball.precision(), policy.start_bits);
  for (;;) {
    auto below_lo = ball.less_than(lo);
    auto below_hi = ball.less_than(hi);
    if (below_lo && *below_lo) return false;
    if (below_hi && !*below_hi) return false;
    if (below_lo && below_hi) return *below_hi;
    precision *= 2;
    if (precision > policy.cap_bits) return false;
    ball = term.eval(precision) - CertifiedReal::exact(f.floor);
  }
}

struct BlockScan {
  std::size_t points = 0;
  std::size_t filter_hits = 0;
  std::size_t verified = 0;
  bool timed_out = false;
  std::vector<SolutionPair> pairs;
};

WindowScan scan_window_impl(const LinearEquation& eq, const AlphaSpec& alpha,
                            const Convergent& conv, const TargetInterval& interval,
                            const ResolvedParams& resolved, const SearchParams& params,
                            const Clock::time_point* deadline, bool* timed_out) {
  if (conv.p <= 0 || conv.q <= 0 || conv.p == conv.q) {
    throw InvalidParams("window scan needs a convergent with p > 0 and p != q");
  }
  WindowScan scan;
  const long double alpha_ld = alpha.approx();
  const long double exponent = (resolved.gamma - alpha_ld - resolved.xi) / alpha_ld;
  const long double log_v = exponent * log_integer(conv.q);
  const long double v = std::exp(log_v);
  scan.V = static_cast<double>(v);
  if (!(v >= 1)) return scan;

  Integer x_lo = floor_ld(v) + 1;
  Integer x_hi = floor_ld(v * (1 + static_cast<long double>(params.window_multiplier)));
  if (x_hi < x_lo) return scan;
  if (params.max_window_points > 0 && x_hi - x_lo + 1 > params.max_window_points) {
    x_hi = x_lo + params.max_window_points - 1;
    scan.truncated = true;
  }
  scan.x_lo = x_lo;
  scan.x_hi = x_hi;
  const unsigned long count = Integer(x_hi - x_lo + 1).get_ui();
  const std::size_t blocks = (count + kScanBlock - 1) / kScanBlock;
  const Integer c = eq.c;

  auto parts = map_blocks(blocks, params.threads, [&](std::size_t b) {
    BlockScan out;
    if (deadline && Clock::now() > *deadline) {
      out.timed_out = true;
      return out;
    }
    unsigned long end = std::min<unsigned long>(count, (b + 1) * kScanBlock);
    for (unsigned long i = b * kScanBlock; i < end; ++i) {
      Integer x = x_lo + i;
      Integer n_x = conv.q * x;
      PowerTerm term(n_x, alpha);
      FracResult f = frac(term.expr(), params.precision);
      ++out.points;
      // frac((q x)^alpha / c) = ((X mod c) + frac((q x)^alpha)) / c.
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), f.floor.get_mpz_t(), c.get_mpz_t());
      Rational lo = interval.lo * c - r;
      Rational hi = interval.hi * c - r;
      if (!frac_in(term, f, lo, hi, params.precision)) continue;
      ++out.filter_hits;
      Integer n_y = conv.p * x;
      FloorResult y = floor_pow(n_y, alpha, params.precision);
      if (!eq.satisfied_by(f.floor, y.value)) continue;
      ++out.verified;
      SolutionPair pair;
      pair.x = f.floor;
      pair.y = y.value;
      pair.n_x = n_x;
      pair.n_y = n_y;
      pair.provenance = Provenance::kConvergent;
      pair.conv_p = conv.p;
      pair.conv_q = conv.q;
      pair.scan_x = x;
      out.pairs.push_back(std::move(pair));
    }
    return out;
  });

  for (auto& part : parts) {
    scan.points += part.points;
    scan.filter_hits += part.filter_hits;
    scan.verified += part.verified;
    if (part.timed_out && timed_out) *timed_out = true;
    for (auto& pair : part.pairs) scan.pairs.push_back(std::move(pair));
  }
  return scan;
}

struct PairLess {
  bool operator()(const std::pair<Integer, Integer>& l,
                  const std::pair<Integer, Integer>& r) const {
    int cx = cmp(l.first, r.first);
    if (cx != 0) return cx < 0;
    return cmp(l.second, r.second) < 0;
  }
};

}  // namespace

BaseSolution base_solution(const LinearEquation& eq) {
  if (eq.c <= 0 || eq.d <= 0) throw InvalidParams("c and d must be positive");
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), eq.c.get_mpz_t(), eq.d.get_mpz_t());
  if (!mpz_divisible_p(eq.e.get_mpz_t(), g.get_mpz_t())) {
    throw NotSolvableInN("gcd(c, d) does not divide e");
  }
  // s c + t d = g, so c (s e/g) - d (-t e/g) = e.
  Integer scale = eq.e / g;
  Integer v0 = -t * scale;
  Integer period = eq.c / g;
  BaseSolution base;
  mpz_fdiv_r(base.v.get_mpz_t(), v0.get_mpz_t(), period.get_mpz_t());
  Integer num = eq.e + eq.d * base.v;
  mpz_divexact(base.u.get_mpz_t(), num.get_mpz_t(), eq.c.get_mpz_t());
  return base;
}

TargetInterval target_interval(const LinearEquation& eq, const BaseSolution& base,
                               const Rational& epsilon) {
  if (eq.e < 0 || eq.e >= eq.d) throw EmptyInterval("target interval needs 0 <= e < d (b < a)");
  Rational limit = 1 - Rational(eq.e, eq.d);
  limit.canonicalize();
  if (epsilon <= 0 || epsilon >= limit) {
    throw EmptyInterval("epsilon must lie in (0, 1 - e/d)");
  }
  Rational lo1(base.v, eq.c), hi1(base.v + 1, eq.c);
  Rational lo2(base.u, eq.d), hi2(base.u + 1, eq.d);
  lo1.canonicalize();
  hi1.canonicalize();
  lo2.canonicalize();
  hi2.canonicalize();
  Rational shift = epsilon / eq.d;
  lo2 += shift;
  hi2 -= shift;
  TargetInterval out;
  out.epsilon = epsilon;
  out.lo = std::max(lo1, lo2);
  out.hi = std::min(hi1, hi2);
  if (out.hi <= out.lo) {
    throw EmptyInterval("target interval is empty; epsilon must also stay below 1/2 and (d-e)/c");
  }
  return out;
}

Rational default_epsilon(const LinearEquation& eq) {
  Rational eps(1, 10);
  Rational half_gap = (1 - Rational(eq.e, eq.d)) / 2;
  Rational half_room = Rational(eq.d - eq.e, eq.c) / 2;
  half_gap.canonicalize();
  half_room.canonicalize();
  return std::min({eps, half_gap, half_room});
}

double plan_gamma(double alpha, double s, double t, double delta) {
  if (!(alpha > 1)) throw InvalidParams("alpha must exceed 1");
  if (alpha < 2) return 2;
  if (!(2 < s && s < t) || !(delta > 0)) {
    throw InvalidParams("plan_gamma needs 2 < s < t and delta > 0");
  }
  return std::min({s + delta, std::floor(s) + 1, t});
}

double default_gamma(double alpha) {
  if (!(alpha > 1)) throw InvalidParams("alpha must exceed 1");
  if (alpha < 2) return 2;
  double fl = std::floor(alpha);
  double delta = std::min({0.1, alpha - fl, fl + 1 - alpha});
  if (!(delta > 0)) throw InvalidParams("alpha is too close to an integer; pass gamma");
  return plan_gamma(alpha, alpha - delta / 2, fl + 1, delta);
}

ResolvedParams resolve_params(const LinearEquation& eq, const AlphaSpec& alpha,
                              const SearchParams& params) {
  ResolvedParams out;
  double a = alpha.approx();
  out.gamma = params.gamma ? *params.gamma : default_gamma(a);
  if (!(out.gamma > a)) throw InvalidParams("gamma must exceed alpha");
  out.xi = params.xi ? *params.xi : 0.01 * (out.gamma - a);
  if (!(out.xi > 0) || !(out.gamma - a - out.xi > 0)) {
    throw InvalidParams("xi must satisfy 0 < xi < gamma - alpha");
  }
  out.epsilon = params.epsilon ? *params.epsilon : default_epsilon(eq);
  return out;
}

WindowScan scan_window(const LinearEquation& eq, const AlphaSpec& alpha, const Convergent& conv,
                       const TargetInterval& interval, const ResolvedParams& resolved,
                       const SearchParams& params) {
  return scan_window_impl(eq, alpha, conv, interval, resolved, params, nullptr, nullptr);
}

SolveResult find_solutions(const Rational& a, const Rational& b, const AlphaSpec& alpha,
                           const SearchParams& params) {
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(params.time_budget_seconds));

  LinearEquation eq = normalize(a, b);
  if (!eq.solvable_in_n) throw NotSolvableInN("gcd(c, d) does not divide e");
  SolveResult result;
  result.base = base_solution(eq);
  result.resolved = resolve_params(eq, alpha, params);
  result.interval = target_interval(eq, result.base, result.resolved.epsilon);

  std::set<std::pair<Integer, Integer>, PairLess> seen;
  ConvergentGenerator gen(eq.a, alpha, params.precision);
  result.exhausted = true;
  result.stop_reason = "convergent_budget";
  for (std::size_t i = 0; i < params.max_convergents; ++i) {
    if (Clock::now() > deadline) {
      result.stop_reason = "time_budget";
      break;
    }
    Convergent conv;
    try {
      conv = gen.next();
    } catch (const PrecisionOverflow&) {
      result.stop_reason = "precision_cap";
      break;
    }
    ++result.convergents_tried;
    if (conv.p <= 0 || conv.p == conv.q) continue;
    result.largest_q = conv.q;

    bool timed_out = false;
    WindowScan scan = scan_window_impl(eq, alpha, conv, result.interval, result.resolved, params,
                                       &deadline, &timed_out);
    result.points += scan.points;
    result.filter_hits += scan.filter_hits;
    result.verified += scan.verified;
    bool done = false;
    for (auto& pair : scan.pairs) {
      if (!seen.emplace(pair.x, pair.y).second) continue;
      result.pairs.push_back(pair);
      if (params.limit > 0 && result.pairs.size() >= params.limit) {
        done = true;
        break;
      }
    }
    if (scan.points > 0) result.last_window = std::move(scan);
    if (done) {
      result.exhausted = false;
      result.stop_reason = "limit";
      break;
    }
    if (timed_out) {
      result.stop_reason = "time_budget";
      break;
    }
  }
  return result;
}

std::vector<SolutionPair> brute_force_solutions(const Rational& a, const Rational& b,
                                                const AlphaSpec& alpha, const Integer& x_max,
                                                const PrecisionPolicy& policy,
                                                std::size_t max_terms, unsigned threads) {
  if (x_max < 1) throw InvalidParams("x_max must be at least 1");
  LinearEquation eq = normalize(a, b);
  Integer y_max = floor(eq.a * x_max + eq.b);
  Integer top = std::max(y_max, x_max);
  Integer n_max = rank(alpha, top, policy);
  if (n_max > max_terms) {
    throw BudgetExceeded("brute force would need " + to_string(n_max) + " sequence terms");
  }
  std::vector<SolutionPair> out;
  if (n_max < 1) return out;
  std::vector<PsTerm> terms = segment(alpha, Integer(1), n_max, policy, threads);
  auto index_of = [&](const Integer& v) -> std::optional<Integer> {
    auto it = std::lower_bound(terms.begin(), terms.end(), v,
                               [](const PsTerm& t, const Integer& value) { return t.value < value; });
    if (it == terms.end() || it->value != v) return std::nullopt;
    return it->n;
  };
  for (const auto& t : terms) {
    if (t.value > x_max) break;
    Integer num = eq.d * t.value + eq.e;
    if (!mpz_divisible_p(num.get_mpz_t(), eq.c.get_mpz_t())) continue;
    Integer y = num / eq.c;
    auto n_y = index_of(y);
    if (!n_y) continue;
    SolutionPair pair;
    pair.x = t.value;
    pair.y = y;
    pair.n_x = t.n;
    pair.n_y = *n_y;
    pair.provenance = Provenance::kBruteForce;
    out.push_back(std::move(pair));
  }
  return out;
}

ThreeTermReduction reduce_three_term(const Integer& a, const Integer& b, const Integer& c) {
  if (a <= 0 || b <= 0 || c <= 0) throw InvalidParams("a, b, c must be positive");
  if (!mpz_divisible_p(b.get_mpz_t(), gcd(a, c).get_mpz_t())) {
    throw InvalidParams("gcd(a, c) must divide b");
  }
  if (a <= b) throw InvalidParams("need a > b");
  Rational slope(a, c), offset(b, c);
  slope.canonicalize();
  offset.canonicalize();
  ThreeTermReduction out;
  out.eq = normalize(slope, offset);
  out.note = "y fixed to 1 = floor(1^alpha); a solution (x, z) of z = " + to_string(slope) +
             " x + " + to_string(offset) + " gives (x, 1, z)";
  return out;
}

}  // namespace pslin
