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

#include "pslin/disc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "pslin/errors.hpp"
#include "pslin/parallel.hpp"

namespace pslin {
namespace {

constexpr std::size_t kExpSumBlock = 1024;
constexpr std::size_t kFracBlock = 2048;

using Complex = std::complex<long double>;

// Pairwise reduction of per-block partial sums, in block order.
std::vector<Complex> reduce_pairwise(std::vector<std::vector<Complex>> parts) {
  while (parts.size() > 1) {
    std::vector<std::vector<Complex>> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      for (std::size_t h = 0; h < parts[i].size(); ++h) parts[i][h] += parts[i + 1][h];
      next.push_back(std::move(parts[i]));
    }
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return parts.empty() ? std::vector<Complex>{} : std::move(parts.front());
}

double psi_at(double alpha, double gamma, double xi, unsigned k) {
  double two_k = std::ldexp(1.0, static_cast<int>(k));
  double width = (gamma - alpha - xi) / alpha;
  double psi1 = alpha + (gamma - alpha - xi) * (alpha - k) / alpha;
  double psi2 = -alpha / (two_k - 2) + width * ((k - alpha) / (two_k - 2) - 4 / two_k);
  return std::max(psi1 / (two_k - 1), psi2);
}

}  // namespace

Rational exact_discrepancy(std::span<const Rational> points) {
  if (points.empty()) throw InvalidParams("discrepancy of an empty sequence");
  std::vector<Rational> sorted(points.begin(), points.end());
  for (const auto& x : sorted) {
    if (x < 0 || x >= 1) throw InvalidParams("points must lie in [0, 1)");
  }
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  Rational hi, lo;
  for (std::size_t i = 0; i < n; ++i) {
    Rational v = sorted[i] - Rational(static_cast<unsigned long>(i + 1), n);
    v.canonicalize();
    if (i == 0 || v > hi) hi = v;
    if (i == 0 || v < lo) lo = v;
  }
  Rational d = Rational(1, n) + hi - lo;
  d.canonicalize();
  return d;
}

CertifiedReal exact_discrepancy(std::span<const CertifiedReal> points) {
  if (points.empty()) throw InvalidParams("discrepancy of an empty sequence");
  const std::size_t n = points.size();
  std::vector<Rational> lows, highs;
  lows.reserve(n);
  highs.reserve(n);
  long precision = 64;
  for (const auto& x : points) {
    Rational lo = x.lower_q(), hi = x.upper_q();
    if (lo < 0 || hi > 1) throw InvalidParams("points must lie in [0, 1)");
    lows.push_back(std::move(lo));
    highs.push_back(std::move(hi));
    precision = std::max(precision, x.precision());
  }
  std::sort(lows.begin(), lows.end());
  std::sort(highs.begin(), highs.end());

  // Bounds on max_i (x_(i) - i/N) and min_i (x_(i) - i/N).
  Rational max_lo, max_hi, min_lo, min_hi;
  for (std::size_t i = 0; i < n; ++i) {
    Rational step(static_cast<unsigned long>(i + 1), n);
    step.canonicalize();
    Rational vlo = lows[i] - step, vhi = highs[i] - step;
    if (i == 0 || vlo > max_lo) max_lo = vlo;
    if (i == 0 || vhi > max_hi) max_hi = vhi;
    if (i == 0 || vlo < min_lo) min_lo = vlo;
    if (i == 0 || vhi < min_hi) min_hi = vhi;
  }
  Rational base(1, n);
  base.canonicalize();
  Rational d_lo = base + max_lo - min_hi;
  Rational d_hi = base + max_hi - min_lo;
  if (d_lo < base) d_lo = base;
  CertifiedReal lo = CertifiedReal::from_rational(d_lo, precision);
  CertifiedReal hi = CertifiedReal::from_rational(d_hi, precision);
  return CertifiedReal::from_bounds(lo.lower(), hi.upper(), precision);
}

double erdos_turan_bound(std::span<const double> points, unsigned long m, unsigned threads) {
  if (points.empty()) throw InvalidParams("Erdos-Turan bound of an empty sequence");
  if (m < 1) throw InvalidParams("m must be positive");
  const std::size_t n = points.size();
  const std::size_t blocks = (n + kExpSumBlock - 1) / kExpSumBlock;
  const long double two_pi = 2 * std::numbers::pi_v<long double>;

  auto parts = map_blocks(blocks, threads, [&](std::size_t b) {
    std::vector<Complex> sums(m);
    std::size_t end = std::min(n, (b + 1) * kExpSumBlock);
    for (std::size_t i = b * kExpSumBlock; i < end; ++i) {
      long double x = points[i];
      for (unsigned long h = 1; h <= m; ++h) {
        long double phase = static_cast<long double>(h) * x;
        phase -= std::floor(phase);
        sums[h - 1] += Complex(std::cos(two_pi * phase), std::sin(two_pi * phase));
      }
    }
    return sums;
  });
  std::vector<Complex> total = reduce_pairwise(std::move(parts));

  long double mp1 = static_cast<long double>(m + 1);
  long double acc = 0;
  for (unsigned long h = 1; h <= m; ++h) {
    long double weight = 1.0L / h - 1.0L / mp1;
    acc += weight * std::abs(total[h - 1]) / static_cast<long double>(n);
  }
  return static_cast<double>(6.0L / mp1 + (2.0L / std::numbers::pi_v<long double>) * acc);
}

double erdos_turan_bound(std::span<const CertifiedReal> points, unsigned long m,
                         unsigned threads) {
  std::vector<double> mids;
  mids.reserve(points.size());
  for (const auto& x : points) mids.push_back(x.approx());
  return erdos_turan_bound(std::span<const double>(mids), m, threads);
}

std::vector<CertifiedReal> scaled_power_fracs(const Rational& scale, const AlphaSpec& alpha,
                                              const Integer& n_lo, const Integer& n_hi,
                                              const PrecisionPolicy& policy, unsigned threads) {
  if (n_lo < 1 || n_hi < n_lo) throw InvalidParams("need 1 <= n_lo <= n_hi");
  Integer count = n_hi - n_lo + 1;
  if (!count.fits_ulong_p()) throw InvalidParams("range too long");
  unsigned long total = count.get_ui();
  std::size_t blocks = (total + kFracBlock - 1) / kFracBlock;
  auto parts = map_blocks(blocks, threads, [&](std::size_t b) {
    std::vector<CertifiedReal> out;
    unsigned long end = std::min<unsigned long>(total, (b + 1) * kFracBlock);
    for (unsigned long i = b * kFracBlock; i < end; ++i) {
      out.push_back(frac(PowerTerm(n_lo + i, alpha, scale).expr(), policy).value);
    }
    return out;
  });
  std::vector<CertifiedReal> fracs;
  fracs.reserve(total);
  for (auto& part : parts) {
    for (auto& f : part) fracs.push_back(std::move(f));
  }
  return fracs;
}

DiscrepancyReport discrepancy_report(std::span<const CertifiedReal> points,
                                     std::span<const unsigned long> ms, unsigned threads) {
  DiscrepancyReport report;
  report.n_points = points.size();
  report.exact_d = exact_discrepancy(points);
  for (unsigned long m : ms) report.et_bounds.emplace_back(m, erdos_turan_bound(points, m, threads));
  report.notes.push_back("exact_d is certified; Erdos-Turan values are long double evaluations");
  return report;
}

// ---------------------------------------------------------------------------
// Exponent bookkeeping

bool k_bracket_holds(const Rational& alpha, const Rational& gamma, unsigned k) {
  if (k < 4) return false;
  Rational kk(k);
  bool lower = gamma * (kk - 3) < alpha * (gamma + kk - 3);
  bool upper = alpha * (kk + gamma) < gamma * kk;
  return lower && upper;
}

unsigned choose_k(const Rational& alpha, const Rational& gamma) {
  Rational gap = gamma - alpha;
  if (alpha <= 1 || gap <= 0 || gap >= 1) {
    throw InvalidParams("choose_k needs alpha > 1 and 0 < gamma - alpha < 1");
  }
  // The bracket is equivalent to L < k < L + 3 with L = alpha gamma / gap.
  Rational threshold = alpha * gamma / gap;
  Integer k = floor(threshold) + 1;
  if (k < 4) k = 4;
  if (!k.fits_uint_p()) throw InvalidParams("k out of range");
  unsigned out = static_cast<unsigned>(k.get_ui());
  if (!k_bracket_holds(alpha, gamma, out)) throw Error("bracket violated by the chosen k");
  return out;
}

unsigned choose_k(double alpha, double gamma) {
  return choose_k(exact_rational(alpha), exact_rational(gamma));
}

BoundExponents compute_exponents(double alpha, double gamma, double xi, unsigned k) {
  if (!(xi > 0)) throw InvalidParams("xi must be positive");
  if (!(gamma - alpha - xi > 0)) throw InvalidParams("gamma - alpha - xi must be positive");
  if (!k_bracket_holds(exact_rational(alpha), exact_rational(gamma), k)) {
    throw InvalidParams("k = " + std::to_string(k) + " violates the bracket for (alpha, gamma)");
  }
  double two_k = std::ldexp(1.0, static_cast<int>(k));
  BoundExponents out;
  out.k = k;
  out.psi1 = alpha + (gamma - alpha - xi) * (alpha - k) / alpha;
  out.psi2 = -alpha / (two_k - 2) +
             (gamma - alpha - xi) / alpha * ((k - alpha) / (two_k - 2) - 4 / two_k);
  out.psi = std::max(out.psi1 / (two_k - 1), out.psi2);
  out.negative = out.psi < 0;
  return out;
}

double xi_threshold(double alpha, double gamma, unsigned k) {
  double span = gamma - alpha;
  double lo = span * 1e-9;
  if (psi_at(alpha, gamma, lo, k) >= 0) return 0;
  double hi = span;
  if (psi_at(alpha, gamma, hi * (1 - 1e-12), k) < 0) return hi;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (psi_at(alpha, gamma, mid, k) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

ExpSumBound exp_sum_bound(double eta, double V, double alpha, unsigned k) {
  if (!(eta > 0) || !(V >= 1) || k < 4) {
    throw InvalidParams("exp_sum_bound needs eta > 0, V >= 1, k >= 4");
  }
  double scale = eta * std::pow(V, alpha - k);
  if (!(scale < 1)) throw InvalidParams("requires eta * V^(alpha-k) < 1");
  double two_k = std::ldexp(1.0, static_cast<int>(k));
  ExpSumBound out;
  out.first_term = std::pow(scale, 1.0 / (two_k - 1));
  out.second_term =
      std::pow(eta, -1.0 / (two_k - 2)) * std::pow(V, (k - alpha) / (two_k - 2) - 4 / two_k);
  out.value = out.first_term + out.second_term;
  out.m = std::ceil(std::pow(1 / scale, 1.0 / (two_k - 1)));
  return out;
}

}  // namespace pslin
