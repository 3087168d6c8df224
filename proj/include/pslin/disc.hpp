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

// Discrepancy of finite sequences modulo 1, the Erdos-Turan upper bound,
// and the exponent bookkeeping that turns discrepancy estimates for
// (eta n^alpha) over dyadic windows into a power saving in q.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pslin/certreal.hpp"

namespace pslin {

// Extreme discrepancy sup_{0<=a<b<=1} |#{x_n in [a,b)}/N - (b-a)| of points
// already reduced into [0, 1), via the sorted-points closed form
//   D = 1/N + max_i (x_(i) - i/N) - min_i (x_(i) - i/N).
Rational exact_discrepancy(std::span<const Rational> points);

// Certified version for enclosed points. The i-th order statistic of the
// points lies between the i-th smallest lower end and the i-th smallest
// upper end, so no ordering decision is needed.
CertifiedReal exact_discrepancy(std::span<const CertifiedReal> points);

// 6/(m+1) + (2/pi) sum_{h<=m} (1/h - 1/(m+1)) |(1/N) sum_n e(h x_n)|.
// Evaluated in long double; a numeric bound, not a certified one. Blocks of
// the exponential sums are reduced in a fixed order, so the value does not
// depend on `threads`.
double erdos_turan_bound(std::span<const double> points, unsigned long m, unsigned threads = 1);
double erdos_turan_bound(std::span<const CertifiedReal> points, unsigned long m,
                         unsigned threads = 1);

// Enclosures of frac(scale * n^alpha) for n in [n_lo, n_hi].
std::vector<CertifiedReal> scaled_power_fracs(const Rational& scale, const AlphaSpec& alpha,
                                              const Integer& n_lo, const Integer& n_hi,
                                              const PrecisionPolicy& policy = {},
                                              unsigned threads = 1);

struct DiscrepancyReport {
  std::size_t n_points = 0;
  CertifiedReal exact_d;
  std::vector<std::pair<unsigned long, double>> et_bounds;
  std::vector<std::string> notes;
};

DiscrepancyReport discrepancy_report(std::span<const CertifiedReal> points,
                                     std::span<const unsigned long> ms, unsigned threads = 1);

// Smallest k >= 4 with gamma (k-3)/(gamma+k-3) < alpha < gamma k/(k+gamma).
// Requires alpha > 1 and 0 < gamma - alpha < 1; exact rational arithmetic.
unsigned choose_k(const Rational& alpha, const Rational& gamma);
unsigned choose_k(double alpha, double gamma);

// The double inequality above, decided exactly.
bool k_bracket_holds(const Rational& alpha, const Rational& gamma, unsigned k);

struct BoundExponents {
  unsigned k = 0;
  double psi1 = 0;  // alpha + (gamma-alpha-xi)(alpha-k)/alpha
  double psi2 = 0;
  double psi = 0;   // max(psi1/(2^k-1), psi2)
  bool negative = false;
};

// Throws InvalidParams unless xi > 0, gamma - alpha - xi > 0 and k
// satisfies the bracket.
BoundExponents compute_exponents(double alpha, double gamma, double xi, unsigned k);

// Largest xi in (0, gamma - alpha) for which psi < 0, located by bisection;
// 0 when psi >= 0 already for tiny xi.
double xi_threshold(double alpha, double gamma, unsigned k);

struct ExpSumBound {
  double value = 0;
  double first_term = 0;   // (eta V^(alpha-k))^(1/(2^k-1))
  double second_term = 0;  // eta^(-1/(2^k-2)) V^((k-alpha)/(2^k-2) - 2^(2-k))
  double m = 0;            // ceil((eta^-1 V^(k-alpha))^(1/(2^k-1)))
  // The implied constant is unknown and set to 1: compare shapes only.
  bool shape_only = true;
};

// Requires eta > 0, V >= 1, k >= 4 and eta V^(alpha-k) < 1.
ExpSumBound exp_sum_bound(double eta, double V, double alpha, unsigned k);

}  // namespace pslin
