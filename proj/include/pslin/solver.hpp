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


// The constructive search for solutions of y = a x + b in PS(alpha)^2.
//
// For a convergent p/q of a^(1/alpha) and x in a window above
// V = q^((gamma - alpha - xi)/alpha), the pair
//   (X, Y) = (floor((q x)^alpha), floor((p x)^alpha))
// is close to the line, and it lies on it when frac((q x)^alpha / c) falls in
// a target interval I built from a base solution of c u - d v = e. That test
// is only a filter: a candidate is emitted once c Y - d X == e holds in exact
// integer arithmetic.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pslin/certreal.hpp"
#include "pslin/dioph.hpp"
#include "pslin/equation.hpp"

namespace pslin {

struct BaseSolution {
  Integer u;
  Integer v;  // 0 <= v < c
};

// Extended gcd, then the shift that brings v into [0, c / g); throws
// NotSolvableInN when gcd(c, d) does not divide e.
BaseSolution base_solution(const LinearEquation& eq);

// I = [v/c, v/c + 1/c) ∩ [u/d + eps/d, u/d + 1/d - eps/d), half open.
struct TargetInterval {
  Rational epsilon;
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& r) const { return lo <= r && r < hi; }
};

// Requires 0 <= e < d and 0 < eps < 1 - e/d; EmptyInterval otherwise.
TargetInterval target_interval(const LinearEquation& eq, const BaseSolution& base,
                               const Rational& epsilon);

// min(1/10, (1 - e/d)/2).
Rational default_epsilon(const LinearEquation& eq);

// gamma = 2 for 1 < alpha < 2. Otherwise requires 2 < s < t and delta > 0
// and returns min(s + delta, floor(s) + 1, t).
double plan_gamma(double alpha, double s, double t, double delta);

// The default gamma: 2 below 2, and for alpha > 2 the plan with
// delta = min(1/10, dist(alpha, Z)), s = alpha - delta/2, t = floor(alpha) + 1.
double default_gamma(double alpha);

struct SearchParams {
  std::optional<double> gamma;        // default_gamma(alpha) when unset
  std::optional<double> xi;           // 0.01 (gamma - alpha) when unset
  std::optional<Rational> epsilon;    // default_epsilon(eq) when unset
  std::size_t max_convergents = 200;
  double window_multiplier = 1;       // window (V, (1 + w) V]
  std::size_t max_window_points = 20000;
  double time_budget_seconds = 60;
  std::size_t limit = 0;              // stop after this many pairs; 0 = no limit
  PrecisionPolicy precision;
  unsigned threads = 1;
};

// Parameters after defaults are filled in.
struct ResolvedParams {
  double gamma = 0;
  double xi = 0;
  Rational epsilon;
};

ResolvedParams resolve_params(const LinearEquation& eq, const AlphaSpec& alpha,
                              const SearchParams& params);

struct WindowScan {
  double V = 0;
  Integer x_lo;  // first x scanned
  Integer x_hi;  // last x scanned
  std::size_t points = 0;       // x values scanned
  std::size_t filter_hits = 0;  // x with frac((q x)^alpha / c) certified in I
  std::size_t verified = 0;     // filter hits passing the exact identity
  bool truncated = false;       // window cut at max_window_points
  std::vector<SolutionPair> pairs;
};

// Scans one window. Requires p > 0 and p != q.
WindowScan scan_window(const LinearEquation& eq, const AlphaSpec& alpha, const Convergent& conv,
                       const TargetInterval& interval, const ResolvedParams& resolved,
                       const SearchParams& params);

struct SolveResult {
  std::vector<SolutionPair> pairs;
  ResolvedParams resolved;
  BaseSolution base;
  TargetInterval interval;
  // The search ended on a budget (convergents, time, precision) rather than
  // by reaching `limit`. Not a claim that further solutions do not exist.
  bool exhausted = false;
  std::string stop_reason;
  Integer largest_q;
  std::size_t convergents_tried = 0;
  std::size_t points = 0;
  std::size_t filter_hits = 0;
  std::size_t verified = 0;
  // Filter statistics of the last window scanned with at least one point.
  WindowScan last_window;
};

// Throws NotSolvableInN, and EmptyInterval when b >= a.
SolveResult find_solutions(const Rational& a, const Rational& b, const AlphaSpec& alpha,
                           const SearchParams& params = {});

// All pairs with x <= x_max, by enumerating PS(alpha) up to a x_max + b.
// Throws BudgetExceeded when more than `max_terms` terms would be needed.
std::vector<SolutionPair> brute_force_solutions(const Rational& a, const Rational& b,
                                                const AlphaSpec& alpha, const Integer& x_max,
                                                const PrecisionPolicy& policy = {},
                                                std::size_t max_terms = 50'000'000,
                                                unsigned threads = 1);

struct ThreeTermReduction {
  LinearEquation eq;  // z = (a/c) x + b/c
  Integer fixed_y{1};
  std::string note;
};

// a x + b y = c z with y := 1 = floor(1^alpha). Requires a, b, c > 0,
// gcd(a, c) | b and a > b.
ThreeTermReduction reduce_three_term(const Integer& a, const Integer& b, const Integer& c);

}  // namespace pslin
