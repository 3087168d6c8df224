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


// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "pslin/dioph.hpp"
#include "pslin/disc.hpp"
#include "pslin/errors.hpp"
#include "pslin/pscore.hpp"
#include "pslin/solver.hpp"
#include "pslin/sums.hpp"

using namespace pslin;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    pass = false;
    detail << " [" << why << "]";
  }
};

bool sound(const SolutionPair& p, const LinearEquation& eq, const AlphaSpec& alpha) {
  if (!eq.satisfied_by(p.x, p.y)) return false;
  auto nx = member(p.x, alpha);
  auto ny = member(p.y, alpha);
  return nx && ny && *nx == p.n_x && *ny == p.n_y;
}

// Criterion 1
Verdict small_alpha_solvability() {
  Verdict v;
  for (const char* text : {"1.2", "1.5", "1.8", "surd:1:1/2:2"}) {
    auto alpha = AlphaSpec::parse(text);
    for (auto [a, b] : {std::pair<long, long>{2, 0}, {3, 1}}) {
      auto t0 = Clock::now();
      SearchParams p;
      p.limit = 3;
      p.time_budget_seconds = 120;
      auto r = find_solutions(a, b, alpha, p);
      double t = seconds_since(t0);
      auto eq = normalize(a, b);
      std::size_t ok = 0;
      for (const auto& pair : r.pairs) ok += sound(pair, eq, alpha) ? 1 : 0;
      v.detail << " " << text << ":(" << a << "," << b << ")=" << ok << "/" << r.pairs.size()
               << "@" << std::round(t * 1000) / 1000 << "s";
      if (ok < 3 || ok != r.pairs.size()) v.fail("fewer than 3 verified pairs");
      if (t > 120) v.fail("over 120 s");
    }
  }
  return v;
}

// Criterion 2
Verdict oracle_equivalence() {
  Verdict v;
  auto alpha = AlphaSpec::parse("1.5");
  auto brute = brute_force_solutions(2, 0, alpha, 100000);
  std::set<std::pair<Integer, Integer>> listed;
  for (const auto& p : brute) listed.emplace(p.x, p.y);
  // Independent enumeration of the same list.
  auto vals = oracle::ps_values_upto(oracle::Alpha::rational(Rational(3, 2)), 200000);
  std::set<Integer> in(vals.begin(), vals.end());
  std::size_t oracle_count = 0;
  for (const auto& x : vals) {
    if (x > 100000) break;
    if (in.count(2 * x)) ++oracle_count;
  }
  if (oracle_count != brute.size()) v.fail("brute force differs from the independent oracle");
  if (brute.empty()) {
    v.fail("no pairs");
    return v;
  }
  v.detail << " oracle_pairs=" << brute.size() << " minimal=(" << brute.front().x << ","
           << brute.front().y << ")";
  if (!listed.count({11, 22})) v.fail("(11,22) missing");
  if (!(brute.front().x == 11 && brute.front().y == 22)) {
    v.fail("minimal pair is (" + to_string(brute.front().x) + "," + to_string(brute.front().y) +
           "), not (11,22): floor(1^1.5)=1 and floor(2^1.5)=2");
  }
  SearchParams p;
  p.max_convergents = 20;
  auto found = find_solutions(2, 0, alpha, p);
  std::size_t checked = 0, missing = 0;
  for (const auto& pair : found.pairs) {
    if (pair.x > 100000) continue;
    ++checked;
    if (!listed.count({pair.x, pair.y})) ++missing;
  }
  v.detail << " solver_pairs_below_1e5=" << checked << " missing_from_oracle=" << missing;
  if (missing > 0) v.fail("solver pair missing from oracle list");
  return v;
}

// Criterion 3
Verdict exact_branch() {
  Verdict v;
  auto alpha = AlphaSpec::parse("logquot:2:4:3");
  v.detail << " alpha=" << alpha.approx();
  if (std::abs(alpha.approx() - 2.40942) > 1e-5) v.fail("alpha value");
  auto t0 = Clock::now();
  SearchParams p;
  p.limit = 3;
  p.time_budget_seconds = 60;
  auto r = find_solutions(2, 0, alpha, p);
  double t = seconds_since(t0);
  auto eq = normalize(2, 0);
  std::size_t witnessed = 0;
  for (const auto& pair : r.pairs) {
    if (!sound(pair, eq, alpha)) v.fail("unsound pair");
    auto w = solution_to_witness(pair.x, pair.y, eq, alpha, Rational(5, 2));
    if (w.exact && w.holds && w.error.is_exact()) ++witnessed;
  }
  v.detail << " pairs=" << r.pairs.size() << " error0_witnesses=" << witnessed << " time=" << t
           << "s";
  if (r.pairs.size() < 3) v.fail("fewer than 3 pairs");
  if (witnessed != r.pairs.size()) v.fail("witness not exact");
  if (t > 60) v.fail("over 60 s");
  return v;
}

// Criterion 4
Verdict upper_shadow() {
  Verdict v;
  auto alpha = AlphaSpec::parse("surd:1:1:2");
  auto w = gamma_witnesses({2, alpha, Rational(12, 5), 1'000'000});
  v.detail << " witnesses=" << w.size();
  for (const auto& x : w) v.detail << " " << x.p << "/" << x.q << "(err=" << x.error.approx() << ")";
  if (!w.empty()) v.fail("witness list not empty");
  SearchParams p;
  p.max_convergents = 200;
  p.time_budget_seconds = 120;
  auto r = find_solutions(2, 0, alpha, p);
  v.detail << " solve: pairs=" << r.pairs.size() << " exhausted=" << r.exhausted
           << " reason=" << r.stop_reason << " largest_q_bits=" << bit_length(r.largest_q);
  if (!(r.exhausted && r.pairs.empty())) v.fail("search did not report exhaustion");
  return v;
}

struct Sequence {
  std::string name;
  std::vector<Rational> rational;     // set for exact inputs
  std::vector<CertifiedReal> balls;   // set for certified inputs
};

std::vector<Sequence> test_sequences() {
  std::vector<Sequence> out;
  // frac(n * golden ratio), certified.
  auto phi = (CertifiedReal::exact(1) + sqrt(CertifiedReal::exact(5))) /
             CertifiedReal::exact(2);
  for (unsigned long n_pts : {10ul, 50ul, 100ul, 233ul, 377ul, 500ul, 499ul}) {
    Sequence s;
    s.name = "golden_" + std::to_string(n_pts);
    for (unsigned long n = 1; n <= n_pts; ++n) {
      auto x = CertifiedReal::exact(n) * phi;
      Integer fl = floor(x.lower_q());
      if (fl != floor(x.upper_q())) throw std::runtime_error("golden floor undecided");
      s.balls.push_back(x - CertifiedReal::exact(fl));
    }
    out.push_back(std::move(s));
  }
  // frac(scale * n^1.5), certified.
  auto a15 = AlphaSpec::parse("1.5");
  for (auto [scale, n_pts] : std::vector<std::pair<const char*, long>>{
           {"1", 100}, {"0.7", 100}, {"0.7", 500}, {"1/3", 250}, {"2", 400}, {"0.01", 300}, {"5/7", 77}}) {
    Sequence s;
    s.name = std::string("pow1.5_") + scale + "_" + std::to_string(n_pts);
    s.balls = scaled_power_fracs(parse_rational(scale), a15, 1, n_pts);
    out.push_back(std::move(s));
  }
  // Random rationals.
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 6; ++i) {
    Sequence s;
    std::uniform_int_distribution<long> size(1, 500), den(1, 1000);
    long n_pts = i == 0 ? 1 : size(rng);
    long d = den(rng) + 1;
    std::uniform_int_distribution<long> num(0, d - 1);
    s.name = "random_" + std::to_string(i) + "_" + std::to_string(n_pts);
    for (long j = 0; j < n_pts; ++j) {
      Rational r(num(rng), d);
      r.canonicalize();
      s.rational.push_back(r);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Criterion 5
Verdict discrepancy_exactness(const std::vector<Sequence>& seqs) {
  Verdict v;
  double worst = 0;
  std::size_t exact_matches = 0;
  for (const auto& s : seqs) {
    if (!s.rational.empty()) {
      if (exact_discrepancy(s.rational) == oracle::discrepancy_sup(s.rational)) {
        ++exact_matches;
      } else {
        v.fail(s.name + " rational mismatch");
      }
      continue;
    }
    std::vector<Rational> mids;
    for (const auto& b : s.balls) mids.push_back(b.mid().to_rational());
    Rational want = oracle::discrepancy_sup(mids);
    auto d = exact_discrepancy(s.balls);
    Rational lo = d.lower_q(), hi = d.upper_q();
    Rational gap = std::max(Rational(lo - want), Rational(want - hi));
    double err = std::max(0.0, gap.get_d());
    err = std::max(err, std::abs(d.approx() - want.get_d()));
    worst = std::max(worst, err);
    if (err > 1e-12) v.fail(s.name + " off by " + std::to_string(err));
  }
  v.detail << " sequences=" << seqs.size() << " exact_rational_matches=" << exact_matches
           << " worst_certified_error=" << worst;
  return v;
}

// Criterion 6
Verdict erdos_turan(const std::vector<Sequence>& seqs) {
  Verdict v;
  double min_ratio = 1e300;
  for (const auto& s : seqs) {
    double exact;
    std::vector<double> pts;
    if (!s.rational.empty()) {
      exact = exact_discrepancy(s.rational).get_d();
      for (const auto& r : s.rational) pts.push_back(r.get_d());
    } else {
      exact = exact_discrepancy(s.balls).upper_q().get_d();
      for (const auto& b : s.balls) pts.push_back(b.approx());
    }
    for (unsigned long m : {1ul, 10ul, 100ul}) {
      double bound = erdos_turan_bound(pts, m);
      min_ratio = std::min(min_ratio, bound / exact);
      if (!(bound >= exact)) v.fail(s.name + " m=" + std::to_string(m));
    }
  }
  std::vector<double> zeros(37, 0.0);
  double c = erdos_turan_bound(zeros, 1);
  double target = 3 + 1 / std::numbers::pi;
  v.detail << " min_bound_over_exact=" << min_ratio << " constant_m1=" << c
           << " |diff|=" << std::abs(c - target);
  if (std::abs(c - target) > 1e-12) v.fail("constant sequence");
  return v;
}

// Criterion 7
Verdict equidistribution_trend() {
  Verdict v;
  auto t0 = Clock::now();
  auto alpha = AlphaSpec::parse("1.5");
  auto small = exact_discrepancy(scaled_power_fracs(Rational(7, 10), alpha, 1, 100));
  auto large = exact_discrepancy(scaled_power_fracs(Rational(7, 10), alpha, 1, 10000));
  double t = seconds_since(t0);
  v.detail << " D(100)=" << small.approx() << " D(10000)=" << large.approx() << " time=" << t
           << "s";
  auto half = small.lower_q() / 2;
  if (!(large.upper_q() < half)) v.fail("not below half");
  if (t > 60) v.fail("over 60 s");
  return v;
}

// Criterion 8
Verdict exponent_bookkeeping() {
  Verdict v;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<unsigned long> an(1001, 9999), gap(1, 9999);
  std::size_t good = 0;
  for (int i = 0; i < 1000; ++i) {
    Rational alpha(an(rng), 1000);
    alpha.canonicalize();
    if (alpha.get_den() == 1) alpha += Rational(1, 7);
    Rational gamma = alpha + Rational(gap(rng), 10000);
    gamma.canonicalize();
    unsigned k = choose_k(alpha, gamma);
    if (k_bracket_holds(alpha, gamma, k)) ++good;
  }
  unsigned k1 = choose_k(Rational(3, 2), Rational(2));
  unsigned k2 = choose_k(Rational(5, 2), Rational(13, 5));
  auto ex = compute_exponents(1.5, 2, 0.01, 7);
  v.detail << " bracket_ok=" << good << "/1000 k(1.5,2)=" << k1 << " k(2.5,2.6)=" << k2
           << " psi=" << ex.psi;
  if (good != 1000) v.fail("bracket violated");
  if (k1 != 7 || k2 != 66) v.fail("k examples");
  if (!(ex.psi < 0)) v.fail("psi not negative");
  return v;
}

// Criterion 9
Verdict triples() {
  Verdict v;
  auto first = find_triples(AlphaSpec::parse("1.1"), 10);
  v.detail << " alpha=1.1,bound=10:" << first.size() << " triples";
  if (first.empty() || !(first[0].k == 1 && first[0].l == 3 && first[0].m == 4)) {
    v.fail("(1,3,4) is not the first triple");
  } else {
    v.detail << " first=(1,3,4)";
  }
  struct Case {
    const char* text;
    oracle::Alpha alpha;
  };
  std::vector<Case> cases = {{"1.1", oracle::Alpha::rational(Rational(11, 10))},
                             {"1.3", oracle::Alpha::rational(Rational(13, 10))},
                             {"1.5", oracle::Alpha::rational(Rational(3, 2))}};
  for (const auto& c : cases) {
    auto alpha = AlphaSpec::parse(c.text);
    auto t0 = Clock::now();
    std::vector<SevenSumTriple> found;
    TripleOptions opts;
    opts.limit = 1;
    for (long bound = 10; found.empty() && seconds_since(t0) < 600 && bound <= 1'000'000;
         bound *= 2) {
      found = find_triples(alpha, bound, opts);
    }
    double t = seconds_since(t0);
    if (found.empty() || t > 600) {
      v.fail(std::string("no triple for ") + c.text);
      continue;
    }
    const auto& tr = found[0];
    bool certified = true;
    const std::array<Integer, 7> sums = {tr.k, tr.l, tr.m, tr.k + tr.l,
                                         tr.l + tr.m, tr.m + tr.k, tr.k + tr.l + tr.m};
    for (std::size_t i = 0; i < 7; ++i) {
      auto n = member(sums[i], alpha);
      certified = certified && n && *n == tr.witnesses[i];
    }
    if (!certified) v.fail("triple not certified");
    v.detail << " " << c.text << ":(" << tr.k << "," << tr.l << "," << tr.m << ")";

    auto values = oracle::ps_values_upto(c.alpha, 120);
    auto want = oracle::triples(values, 40, true);
    auto got = find_triples(alpha, 40);
    bool same = got.size() == want.size();
    for (std::size_t i = 0; same && i < got.size(); ++i) {
      same = got[i].k == std::get<0>(want[i]) && got[i].l == std::get<1>(want[i]) &&
             got[i].m == std::get<2>(want[i]);
    }
    if (!same) v.fail(std::string("oracle mismatch at bound 40 for ") + c.text);
  }
  v.detail << " oracle_bound=40";
  return v;
}

// Criterion 10
Verdict certified_arithmetic() {
  Verdict v;
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<unsigned long> num(101, 399), n_dist(1, 1'000'000'000'000ul);
  std::uniform_int_distribution<int> kind(0, 1);
  std::size_t agree = 0, undecided = 0, oracle_undecided = 0;
  const int total = 10000;
  for (int i = 0; i < total; ++i) {
    Rational a(num(rng), 100);
    a.canonicalize();
    if (a.get_den() == 1) a += Rational(1, 3);
    auto spec = AlphaSpec::from_rational(a);
    auto ref = oracle::Alpha::rational(a);
    try {
      if (kind(rng) == 0) {
        Integer n = n_dist(rng);
        auto got = floor_pow(n, spec);
        long bits = std::max<long>(256, 4 * std::max<long>(got.precision, 64));
        auto want = oracle::floor_pow(n, ref, bits);
        if (!want) {
          ++oracle_undecided;
        } else if (*want == got.value) {
          ++agree;
        }
      } else {
        // Membership of m near a sequence term.
        Integer n = n_dist(rng) % 100000 + 1;
        auto term = oracle::floor_pow(n, ref, 512);
        if (!term) {
          ++oracle_undecided;
          continue;
        }
        Integer m = *term + static_cast<long>(n_dist(rng) % 3) - 1;
        if (m < 1) m = 1;
        auto got = member(m, spec);
        bool want = false;
        Integer want_n;
        for (Integer c = n - 2; c <= n + 2; ++c) {
          if (c < 1) continue;
          auto f = oracle::floor_pow(c, ref, 512);
          if (f && *f == m) {
            want = true;
            want_n = c;
          }
        }
        if (got.has_value() == want && (!want || *got == want_n)) ++agree;
      }
    } catch (const PrecisionOverflow&) {
      ++undecided;
    }
  }
  v.detail << " decisions=" << total << " agree=" << agree << " undecided=" << undecided
           << " oracle_undecided=" << oracle_undecided;
  if (undecided != 0) v.fail("undecided below the cap");
  if (agree + oracle_undecided != static_cast<std::size_t>(total)) v.fail("disagreement");
  return v;
}

}  // namespace

int main() {
  std::vector<std::pair<int, std::function<Verdict()>>> criteria;
  std::vector<Sequence> seqs;
  criteria.emplace_back(1, small_alpha_solvability);
  criteria.emplace_back(2, oracle_equivalence);
  criteria.emplace_back(3, exact_branch);
  criteria.emplace_back(4, upper_shadow);
  criteria.emplace_back(5, [&] {
    seqs = test_sequences();
    return discrepancy_exactness(seqs);
  });
  criteria.emplace_back(6, [&] { return erdos_turan(seqs); });
  criteria.emplace_back(7, equidistribution_trend);
  criteria.emplace_back(8, exponent_bookkeeping);
  criteria.emplace_back(9, triples);
  criteria.emplace_back(10, certified_arithmetic);

  int failures = 0;
  for (auto& [id, fn] : criteria) {
    auto t0 = Clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failures;
    std::printf("criterion %d: %s (%.2fs)%s\n", id, v.pass ? "PASS" : "FAIL", seconds_since(t0),
                v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
