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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "pslin/errors.hpp"
#include "pslin/pscore.hpp"
#include "pslin/sums.hpp"

using namespace pslin;

namespace {

using Triple = std::tuple<unsigned long, unsigned long, unsigned long>;

std::vector<Triple> as_tuples(const std::vector<SevenSumTriple>& ts) {
  std::vector<Triple> out;
  for (const auto& t : ts) out.emplace_back(t.k.get_ui(), t.l.get_ui(), t.m.get_ui());
  return out;
}

}  // namespace

TEST_CASE("triple examples") {
  auto alpha = AlphaSpec::parse("1.1");
  TripleOptions one;
  one.limit = 1;
  auto first = find_triples(alpha, 10, one);
  REQUIRE(first.size() == 1);
  CHECK(first[0].k == 1);
  CHECK(first[0].l == 3);
  CHECK(first[0].m == 4);
  CHECK_FALSE(first[0].degenerate);
  std::array<Integer, 7> expected_values = {1, 3, 4, 4, 7, 5, 8};
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(floor_pow(first[0].witnesses[i], alpha).value == expected_values[i]);
  }
  CHECK(find_triples(alpha, 2, one).empty());
}

TEST_CASE("degenerate triples are reported only on request and flagged") {
  auto alpha = AlphaSpec::parse("1.1");
  TripleOptions opts;
  opts.allow_degenerate = true;
  opts.limit = 1;
  auto t = find_triples(alpha, 2, opts);
  REQUIRE(t.size() == 1);
  CHECK(t[0].k == 1);
  CHECK(t[0].l == 1);
  CHECK(t[0].m == 1);
  CHECK(t[0].degenerate);
}

TEST_CASE("small bounds match the brute-force triple oracle") {
  struct Case {
    const char* text;
    oracle::Alpha alpha;
  };
  std::vector<Case> cases = {
      {"1.1", oracle::Alpha::rational(Rational(11, 10))},
      {"1.3", oracle::Alpha::rational(Rational(13, 10))},
      {"1.5", oracle::Alpha::rational(Rational(3, 2))},
  };
  for (const auto& c : cases) {
    auto alpha = AlphaSpec::parse(c.text);
    auto values = oracle::ps_values_upto(c.alpha, 150);
    for (bool distinct : {true, false}) {
      TripleOptions opts;
      opts.allow_degenerate = !distinct;
      CHECK(as_tuples(find_triples(alpha, 50, opts)) == oracle::triples(values, 50, distinct));
    }
  }
}

TEST_CASE("triple counts grow with the bound and ignore thread count") {
  auto alpha = AlphaSpec::parse("1.3");
  std::size_t prev = 0;
  for (long b : {10, 20, 40, 80, 160}) {
    std::size_t n = find_triples(alpha, b).size();
    CHECK(n >= prev);
    prev = n;
  }
  TripleOptions many;
  many.threads = 4;
  CHECK(as_tuples(find_triples(alpha, 120)) == as_tuples(find_triples(alpha, 120, many)));
}

TEST_CASE("triple search budget") {
  TripleOptions opts;
  opts.max_table = 100;
  CHECK_THROWS_AS(find_triples(AlphaSpec::parse("1.5"), 1000, opts), BudgetExceeded);
  CHECK(find_triples(AlphaSpec::parse("1.5"), 0).empty());
}
