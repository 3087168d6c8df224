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

using namespace pslin;

namespace {

std::vector<Integer> values(const std::vector<PsTerm>& terms) {
  std::vector<Integer> out;
  for (const auto& t : terms) out.push_back(t.value);
  return out;
}

}  // namespace

TEST_CASE("segment examples") {
  auto a15 = AlphaSpec::parse("1.5");
  CHECK(values(segment(a15, 1, 5)) == std::vector<Integer>{1, 2, 5, 8, 11});
  auto a11 = AlphaSpec::parse("1.1");
  CHECK(values(segment(a11, 1, 10)) ==
        std::vector<Integer>{1, 2, 3, 4, 5, 7, 8, 9, 11, 12});
  for (const char* text : {"1.5", "logquot:2:4:3", "surd:1:1:2"}) {
    auto t = segment(AlphaSpec::parse(text), 1, 1);
    REQUIRE(t.size() == 1);
    CHECK(t[0].value == 1);
  }
  CHECK_THROWS_AS(segment(a15, 0, 3), InvalidParams);
  CHECK_THROWS_AS(segment(a15, 5, 3), InvalidParams);
}

TEST_CASE("segment matches the oracle for several exponents") {
  struct Case {
    const char* text;
    oracle::Alpha alpha;
  };
  std::vector<Case> cases = {
      {"1.2", oracle::Alpha::rational(Rational(6, 5))},
      {"1.8", oracle::Alpha::rational(Rational(9, 5))},
      {"surd:1:1/2:2", oracle::Alpha::surd(1, Rational(1, 2), 2)},
      {"logquot:2:4:3", oracle::Alpha::logquot(2, Rational(4, 3))},
  };
  for (const auto& c : cases) {
    auto got = values(segment(AlphaSpec::parse(c.text), 1, 3000));
    auto want = oracle::ps_values(c.alpha, 3000);
    CHECK(got == std::vector<Integer>(want.begin(), want.end()));
  }
}

TEST_CASE("segment does not depend on the thread count") {
  auto alpha = AlphaSpec::parse("surd:1:1/2:2");
  CHECK(segment(alpha, 100, 20000, {}, 1) == segment(alpha, 100, 20000, {}, 4));
}

TEST_CASE("member examples") {
  auto a15 = AlphaSpec::parse("1.5");
  CHECK(*member(22, a15) == 8);
  CHECK(*member(1, a15) == 1);
  CHECK(*member(8, a15) == 4);  // exact: 4^1.5 = 8
  CHECK_FALSE(member(3, a15).has_value());
  CHECK_FALSE(member(0, a15).has_value());
  CHECK_THROWS_AS(member(-1, a15), InvalidParams);
  auto a11 = AlphaSpec::parse("1.1");
  CHECK_FALSE(member(6, a11).has_value());
  CHECK(*member(7, a11) == 6);
}

TEST_CASE("member inverts segment") {
  auto alpha = AlphaSpec::parse("1.3");
  auto terms = segment(alpha, 1, 2000);
  std::size_t next = 0;
  for (Integer m = 1; m <= terms.back().value; ++m) {
    auto n = member(m, alpha);
    if (next < terms.size() && terms[next].value == m) {
      REQUIRE(n.has_value());
      CHECK(*n == terms[next].n);
      ++next;
    } else {
      CHECK_FALSE(n.has_value());
    }
  }
}

TEST_CASE("member handles large values") {
  auto alpha = AlphaSpec::parse("surd:1:1:2");
  Integer n("123456789012345678901234567890");
  auto v = floor_pow(n, alpha);
  CHECK(*member(v.value, alpha) == n);
  CHECK(*member(v.value + 1, alpha) != n);
}

TEST_CASE("rank examples") {
  auto a15 = AlphaSpec::parse("1.5");
  CHECK(rank(a15, 11) == 5);
  CHECK(rank(a15, 10) == 4);
  CHECK(rank(a15, 1) == 1);
  CHECK(rank(a15, 0) == 0);
  CHECK(rank(AlphaSpec::parse("1.1"), 12) == 10);
  auto a18 = AlphaSpec::parse("1.8");
  auto terms = segment(a18, 1, 500);
  for (std::size_t i = 0; i < terms.size(); i += 37) {
    CHECK(rank(a18, terms[i].value) == terms[i].n);
    CHECK(rank(a18, terms[i].value - 1) == terms[i].n - 1);
  }
}
