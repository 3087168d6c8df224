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


#include "pslin/equation.hpp"

#include "pslin/errors.hpp"

namespace pslin {

LinearEquation normalize(const Rational& a, const Rational& b) {
  Rational aa = a, bb = b;
  aa.canonicalize();
  bb.canonicalize();
  if (aa <= 0) throw InvalidParams("a must be positive");
  if (aa == 1) throw InvalidParams("a must differ from 1");
  if (bb < 0) throw InvalidParams("b must be non-negative");

  LinearEquation eq;
  eq.a = aa;
  eq.b = bb;
  eq.c = aa.get_den() * bb.get_den();
  eq.d = aa.get_num() * bb.get_den();
  eq.e = aa.get_den() * bb.get_num();
  Integer g;
  mpz_gcd(g.get_mpz_t(), eq.c.get_mpz_t(), eq.d.get_mpz_t());
  eq.solvable_in_n = mpz_divisible_p(eq.e.get_mpz_t(), g.get_mpz_t()) != 0;
  return eq;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kConvergent:
      return "convergent";
    case Provenance::kBruteForce:
      return "brute_force";
  }
  return "unknown";
}

}  // namespace pslin
