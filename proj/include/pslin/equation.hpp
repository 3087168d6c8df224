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

// The linear equation y = a x + b in integer form c y - d x = e, and the
// verified solution pairs the search layer produces.

#pragma once

#include <string>

#include "pslin/numeric.hpp"

namespace pslin {

struct LinearEquation {
  Rational a;  // a1/a2, positive, != 1
  Rational b;  // b1/b2, non-negative
  Integer c;   // a2 * b2
  Integer d;   // a1 * b2
  Integer e;   // a2 * b1
  // gcd(c, d) divides e.
  bool solvable_in_n = false;

  // c y - d x == e, equivalently y == a x + b.
  bool satisfied_by(const Integer& x, const Integer& y) const { return c * y - d * x == e; }
};

// Throws InvalidParams unless a > 0, a != 1 and b >= 0.
LinearEquation normalize(const Rational& a, const Rational& b);

enum class Provenance {
  kConvergent,  // window scan around a convergent p/q
  kBruteForce,  // sequence enumeration
};

std::string to_string(Provenance p);

struct SolutionPair {
  Integer x;
  Integer y;
  Integer n_x;  // floor(n_x^alpha) == x
  Integer n_y;  // floor(n_y^alpha) == y
  Provenance provenance = Provenance::kBruteForce;
  // Set for kConvergent: the convergent used and the scanned window value,
  // so that n_x == conv_q * scan_x and n_y == conv_p * scan_x.
  Integer conv_p;
  Integer conv_q;
  Integer scan_x;
};

}  // namespace pslin
