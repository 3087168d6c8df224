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

// Rational approximation of a^(1/alpha): certified continued-fraction
// convergents, gamma-quality witnesses, and the exponents alpha for which
// a^(1/alpha) is itself rational.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pslin/certreal.hpp"
#include "pslin/equation.hpp"

namespace pslin {

struct Convergent {
  std::size_t index = 0;
  Integer p;
  Integer q;
  // Enclosure of |a^(1/alpha) - p/q|.
  CertifiedReal error;
  // p/q equals the target exactly (error is exactly zero).
  bool exact = false;
  // k > 1 marks the scaled copy (k P, k Q) emitted after the continued
  // fraction of an exactly rational target has terminated; such entries are
  // not in lowest terms.
  unsigned long multiple = 1;
};

// a^(1/alpha) when it is provably rational, decided by exact integer root
// extraction; nullopt when it is irrational or not recognised as rational.
std::optional<Rational> exact_base_root(const Rational& a, const AlphaSpec& alpha);

// Enclosure of a^(1/alpha) at the given precision.
CertifiedReal base_root(const Rational& a, const AlphaSpec& alpha, long precision);

// Lazily produces the convergents of a^(1/alpha). Partial quotients are only
// emitted once the enclosure certifies them; the working precision doubles
// as needed and PrecisionOverflow (carrying the index reached) is thrown at
// the cap.
class ConvergentGenerator {
 public:
  ConvergentGenerator(Rational a, AlphaSpec alpha, PrecisionPolicy policy = {});

  Convergent next();
  const std::optional<Rational>& exact_target() const { return exact_; }
  const Rational& base() const { return a_; }
  const AlphaSpec& alpha() const { return alpha_; }

 private:
  void extend();
  CertifiedReal error_of(const Integer& p, const Integer& q) const;

  Rational a_;
  AlphaSpec alpha_;
  PrecisionPolicy policy_;
  std::optional<Rational> exact_;
  std::vector<Integer> quotients_;
  bool quotients_complete_ = false;  // finite expansion of an exact target
  long precision_ = 0;
  std::size_t index_ = 0;
  Integer p_prev_{0}, q_prev_{1}, p_{1}, q_{0};
  unsigned long multiple_ = 1;
};

// The first `count` convergents. a > 0, a != 1.
std::vector<Convergent> convergents(const Rational& a, const AlphaSpec& alpha, std::size_t count,
                                    const PrecisionPolicy& policy = {});

struct WitnessQuery {
  Rational a;
  AlphaSpec alpha;
  Rational gamma;  // > 1
  Integer q_max;
};

struct Witness {
  Integer p;
  Integer q;
  CertifiedReal error;
  bool exact = false;
};

// Convergents p/q with 2 <= q <= q_max and |a^(1/alpha) - p/q| <= q^-gamma.
// Denominator 1 is skipped: |x - p| <= 1 holds for every gamma there.
std::vector<Witness> gamma_witnesses(const WitnessQuery& query,
                                     const PrecisionPolicy& policy = {});

// Certified decision of |a^(1/alpha) - p/q| <= q^-gamma.
bool is_gamma_witness(const Rational& a, const AlphaSpec& alpha, const Integer& p,
                      const Integer& q, const Rational& gamma,
                      const PrecisionPolicy& policy = {});

struct WitnessCheck {
  Integer p;  // PS index of y
  Integer q;  // PS index of x
  bool holds = false;
  bool exact = false;  // p/q == a^(1/alpha)
  CertifiedReal error;
};

// Recovers (p, q) = (index of y, index of x) from a solution pair and checks
// |a^(1/alpha) - p/q| <= q^-beta. Throws InvalidParams if the pair does not
// solve the equation and NotMember if an index cannot be recovered.
WitnessCheck solution_to_witness(const Integer& x, const Integer& y, const LinearEquation& eq,
                                 const AlphaSpec& alpha, const Rational& beta,
                                 const PrecisionPolicy& policy = {});

struct ConstructedAlpha {
  std::optional<AlphaSpec> alpha;  // set when alpha lies in (s, t)
  std::string reason;              // why it was rejected otherwise
};

// alpha = ln a / ln(p/q), so that a^(1/alpha) == p/q exactly. Throws
// InvalidParams when p/q == 1, a == 1, or a and p/q lie on opposite sides
// of 1.
ConstructedAlpha construct_solvable_alpha(const Rational& a, const Integer& p, const Integer& q,
                                          const Rational& s, const Rational& t);

}  // namespace pslin
